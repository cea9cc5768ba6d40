#pragma once

// Text, JSON and DOT serialization. Generators are 1-based outside the library:
// "s1" is generator 0, and JSON letters are ±(s+1).

#include <cctype>
#include <cstring>
#include <sstream>
#include <string>

#include "json.hpp"

#include "artin/lattice.hpp"

namespace artin::io {

using json = nlohmann::json;

// word := token*; token := "s" digit+ ("^-1")?
inline Word parse_word(const std::string& text, int rank) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        bool inv = false;
        if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
            inv = true;
            tok.resize(tok.size() - 3);
        }
        if (tok.size() < 2 || tok[0] != 's') throw Error(ErrorKind::ParseError, "bad token '" + tok + "'");
        for (std::size_t i = 1; i < tok.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw Error(ErrorKind::ParseError, "bad token '" + tok + "'");
        if (tok.size() > 4) throw Error(ErrorKind::ParseError, "generator index too large in '" + tok + "'");
        int s = std::stoi(tok.substr(1));
        if (s < 1 || s > rank) throw Error(ErrorKind::ParseError, "generator s" + std::to_string(s) + " out of range");
        w.push_back({s - 1, inv});
    }
    return w;
}

inline std::string format_word(const Word& w) {
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += 's' + std::to_string(l.gen + 1);
        if (l.inverse) out += "^-1";
    }
    return out;
}

inline std::string format_positive(const std::vector<int>& gens) { return format_word(positive_word(gens)); }

inline std::string format_element(const Element& e) {
    std::string out = "Δ^" + std::to_string(e.delta_power());
    if (e.factors().empty()) return out;
    out += " · ";
    const auto& G = e.context();
    for (const auto& f : e.factors()) out += '(' + format_positive(G.word(f)) + ')';
    return out;
}

inline std::string format_set(GeneratorSet X) {
    std::string out = "{";
    for (int s : X.members()) out += (out.size() > 1 ? ",s" : "s") + std::to_string(s + 1);
    return out + '}';
}

// Accepts format_element output ("Δ^p · (…)(…)", "Delta^p" also allowed) or a word.
inline Element parse_element(const ContextPtr& ctx, const std::string& text) {
    std::string t = text;
    auto first = t.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return identity(ctx);
    t = t.substr(first);
    std::string prefix;
    if (t.rfind("Δ^", 0) == 0) prefix = "Δ^";
    else if (t.rfind("Delta^", 0) == 0) prefix = "Delta^";
    else return from_word(ctx, parse_word(t, ctx->rank()));
    std::size_t pos = prefix.size(), used = 0;
    long long p = 0;
    try {
        p = std::stoll(t.substr(pos), &used);
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad Δ exponent");
    }
    pos += used;
    std::string rest = t.substr(pos);
    for (const char* sep : {"·", "*", "."}) {
        auto q = rest.find(sep);
        if (q != std::string::npos && rest.find_first_not_of(" ") == q) {
            rest = rest.substr(q + std::strlen(sep));
            break;
        }
    }
    Element e = delta_power(ctx, p);
    std::size_t i = 0;
    while (i < rest.size()) {
        if (std::isspace(static_cast<unsigned char>(rest[i]))) {
            ++i;
            continue;
        }
        if (rest[i] != '(') throw Error(ErrorKind::ParseError, "expected '(' in normal form");
        auto close = rest.find(')', i);
        if (close == std::string::npos) throw Error(ErrorKind::ParseError, "unbalanced '(' in normal form");
        Word w = parse_word(rest.substr(i + 1, close - i - 1), ctx->rank());
        for (const auto& l : w)
            if (l.inverse) throw Error(ErrorKind::ParseError, "factors must be positive");
        e = e * from_word(ctx, w);
        i = close + 1;
    }
    return e;
}

inline json word_json(const Word& w) {
    json out = json::array();
    for (const auto& l : w) out.push_back(l.inverse ? -(l.gen + 1) : l.gen + 1);
    return out;
}

inline Word word_from_json(const json& j, int rank) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "word must be an array of ±(index)");
    Word w;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error(ErrorKind::ParseError, "word letters must be integers");
        int v = x.get<int>();
        if (v == 0 || std::abs(v) > rank) throw Error(ErrorKind::ParseError, "word letter out of range");
        w.push_back({std::abs(v) - 1, v < 0});
    }
    return w;
}

inline json set_json(GeneratorSet X) {
    json out = json::array();
    for (int s : X.members()) out.push_back(s + 1);
    return out;
}

inline json element_json(const Element& e) {
    json factors = json::array();
    for (const auto& f : e.factors()) {
        json letters = json::array();
        for (int s : e.context().word(f)) letters.push_back(s + 1);
        factors.push_back(letters);
    }
    return {{"deltaPower", e.delta_power()}, {"factors", factors}};
}

inline Element element_from_json(const ContextPtr& ctx, const json& j) {
    if (!j.is_object() || !j.contains("deltaPower") || !j.contains("factors"))
        throw Error(ErrorKind::ParseError, "canonical form needs deltaPower and factors");
    Element e = delta_power(ctx, j.at("deltaPower").get<long long>());
    for (const auto& f : j.at("factors")) {
        Word w = word_from_json(f, ctx->rank());
        for (const auto& l : w)
            if (l.inverse) throw Error(ErrorKind::ParseError, "factors must be positive");
        e = e * from_word(ctx, w);
    }
    return e;
}

inline json parabolic_json(const ParabolicSubgroup& P) {
    return {{"standardizer", word_json(to_word(P.standardizer()))},
            {"base", set_json(P.base())},
            {"z", element_json(P.z())}};
}

inline std::string format_parabolic(const ParabolicSubgroup& P) {
    return "b·A_" + format_set(P.base()) + "·b⁻¹ with b = " + format_element(P.standardizer()) +
           ", z = " + format_element(P.z());
}

inline json certificate_json(const Certificate& c) {
    return {{"witness", c.witness ? word_json(to_word(*c.witness)) : json(nullptr)},
            {"budget", c.budget},
            {"verifiedInclusions", {{"zInP", c.z_in_p}, {"zInQ", c.z_in_q}}},
            {"searched", c.searched},
            {"found", c.found},
            {"complete", c.complete},
            {"method", c.method}};
}

inline json lattice_json(const LatticeResult& r) {
    json out = parabolic_json(r.result);
    out["certificate"] = certificate_json(r.certificate);
    return out;
}

inline std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

inline json summit_json(const SummitGraph& g) {
    json vs = json::array(), as = json::array();
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        vs.push_back({{"id", i},
                      {"form", format_element(g.vertices[i])},
                      {"canonical", element_json(g.vertices[i])},
                      {"witness", word_json(to_word(g.witnesses[i]))}});
    for (const auto& a : g.arrows)
        as.push_back({{"from", a.from}, {"to", a.to}, {"label", word_json(positive_word(letters(a.label)))}});
    json out = {{"kind", to_string(g.kind)},
                {"exponent", g.exponent},
                {"input", element_json(g.input)},
                {"vertices", vs},
                {"arrows", as}};
    if (g.kind == SummitKind::SU) out["suPowerBound"] = g.su_power_bound;
    return out;
}

inline std::string summit_dot(const SummitGraph& g) {
    std::ostringstream out;
    out << "digraph summit {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        out << "  v" << i << " [label=" << quote(format_element(g.vertices[i])) << "];\n";
    for (const auto& a : g.arrows)
        out << "  v" << a.from << " -> v" << a.to << " [label=" << quote(format_positive(letters(a.label)))
            << "];\n";
    out << "}\n";
    return out.str();
}

inline std::string summit_text(const SummitGraph& g) {
    std::ostringstream out;
    out << to_string(g.kind) << " graph, N = " << g.exponent;
    if (g.kind == SummitKind::SU) out << ", powers |m| <= " << g.su_power_bound;
    out << ", " << g.vertices.size() << " vertices, " << g.arrows.size() << " arrows\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) out << "  [" << i << "] " << format_element(g.vertices[i]) << '\n';
    for (const auto& a : g.arrows)
        out << "  " << a.from << " -> " << a.to << " by " << format_positive(letters(a.label)) << '\n';
    return out.str();
}

inline json complex_json(const ComplexBall& b) {
    json vs = json::array(), es = json::array();
    for (const auto& P : b.vertices)
        vs.push_back({{"standardizer", word_json(to_word(P.standardizer()))}, {"base", set_json(P.base())}});
    for (const auto& [i, j] : b.edges) es.push_back({i, j});
    return {{"radius", b.radius}, {"vertices", vs}, {"edges", es}};
}

inline std::string complex_dot(const ComplexBall& b) {
    std::ostringstream out;
    out << "graph complex {\n";
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        const auto& P = b.vertices[i];
        std::string w = format_word(to_word(P.standardizer()));
        out << "  p" << i << " [label=" << quote((w.empty() ? "1" : w) + " " + format_set(P.base())) << "];\n";
    }
    for (const auto& [i, j] : b.edges) out << "  p" << i << " -- p" << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace artin::io
