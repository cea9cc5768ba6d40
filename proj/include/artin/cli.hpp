#pragma once

// Command-line front end: artin [flags] GROUP COMMAND ARGS...

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "artin/artin.hpp"
#include "artin/io.hpp"

namespace artin::cli {

using io::json;

struct Settings {
    int N = 1;
    std::string kind = "uss";
    std::string format = "text";
    std::string output;
    int budget = 5;
    int radius = 2;
    int threads = 1;
    int rank_cap = kDefaultRankCap;
    SummitOptions summit;
    std::optional<CoxeterSpec> matrix;
};

inline void apply_config(Settings& s, const std::string& path, bool budget_set, bool radius_set) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::ParseError, "cannot read config file " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("config: ") + e.what());
    }
    try {
        if (j.contains("rank_cap")) s.rank_cap = j["rank_cap"].get<int>();
        if (j.contains("budget") && !budget_set) s.budget = j["budget"].get<int>();
        if (j.contains("radius") && !radius_set) s.radius = j["radius"].get<int>();
        if (j.contains("su_power_bound")) s.summit.su_power_bound = j["su_power_bound"].get<int>();
        if (j.contains("stabilization_window")) s.summit.stabilization_window = j["stabilization_window"].get<int>();
        if (j.contains("max_exponent")) s.summit.max_exponent = j["max_exponent"].get<int>();
        if (j.contains("max_vertices")) s.summit.max_vertices = j["max_vertices"].get<std::size_t>();
        if (j.contains("coxeter_matrix"))
            s.matrix = CoxeterSpec::from_matrix(j["coxeter_matrix"].get<std::vector<std::vector<int>>>());
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("config: ") + e.what());
    }
}

class Runner {
public:
    Runner(Settings s, std::istream& in) : s_(std::move(s)), in_(in) {}

    void set_group(const std::string& group) {
        if (group == "config") {
            if (!s_.matrix) throw Error(ErrorKind::InvalidSpec, "group 'config' needs coxeter_matrix in --config");
            ctx_ = build_context(*s_.matrix, s_.rank_cap);
        } else {
            CoxeterSpec spec;
            try {
                spec = CoxeterSpec::parse(group);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::InvalidSpec) throw Error(ErrorKind::ParseError, e.what());
                throw;
            }
            ctx_ = build_context(spec, s_.rank_cap);
        }
    }

    std::string read_arg(const std::string& a) {
        if (a != "-") return a;
        if (!stdin_cache_) stdin_cache_ = std::string(std::istreambuf_iterator<char>(in_), {});
        return *stdin_cache_;
    }

    Element element(const std::string& a) { return io::parse_element(ctx_, read_arg(a)); }

    // "WORD{1,2}" is WORD·A_{s1,s2}·WORD⁻¹.
    ParabolicSubgroup parabolic(const std::string& raw) {
        std::string a = read_arg(raw);
        auto open = a.find('{'), close = a.rfind('}');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw Error(ErrorKind::ParseError, "parabolic subgroup must look like 'WORD{i,j,...}'");
        Element g = io::parse_element(ctx_, a.substr(0, open));
        GeneratorSet X;
        std::string inner = a.substr(open + 1, close - open - 1);
        for (char& c : inner)
            if (c == ',') c = ' ';
        std::istringstream ss(inner);
        std::string tok;
        while (ss >> tok) {
            if (!tok.empty() && tok[0] == 's') tok = tok.substr(1);
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "bad generator index '" + tok + "'");
            }
            if (v < 1 || v > ctx_->rank()) throw Error(ErrorKind::ParseError, "generator index out of range");
            X.insert(v - 1);
        }
        return ParabolicSubgroup(g, X);
    }

    GarsideStructure structure() const { return GarsideStructure(ctx_, s_.N); }

    // Returns the exit code; text goes to `out`.
    int dispatch(const std::string& cmd, const std::vector<std::string>& args, std::ostream& out) {
        auto need = [&](std::size_t n) {
            if (args.size() != n)
                throw Error(ErrorKind::ParseError,
                            "command '" + cmd + "' takes " + std::to_string(n) + " argument(s)");
        };
        const bool js = s_.format == "json", dot = s_.format == "dot";
        auto emit = [&](const json& j, const std::string& text) {
            if (js) out << j.dump(2) << '\n';
            else out << text << '\n';
        };

        if (cmd == "nf") {
            need(1);
            Element e = element(args[0]);
            if (s_.N == 1) {
                emit(io::element_json(e), io::format_element(e));
                return 0;
            }
            StructuredForm f = left_normal_form(e, structure());
            json fs = json::array();
            std::string text = "(Δ^" + std::to_string(s_.N) + ")^" + std::to_string(f.power);
            if (!f.factors.empty()) text += " ·";
            for (const auto& x : f.factors) {
                fs.push_back(io::element_json(x));
                text += " [" + io::format_element(x) + "]";
            }
            emit({{"exponent", s_.N}, {"power", f.power}, {"factors", fs}}, text);
            return 0;
        }
        if (cmd == "np" || cmd == "pn") {
            need(1);
            Element e = element(args[0]);
            if (cmd == "np") {
                MixedForm f = np_normal_form(e);
                emit({{"negative", io::element_json(f.negative)}, {"positive", io::element_json(f.positive)}},
                     "(" + io::format_element(f.negative) + ")⁻¹ · (" + io::format_element(f.positive) + ")");
            } else {
                PnForm f = pn_normal_form(e);
                emit({{"positive", io::element_json(f.positive)}, {"negative", io::element_json(f.negative)}},
                     "(" + io::format_element(f.positive) + ") · (" + io::format_element(f.negative) + ")⁻¹");
            }
            return 0;
        }
        if (cmd == "supp") {
            need(1);
            GeneratorSet X = support(element(args[0]));
            emit(io::set_json(X), io::format_set(X));
            return 0;
        }
        if (cmd == "cycle" || cmd == "decycle" || cmd == "twist") {
            need(1);
            Element e = element(args[0]);
            auto st = structure();
            Conjugation c = cmd == "cycle" ? cycling(e, st) : cmd == "decycle" ? decycling(e, st) : twisted_cycling(e, st);
            emit({{"result", io::element_json(c.result)}, {"conjugator", io::element_json(c.conjugator)}},
                 io::format_element(c.result) + "\nconjugator " + io::format_element(c.conjugator));
            return 0;
        }
        if (cmd == "summit") {
            need(1);
            SummitGraph g = compute_summit_graph(element(args[0]), parse_summit_kind(s_.kind), structure(), s_.summit);
            if (dot) out << io::summit_dot(g);
            else emit(io::summit_json(g), io::summit_text(g));
            return 0;
        }
        if (cmd == "closure") {
            need(1);
            ClosureInfo c = parabolic_closure_info(element(args[0]), s_.summit);
            json j = io::parabolic_json(c.closure);
            j["method"] = c.method;
            std::string text = io::format_parabolic(c.closure) + "\nmethod: " + c.method;
            if (c.method == "RSSS_inf support") {
                j["nstar"] = c.nstar;
                j["stabilized"] = c.stabilized;
                text += ", N* = " + std::to_string(c.nstar) + (c.stabilized ? "" : " (not stabilized)");
            }
            emit(j, text);
            return 0;
        }
        if (cmd == "phi") {
            need(1);
            int v = phi(element(args[0]), s_.summit);
            emit(json(v), std::to_string(v));
            return 0;
        }
        if (cmd == "z") {
            need(1);
            ParabolicSubgroup P = parabolic(args[0]);
            emit(io::element_json(P.z()), io::format_element(P.z()));
            return 0;
        }
        if (cmd == "standardize") {
            need(1);
            ParabolicSubgroup P = parabolic(args[0]);
            emit(io::parabolic_json(P), io::format_parabolic(P));
            return 0;
        }
        if (cmd == "commute-z") {
            need(2);
            bool c = z_commute(parabolic(args[0]), parabolic(args[1]));
            emit(json(c), c ? "true" : "false");
            return 0;
        }
        if (cmd == "adjacent") {
            need(2);
            AdjacencyVerdict v = characterize_pair(parabolic(args[0]), parabolic(args[1]), s_.budget, s_.summit);
            std::string cond = v.condition ? to_string(*v.condition) : "none";
            emit({{"commute", v.commute}, {"condition", v.condition ? json(cond) : json(nullptr)}},
                 std::string(v.commute ? "adjacent" : "not adjacent") + " (" + cond + ")");
            return 0;
        }
        if (cmd == "intersect" || cmd == "join") {
            need(2);
            ParabolicSubgroup P = parabolic(args[0]), Q = parabolic(args[1]);
            LatticeResult r = cmd == "intersect" ? intersect(P, Q, s_.budget, s_.summit) : join(P, Q, s_.budget, s_.summit);
            const auto& c = r.certificate;
            std::ostringstream text;
            text << io::format_parabolic(r.result) << "\ncertificate: method " << c.method << ", budget " << c.budget
                 << ", searched " << c.searched << ", found " << c.found << ", z in P " << c.z_in_p << ", z in Q "
                 << c.z_in_q << ", complete " << c.complete;
            emit(io::lattice_json(r), text.str());
            return c.verified() ? 0 : 3;
        }
        if (cmd == "complex-ball") {
            need(1);
            ComplexBall b = complex_ball(parabolic(args[0]), s_.radius, s_.budget);
            if (dot) out << io::complex_dot(b);
            else if (js) out << io::complex_json(b).dump(2) << '\n';
            else {
                out << b.vertices.size() << " vertices, " << b.edges.size() << " edges\n";
                for (std::size_t i = 0; i < b.vertices.size(); ++i)
                    out << "  [" << i << "] " << io::format_parabolic(b.vertices[i]) << '\n';
                for (const auto& [i, j] : b.edges) out << "  " << i << " -- " << j << '\n';
            }
            return 0;
        }
        if (cmd == "figures") {
            if (args.size() > 1) throw Error(ErrorKind::ParseError, "figures takes at most one word");
            Element a = element(args.empty() ? std::string("s1 s2") : args[0]);
            SummitGraph g = compute_summit_graph(a, SummitKind::PositiveConjugates, GarsideStructure(ctx_, 1), s_.summit);
            ZActionGraph z = z_action_graph(g);
            json zv = json::array(), za = json::array();
            for (std::size_t i = 0; i < z.z.size(); ++i)
                zv.push_back({{"id", i}, {"base", io::set_json(z.bases[i])}, {"z", io::element_json(z.z[i])},
                              {"form", io::format_element(z.z[i])}});
            for (const auto& e : z.arrows)
                za.push_back({{"from", e.from}, {"to", e.to}, {"label", io::word_json(positive_word(letters(e.label)))}});
            if (js) {
                out << json{{"figure1", io::summit_json(g)}, {"figure2", {{"vertices", zv}, {"arrows", za}}}}.dump(2)
                    << '\n';
            } else if (dot) {
                out << io::summit_dot(g) << "digraph z_action {\n";
                for (std::size_t i = 0; i < z.z.size(); ++i)
                    out << "  z" << i << " [label=" << io::quote(io::format_element(z.z[i])) << "];\n";
                for (const auto& e : z.arrows)
                    out << "  z" << e.from << " -> z" << e.to << " [label="
                        << io::quote(io::format_positive(letters(e.label))) << "];\n";
                out << "}\n";
            } else {
                out << "Figure 1: " << io::summit_text(g) << "Figure 2: z-action, " << z.z.size() << " vertices, "
                    << z.arrows.size() << " arrows\n";
                for (std::size_t i = 0; i < z.z.size(); ++i)
                    out << "  [" << i << "] z_" << io::format_set(z.bases[i]) << " = " << io::format_element(z.z[i]) << '\n';
                for (const auto& e : z.arrows)
                    out << "  " << e.from << " -> " << e.to << " by " << io::format_positive(letters(e.label)) << '\n';
            }
            return 0;
        }
        throw Error(ErrorKind::ParseError, "unknown command '" + cmd + "'");
    }

private:
    Settings s_;
    std::istream& in_;
    ContextPtr ctx_;
    std::optional<std::string> stdin_cache_;
};

inline int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError: return 2;
        case ErrorKind::BudgetExceeded: return 3;
        default: return 1;
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Spherical Artin-Tits groups: normal forms, summit sets, parabolic subgroups"};
    Settings s;
    std::string group, command, config;
    std::vector<std::string> args;
    app.add_option("group", group, "A4, B3, I2(5), D4xA1, ... or 'config'")->required();
    app.add_option("command", command,
                   "nf np pn supp cycle decycle twist summit closure phi z standardize commute-z adjacent "
                   "intersect join complex-ball figures")
        ->required();
    app.add_option("args", args, "words ('s1 s2^-1', or '-' for stdin) or parabolics ('WORD{1,2}')");
    app.add_option("--N", s.N, "structure exponent N for Δ^N")->check(CLI::PositiveNumber);
    app.add_option("--kind", s.kind, "summit set: pos, sss, uss, rsss, su");
    app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--output", s.output, "write output to this file");
    auto* budget = app.add_option("--budget", s.budget, "search budget")->check(CLI::NonNegativeNumber);
    auto* radius = app.add_option("--radius", s.radius, "complex ball radius")->check(CLI::NonNegativeNumber);
    app.add_option("--config", config, "JSON config: rank_cap, budget, radius, su_power_bound, coxeter_matrix");
    app.add_option("--threads", s.threads, "thread cap (engines are sequential)")->check(CLI::PositiveNumber);
    app.positionals_at_end(false);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    try {
        if (!config.empty()) apply_config(s, config, budget->count() > 0, radius->count() > 0);
        std::ostringstream buf;
        Runner r(s, in);
        r.set_group(group);
        int code = r.dispatch(command, args, buf);
        if (s.output.empty()) {
            out << buf.str();
        } else {
            std::ofstream f(s.output, std::ios::binary);
            if (!f) throw Error(ErrorKind::InvalidSpec, "cannot write " + s.output);
            f << buf.str();
        }
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    }
}

}  // namespace artin::cli
