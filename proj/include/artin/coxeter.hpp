#pragma once

// Spherical Coxeter presentations, the finite Coxeter group W_S acting on its
// root system, and generator-subset combinatorics (Δ_X, τ_X, components).

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "artin/errors.hpp"

namespace artin {

inline constexpr int kDefaultRankCap = 10;
inline constexpr int kMaxRank = 31;

class GeneratorSet {
public:
    constexpr GeneratorSet() = default;
    constexpr explicit GeneratorSet(std::uint32_t mask) : mask_(mask) {}
    GeneratorSet(std::initializer_list<int> gens) {
        for (int s : gens) insert(s);
    }

    static GeneratorSet single(int s) { return GeneratorSet(std::uint32_t{1} << s); }
    static GeneratorSet first(int n) {
        return GeneratorSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
    }

    bool contains(int s) const { return (mask_ >> s) & 1u; }
    void insert(int s) { mask_ |= std::uint32_t{1} << s; }
    void erase(int s) { mask_ &= ~(std::uint32_t{1} << s); }
    int size() const { return std::popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    std::uint32_t mask() const { return mask_; }
    bool subset_of(GeneratorSet o) const { return (mask_ & ~o.mask_) == 0; }
    int lowest() const { return empty() ? -1 : std::countr_zero(mask_); }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    friend GeneratorSet operator|(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.mask_ | b.mask_); }
    friend GeneratorSet operator&(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.mask_ & b.mask_); }
    friend GeneratorSet operator-(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.mask_ & ~b.mask_); }
    friend bool operator==(GeneratorSet a, GeneratorSet b) { return a.mask_ == b.mask_; }
    friend bool operator<(GeneratorSet a, GeneratorSet b) { return a.mask_ < b.mask_; }

private:
    std::uint32_t mask_ = 0;
};

// m(s,t) = 0 encodes ∞.
struct CoxeterSpec {
    int rank = 0;
    std::vector<std::vector<int>> matrix;

    int m(int s, int t) const { return matrix[s][t]; }

    static CoxeterSpec from_matrix(std::vector<std::vector<int>> mat) {
        CoxeterSpec spec;
        spec.rank = static_cast<int>(mat.size());
        if (spec.rank == 0) throw Error(ErrorKind::InvalidSpec, "empty Coxeter matrix");
        if (spec.rank > kMaxRank) throw Error(ErrorKind::RankCapExceeded, "rank too large");
        for (int i = 0; i < spec.rank; ++i) {
            if (static_cast<int>(mat[i].size()) != spec.rank)
                throw Error(ErrorKind::InvalidSpec, "Coxeter matrix is not square");
        }
        for (int i = 0; i < spec.rank; ++i) {
            mat[i][i] = 1;
            for (int j = 0; j < spec.rank; ++j) {
                if (i == j) continue;
                if (mat[i][j] != mat[j][i]) throw Error(ErrorKind::InvalidSpec, "Coxeter matrix not symmetric");
                if (mat[i][j] != 0 && mat[i][j] < 2)
                    throw Error(ErrorKind::InvalidSpec, "off-diagonal Coxeter entries must be >= 2");
            }
        }
        spec.matrix = std::move(mat);
        return spec;
    }

    // Tokens: A4, B3, C3, D5, E6, F4, G2, H3, I2(5); products joined by 'x' or '+'.
    static CoxeterSpec parse(const std::string& token) {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : token) {
            if (c == 'x' || c == '+' || c == '*') {
                parts.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur.push_back(c);
            }
        }
        parts.push_back(cur);
        std::vector<CoxeterSpec> comps;
        for (const auto& p : parts) comps.push_back(parse_irreducible(p));
        int n = 0;
        for (const auto& c : comps) n += c.rank;
        if (n > kMaxRank) throw Error(ErrorKind::RankCapExceeded, "rank too large");
        std::vector<std::vector<int>> mat(n, std::vector<int>(n, 2));
        int off = 0;
        for (const auto& c : comps) {
            for (int i = 0; i < c.rank; ++i)
                for (int j = 0; j < c.rank; ++j) mat[off + i][off + j] = c.matrix[i][j];
            off += c.rank;
        }
        return from_matrix(std::move(mat));
    }

private:
    static CoxeterSpec parse_irreducible(const std::string& tok) {
        static const std::regex re(R"(([ABCDEFGHI])(\d+)(?:\((\d+)\))?)");
        std::smatch mt;
        if (!std::regex_match(tok, mt, re)) throw Error(ErrorKind::ParseError, "bad group token '" + tok + "'");
        char family = mt[1].str()[0];
        int n = std::stoi(mt[2].str());
        if (n < 1 || n > kMaxRank) throw Error(ErrorKind::ParseError, "bad rank in '" + tok + "'");
        std::vector<std::vector<int>> mat(n, std::vector<int>(n, 2));
        auto edge = [&](int i, int j, int m) { mat[i][j] = mat[j][i] = m; };
        auto path = [&] {
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, 3);
        };
        auto need = [&](bool ok) {
            if (!ok) throw Error(ErrorKind::ParseError, "no Coxeter type '" + tok + "'");
        };
        if (family != 'I') need(!mt[3].matched);
        switch (family) {
            case 'A': path(); break;
            case 'B':
            case 'C':
                need(n >= 2);
                path();
                edge(n - 2, n - 1, 4);
                break;
            case 'D':
                need(n >= 4);
                for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, 3);
                edge(n - 3, n - 1, 3);
                break;
            case 'E':
                need(n >= 6 && n <= 8);
                edge(0, 2, 3);
                edge(1, 3, 3);
                for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, 3);
                break;
            case 'F':
                need(n == 4);
                edge(0, 1, 3);
                edge(1, 2, 4);
                edge(2, 3, 3);
                break;
            case 'G':
                need(n == 2);
                edge(0, 1, 6);
                break;
            case 'H':
                need(n >= 2 && n <= 4);
                path();
                edge(0, 1, 5);
                break;
            case 'I': {
                need(n == 2 && mt[3].matched);
                int m = std::stoi(mt[3].str());
                need(m >= 2);
                edge(0, 1, m);
                break;
            }
            default: need(false);
        }
        CoxeterSpec spec;
        spec.rank = n;
        spec.matrix = std::move(mat);
        for (int i = 0; i < n; ++i) spec.matrix[i][i] = 1;
        return spec;
    }
};

// Connected components of the Coxeter graph restricted to X (edges where m > 2 or m = ∞).
inline std::vector<GeneratorSet> graph_components(const CoxeterSpec& spec, GeneratorSet X) {
    std::vector<GeneratorSet> out;
    GeneratorSet left = X;
    while (!left.empty()) {
        GeneratorSet comp = GeneratorSet::single(left.lowest());
        GeneratorSet frontier = comp;
        while (!frontier.empty()) {
            GeneratorSet next;
            for (int s : frontier.members())
                for (int t : left.members())
                    if (!comp.contains(t) && (spec.m(s, t) > 2 || spec.m(s, t) == 0)) next.insert(t);
            comp = comp | next;
            frontier = next;
        }
        out.push_back(comp);
        left = left - comp;
    }
    return out;
}

// Name of a connected Coxeter graph on X, or nullopt if it is not of spherical type.
inline std::optional<std::string> classify_component(const CoxeterSpec& spec, GeneratorSet X) {
    auto gens = X.members();
    int k = static_cast<int>(gens.size());
    if (k == 1) return "A1";
    std::vector<std::tuple<int, int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int m = spec.m(gens[i], gens[j]);
            if (m == 0) return std::nullopt;
            if (m > 2) edges.emplace_back(i, j, m);
        }
    if (k == 2) {
        int m = std::get<2>(edges.at(0));
        if (m == 3) return "A2";
        if (m == 4) return "B2";
        if (m == 6) return "G2";
        return "I2(" + std::to_string(m) + ")";
    }
    if (static_cast<int>(edges.size()) != k - 1) return std::nullopt;
    std::vector<std::vector<std::pair<int, int>>> adj(k);
    int heavy = 0;
    for (auto [i, j, m] : edges) {
        adj[i].push_back({j, m});
        adj[j].push_back({i, m});
        if (m > 3) ++heavy;
    }
    std::vector<int> branch;
    for (int i = 0; i < k; ++i) {
        if (adj[i].size() > 3) return std::nullopt;
        if (adj[i].size() == 3) branch.push_back(i);
    }
    if (branch.size() > 1) return std::nullopt;
    if (branch.size() == 1) {
        if (heavy) return std::nullopt;
        std::vector<int> arms;
        for (auto [nb, m] : adj[branch[0]]) {
            int len = 1, prev = branch[0], cur = nb;
            while (adj[cur].size() == 2) {
                int nxt = adj[cur][0].first == prev ? adj[cur][1].first : adj[cur][0].first;
                prev = cur;
                cur = nxt;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(k);
        if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(k);
        return std::nullopt;
    }
    // A path: read the edge labels in order.
    int end = 0;
    while (adj[end].size() != 1) ++end;
    std::vector<int> labels;
    int prev = -1, cur = end;
    while (true) {
        int nxt = -1, lab = 0;
        for (auto [nb, m] : adj[cur])
            if (nb != prev) nxt = nb, lab = m;
        if (nxt < 0) break;
        labels.push_back(lab);
        prev = cur;
        cur = nxt;
    }
    if (heavy == 0) return "A" + std::to_string(k);
    if (heavy > 1) return std::nullopt;
    int pos = 0;
    while (labels[pos] == 3) ++pos;
    int m = labels[pos];
    bool at_end = pos == 0 || pos == k - 2;
    if (m == 4 && at_end) return "B" + std::to_string(k);
    if (m == 4 && k == 4 && pos == 1) return "F4";
    if (m == 5 && at_end && (k == 3 || k == 4)) return "H" + std::to_string(k);
    return std::nullopt;
}

// An element of the finite Coxeter group W_S, stored as a permutation of the root system.
class CoxeterElement {
public:
    int length() const { return length_; }
    bool is_identity() const { return length_ == 0; }
    GeneratorSet left_descents() const { return GeneratorSet(left_); }
    GeneratorSet right_descents() const { return GeneratorSet(right_); }
    GeneratorSet support() const { return GeneratorSet(support_); }
    const std::vector<std::uint16_t>& images() const { return img_; }

    // W acts faithfully on the simple roots, so their images determine the element.
    friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) {
        return a.length_ == b.length_ && std::equal(a.img_.begin(), a.img_.begin() + a.rank_, b.img_.begin());
    }
    friend bool operator<(const CoxeterElement& a, const CoxeterElement& b) {
        if (a.length_ != b.length_) return a.length_ < b.length_;
        return std::lexicographical_compare(a.img_.begin(), a.img_.begin() + a.rank_, b.img_.begin(),
                                            b.img_.begin() + b.rank_);
    }
    std::size_t hash() const {
        std::size_t h = length_;
        for (int i = 0; i < rank_; ++i) h = h * 1000003u + img_[i];
        return h;
    }

private:
    friend class GroupContext;
    std::vector<std::uint16_t> img_;
    std::uint16_t length_ = 0;
    std::uint16_t rank_ = 0;
    std::uint32_t left_ = 0, right_ = 0, support_ = 0;
};

class GroupContext;
using ContextPtr = std::shared_ptr<const GroupContext>;

class GroupContext {
public:
    static ContextPtr build(const CoxeterSpec& spec, int rank_cap = kDefaultRankCap) {
        return ContextPtr(new GroupContext(spec, rank_cap));
    }

    const CoxeterSpec& spec() const { return spec_; }
    const std::string& type_name() const { return name_; }
    int rank() const { return spec_.rank; }
    int m(int s, int t) const { return spec_.m(s, t); }
    GeneratorSet all() const { return GeneratorSet::first(spec_.rank); }
    int root_count() const { return nroots_; }

    const CoxeterElement& identity() const { return identity_; }
    const CoxeterElement& delta() const { return delta_; }
    const CoxeterElement& generator(int s) const { return generators_[s]; }
    int tau_generator(int s) const { return tau_[s]; }
    bool tau_trivial() const { return tau_trivial_; }

    CoxeterElement compose(const CoxeterElement& a, const CoxeterElement& b) const {
        std::vector<std::uint16_t> img(nroots_);
        for (int r = 0; r < nroots_; ++r) img[r] = a.img_[b.img_[r]];
        return make(std::move(img));
    }
    CoxeterElement times_generator(const CoxeterElement& a, int s) const {
        const auto& g = perms_[s];
        std::vector<std::uint16_t> img(nroots_);
        for (int r = 0; r < nroots_; ++r) img[r] = a.img_[g[r]];
        return make(std::move(img));
    }
    CoxeterElement generator_times(int s, const CoxeterElement& a) const {
        const auto& g = perms_[s];
        std::vector<std::uint16_t> img(nroots_);
        for (int r = 0; r < nroots_; ++r) img[r] = g[a.img_[r]];
        return make(std::move(img));
    }
    CoxeterElement inverse(const CoxeterElement& a) const {
        std::vector<std::uint16_t> img(nroots_);
        for (int r = 0; r < nroots_; ++r) img[a.img_[r]] = static_cast<std::uint16_t>(r);
        return make(std::move(img));
    }
    // τ(a) = Δ⁻¹ a Δ.
    CoxeterElement tau(const CoxeterElement& a) const {
        if (tau_trivial_ || a.is_identity()) return a;
        return compose(delta_, compose(a, delta_));
    }
    CoxeterElement tau_power(const CoxeterElement& a, long long k) const { return (k % 2 == 0) ? a : tau(a); }
    // ∂(a) = a⁻¹Δ.
    CoxeterElement complement(const CoxeterElement& a) const { return compose(inverse(a), delta_); }
    // Δa⁻¹, the element c with c·a = Δ.
    CoxeterElement left_complement(const CoxeterElement& a) const { return compose(delta_, inverse(a)); }

    bool is_prefix(const CoxeterElement& a, const CoxeterElement& b) const {
        if (a.length_ > b.length_) return false;
        return compose(inverse(a), b).length_ + a.length_ == b.length_;
    }

    // Greatest common prefix in the weak order.
    CoxeterElement meet(CoxeterElement a, CoxeterElement b) const {
        CoxeterElement m = identity_;
        while (true) {
            GeneratorSet common = a.left_descents() & b.left_descents();
            if (common.empty()) return m;
            int s = common.lowest();
            m = times_generator(m, s);
            a = generator_times(s, a);
            b = generator_times(s, b);
        }
    }
    // Least common multiple in the prefix order, through complements.
    CoxeterElement join(const CoxeterElement& a, const CoxeterElement& b) const {
        CoxeterElement ca = complement(a), cb = complement(b);
        // ∂(a∨b) is the greatest common suffix of ∂(a), ∂(b); suffixes are inverses of prefixes of inverses.
        CoxeterElement suf = inverse(meet(inverse(ca), inverse(cb)));
        return left_complement(suf);
    }

    // Lexicographically least reduced word (0-based generators).
    std::vector<int> word(CoxeterElement a) const {
        std::vector<int> w;
        w.reserve(a.length_);
        while (!a.is_identity()) {
            int s = a.left_descents().lowest();
            w.push_back(s);
            a = generator_times(s, a);
        }
        return w;
    }

    std::optional<CoxeterElement> from_reduced_word(const std::vector<int>& w) const {
        CoxeterElement a = identity_;
        for (int s : w) {
            if (s < 0 || s >= rank()) return std::nullopt;
            if (a.right_descents().contains(s)) return std::nullopt;
            a = times_generator(a, s);
        }
        return a;
    }

    // Δ_X, the longest element of W_X (identity for X = ∅).
    CoxeterElement longest_element(GeneratorSet X) const {
        CoxeterElement w = identity_;
        while (true) {
            GeneratorSet cand = X - w.right_descents();
            if (cand.empty()) return w;
            w = times_generator(w, cand.lowest());
        }
    }

    // s ↦ Δ_X⁻¹ s Δ_X for s ∈ X; entries outside X are -1.
    std::vector<int> delta_permutation(GeneratorSet X) const {
        std::vector<int> out(rank(), -1);
        CoxeterElement d = longest_element(X);
        for (int s : X.members()) {
            CoxeterElement c = compose(d, compose(generators_[s], d));
            for (int t : X.members())
                if (c == generators_[t]) out[s] = t;
            if (out[s] < 0) throw Error(ErrorKind::InternalInconsistency, "Δ_X does not normalize X");
        }
        return out;
    }

    std::vector<GeneratorSet> components(GeneratorSet X) const { return graph_components(spec_, X); }
    bool is_irreducible(GeneratorSet X) const { return components(X).size() == 1; }

    int central_exponent(GeneratorSet X) const {
        auto perm = delta_permutation(X);
        for (int s : X.members())
            if (perm[s] != s) return 2;
        return 1;
    }

    int delta_length(GeneratorSet X) const {
        if (!delta_lengths_.empty()) return delta_lengths_[X.mask()];
        return longest_element(X).length();
    }

    bool commute(int s, int t) const { return s == t || spec_.m(s, t) == 2; }

private:
    GroupContext(const CoxeterSpec& spec, int rank_cap) : spec_(spec) {
        if (spec.rank > rank_cap)
            throw Error(ErrorKind::RankCapExceeded,
                        "rank " + std::to_string(spec.rank) + " exceeds cap " + std::to_string(rank_cap));
        std::vector<std::string> names;
        for (GeneratorSet c : graph_components(spec, GeneratorSet::first(spec.rank))) {
            auto nm = classify_component(spec, c);
            if (!nm) throw Error(ErrorKind::NonSphericalType, "Coxeter graph component is not of spherical type");
            names.push_back(*nm);
        }
        for (std::size_t i = 0; i < names.size(); ++i) name_ += (i ? "x" : "") + names[i];
        build_roots();
        identity_ = make(identity_images());
        for (int s = 0; s < rank(); ++s) generators_.push_back(make(perms_[s]));
        delta_ = longest_element(all());
        tau_.assign(rank(), -1);
        tau_trivial_ = true;
        for (int s = 0; s < rank(); ++s) {
            CoxeterElement c = compose(delta_, compose(generators_[s], delta_));
            for (int t = 0; t < rank(); ++t)
                if (c == generators_[t]) tau_[s] = t;
            if (tau_[s] != s) tau_trivial_ = false;
        }
        if (rank() <= 6) {
            delta_lengths_.resize(std::size_t{1} << rank());
            for (std::uint32_t m = 0; m < delta_lengths_.size(); ++m)
                delta_lengths_[m] = longest_element(GeneratorSet(m)).length();
        }
    }

    std::vector<std::uint16_t> identity_images() const {
        std::vector<std::uint16_t> img(nroots_);
        for (int r = 0; r < nroots_; ++r) img[r] = static_cast<std::uint16_t>(r);
        return img;
    }

    bool negative(int r) const { return r >= npos_; }

    CoxeterElement make(std::vector<std::uint16_t> img) const {
        CoxeterElement e;
        e.rank_ = static_cast<std::uint16_t>(rank());
        std::uint32_t left = 0, right = 0, supp = 0;
        int len = 0;
        for (int r = 0; r < npos_; ++r) {
            if (negative(img[r])) {
                ++len;
                supp |= root_support_[r];
            }
        }
        for (int r = 0; r < nroots_; ++r) {
            int im = img[r];
            if (im < rank() && negative(r)) left |= std::uint32_t{1} << im;
        }
        for (int s = 0; s < rank(); ++s)
            if (negative(img[s])) right |= std::uint32_t{1} << s;
        e.img_ = std::move(img);
        e.length_ = static_cast<std::uint16_t>(len);
        e.left_ = left;
        e.right_ = right;
        e.support_ = supp;
        return e;
    }

    // Roots in simple-root coordinates under the geometric representation; the Coxeter
    // group permutes them, and indices are exact once the orbit is found.
    void build_roots() {
        const int n = rank();
        std::vector<std::vector<double>> B(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                B[i][j] = (i == j) ? 1.0 : -std::cos(std::numbers::pi / spec_.m(i, j));
        auto key = [](const std::vector<double>& v) {
            std::vector<long long> k(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) k[i] = std::llround(v[i] * 1e6);
            return k;
        };
        auto reflect = [&](int s, const std::vector<double>& v) {
            double dot = 0;
            for (int j = 0; j < n; ++j) dot += B[s][j] * v[j];
            std::vector<double> w = v;
            w[s] -= 2 * dot;
            return w;
        };
        std::vector<std::vector<double>> pos;
        std::map<std::vector<long long>, int> index;
        for (int i = 0; i < n; ++i) {
            std::vector<double> e(n, 0.0);
            e[i] = 1.0;
            index[key(e)] = static_cast<int>(pos.size());
            pos.push_back(e);
        }
        constexpr std::size_t kRootLimit = 4000;
        for (std::size_t q = 0; q < pos.size(); ++q) {
            for (int s = 0; s < n; ++s) {
                std::vector<double> w = reflect(s, pos[q]);
                bool positive = std::all_of(w.begin(), w.end(), [](double c) { return c > -1e-9; });
                if (!positive) continue;
                auto k = key(w);
                if (!index.count(k)) {
                    index[k] = static_cast<int>(pos.size());
                    pos.push_back(w);
                    if (pos.size() > kRootLimit)
                        throw Error(ErrorKind::NonSphericalType, "root system does not close up");
                }
            }
        }
        npos_ = static_cast<int>(pos.size());
        nroots_ = 2 * npos_;
        if (nroots_ > 65535) throw Error(ErrorKind::RankCapExceeded, "root system too large");
        root_support_.assign(nroots_, 0);
        for (int r = 0; r < npos_; ++r) {
            std::uint32_t m = 0;
            for (int j = 0; j < n; ++j)
                if (pos[r][j] > 1e-9) m |= std::uint32_t{1} << j;
            root_support_[r] = root_support_[r + npos_] = m;
        }
        perms_.assign(n, std::vector<std::uint16_t>(nroots_));
        for (int s = 0; s < n; ++s) {
            for (int r = 0; r < npos_; ++r) {
                int img;
                if (r == s) {
                    img = npos_ + s;
                } else {
                    auto w = reflect(s, pos[r]);
                    auto it = index.find(key(w));
                    if (it == index.end()) throw Error(ErrorKind::InternalInconsistency, "root lookup failed");
                    img = it->second;
                }
                perms_[s][r] = static_cast<std::uint16_t>(img);
                int neg = img < npos_ ? img + npos_ : img - npos_;
                perms_[s][r + npos_] = static_cast<std::uint16_t>(neg);
            }
        }
    }

    CoxeterSpec spec_;
    std::string name_;
    int npos_ = 0, nroots_ = 0;
    std::vector<std::uint32_t> root_support_;
    std::vector<std::vector<std::uint16_t>> perms_;
    CoxeterElement identity_, delta_;
    std::vector<CoxeterElement> generators_;
    std::vector<int> tau_;
    bool tau_trivial_ = true;
    std::vector<int> delta_lengths_;
};

inline ContextPtr build_context(const CoxeterSpec& spec, int rank_cap = kDefaultRankCap) {
    return GroupContext::build(spec, rank_cap);
}

inline ContextPtr build_context(const std::string& token, int rank_cap = kDefaultRankCap) {
    return GroupContext::build(CoxeterSpec::parse(token), rank_cap);
}

}  // namespace artin

template <>
struct std::hash<artin::CoxeterElement> {
    std::size_t operator()(const artin::CoxeterElement& e) const { return e.hash(); }
};
