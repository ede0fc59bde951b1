#pragma once

// Weyl group elements as reduced words carrying their exact matrices, real
// roots with coroots and witnesses, and inversion sets.

#include "kmdata.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace masure {

using Word = std::vector<std::size_t>;  // positions, not labels

inline bool is_positive(const IntVec& c) {
    bool nz = false;
    for (auto x : c) {
        if (x < 0) return false;
        nz = nz || x != 0;
    }
    return nz;
}
inline bool is_negative(const IntVec& c) {
    IntVec m = c;
    for (auto& x : m) x = -x;
    return is_positive(m);
}
inline IntVec negated(IntVec c) {
    for (auto& x : c) x = -x;
    return c;
}
inline IntVec unit(std::size_t n, std::size_t i) {
    IntVec e(n, 0);
    e[i] = 1;
    return e;
}

// r_i on root-lattice coordinates: only coordinate i changes,
// c_i -> c_i - Σ_j a_ij c_j.
inline IntMat reflection_on_Q(const KacMoodyMatrix& A, std::size_t i) {
    IntMat m = identity_mat(A.size());
    for (std::size_t j = 0; j < A.size(); ++j) m[i][j] = (i == j ? 1 : 0) - A.a[i][j];
    return m;
}

// r_i(v) = v - α_i(v) α_i^∨ on Y.
inline IntMat reflection_on_Y(const KacMoodyData& d, std::size_t i) {
    IntMat m = identity_mat(d.rank);
    for (std::size_t k = 0; k < d.rank; ++k)
        for (std::size_t l = 0; l < d.rank; ++l) m[k][l] -= d.coroots[i][k] * d.roots[i][l];
    return m;
}

inline RatVec simple_reflect(const KacMoodyData& d, std::size_t i, const RatVec& v) {
    Rat s = d.alpha(i, v);
    RatVec r = v;
    for (std::size_t k = 0; k < d.rank; ++k) r[k] -= s * Rat(d.coroots[i][k]);
    return r;
}

// Covector on Y of a root with root-lattice coordinates c.
inline IntVec root_covector(const KacMoodyData& d, const IntVec& c) {
    IntVec f(d.rank, 0);
    for (std::size_t i = 0; i < d.n(); ++i)
        for (std::size_t k = 0; k < d.rank; ++k) f[k] = ck_add(f[k], ck_mul(c[i], d.roots[i][k]));
    return f;
}

inline Rat eval_root(const KacMoodyData& d, const IntVec& c, const RatVec& v) { return dot(root_covector(d, c), v); }

// β(α_i^∨) for β with coordinates c.
inline long long pair_coroot(const KacMoodyData& d, const IntVec& c, std::size_t i) {
    long long s = 0;
    for (std::size_t j = 0; j < d.n(); ++j) s = ck_add(s, ck_mul(c[j], d.A.a[i][j]));
    return s;
}

struct WeylElement {
    Word word;  // reduced; w = r_{word[0]} ... r_{word[k-1]}
    IntMat q;   // action on root coordinates
    IntMat y;   // action on Y

    std::size_t length() const { return word.size(); }
    IntVec act_root(const IntVec& c) const { return mat_vec(q, c); }
    RatVec act(const RatVec& v) const { return mat_vec(y, v); }
    IntVec act(const IntVec& v) const { return mat_vec(y, v); }
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.q == b.q && a.y == b.y; }
};

inline WeylElement identity_element(const KacMoodyData& d) { return {{}, identity_mat(d.n()), identity_mat(d.rank)}; }

// Right-multiplies w by r_i, keeping the word reduced: if w.α_i < 0 the
// exchange condition deletes the unique letter s_j with
// s_{j+1}...s_k.α_i = α_{s_j}.
inline WeylElement times_simple(const KacMoodyData& d, const WeylElement& w, std::size_t i) {
    WeylElement r = w;
    r.q = mat_mul(w.q, reflection_on_Q(d.A, i));
    r.y = mat_mul(w.y, reflection_on_Y(d, i));
    IntVec wa(d.n());
    for (std::size_t k = 0; k < d.n(); ++k) wa[k] = w.q[k][i];
    if (is_positive(wa)) {
        r.word.push_back(i);
        return r;
    }
    IntVec g = unit(d.n(), i);
    for (std::size_t j = w.word.size(); j-- > 0;) {
        IntVec next = mat_vec(reflection_on_Q(d.A, w.word[j]), g);
        if (is_negative(next)) {
            r.word.erase(r.word.begin() + static_cast<std::ptrdiff_t>(j));
            return r;
        }
        g = std::move(next);
    }
    throw DomainError("internal error: descent without deletion");
}

inline WeylElement make_element(const KacMoodyData& d, const Word& word) {
    WeylElement w = identity_element(d);
    for (auto i : word) {
        if (i >= d.n()) throw DomainError("index out of range in word");
        w = times_simple(d, w, i);
    }
    return w;
}

inline std::pair<std::size_t, Word> length_and_reduce(const KacMoodyData& d, const Word& word) {
    WeylElement w = make_element(d, word);
    return {w.length(), w.word};
}

inline WeylElement inverse(const KacMoodyData& d, const WeylElement& w) {
    Word rev(w.word.rbegin(), w.word.rend());
    return make_element(d, rev);
}

inline WeylElement compose(const KacMoodyData& d, const WeylElement& a, const WeylElement& b) {
    WeylElement r = a;
    for (auto i : b.word) r = times_simple(d, r, i);
    return r;
}

struct RealRoot {
    IntVec root;    // coordinates in the simple roots
    IntVec coroot;  // vector in Y
    Word word;      // witness: root = w.α_index with w = r_{word[0]}...
    std::size_t index = 0;

    long long height() const { return masure::height(root); }
    bool positive() const { return is_positive(root); }
    friend bool operator==(const RealRoot& a, const RealRoot& b) { return a.root == b.root; }
};

inline RealRoot make_real_root(const KacMoodyData& d, const Word& word, std::size_t i) {
    WeylElement w = make_element(d, word);
    return {w.act_root(unit(d.n(), i)), w.act(d.coroots[i]), word, i};
}

inline RealRoot simple_root(const KacMoodyData& d, std::size_t i) { return make_real_root(d, {}, i); }

inline RealRoot negate(const KacMoodyData& d, const RealRoot& a) {
    Word w = a.word;
    w.push_back(a.index);
    RealRoot r = make_real_root(d, w, a.index);
    return r;
}

// Decides whether c is a real root by height reduction through simple
// reflections; returns a witness when it is.
inline std::optional<RealRoot> as_real_root(const KacMoodyData& d, const IntVec& c) {
    if (c.size() != d.n()) throw DomainError("root has wrong number of coordinates");
    bool neg = is_negative(c);
    if (!neg && !is_positive(c)) return std::nullopt;
    IntVec g = neg ? negated(c) : c;
    Word applied;
    for (;;) {
        for (std::size_t i = 0; i < d.n(); ++i)
            if (g == unit(d.n(), i)) {
                Word w = applied;
                if (neg) w.push_back(i);
                return make_real_root(d, w, i);
            }
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < d.n() && !pick; ++i)
            if (pair_coroot(d, g, i) > 0) pick = i;
        if (!pick) return std::nullopt;
        g = mat_vec(reflection_on_Q(d.A, *pick), g);
        if (!is_positive(g)) return std::nullopt;
        applied.push_back(*pick);
    }
}

inline RealRoot real_root(const KacMoodyData& d, const IntVec& c) {
    auto r = as_real_root(d, c);
    if (!r) throw DomainError("not a real root");
    return *r;
}

struct RootOrder {
    bool operator()(const IntVec& a, const IntVec& b) const {
        long long ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    }
};

struct RootSet {
    long long H = 0;
    std::vector<RealRoot> roots;  // ordered by (height, coordinates)

    std::vector<std::size_t> counts_by_height() const {
        std::vector<std::size_t> c(static_cast<std::size_t>(H), 0);
        for (auto& r : roots) ++c[static_cast<std::size_t>(r.height() - 1)];
        return c;
    }
    bool contains(const IntVec& c) const {
        return std::any_of(roots.begin(), roots.end(), [&](const RealRoot& r) { return r.root == c; });
    }
};

// Positive real roots of height <= H by breadth-first closure of the simple
// roots under simple reflections.
inline RootSet enumerate_real_roots(const KacMoodyData& d, long long H) {
    if (H < 1) throw DomainError("height bound must be >= 1");
    std::map<IntVec, RealRoot, RootOrder> found;
    std::vector<RealRoot> frontier;
    for (std::size_t i = 0; i < d.n(); ++i) {
        RealRoot s = simple_root(d, i);
        found.emplace(s.root, s);
        frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<RealRoot> next;
        for (auto& b : frontier)
            for (std::size_t i = 0; i < d.n(); ++i) {
                IntVec c = mat_vec(reflection_on_Q(d.A, i), b.root);
                if (!is_positive(c) || height(c) > H || found.count(c)) continue;
                Word w{i};
                w.insert(w.end(), b.word.begin(), b.word.end());
                RealRoot r{c, mat_vec(reflection_on_Y(d, i), b.coroot), w, b.index};
                found.emplace(c, r);
                next.push_back(r);
            }
        frontier = std::move(next);
    }
    RootSet rs;
    rs.H = H;
    for (auto& [c, r] : found) rs.roots.push_back(r);
    return rs;
}

// Inv(w) = {α ∈ Δ+ : w.α ∈ Δ-}. For the reduced word w = r_{j1}...r_{jk}:
// {α_{jk}, r_{jk}.α_{j(k-1)}, ..., r_{jk}...r_{j2}.α_{j1}}.
inline std::vector<RealRoot> inversion_set(const KacMoodyData& d, const WeylElement& w) {
    std::vector<RealRoot> out;
    const Word& s = w.word;
    for (std::size_t m = s.size(); m-- > 0;) {
        Word prefix(s.rbegin(), s.rbegin() + static_cast<std::ptrdiff_t>(s.size() - 1 - m));
        out.push_back(make_real_root(d, prefix, s[m]));
    }
    return out;
}

// r_α = w r_i w^{-1} for the witness α = w.α_i.
inline WeylElement reflection(const KacMoodyData& d, const RealRoot& a) {
    Word word = a.word;
    word.push_back(a.index);
    word.insert(word.end(), a.word.rbegin(), a.word.rend());
    return make_element(d, word);
}

// r_α(v) = v - α(v) α^∨.
inline RatVec reflect_root(const KacMoodyData& d, const RealRoot& a, const RatVec& v) {
    Rat s = eval_root(d, a.root, v);
    RatVec r = v;
    for (std::size_t k = 0; k < d.rank; ++k) r[k] -= s * Rat(a.coroot[k]);
    return r;
}

inline std::string root_str(const KacMoodyData& d, const IntVec& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        long long v = c[i];
        if (!out.empty() || v < 0) out += v < 0 ? "-" : "+";
        long long a = v < 0 ? -v : v;
        if (a != 1) out += std::to_string(a);
        out += "a" + d.label(i);
    }
    return out.empty() ? "0" : out;
}

inline std::string word_str(const KacMoodyData& d, const Word& w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "," : "") + d.label(w[k]);
    return out;
}

inline Word parse_word(const KacMoodyData& d, const std::string& s) {
    Word w;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        w.push_back(d.position(std::stoll(cur)));
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',' || ch == ' ' || ch == '(' || ch == ')') flush();
        else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') cur += ch;
        else throw DomainError("bad word '" + s + "'");
    }
    flush();
    return w;
}

}  // namespace masure
