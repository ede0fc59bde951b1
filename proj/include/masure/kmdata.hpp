#pragma once

// Generalized Cartan matrices and free root data.

#include "linear_feasibility.hpp"
#include "rational.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace masure {

enum class KMClass { Finite, Affine, Indefinite };

inline std::string to_string(KMClass c) {
    switch (c) {
        case KMClass::Finite: return "finite";
        case KMClass::Affine: return "affine";
        case KMClass::Indefinite: return "indefinite";
    }
    return "?";
}

struct NotKacMoody : DomainError {
    int axiom;
    std::size_t i, j;
    NotKacMoody(int ax, std::size_t i_, std::size_t j_, const std::string& why)
        : DomainError("not a Kac-Moody matrix (axiom " + std::to_string(ax) + " at (" + std::to_string(i_ + 1) + "," +
                      std::to_string(j_ + 1) + ")): " + why),
          axiom(ax), i(i_), j(j_) {}
};

// Validated generalized Cartan matrix. a[i][j] = α_j(α_i^∨).
struct KacMoodyMatrix {
    IntMat a;
    std::size_t size() const { return a.size(); }
    long long operator()(std::size_t i, std::size_t j) const { return a[i][j]; }
    friend bool operator==(const KacMoodyMatrix&, const KacMoodyMatrix&) = default;
};

inline KacMoodyMatrix validate(const IntMat& a) {
    std::size_t n = a.size();
    if (n == 0) throw DomainError("empty matrix");
    for (auto& row : a)
        if (row.size() != n) throw DomainError("matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] != 2) throw NotKacMoody(1, i, i, "diagonal entry must be 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) throw NotKacMoody(2, i, j, "off-diagonal entries must be <= 0");
            if ((a[i][j] == 0) != (a[j][i] == 0)) throw NotKacMoody(3, i, j, "a_ij = 0 must be equivalent to a_ji = 0");
        }
    }
    return {a};
}

inline KacMoodyMatrix transpose(const KacMoodyMatrix& m) {
    std::size_t n = m.size();
    IntMat t(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = m.a[j][i];
    return {t};
}

inline KacMoodyMatrix principal_submatrix(const KacMoodyMatrix& m, const std::vector<std::size_t>& idx) {
    IntMat s(idx.size(), IntVec(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) s[i][j] = m.a[idx[i]][idx[j]];
    return {s};
}

// Connected components of the graph i ~ j iff a_ij != 0.
inline std::vector<std::vector<std::size_t>> decompose(const KacMoodyMatrix& m) {
    std::size_t n = m.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            members.push_back(i);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && m.a[i][j] != 0 && comp[j] < 0) {
                    comp[j] = comp[s];
                    stack.push_back(j);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    return out;
}

inline bool is_indecomposable(const KacMoodyMatrix& m) { return decompose(m).size() == 1; }

// The trichotomy, decided by exact feasibility over Q:
// finite: u >= 1, Au >= 1; affine: u >= 1, Au = 0; indefinite: u >= 1, Au <= -1.
inline KMClass classify(const KacMoodyMatrix& m) {
    if (!is_indecomposable(m)) throw DomainError("classify requires an indecomposable matrix");
    std::size_t n = m.size();
    auto probe = [&](int mode) {
        LinearSystem sys(n);
        for (std::size_t i = 0; i < n; ++i) sys.var_ge(i, 1);
        for (std::size_t i = 0; i < n; ++i) {
            RatVec row = to_rat(m.a[i]);
            if (mode > 0) sys.ge(row, 1);
            else if (mode == 0) sys.eq(row, 0);
            else sys.le(row, -1);
        }
        return sys.feasible();
    };
    if (probe(1)) return KMClass::Finite;
    if (probe(0)) return KMClass::Affine;
    if (probe(-1)) return KMClass::Indefinite;
    throw DomainError("classification failed: no case of the trichotomy is feasible");
}

// Free realization: simple roots α_i as rows (covectors on Y = Z^r) and
// simple coroots α_i^∨ as vectors in Y.
struct KacMoodyData {
    KacMoodyMatrix A;
    std::size_t rank = 0;
    IntMat roots;    // n x r
    IntMat coroots;  // n x r
    std::vector<long long> labels;

    std::size_t n() const { return A.size(); }
    std::string label(std::size_t i) const { return std::to_string(labels[i]); }
    std::size_t position(long long label) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return i;
        throw DomainError("unknown index " + std::to_string(label));
    }
    // α_i(v)
    Rat alpha(std::size_t i, const RatVec& v) const { return dot(roots[i], v); }
    friend bool operator==(const KacMoodyData&, const KacMoodyData&) = default;
};

// Affine matrices conventionally index from 0, others from 1.
inline std::vector<long long> default_labels(const KacMoodyMatrix& m) {
    std::vector<long long> l(m.size());
    long long start = 1;
    if (is_indecomposable(m) && classify(m) == KMClass::Affine) start = 0;
    std::iota(l.begin(), l.end(), start);
    return l;
}

inline KacMoodyData validate_data(const KacMoodyMatrix& A, std::size_t r, const IntMat& roots, const IntMat& coroots,
                                  std::vector<long long> labels = {}) {
    std::size_t n = A.size();
    if (roots.size() != n || coroots.size() != n) throw DomainError("need one simple root and coroot per index");
    for (std::size_t i = 0; i < n; ++i)
        if (roots[i].size() != r || coroots[i].size() != r) throw DomainError("root/coroot length must equal the rank");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (dot(roots[j], coroots[i]) != A.a[i][j])
                throw DomainError("pairing alpha_" + std::to_string(j + 1) + "(alpha_" + std::to_string(i + 1) +
                                  "^v) != a_ij");
    if (rank_of(roots) != n) throw DomainError("simple roots are not linearly independent (data not free)");
    if (labels.empty()) labels = default_labels(A);
    if (labels.size() != n) throw DomainError("wrong number of labels");
    return {A, r, roots, coroots, labels};
}

// Minimal free and cofree realization of rank 2n - rank(A): coroots are the
// first n unit vectors; each root is the column of A extended by a unit
// entry for every row outside a maximal independent set.
inline KacMoodyData minimal_realization(const KacMoodyMatrix& A) {
    std::size_t n = A.size();
    KacMoodyMatrix At = transpose(A);
    std::vector<std::size_t> basis;
    std::vector<RatVec> chosen;
    for (std::size_t j = 0; j < n; ++j) {
        auto trial = chosen;
        trial.push_back(to_rat(At.a[j]));
        if (rank_of(trial) == trial.size()) {
            chosen = trial;
            basis.push_back(j);
        }
    }
    std::size_t extra = n - basis.size();
    std::size_t r = n + extra;
    IntMat roots(n, IntVec(r, 0)), coroots(n, IntVec(r, 0));
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) roots[j][i] = A.a[i][j];
        if (std::find(basis.begin(), basis.end(), j) == basis.end()) roots[j][n + k++] = 1;
        coroots[j][j] = 1;
    }
    return validate_data(A, r, roots, coroots);
}

inline long long height(const IntVec& v) {
    long long h = 0;
    for (auto x : v) h = ck_add(h, x);
    return h;
}

// Standard data of affine SL2 on Y = Z h ⊕ Z c ⊕ Z d: α_1 = 2h*, α_0 = δ - α_1,
// α_1^∨ = h, α_0^∨ = c - h, with δ(d) = 1.
inline KacMoodyData affine_sl2_data() {
    KacMoodyMatrix A = validate({{2, -2}, {-2, 2}});
    return validate_data(A, 3, {{-2, 0, 1}, {2, 0, 0}}, {{-1, 1, 0}, {1, 0, 0}}, {0, 1});
}

// Rank-one data of the SL2 tree: A ≅ R, α(z) = z, α^∨ = 2, so walls sit at
// the integers and ht(z) = z/2.
inline KacMoodyData tree_data() {
    KacMoodyMatrix A = validate({{2}});
    return validate_data(A, 1, {{1}}, {{2}}, {1});
}

// A(a,b) = [[2,-a],[-b,2]] with its minimal realization.
inline KacMoodyData rank2_data(long long a, long long b) { return minimal_realization(validate({{2, -a}, {-b, 2}})); }

}  // namespace masure
