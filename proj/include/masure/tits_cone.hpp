#pragma once

// Tits cone membership with certificates, vectorial faces, sphericity and
// prenilpotent pairs of real roots.

#include "kmdata.hpp"
#include "linear_feasibility.hpp"
#include "weyl_roots.hpp"

#include <limits>
#include <map>
#include <set>
#include <optional>
#include <string>
#include <vector>

namespace masure {

struct ConeCertificate {
    enum class Kind { InCone, NotInCone, Unknown } kind = Kind::Unknown;
    WeylElement w;        // InCone: w.v = image lies in the closed fundamental chamber
    RatVec image;
    std::string reason;   // NotInCone: checkable witness
    long long steps = 0;  // Unknown: reflections tried
};

inline std::string to_string(ConeCertificate::Kind k) {
    switch (k) {
        case ConeCertificate::Kind::InCone: return "in-cone";
        case ConeCertificate::Kind::NotInCone: return "not-in-cone";
        case ConeCertificate::Kind::Unknown: return "unknown";
    }
    return "?";
}

inline long long default_cap(const RatVec& v) {
    Rat s = 1;
    for (auto& x : v) s += x < 0 ? Rat(-x) : x;
    return to_ll(ceil(s)) * 10;
}

inline bool is_dominant(const KacMoodyData& d, const RatVec& v) {
    for (std::size_t i = 0; i < d.n(); ++i)
        if (d.alpha(i, v) < 0) return false;
    return true;
}

inline bool in_A_in(const KacMoodyData& d, const RatVec& v) {
    for (std::size_t i = 0; i < d.n(); ++i)
        if (d.alpha(i, v) != 0) return false;
    return true;
}

// Primitive positive integer vector spanning ker(M) ∩ R_{>0}^n, if any.
inline std::optional<IntVec> positive_kernel(const IntMat& m) {
    std::size_t n = m.size();
    LinearSystem sys(n);
    for (std::size_t i = 0; i < n; ++i) {
        sys.var_ge(i, 1);
        sys.eq(to_rat(m[i]), 0);
    }
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    Int l = 1;
    for (auto& x : *sol) l = boost::multiprecision::lcm(l, den(x));
    Int g = 0;
    std::vector<Int> iv;
    for (auto& x : *sol) {
        iv.push_back(num(x * Rat(l)));
        g = boost::multiprecision::gcd(g, iv.back());
    }
    IntVec out;
    for (auto& x : iv) out.push_back(to_ll(x / g));
    return out;
}

// δ = Σ n_i α_i for affine data (A n = 0 with n primitive positive).
inline IntVec null_root(const KacMoodyData& d) {
    auto k = positive_kernel(d.A.a);
    if (!k) throw DomainError("matrix has no positive null vector (not affine)");
    return *k;
}

inline bool is_rank2_indefinite(const KacMoodyData& d) {
    return d.n() == 2 && is_indecomposable(d.A) && classify(d.A) == KMClass::Indefinite;
}

namespace detail {

// Image of v in simple-root coordinates u = (α_1(v), α_2(v)), where r_i acts
// by u -> u - u_i (row i of A).
inline std::vector<Rat> u_coords(const KacMoodyData& d, const RatVec& v) { return {d.alpha(0, v), d.alpha(1, v)}; }

inline std::vector<Rat> u_reflect(const KacMoodyData& d, std::size_t i, std::vector<Rat> u) {
    Rat ui = u[i];
    for (std::size_t j = 0; j < 2; ++j) u[j] -= ui * Rat(d.A.a[i][j]);
    return u;
}

// Q(u) = det(u, r_1 r_2 u) vanishes exactly on the eigenlines of r_1 r_2.
inline Rat eigen_form(const KacMoodyData& d, const std::vector<Rat>& u) {
    auto m = u_reflect(d, 0, u_reflect(d, 1, u));
    return u[0] * m[1] - u[1] * m[0];
}

inline int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace detail

// For rank-2 indefinite data: true iff v lies in one of the open cones
// Γ_1 = -Γ_2 complementary to T ∪ -T. The coroot α_1^∨ lies in such a cone,
// so the sign of the eigenline form at α_1^∨ identifies that side.
inline bool in_gamma_cone(const KacMoodyData& d, const RatVec& v) {
    int gamma_sign = detail::sgn(detail::eigen_form(d, {Rat(d.A.a[0][0]), Rat(d.A.a[0][1])}));
    return detail::sgn(detail::eigen_form(d, detail::u_coords(d, v))) == gamma_sign;
}

inline ConeCertificate greedy_normalize(const KacMoodyData& d, const RatVec& v, long long cap) {
    ConeCertificate c;
    RatVec cur = v;
    Word applied;
    for (long long step = 0;; ++step) {
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < d.n() && !pick; ++i)
            if (d.alpha(i, cur) < 0) pick = i;
        if (!pick) {
            c.kind = ConeCertificate::Kind::InCone;
            c.w = make_element(d, Word(applied.rbegin(), applied.rend()));
            c.image = cur;
            c.steps = step;
            return c;
        }
        if (step >= cap) {
            c.steps = step;
            return c;
        }
        cur = simple_reflect(d, *pick, cur);
        applied.push_back(*pick);
    }
}

// Rank 2 indefinite: for v outside the Γ cones exactly one of v, -v lies in
// T, so greedy normalization of both in lockstep terminates. Returns +1 with
// the certificate of v, -1 with the certificate of -v, or 0 on Γ.
inline std::pair<int, ConeCertificate> rank2_side(const KacMoodyData& d, const RatVec& v) {
    if (in_gamma_cone(d, v)) return {0, {}};
    RatVec m = v;
    for (auto& x : m) x = -x;
    for (long long cap = 16;; cap *= 2) {
        ConeCertificate c = greedy_normalize(d, v, cap);
        if (c.kind == ConeCertificate::Kind::InCone) return {1, c};
        c = greedy_normalize(d, m, cap);
        if (c.kind == ConeCertificate::Kind::InCone) return {-1, c};
    }
}

// Checkable NotInCone witnesses for the affine and rank-2 indefinite
// families; these are decided before the greedy walk, which would not end.
inline std::optional<std::string> outside_cone_witness(const KacMoodyData& d, const RatVec& v) {
    if (!is_indecomposable(d.A)) return std::nullopt;
    KMClass cls = classify(d.A);
    if (cls == KMClass::Affine) {
        Rat dv = eval_root(d, null_root(d), v);
        if (dv < 0) return "delta(v) = " + to_string(dv) + " < 0";
        if (dv == 0 && !in_A_in(d, v)) return std::string("delta(v) = 0 and v is not in the intersection of the walls");
    } else if (cls == KMClass::Indefinite && d.n() == 2) {
        auto side = rank2_side(d, v);
        if (side.first == 0)
            return std::string("v lies strictly inside an open cone bounded by the eigenlines of r1r2, outside T and -T");
        if (side.first < 0 && !in_A_in(d, v))
            return std::string("-v lies in T and v is not in the intersection of the walls");
    }
    return std::nullopt;
}

inline ConeCertificate normalize_to_dominant(const KacMoodyData& d, const RatVec& v, long long cap = -1) {
    if (v.size() != d.rank) throw DomainError("vector length must equal the rank of Y");
    if (cap < 0) cap = default_cap(v);
    if (cap < 1) throw DomainError("cap must be >= 1");
    if (auto why = outside_cone_witness(d, v)) {
        ConeCertificate c;
        c.kind = ConeCertificate::Kind::NotInCone;
        c.reason = *why;
        return c;
    }
    return greedy_normalize(d, v, cap);
}

struct FaceDescriptor {
    WeylElement w;
    std::vector<std::size_t> J;
    int sign = 1;
};

// v ∈ sign·w^{-1}.F^v(J): the dominant representative of sign·v is unique.
inline FaceDescriptor face_of(const KacMoodyData& d, const RatVec& v, long long cap = -1) {
    for (int sign : {1, -1}) {
        RatVec s = v;
        if (sign < 0)
            for (auto& x : s) x = -x;
        ConeCertificate c = normalize_to_dominant(d, s, cap);
        if (c.kind != ConeCertificate::Kind::InCone) continue;
        FaceDescriptor f{inverse(d, c.w), {}, sign};
        for (std::size_t j = 0; j < d.n(); ++j)
            if (d.alpha(j, c.image) == 0) f.J.push_back(j);
        return f;
    }
    throw DomainError("NotInTitsCone: no certificate for v or -v");
}

inline bool is_spherical(const KacMoodyData& d, const std::vector<std::size_t>& J) {
    if (J.empty()) return true;
    KacMoodyMatrix sub = principal_submatrix(d.A, J);
    for (auto& comp : decompose(sub))
        if (classify(principal_submatrix(sub, comp)) != KMClass::Finite) return false;
    return true;
}

inline bool all_finite_type(const KacMoodyMatrix& A) {
    for (auto& comp : decompose(A))
        if (classify(principal_submatrix(A, comp)) != KMClass::Finite) return false;
    return true;
}

// Node i is the extra node of an untwisted affine matrix when both null
// vectors have coefficient 1 there, removing it leaves a finite type Å, and
// row/column i are -α_j(θ^∨) and -θ(α_j^∨) for the highest root θ of Å.
inline std::optional<std::size_t> untwisted_special_node(const KacMoodyMatrix& A) {
    if (!is_indecomposable(A) || classify(A) != KMClass::Affine) return std::nullopt;
    auto nk = positive_kernel(A.a), nck = positive_kernel(transpose(A).a);
    if (!nk || !nck) return std::nullopt;
    std::size_t n = A.size();
    for (std::size_t i = 0; i < n; ++i) {
        if ((*nk)[i] != 1 || (*nck)[i] != 1) continue;
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) rest.push_back(j);
        KacMoodyMatrix sub = principal_submatrix(A, rest);
        if (!is_indecomposable(sub) || classify(sub) != KMClass::Finite) continue;
        KacMoodyData fd = minimal_realization(sub);
        RootSet rs = enumerate_real_roots(fd, 1000);
        const RealRoot& theta = rs.roots.back();
        // θ^∨ in coroot coordinates: the same word acting through ^tÅ.
        KacMoodyMatrix subT = transpose(sub);
        IntVec m = unit(sub.size(), theta.index);
        for (std::size_t k = theta.word.size(); k-- > 0;) m = mat_vec(reflection_on_Q(subT, theta.word[k]), m);
        bool ok = true;
        for (std::size_t a = 0; a < rest.size() && ok; ++a) {
            long long at_theta_cov = 0, theta_at = 0;
            for (std::size_t k = 0; k < rest.size(); ++k) {
                at_theta_cov += m[k] * sub.a[k][a];
                theta_at += theta.root[k] * sub.a[a][k];
            }
            ok = A.a[i][rest[a]] == -at_theta_cov && A.a[rest[a]][i] == -theta_at;
        }
        if (ok) return i;
    }
    return std::nullopt;
}

struct PrenilpotencyVerdict {
    enum class Kind { Prenilpotent, NotPrenilpotent, UnknownWithinBound } kind = Kind::UnknownWithinBound;
    WeylElement w, w2;  // w.{α,β} ⊆ Δ+, w2.{α,β} ⊆ Δ-
    std::string reason;
    std::string method;  // "finite", "untwisted-affine", "rank2-indefinite", "word-search"
    std::size_t bound = 0;
};

inline std::string to_string(PrenilpotencyVerdict::Kind k) {
    switch (k) {
        case PrenilpotencyVerdict::Kind::Prenilpotent: return "prenilpotent";
        case PrenilpotencyVerdict::Kind::NotPrenilpotent: return "not-prenilpotent";
        case PrenilpotencyVerdict::Kind::UnknownWithinBound: return "unknown-within-bound";
    }
    return "?";
}

inline bool witnesses_valid(const RealRoot& a, const RealRoot& b, const WeylElement& w, const WeylElement& w2) {
    return is_positive(w.act_root(a.root)) && is_positive(w.act_root(b.root)) && is_negative(w2.act_root(a.root)) &&
           is_negative(w2.act_root(b.root));
}

// Words of length <= L, one per group element, in breadth-first order.
inline std::vector<WeylElement> elements_up_to(const KacMoodyData& d, std::size_t L) {
    std::vector<WeylElement> all{identity_element(d)}, frontier = all;
    std::set<IntMat> seen{all[0].q};
    for (std::size_t len = 1; len <= L; ++len) {
        std::vector<WeylElement> next;
        for (auto& w : frontier)
            for (std::size_t i = 0; i < d.n(); ++i) {
                WeylElement x = times_simple(d, w, i);
                if (x.length() != len || !seen.insert(x.q).second) continue;
                next.push_back(x);
            }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return all;
}

inline PrenilpotencyVerdict word_search(const KacMoodyData&, const RealRoot& a, const RealRoot& b,
                                        const std::vector<WeylElement>& elements, std::size_t L) {
    PrenilpotencyVerdict v;
    v.method = "word-search";
    v.bound = L;
    std::optional<WeylElement> pos, neg;
    for (auto& w : elements) {
        if (w.length() > L) continue;
        IntVec x = w.act_root(a.root), y = w.act_root(b.root);
        if (!pos && is_positive(x) && is_positive(y)) pos = w;
        if (!neg && is_negative(x) && is_negative(y)) neg = w;
        if (pos && neg) break;
    }
    if (pos && neg) {
        v.kind = PrenilpotencyVerdict::Kind::Prenilpotent;
        v.w = *pos;
        v.w2 = *neg;
    } else {
        v.reason = "no simultaneous " + std::string(pos ? "negativizing" : "positivizing") + " element of length <= " +
                   std::to_string(L);
    }
    return v;
}

inline PrenilpotencyVerdict word_search(const KacMoodyData& d, const RealRoot& a, const RealRoot& b, std::size_t L) {
    return word_search(d, a, b, elements_up_to(d, L), L);
}

namespace detail {

// If v ∈ T with α(v), β(v) > 0, the normalizer w of v sends α, β to positive
// roots (a negative root is <= 0 on the closed chamber).
// Callers pass points known to lie in T except in rank 2, where the side is
// decided first.
inline std::optional<WeylElement> positivizer(const KacMoodyData& d, const RatVec& v) {
    if (is_rank2_indefinite(d)) {
        auto [side, c] = rank2_side(d, v);
        if (side != 1) return std::nullopt;
        return c.w;
    }
    ConeCertificate c = greedy_normalize(d, v, std::numeric_limits<long long>::max());
    return c.w;
}

inline RatVec neg(RatVec v) {
    for (auto& x : v) x = -x;
    return v;
}

inline std::optional<RatVec> cone_point(const KacMoodyData& d, const std::vector<std::pair<IntVec, int>>& cons) {
    LinearSystem sys(d.rank);
    for (auto& [root, s] : cons) {
        RatVec f = to_rat(root_covector(d, root));
        if (s > 0) sys.ge(f, 1);
        else sys.le(f, -1);
    }
    return sys.solve();
}

}  // namespace detail

inline PrenilpotencyVerdict prenilpotent_pair(const KacMoodyData& d, const RealRoot& a, const RealRoot& b,
                                              std::size_t L = 8) {
    using K = PrenilpotencyVerdict::Kind;
    PrenilpotencyVerdict v;
    v.bound = L;
    auto done = [&](const std::optional<WeylElement>& w, const std::optional<WeylElement>& w2) {
        if (!w || !w2 || !witnesses_valid(a, b, *w, *w2))
            throw DomainError("internal error: witness construction failed for a closed-form prenilpotent pair");
        v.kind = K::Prenilpotent;
        v.w = *w;
        v.w2 = *w2;
        return v;
    };
    bool finite = all_finite_type(d.A);
    std::optional<std::size_t> special = finite ? std::nullopt : untwisted_special_node(d.A);
    bool rank2 = !finite && !special && is_rank2_indefinite(d);
    if (!finite && !special && !rank2) return word_search(d, a, b, L);
    v.method = finite ? "finite" : (special ? "untwisted-affine" : "rank2-indefinite");

    if (a.root == b.root) {
        WeylElement r = reflection(d, a);
        WeylElement one = identity_element(d);
        return a.positive() ? done(one, r) : done(r, one);
    }
    if (finite) {
        if (a.root == negated(b.root)) {
            v.kind = K::NotPrenilpotent;
            v.reason = "beta = -alpha";
            return v;
        }
        auto p = detail::cone_point(d, {{a.root, 1}, {b.root, 1}});
        if (!p) throw DomainError("internal error: no point with alpha, beta > 0");
        return done(detail::positivizer(d, *p), detail::positivizer(d, detail::neg(*p)));
    }
    if (special) {
        IntVec delta = null_root(d), s(d.n());
        for (std::size_t i = 0; i < d.n(); ++i) s[i] = a.root[i] + b.root[i];
        // α + β ∈ Zδ  ⟺  α̊ = -β̊
        bool multiple = true;
        long long k = s[*special];
        for (std::size_t i = 0; i < d.n(); ++i) multiple = multiple && s[i] == k * delta[i];
        if (multiple) {
            v.kind = K::NotPrenilpotent;
            v.reason = "finite parts are opposite (alpha + beta is a multiple of delta)";
            return v;
        }
        auto p = detail::cone_point(d, {{a.root, 1}, {b.root, 1}, {delta, 1}});
        auto q = detail::cone_point(d, {{a.root, -1}, {b.root, -1}, {delta, 1}});
        if (!p || !q) throw DomainError("internal error: no cone point for an affine pair");
        return done(detail::positivizer(d, *p), detail::positivizer(d, *q));
    }
    // Rank 2 indefinite: real roots have a constant nonzero sign on each Γ_i,
    // and α_1^∨ ∈ Γ_1, -α_1^∨ ∈ Γ_2.
    long long pa = pair_coroot(d, a.root, 0), pb = pair_coroot(d, b.root, 0);
    if (pa * pb < 0) {
        v.kind = K::NotPrenilpotent;
        v.reason = "alpha and beta have opposite signs on both cones outside T and -T";
        return v;
    }
    // Walls of α and β inside span(α_1^∨, α_2^∨); one lies in T, the other in
    // -T, and points of {α > 0, β > 0} near each side give the witnesses.
    auto plane = [&](const Rat& x, const Rat& y) {
        RatVec r(d.rank, Rat(0));
        for (std::size_t k = 0; k < d.rank; ++k) r[k] = x * Rat(d.coroots[0][k]) + y * Rat(d.coroots[1][k]);
        return r;
    };
    long long a1 = pa, a2 = pair_coroot(d, a.root, 1), b1 = pb, b2 = pair_coroot(d, b.root, 1);
    long long ka_x = a2, ka_y = -a1;
    if (ka_x * b1 + ka_y * b2 < 0) ka_x = -ka_x, ka_y = -ka_y;
    long long kb_x = b2, kb_y = -b1;
    if (kb_x * a1 + kb_y * a2 < 0) kb_x = -kb_x, kb_y = -kb_y;
    RatVec ka = plane(ka_x, ka_y), kb = plane(kb_x, kb_y);
    bool ka_in_T = rank2_side(d, ka).first == 1;
    const RatVec& kt = ka_in_T ? ka : kb;
    const RatVec& ko = ka_in_T ? kb : ka;
    std::optional<WeylElement> w, w2;
    for (long long N = 1; N <= (1LL << 20) && !(w && w2); N *= 2) {
        RatVec p(d.rank), q(d.rank);
        for (std::size_t k = 0; k < d.rank; ++k) {
            p[k] = Rat(N) * kt[k] + ko[k];
            q[k] = kt[k] + Rat(N) * ko[k];
        }
        if (!w) w = detail::positivizer(d, p);
        if (!w2) w2 = detail::positivizer(d, detail::neg(q));
    }
    return done(w, w2);
}

// [α,β]_N = {α, β} ∪ {pα + qβ real : p, q >= 1}. With witnesses (w, w2),
// every such root γ has w.γ ∈ Inv(w2 w^{-1}), a finite set computed exactly.
inline std::vector<RealRoot> closed_interval(const KacMoodyData& d, const RealRoot& a, const RealRoot& b,
                                             const PrenilpotencyVerdict& v) {
    if (v.kind != PrenilpotencyVerdict::Kind::Prenilpotent || !witnesses_valid(a, b, v.w, v.w2))
        throw DomainError("PairNotPrenilpotent: closed interval needs a verified prenilpotent pair");
    std::map<IntVec, RealRoot, RootOrder> out;
    out.emplace(a.root, a);
    if (a.root == b.root) return {a};
    out.emplace(b.root, b);
    WeylElement winv = inverse(d, v.w);
    WeylElement u = compose(d, v.w2, winv);
    std::size_t n = d.n();
    for (auto& rho : inversion_set(d, u)) {
        IntVec g = winv.act_root(rho.root);
        // Solve g = p a + q b over two coordinates with nonzero determinant.
        std::optional<std::pair<Rat, Rat>> pq;
        for (std::size_t i = 0; i < n && !pq; ++i)
            for (std::size_t j = i + 1; j < n && !pq; ++j) {
                long long det = a.root[i] * b.root[j] - a.root[j] * b.root[i];
                if (det == 0) continue;
                Rat p = Rat(g[i] * b.root[j] - g[j] * b.root[i]) / Rat(det);
                Rat q = Rat(a.root[i] * g[j] - a.root[j] * g[i]) / Rat(det);
                pq = std::make_pair(p, q);
            }
        if (!pq) continue;
        auto [p, q] = *pq;
        if (!is_integer(p) || !is_integer(q) || p < 1 || q < 1) continue;
        bool match = true;
        for (std::size_t k = 0; k < n; ++k) match = match && Rat(g[k]) == p * Rat(a.root[k]) + q * Rat(b.root[k]);
        if (match) out.emplace(g, real_root(d, g));
    }
    std::vector<RealRoot> r;
    for (auto& [c, root] : out) r.push_back(root);
    return r;
}

}  // namespace masure
