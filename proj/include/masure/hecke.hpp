#pragma once

// Piecewise-affine paths in Y⊗Q and bounded verification of the Hecke path
// conditions: billiard velocities, fold chains, dominance and height bound.

#include "kmdata.hpp"
#include "linear_feasibility.hpp"
#include "tits_cone.hpp"
#include "weyl_roots.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace masure {

struct PiecewisePath {
    std::vector<Rat> times;       // 0 = t_0 < ... < t_n = 1
    std::vector<RatVec> points;   // γ(t_k)

    std::size_t pieces() const { return times.size() - 1; }
    RatVec velocity(std::size_t k) const {
        RatVec v(points[k].size());
        Rat dt = times[k + 1] - times[k];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (points[k + 1][i] - points[k][i]) / dt;
        return v;
    }
    RatVec displacement() const {
        RatVec v(points.front().size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = points.back()[i] - points.front()[i];
        return v;
    }
    // Interior breakpoints where the velocity changes.
    std::vector<std::size_t> folds() const {
        std::vector<std::size_t> f;
        for (std::size_t k = 1; k + 1 < times.size(); ++k)
            if (velocity(k - 1) != velocity(k)) f.push_back(k);
        return f;
    }
    RatVec at(const Rat& t) const {
        for (std::size_t k = 0; k + 1 < times.size(); ++k)
            if (t <= times[k + 1]) {
                RatVec v = velocity(k), r = points[k];
                for (std::size_t i = 0; i < r.size(); ++i) r[i] += v[i] * (t - times[k]);
                return r;
            }
        return points.back();
    }
};

inline PiecewisePath make_path(std::vector<Rat> times, std::vector<RatVec> points) {
    if (times.size() < 2 || times.size() != points.size()) throw DomainError("path needs n+1 breakpoints and positions, n >= 1");
    if (times.front() != 0 || times.back() != 1) throw DomainError("path breakpoints must start at 0 and end at 1");
    for (std::size_t k = 0; k + 1 < times.size(); ++k)
        if (!(times[k] < times[k + 1])) throw DomainError("path breakpoints must increase strictly");
    for (auto& p : points)
        if (p.size() != points[0].size()) throw DomainError("path positions must have equal length");
    return {std::move(times), std::move(points)};
}

// Drop breakpoints between pieces of equal velocity.
inline PiecewisePath merge_collinear(const PiecewisePath& p) {
    PiecewisePath r{{p.times[0]}, {p.points[0]}};
    for (std::size_t k = 1; k < p.times.size(); ++k) {
        if (k + 1 < p.times.size() && p.velocity(k - 1) == p.velocity(k)) continue;
        r.times.push_back(p.times[k]);
        r.points.push_back(p.points[k]);
    }
    return r;
}

inline RatVec scaled(RatVec v, const Rat& s) {
    for (auto& x : v) x *= s;
    return v;
}

// One-sided velocities in time order: piece k has γ'_+(t_k) = γ'_-(t_{k+1}).
inline std::vector<RatVec> one_sided_velocities(const PiecewisePath& p) {
    std::vector<RatVec> v;
    for (std::size_t k = 0; k < p.pieces(); ++k) v.push_back(p.velocity(k));
    return v;
}

struct BilliardReport {
    bool ok = true;
    std::vector<std::optional<WeylElement>> witnesses;  // w with w.λ = velocity
};

// v ∈ W^v.λ iff both normalize to the same dominant vector; the witness is
// w_v^{-1} w_λ, accepted when its length is at most L.
inline BilliardReport is_billiard(const KacMoodyData& d, const PiecewisePath& p, const RatVec& lambda, std::size_t H,
                                  std::size_t L) {
    (void)H;
    bool nonzero = false;
    for (auto& x : lambda) nonzero = nonzero || x != 0;
    if (!nonzero) throw DomainError("shape must be nonzero");
    BilliardReport r;
    ConeCertificate cl = normalize_to_dominant(d, lambda);
    for (auto& v : one_sided_velocities(p)) {
        std::optional<WeylElement> w;
        if (cl.kind == ConeCertificate::Kind::InCone) {
            ConeCertificate cv = normalize_to_dominant(d, v);
            if (cv.kind == ConeCertificate::Kind::InCone && cv.image == cl.image) {
                WeylElement x = compose(d, inverse(d, cv.w), cl.w);
                if (x.length() <= L && x.act(lambda) == v) w = x;
            }
        }
        r.ok = r.ok && w.has_value();
        r.witnesses.push_back(w);
    }
    return r;
}

struct ChainWitness {
    std::vector<RealRoot> betas;
    std::vector<RatVec> xis;  // ξ_0 .. ξ_k
    RatVec anchor;
};

struct FoldVerdict {
    enum class Kind { Verified, RefutedWithinBound } kind = Kind::RefutedWithinBound;
    ChainWitness chain;
    std::size_t H = 0, L = 0, k_max = 0;
};

// β(C^v) < 0 for C^v = sign·w.C^v_f  ⟺  sign·w^{-1}.β is a negative root.
inline bool negative_on_chamber(const KacMoodyData& d, const FaceDescriptor& c, const IntVec& beta) {
    IntVec b = inverse(d, c.w).act_root(beta);
    return c.sign > 0 ? is_negative(b) : is_positive(b);
}

// Re-evaluates every clause of the chain definition.
inline bool chain_holds(const KacMoodyData& d, const ChainWitness& c, const FaceDescriptor& chamber) {
    if (c.xis.size() != c.betas.size() + 1) return false;
    for (std::size_t i = 0; i < c.betas.size(); ++i) {
        const RealRoot& b = c.betas[i];
        if (reflect_root(d, b, c.xis[i]) != c.xis[i + 1]) return false;
        if (!(eval_root(d, b.root, c.xis[i]) < 0)) return false;
        if (!is_integer(eval_root(d, b.root, c.anchor))) return false;
        if (!negative_on_chamber(d, chamber, b.root)) return false;
    }
    return true;
}

// Breadth-first search over admissible reflections; the first chain found
// is the shortest, ties broken by root order.
inline FoldVerdict verify_fold(const KacMoodyData& d, const RatVec& anchor, const RatVec& xi_minus, const RatVec& xi_plus,
                               const FaceDescriptor& chamber, std::size_t H, std::size_t L, std::size_t k_max) {
    (void)L;
    FoldVerdict v;
    v.H = H;
    v.L = L;
    v.k_max = k_max;
    v.chain.anchor = anchor;
    if (xi_minus == xi_plus) {
        v.kind = FoldVerdict::Kind::Verified;
        v.chain.xis = {xi_minus};
        return v;
    }
    std::vector<RealRoot> cands;
    RootSet rs = enumerate_real_roots(d, static_cast<long long>(H));
    std::map<IntVec, RealRoot, RootOrder> all;
    for (auto& r : rs.roots) {
        all.emplace(r.root, r);
        RealRoot n = negate(d, r);
        all.emplace(n.root, n);
    }
    for (auto& [c, r] : all)
        if (negative_on_chamber(d, chamber, r.root) && is_integer(eval_root(d, r.root, anchor))) cands.push_back(r);

    struct Node {
        RatVec xi;
        int parent;
        int beta;
    };
    std::vector<Node> nodes{{xi_minus, -1, -1}};
    std::map<RatVec, std::size_t> seen{{xi_minus, 0}};
    std::vector<std::size_t> level{0};
    for (std::size_t depth = 0; depth < k_max && !level.empty(); ++depth) {
        std::vector<std::size_t> next;
        for (std::size_t idx : level)
            for (std::size_t b = 0; b < cands.size(); ++b) {
                const RatVec xi = nodes[idx].xi;
                if (!(eval_root(d, cands[b].root, xi) < 0)) continue;
                RatVec nx = reflect_root(d, cands[b], xi);
                if (seen.count(nx)) continue;
                seen.emplace(nx, nodes.size());
                nodes.push_back({nx, static_cast<int>(idx), static_cast<int>(b)});
                if (nx == xi_plus) {
                    std::vector<std::size_t> path;
                    for (int k = static_cast<int>(nodes.size()) - 1; k > 0; k = nodes[k].parent) path.push_back(k);
                    v.chain.xis = {xi_minus};
                    for (std::size_t j = path.size(); j-- > 0;) {
                        v.chain.betas.push_back(cands[nodes[path[j]].beta]);
                        v.chain.xis.push_back(nodes[path[j]].xi);
                    }
                    v.kind = FoldVerdict::Kind::Verified;
                    return v;
                }
                next.push_back(nodes.size() - 1);
            }
        level = std::move(next);
    }
    return v;
}

// Nonnegative combination of simple coroots.
inline bool in_coroot_cone(const KacMoodyData& d, const RatVec& v) {
    std::size_t n = d.n();
    LinearSystem sys(n);
    for (std::size_t i = 0; i < n; ++i) sys.var_ge(i, 0);
    for (std::size_t k = 0; k < d.rank; ++k) {
        RatVec row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = Rat(d.coroots[i][k]);
        sys.eq(row, v[k]);
    }
    return sys.feasible();
}

// a ≤ b in the Q^∨_R order, reversed for sign < 0.
inline bool coroot_leq(const KacMoodyData& d, const RatVec& a, const RatVec& b, int sign) {
    RatVec diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = sign > 0 ? b[i] - a[i] : a[i] - b[i];
    return in_coroot_cone(d, diff);
}

struct DominanceReport {
    bool monotone = true;
    bool initial_dominates = true;  // γ'_+(0) vs γ(1) - γ(0)
    bool strict_unless_segment = true;
    bool ok() const { return monotone && initial_dominates && strict_unless_segment; }
};

// For C^v_f velocities decrease along the path and γ'_+(0) ≥ γ(1) - γ(0);
// for -C^v_f both inequalities reverse.
inline DominanceReport check_dominance(const KacMoodyData& d, const PiecewisePath& p, int sign) {
    DominanceReport r;
    auto vel = one_sided_velocities(p);
    for (std::size_t k = 0; k + 1 < vel.size(); ++k) r.monotone = r.monotone && coroot_leq(d, vel[k + 1], vel[k], sign);
    RatVec disp = p.displacement();
    r.initial_dominates = coroot_leq(d, disp, vel[0], sign);
    if (merge_collinear(p).pieces() > 1) {
        std::vector<RatVec> cs;
        for (auto& c : d.coroots) cs.push_back(to_rat(c));
        if (rank_of(cs) == d.n()) r.strict_unless_segment = vel[0] != disp;
    }
    return r;
}

// Coefficients of v in the simple coroots, when they are free.
inline std::optional<RatVec> coroot_coordinates(const KacMoodyData& d, const RatVec& v) {
    std::vector<RatVec> cs;
    for (auto& c : d.coroots) cs.push_back(to_rat(c));
    if (rank_of(cs) != d.n()) return std::nullopt;
    LinearSystem sys(d.n());
    for (std::size_t k = 0; k < d.rank; ++k) {
        RatVec row(d.n());
        for (std::size_t i = 0; i < d.n(); ++i) row[i] = Rat(d.coroots[i][k]);
        sys.eq(row, v[k]);
    }
    return sys.solve();
}

struct HeightReport {
    bool mu_in_cone = false;
    Rat ht_mu = 0;
    Rat t_star = 0;
    Rat bound = 0;          // ht(μ)/d
    bool applicable = false;  // d > ht(μ)
    bool holds = false;
};

// Path of shape dν from a to a + dν - μ with respect to -C^v_f: μ is a
// nonnegative coroot combination and the last straight run starts by
// ht(μ)/d.
inline HeightReport check_height_bound(const KacMoodyData& d, const PiecewisePath& p, const Rat& dscale, const RatVec& nu,
                                       const RatVec& mu) {
    if (dscale <= 0) throw DomainError("PreconditionUnmet: shape scalar must be positive");
    RatVec disp = p.displacement();
    for (std::size_t i = 0; i < disp.size(); ++i)
        if (disp[i] != dscale * nu[i] - mu[i]) throw DomainError("PreconditionUnmet: endpoint is not a + d*nu - mu");
    if (!is_dominant(d, nu)) throw DomainError("PreconditionUnmet: nu is not dominant");
    auto coords = coroot_coordinates(d, mu);
    if (!coords) throw DomainError("PreconditionUnmet: mu is not in the span of free simple coroots");
    HeightReport r;
    r.mu_in_cone = true;
    for (auto& c : *coords) {
        r.mu_in_cone = r.mu_in_cone && c >= 0;
        r.ht_mu += c;
    }
    PiecewisePath m = merge_collinear(p);
    r.t_star = m.times[m.times.size() - 2];
    r.bound = r.ht_mu / dscale;
    r.applicable = dscale > r.ht_mu;
    r.holds = r.mu_in_cone && r.t_star <= r.bound;
    return r;
}

struct HeckeReport {
    BilliardReport billiard;
    std::vector<FoldVerdict> folds;
    DominanceReport dominance;
    bool ok() const {
        if (!billiard.ok || !dominance.ok()) return false;
        for (auto& f : folds)
            if (f.kind != FoldVerdict::Kind::Verified) return false;
        return true;
    }
};

// Full check of a path of shape λ with respect to the chamber sign·C^v_f.
inline HeckeReport verify_hecke_path(const KacMoodyData& d, const PiecewisePath& path, const RatVec& lambda, int sign,
                                     std::size_t H, std::size_t L, std::size_t k_max) {
    HeckeReport r;
    PiecewisePath p = merge_collinear(path);
    r.billiard = is_billiard(d, p, lambda, H, L);
    FaceDescriptor chamber{identity_element(d), {}, sign};
    for (std::size_t k : p.folds())
        r.folds.push_back(verify_fold(d, p.points[k], p.velocity(k - 1), p.velocity(k), chamber, H, L, k_max));
    r.dominance = check_dominance(d, p, sign);
    return r;
}

}  // namespace masure
