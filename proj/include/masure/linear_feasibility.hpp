#pragma once

// Exact feasibility of systems a·x >= b over Q by Fourier–Motzkin
// elimination, with back-substitution to produce a witness point.

#include "rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace masure {

struct LinearConstraint {
    RatVec a;  // coefficients
    Rat b;     // a·x >= b
};

class LinearSystem {
public:
    explicit LinearSystem(std::size_t nvars) : n_(nvars) {}

    std::size_t vars() const { return n_; }
    void ge(RatVec a, Rat b) { rows_.push_back({std::move(a), std::move(b)}); }
    void le(RatVec a, const Rat& b) {
        for (auto& x : a) x = -x;
        rows_.push_back({std::move(a), -b});
    }
    void eq(const RatVec& a, const Rat& b) {
        ge(a, b);
        le(a, b);
    }
    // x_i >= b
    void var_ge(std::size_t i, const Rat& b) {
        RatVec a(n_, Rat(0));
        a[i] = 1;
        ge(a, b);
    }

    // A point satisfying every constraint, or nullopt when infeasible.
    std::optional<RatVec> solve() const {
        // stages[k] holds the constraints mentioning only x_0..x_k.
        std::vector<std::vector<LinearConstraint>> stages(n_ + 1);
        std::vector<LinearConstraint> cur = dedupe(rows_);
        for (std::size_t k = n_; k-- > 0;) {
            stages[k] = cur;
            std::vector<LinearConstraint> pos, neg, next;
            for (auto& c : cur) {
                if (c.a[k] > 0) pos.push_back(c);
                else if (c.a[k] < 0) neg.push_back(c);
                else next.push_back(c);
            }
            for (auto& p : pos)
                for (auto& q : neg) {
                    // p.a[k] > 0, q.a[k] < 0: combine to cancel x_k.
                    Rat sp = -q.a[k], sq = p.a[k];
                    LinearConstraint r{RatVec(n_, Rat(0)), sp * p.b + sq * q.b};
                    for (std::size_t j = 0; j < n_; ++j) r.a[j] = sp * p.a[j] + sq * q.a[j];
                    r.a[k] = 0;
                    next.push_back(std::move(r));
                }
            cur = dedupe(next);
        }
        for (auto& c : cur)
            if (c.b > 0) return std::nullopt;  // 0 >= b fails
        RatVec x(n_, Rat(0));
        for (std::size_t k = 0; k < n_; ++k) {
            std::optional<Rat> lo, hi;
            for (auto& c : stages[k]) {
                if (c.a[k] == 0) continue;
                Rat rest = c.b;
                for (std::size_t j = 0; j < k; ++j) rest -= c.a[j] * x[j];
                Rat bound = rest / c.a[k];
                if (c.a[k] > 0) {
                    if (!lo || bound > *lo) lo = bound;
                } else {
                    if (!hi || bound < *hi) hi = bound;
                }
            }
            if (lo) x[k] = *lo;
            else if (hi) x[k] = *hi;
            else x[k] = 0;
        }
        return x;
    }

    bool feasible() const { return solve().has_value(); }

private:
    std::size_t n_;
    std::vector<LinearConstraint> rows_;

    // Scale each row so its first nonzero coefficient has absolute value 1,
    // then keep only the tightest row per direction.
    static std::vector<LinearConstraint> dedupe(const std::vector<LinearConstraint>& in) {
        std::map<std::vector<Rat>, Rat> best;
        std::vector<LinearConstraint> trivial;
        for (auto c : in) {
            std::size_t i = 0;
            while (i < c.a.size() && c.a[i] == 0) ++i;
            if (i == c.a.size()) {
                trivial.push_back(c);
                continue;
            }
            Rat s = c.a[i] > 0 ? c.a[i] : -c.a[i];
            for (auto& v : c.a) v /= s;
            c.b /= s;
            auto it = best.find(c.a);
            if (it == best.end() || c.b > it->second) best[c.a] = c.b;
        }
        std::vector<LinearConstraint> out;
        Rat worst = 0;
        bool any_trivial = false;
        for (auto& c : trivial) {
            if (!any_trivial || c.b > worst) worst = c.b;
            any_trivial = true;
        }
        if (any_trivial) out.push_back({trivial[0].a, worst});
        for (auto& [a, b] : best) out.push_back({a, b});
        return out;
    }
};

}  // namespace masure
