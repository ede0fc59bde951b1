#pragma once

// Garland–Mitzman polynomials over Q and the matrix group U^{ma+} of affine
// SL2 over truncated power series R[[t]] / t^N, R = F_p or Q.

#include "rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace masure {

// Multivariate polynomial over Q keyed by exponent vectors.
class MPoly {
public:
    using Exps = std::vector<int>;

    MPoly() = default;
    explicit MPoly(std::size_t nvars) : n_(nvars) {}
    static MPoly constant(std::size_t nvars, const Rat& c) {
        MPoly p(nvars);
        p.add_term(Exps(nvars, 0), c);
        return p;
    }
    static MPoly var(std::size_t nvars, std::size_t i, const Rat& c = 1) {
        MPoly p(nvars);
        Exps e(nvars, 0);
        e[i] = 1;
        p.add_term(e, c);
        return p;
    }

    std::size_t nvars() const { return n_; }
    const std::map<Exps, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const Exps& e, const Rat& c) {
        if (e.size() != n_) throw DomainError("exponent vector has the wrong length");
        if (c == 0) return;
        auto [it, fresh] = t_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    Rat coeff(const Exps& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? Rat(0) : it->second;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) {
        a.check(b);
        for (auto& [e, c] : b.t_) a.add_term(e, c);
        return a;
    }
    friend MPoly operator-(MPoly a, const MPoly& b) {
        a.check(b);
        for (auto& [e, c] : b.t_) a.add_term(e, -c);
        return a;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly r(a.n_);
        for (auto& [ea, ca] : a.t_)
            for (auto& [eb, cb] : b.t_) {
                Exps e(a.n_);
                for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const Rat& s, MPoly a) {
        if (s == 0) return MPoly(a.n_);
        for (auto& [e, c] : a.t_) c *= s;
        return a;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

    // Substitute x_i -> images[i].
    MPoly substitute(const std::vector<MPoly>& images) const {
        if (images.size() != n_) throw DomainError("need one image per variable");
        std::size_t m = images.empty() ? 0 : images[0].n_;
        MPoly r(m);
        for (auto& [e, c] : t_) {
            MPoly term = constant(m, c);
            for (std::size_t i = 0; i < n_; ++i)
                for (int k = 0; k < e[i]; ++k) term = term * images[i];
            r = r + term;
        }
        return r;
    }

    // Max over terms of Σ weight_i e_i; -1 for the zero polynomial.
    long long degree(const std::vector<long long>& weight) const {
        long long best = -1;
        for (auto& [e, c] : t_) {
            long long s = 0;
            for (std::size_t i = 0; i < n_; ++i) s += weight[i] * e[i];
            best = std::max(best, s);
        }
        return best;
    }
    bool homogeneous(const std::vector<long long>& weight, long long deg) const {
        for (auto& [e, c] : t_) {
            long long s = 0;
            for (std::size_t i = 0; i < n_; ++i) s += weight[i] * e[i];
            if (s != deg) return false;
        }
        return true;
    }

    // Terms in graded-reverse order of exponents, e.g. "1/2*Z1^2 + 1/2*Z2".
    std::string str(const std::vector<std::string>& names) const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rat a = c < 0 ? Rat(-c) : c;
            std::string mono;
            for (std::size_t i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            std::string term = mono.empty() ? to_string(a) : (a == 1 ? mono : to_string(a) + "*" + mono);
            if (out.empty()) out = c < 0 ? "-" + term : term;
            else out += (c < 0 ? " - " : " + ") + term;
        }
        return out;
    }

private:
    std::size_t n_ = 0;
    std::map<Exps, Rat> t_;

    void check(const MPoly& o) const {
        if (n_ != o.n_) throw DomainError("polynomials over different variable sets");
    }
};

inline std::vector<std::string> z_names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back("Z" + std::to_string(i));
    return v;
}

// Λ_0..Λ_n in Z_1..Z_nvars by n Λ_n = Σ_{p=1}^{n} Z_p Λ_{n-p}.
inline std::vector<MPoly> gm_polys(std::size_t n, std::size_t nvars) {
    if (nvars < n) throw DomainError("need at least n variables");
    std::vector<MPoly> lam{MPoly::constant(nvars, 1)};
    for (std::size_t k = 1; k <= n; ++k) {
        MPoly s(nvars);
        for (std::size_t p = 1; p <= k; ++p) s = s + MPoly::var(nvars, p - 1) * lam[k - p];
        lam.push_back((Rat(1) / Rat(k)) * s);
    }
    return lam;
}

inline MPoly gm_poly(std::size_t n) { return gm_polys(n, std::max<std::size_t>(n, 1)).back(); }

// Coefficients of ζ^0..ζ^n in exp(Σ_j Z_j ζ^j / j), via Σ_m S^m / m!.
inline std::vector<MPoly> gm_generating(std::size_t n, std::size_t nvars) {
    using Series = std::vector<MPoly>;
    auto mul = [&](const Series& a, const Series& b) {
        Series r(n + 1, MPoly(nvars));
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; i + j <= n; ++j) r[i + j] = r[i + j] + a[i] * b[j];
        return r;
    };
    Series s(n + 1, MPoly(nvars));
    for (std::size_t j = 1; j <= n; ++j) s[j] = MPoly::var(nvars, j - 1, Rat(1) / Rat(j));
    Series total(n + 1, MPoly(nvars)), power(n + 1, MPoly(nvars));
    power[0] = MPoly::constant(nvars, 1);
    Rat fact = 1;
    for (std::size_t m = 0; m <= n; ++m) {
        if (m > 0) {
            power = mul(power, s);
            fact *= m;
        }
        for (std::size_t i = 0; i <= n; ++i) total[i] = total[i] + (Rat(1) / fact) * power[i];
    }
    return total;
}

// Λ_n(t Z, t^2 Z, ...) against (-t)^n binom(-Z, n), both in variables (t, Z).
inline bool check_binomial_specialization(std::size_t n) {
    std::size_t nv = std::max<std::size_t>(n, 1);
    MPoly lam = gm_polys(n, nv)[n];
    std::vector<MPoly> images;
    for (std::size_t j = 1; j <= nv; ++j) {
        MPoly m(2);
        m.add_term({static_cast<int>(j), 1}, 1);
        images.push_back(m);
    }
    MPoly lhs = lam.substitute(images);
    MPoly rhs = MPoly::constant(2, 1);
    MPoly negt = MPoly::var(2, 0, -1), Z = MPoly::var(2, 1);
    for (std::size_t k = 0; k < n; ++k) rhs = rhs * negt * (MPoly::constant(2, 0) - Z - MPoly::constant(2, Rat(k)));
    Rat fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    rhs = (Rat(1) / fact) * rhs;
    return lhs == rhs;
}

// Λ_n(Z + Z') = Σ_{p+q=n} Λ_p(Z) Λ_q(Z') in variables Z_1..Z_n, Z'_1..Z'_n.
inline bool check_convolution(std::size_t n) {
    std::size_t nv = std::max<std::size_t>(n, 1);
    auto lam = gm_polys(n, nv);
    std::size_t m = 2 * nv;
    std::vector<MPoly> sum_images, z_images, zp_images;
    for (std::size_t j = 0; j < nv; ++j) {
        sum_images.push_back(MPoly::var(m, j) + MPoly::var(m, nv + j));
        z_images.push_back(MPoly::var(m, j));
        zp_images.push_back(MPoly::var(m, nv + j));
    }
    MPoly lhs = lam[n].substitute(sum_images);
    MPoly rhs(m);
    for (std::size_t p = 0; p <= n; ++p) rhs = rhs + lam[p].substitute(z_images) * lam[n - p].substitute(zp_images);
    return lhs == rhs;
}

// Base ring of the series: F_p (p > 0) or Q (p = 0).
struct BaseRing {
    long long p = 0;

    static BaseRing rationals() { return {0}; }
    static BaseRing fp(long long p) {
        if (p < 2) throw DomainError("characteristic must be a prime");
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw DomainError("characteristic must be a prime");
        return {p};
    }
    static BaseRing parse(const std::string& s) {
        if (s == "Q") return rationals();
        std::string t = s;
        if (!t.empty() && t[0] == 'F') t = t.substr(1);
        if (!t.empty() && t[0] == '_') t = t.substr(1);
        try {
            return fp(std::stoll(t));
        } catch (const std::logic_error&) {
            throw DomainError("unknown base ring '" + s + "' (use Q or Fp)");
        }
    }
    std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
    Rat reduce(const Rat& r) const {
        if (p == 0) return r;
        Int P = p;
        Int n = num(r) % P, d = den(r) % P;
        if (d == 0) throw DomainError("denominator divisible by the characteristic");
        long long nl = detail_mod(n.convert_to<long long>()), dl = detail_mod(d.convert_to<long long>());
        return Rat(detail_mod(nl * inv(dl)));
    }
    Rat inverse(const Rat& r) const {
        if (r == 0) throw DomainError("division by zero");
        if (p == 0) return 1 / r;
        return Rat(inv(num(reduce(r)).convert_to<long long>()));
    }
    friend bool operator==(const BaseRing&, const BaseRing&) = default;

private:
    long long detail_mod(long long a) const { return ((a % p) + p) % p; }
    long long inv(long long a) const {
        long long g = p, x = 0, x1 = 1, r = detail_mod(a);
        while (r != 0) {
            long long q = g / r, t = g - q * r;
            g = r;
            r = t;
            t = x - q * x1;
            x = x1;
            x1 = t;
        }
        return detail_mod(x);
    }
};

// Element of R[[t]] / t^N.
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(BaseRing r, std::size_t N, std::vector<Rat> c = {}) : ring_(r), c_(N, Rat(0)) {
        if (N < 1) throw DomainError("truncation modulus must be >= 1");
        for (std::size_t i = 0; i < c.size() && i < N; ++i) c_[i] = ring_.reduce(c[i]);
    }
    static TruncSeries constant(BaseRing r, std::size_t N, const Rat& v) { return TruncSeries(r, N, {v}); }
    static TruncSeries one(BaseRing r, std::size_t N) { return constant(r, N, 1); }
    static TruncSeries monomial(BaseRing r, std::size_t N, std::size_t k, const Rat& v) {
        TruncSeries s(r, N);
        if (k < N) s.c_[k] = r.reduce(v);
        return s;
    }

    const BaseRing& ring() const { return ring_; }
    std::size_t N() const { return c_.size(); }
    const Rat& operator[](std::size_t k) const { return c_[k]; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const {
        for (auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries r(a.ring_, a.N());
        for (std::size_t i = 0; i < a.N(); ++i) r.c_[i] = a.ring_.reduce(a.c_[i] + b.c_[i]);
        return r;
    }
    TruncSeries operator-() const {
        TruncSeries r(ring_, N());
        for (std::size_t i = 0; i < N(); ++i) r.c_[i] = ring_.reduce(-c_[i]);
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        std::size_t n = a.N();
        TruncSeries r(a.ring_, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        for (auto& x : r.c_) x = a.ring_.reduce(x);
        return r;
    }
    TruncSeries inverse() const {
        if (c_[0] == 0) throw DomainError("series with zero constant term is not a unit");
        std::size_t n = N();
        TruncSeries r(ring_, n);
        Rat inv0 = ring_.inverse(c_[0]);
        r.c_[0] = inv0;
        for (std::size_t k = 1; k < n; ++k) {
            Rat s = 0;
            for (std::size_t j = 1; j <= k; ++j) s += c_[j] * r.c_[k - j];
            r.c_[k] = ring_.reduce(-s * inv0);
        }
        return r;
    }
    friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return a * b.inverse(); }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        return a.c_ == b.c_;
    }

    std::string str() const {
        std::string out;
        for (std::size_t k = 0; k < N(); ++k) {
            if (c_[k] == 0) continue;
            Rat a = c_[k] < 0 ? Rat(-c_[k]) : c_[k];
            std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
            std::string term = mono.empty() ? to_string(a) : (a == 1 ? mono : to_string(a) + "*" + mono);
            if (out.empty()) out = c_[k] < 0 ? "-" + term : term;
            else out += (c_[k] < 0 ? " - " : " + ") + term;
        }
        return (out.empty() ? "0" : out) + " + O(t^" + std::to_string(N()) + ")";
    }

private:
    BaseRing ring_;
    std::vector<Rat> c_;

    void check(const TruncSeries& o) const {
        if (!(ring_ == o.ring_)) throw DomainError("series over different base rings");
        if (N() != o.N())
            throw DomainError("mixed truncation moduli t^" + std::to_string(N()) + " and t^" + std::to_string(o.N()));
    }
};

struct SeriesMatrix {
    TruncSeries a, b, c, d;

    static SeriesMatrix identity(BaseRing r, std::size_t N) {
        return {TruncSeries::one(r, N), TruncSeries(r, N), TruncSeries(r, N), TruncSeries::one(r, N)};
    }
    TruncSeries det() const { return a * d - b * c; }
    friend SeriesMatrix operator*(const SeriesMatrix& x, const SeriesMatrix& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const SeriesMatrix& x, const SeriesMatrix& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    std::size_t N() const { return a.N(); }
    const BaseRing& ring() const { return a.ring(); }
};

// Checks det ≡ 1 mod t^N.
inline SeriesMatrix make_series_matrix(TruncSeries a, TruncSeries b, TruncSeries c, TruncSeries d) {
    SeriesMatrix m{std::move(a), std::move(b), std::move(c), std::move(d)};
    if (!(m.det() == TruncSeries::one(m.ring(), m.N()))) throw DomainError("determinant is not 1 mod t^N");
    return m;
}

// [exp](r h_s) = diag(1/(1 - r t^s), 1 - r t^s).
inline SeriesMatrix exp_imaginary(BaseRing R, const Rat& r, std::size_t s, std::size_t N) {
    if (s < 1) throw DomainError("s must be >= 1");
    TruncSeries f = TruncSeries::one(R, N) - TruncSeries::monomial(R, N, s, r);
    return {f.inverse(), TruncSeries(R, N), TruncSeries(R, N), f};
}

// (r_1..r_{N-1}) with Π (1 - r_n t^n) ≡ f mod t^N, peeling one degree at a
// time: r_n = [t^n](P - f) where P is the product so far.
inline std::vector<Rat> series_to_product_params(const TruncSeries& f) {
    if (f[0] != 1) throw DomainError("BadConstantTerm: series must have constant term 1");
    const BaseRing& R = f.ring();
    std::size_t N = f.N();
    TruncSeries P = TruncSeries::one(R, N);
    std::vector<Rat> r;
    for (std::size_t n = 1; n < N; ++n) {
        Rat rn = R.reduce(P[n] - f[n]);
        r.push_back(rn);
        P = P * (TruncSeries::one(R, N) - TruncSeries::monomial(R, N, n, rn));
    }
    return r;
}

inline TruncSeries product_from_params(BaseRing R, const std::vector<Rat>& r, std::size_t N) {
    TruncSeries P = TruncSeries::one(R, N);
    for (std::size_t n = 1; n <= r.size() && n < N; ++n)
        P = P * (TruncSeries::one(R, N) - TruncSeries::monomial(R, N, n, r[n - 1]));
    return P;
}

inline bool det_is_one(const SeriesMatrix& m) { return m.det() == TruncSeries::one(m.ring(), m.N()); }

// [[1 + tR[[t]], R[[t]]], [tR[[t]], 1 + tR[[t]]]] with det 1.
inline bool uma_membership(const SeriesMatrix& m) {
    return m.a[0] == 1 && m.d[0] == 1 && m.c[0] == 0 && det_is_one(m);
}

inline bool is_lower_member(const SeriesMatrix& m) {
    return m.a == TruncSeries::one(m.ring(), m.N()) && m.d == m.a && m.b.is_zero() && m.c[0] == 0;
}
inline bool is_upper_member(const SeriesMatrix& m) {
    return m.a == TruncSeries::one(m.ring(), m.N()) && m.d == m.a && m.c.is_zero();
}
inline bool is_imaginary_member(const SeriesMatrix& m) {
    return m.b.is_zero() && m.c.is_zero() && m.a[0] == 1 && det_is_one(m);
}

struct UmaFactors {
    SeriesMatrix L, D, U;
};

// M = L D U with L = [[1,0],[c/a,1]], D = diag(a, d - cb/a), U = [[1,b/a],[0,1]].
inline UmaFactors uma_factorize(const SeriesMatrix& m) {
    if (!uma_membership(m)) throw DomainError("NotInUmaPlus: matrix does not have the U^{ma+} pattern");
    const BaseRing& R = m.ring();
    std::size_t N = m.N();
    TruncSeries one = TruncSeries::one(R, N), zero(R, N);
    TruncSeries ainv = m.a.inverse();
    return {{one, zero, m.c * ainv, one}, {m.a, zero, zero, m.d - m.c * m.b * ainv}, {one, m.b * ainv, zero, one}};
}

}  // namespace masure
