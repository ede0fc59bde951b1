#pragma once

// Discretely valued fields with value group Z: rational functions F_p(t)
// with the t-adic valuation, and Q with the p-adic valuation. Elements are
// exact (reduced fractions), never truncated series.

#include "rational.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace masure {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct FieldConfig {
    enum class Kind { Laurent, PAdic };
    Kind kind = Kind::Laurent;
    long long p = 2;

    static FieldConfig laurent(long long p) { return make(Kind::Laurent, p); }
    static FieldConfig padic(long long p) { return make(Kind::PAdic, p); }
    static FieldConfig make(Kind k, long long p) {
        // p < 2^31 keeps residue products inside 64 bits.
        if (!is_prime(p) || p >= (1LL << 31)) throw DomainError("field characteristic/prime must be a prime below 2^31");
        FieldConfig c;
        c.kind = k;
        c.p = p;
        return c;
    }

    bool laurent() const { return kind == Kind::Laurent; }
    std::string name() const {
        return laurent() ? "F" + std::to_string(p) + "(t)" : "Q_" + std::to_string(p);
    }
    // Accepts "F2(t)", "F_3(t)", "Q_5", "Q5", "Qp=5".
    static FieldConfig parse(std::string s) {
        s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
        auto digits = [&](std::size_t from) {
            std::size_t e = from;
            while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
            if (e == from) throw DomainError("bad field '" + s + "'");
            return std::make_pair(std::stoll(s.substr(from, e - from)), e);
        };
        if (!s.empty() && s[0] == 'F') {
            std::size_t i = (s.size() > 1 && s[1] == '_') ? 2 : 1;
            auto [p, e] = digits(i);
            if (s.substr(e) != "(t)") throw DomainError("bad field '" + s + "'");
            return laurent(p);
        }
        if (!s.empty() && s[0] == 'Q') {
            std::size_t i = 1;
            if (s.compare(i, 1, "_") == 0) i = 2;
            else if (s.compare(i, 2, "p=") == 0) i = 3;
            auto [p, e] = digits(i);
            if (e != s.size()) throw DomainError("bad field '" + s + "'");
            return padic(p);
        }
        throw DomainError("unknown field '" + s + "' (expected e.g. F2(t) or Q_3)");
    }
    friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

// Valuation in Z ∪ {+∞}.
struct Valuation {
    long long v = 0;
    bool inf = false;
    static Valuation infinity() { return {0, true}; }
    bool is_inf() const { return inf; }
    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.inf == b.inf && (a.inf || a.v == b.v);
    }
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.inf || b.inf) return a.inf <=> b.inf;
        return a.v <=> b.v;
    }
    std::string str() const { return inf ? "+inf" : std::to_string(v); }
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

namespace detail {

inline long long mod(long long a, long long p) {
    a %= p;
    return a < 0 ? a + p : a;
}

inline long long inv_mod(long long a, long long p) {
    long long g = p, x = 0, x1 = 1, r = mod(a, p);
    if (r == 0) throw DomainError("division by zero");
    while (r != 0) {
        long long q = g / r;
        std::tie(g, r) = std::make_pair(r, g - q * r);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    return mod(x, p);
}

}  // namespace detail

// Polynomial over F_p, coefficients ascending, no trailing zeros.
struct PolyFp {
    long long p = 2;
    std::vector<long long> c;

    PolyFp() = default;
    PolyFp(long long p_, std::vector<long long> coeffs) : p(p_), c(std::move(coeffs)) {
        for (auto& x : c) x = detail::mod(x, p);
        trim();
    }
    static PolyFp constant(long long p, long long v) { return PolyFp(p, {v}); }
    static PolyFp monomial(long long p, std::size_t k, long long v = 1) {
        std::vector<long long> c(k + 1, 0);
        c[k] = v;
        return PolyFp(p, c);
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long long deg() const { return static_cast<long long>(c.size()) - 1; }
    long long lead() const { return c.empty() ? 0 : c.back(); }
    long long coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    // t-adic order; undefined for zero.
    long long ord() const {
        std::size_t i = 0;
        while (i < c.size() && c[i] == 0) ++i;
        return static_cast<long long>(i);
    }

    friend bool operator==(const PolyFp& a, const PolyFp& b) { return a.c == b.c; }

    friend PolyFp operator+(const PolyFp& a, const PolyFp& b) {
        std::vector<long long> r(std::max(a.c.size(), b.c.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return PolyFp(a.p, r);
    }
    PolyFp operator-() const {
        std::vector<long long> r(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) r[i] = p - c[i];
        return PolyFp(p, r);
    }
    friend PolyFp operator-(const PolyFp& a, const PolyFp& b) { return a + (-b); }
    friend PolyFp operator*(const PolyFp& a, const PolyFp& b) {
        if (a.is_zero() || b.is_zero()) return PolyFp(a.p, {});
        std::vector<long long> r(a.c.size() + b.c.size() - 1, 0);
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = (r[i + j] + a.c[i] * b.c[j]) % a.p;
        }
        return PolyFp(a.p, r);
    }
    PolyFp scaled(long long s) const {
        std::vector<long long> r(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) r[i] = (c[i] * detail::mod(s, p)) % p;
        return PolyFp(p, r);
    }
    PolyFp shifted(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<long long> r(k, 0);
        r.insert(r.end(), c.begin(), c.end());
        return PolyFp(p, r);
    }
    PolyFp monic() const { return is_zero() ? *this : scaled(detail::inv_mod(lead(), p)); }

    static std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        PolyFp r = a;
        std::vector<long long> q(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, 0);
        long long li = detail::inv_mod(b.lead(), a.p);
        while (!r.is_zero() && r.deg() >= b.deg()) {
            std::size_t shift = static_cast<std::size_t>(r.deg() - b.deg());
            long long f = (r.lead() * li) % a.p;
            q[shift] = f;
            r = r - b.scaled(f).shifted(shift);
        }
        return {PolyFp(a.p, q), r};
    }
    static PolyFp gcd(PolyFp a, PolyFp b) {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // Power series of a/b truncated to n terms; b(0) must be nonzero.
    static std::vector<long long> series_quotient(const PolyFp& a, const PolyFp& b, std::size_t n) {
        long long b0inv = detail::inv_mod(b.coeff(0), a.p);
        std::vector<long long> s(n, 0);
        for (std::size_t k = 0; k < n; ++k) {
            long long acc = a.coeff(k);
            for (std::size_t j = 1; j <= k && j < b.c.size(); ++j) acc -= b.c[j] * s[k - j] % a.p;
            s[k] = detail::mod(detail::mod(acc, a.p) * b0inv, a.p);
        }
        return s;
    }

    // "1+t^2+2*t^5"; "0" for zero. `var` names the indeterminate.
    std::string str(const std::string& var = "t", long long offset = 0) const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            long long e = static_cast<long long>(i) + offset;
            if (!out.empty()) out += "+";
            if (e == 0) {
                out += std::to_string(c[i]);
                continue;
            }
            if (c[i] != 1) out += std::to_string(c[i]) + "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }
};

class FieldElement {
public:
    FieldElement() = default;

    static FieldElement zero(const FieldConfig& f) { return from_int(f, 0); }
    static FieldElement one(const FieldConfig& f) { return from_int(f, 1); }
    static FieldElement from_int(const FieldConfig& f, long long v) {
        FieldElement e;
        e.cfg_ = f;
        if (f.laurent()) {
            e.num_ = PolyFp(f.p, {v});
            e.den_ = PolyFp(f.p, {1});
        } else {
            e.q_ = Rat(v);
        }
        return e;
    }
    static FieldElement from_rat(const FieldConfig& f, const Rat& r) {
        if (f.laurent()) {
            long long n = detail::mod((num(r) % f.p).convert_to<long long>(), f.p);
            long long d = detail::mod((den(r) % f.p).convert_to<long long>(), f.p);
            if (d == 0) throw DomainError("denominator divisible by the characteristic");
            return from_int(f, n) / from_int(f, d);
        }
        FieldElement e;
        e.cfg_ = f;
        e.q_ = r;
        return e;
    }
    // Uniformizer power: t^k for F_p(t), p^k for Q.
    static FieldElement pi_pow(const FieldConfig& f, long long k) {
        FieldElement e;
        e.cfg_ = f;
        if (f.laurent()) {
            std::size_t a = static_cast<std::size_t>(k >= 0 ? k : -k);
            e.num_ = k >= 0 ? PolyFp::monomial(f.p, a) : PolyFp(f.p, {1});
            e.den_ = k >= 0 ? PolyFp(f.p, {1}) : PolyFp::monomial(f.p, a);
        } else {
            Int pk = boost::multiprecision::pow(Int(f.p), static_cast<unsigned>(k >= 0 ? k : -k));
            e.q_ = k >= 0 ? Rat(pk) : Rat(Int(1), pk);
        }
        return e;
    }
    static FieldElement from_fraction(const PolyFp& n, const PolyFp& d) {
        if (d.is_zero()) throw DomainError("division by zero");
        FieldElement e;
        e.cfg_ = FieldConfig::laurent(n.p);
        e.num_ = n;
        e.den_ = d;
        e.normalize();
        return e;
    }

    const FieldConfig& config() const { return cfg_; }
    const PolyFp& numerator_poly() const { return num_; }
    const PolyFp& denominator_poly() const { return den_; }
    const Rat& rational() const { return q_; }

    bool is_zero() const { return cfg_.laurent() ? num_.is_zero() : q_ == 0; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        return a.cfg_.laurent() ? (a.num_ == b.num_ && a.den_ == b.den_) : a.q_ == b.q_;
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        FieldElement r;
        r.cfg_ = a.cfg_;
        if (a.cfg_.laurent()) {
            if (a.den_ == b.den_) {
                r.num_ = a.num_ + b.num_;
                r.den_ = a.den_;
            } else {
                r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
                r.den_ = a.den_ * b.den_;
            }
            r.normalize();
        } else {
            r.q_ = a.q_ + b.q_;
        }
        return r;
    }
    FieldElement operator-() const {
        FieldElement r = *this;
        if (cfg_.laurent()) r.num_ = -num_;
        else r.q_ = -q_;
        return r;
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        FieldElement r;
        r.cfg_ = a.cfg_;
        if (a.cfg_.laurent()) {
            r.num_ = a.num_ * b.num_;
            r.den_ = a.den_ * b.den_;
            r.normalize();
        } else {
            r.q_ = a.q_ * b.q_;
        }
        return r;
    }
    FieldElement inverse() const {
        if (is_zero()) throw DomainError("division by zero");
        FieldElement r;
        r.cfg_ = cfg_;
        if (cfg_.laurent()) {
            r.num_ = den_;
            r.den_ = num_;
            r.normalize();
        } else {
            r.q_ = 1 / q_;
        }
        return r;
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    Valuation valuation() const {
        if (is_zero()) return Valuation::infinity();
        if (cfg_.laurent()) return {num_.ord() - den_.ord(), false};
        return {padic_ord(num(q_)) - padic_ord(den(q_)), false};
    }

    // Image in the residue field O/m = F_p.
    long long residue() const {
        Valuation v = valuation();
        if (v.is_inf()) return 0;
        if (v.v < 0) throw DomainError("residue of an element with negative valuation");
        if (v.v > 0) return 0;
        if (cfg_.laurent()) return detail::mod(num_.coeff(0) * detail::inv_mod(den_.coeff(0), cfg_.p), cfg_.p);
        long long n = detail::mod((num(q_) % cfg_.p).convert_to<long long>(), cfg_.p);
        long long d = detail::mod((den(q_) % cfg_.p).convert_to<long long>(), cfg_.p);
        return detail::mod(n * detail::inv_mod(d, cfg_.p), cfg_.p);
    }

    // Canonical text: "(<num>)/(<den>) mod p" or "<num>/<den> @ p=<p>".
    std::string str() const {
        if (cfg_.laurent())
            return "(" + num_.str() + ")/(" + den_.str() + ") mod " + std::to_string(cfg_.p);
        return num(q_).str() + "/" + den(q_).str() + " @ p=" + std::to_string(cfg_.p);
    }

    // Compact expression, parseable by parse_expr in the same field:
    // Laurent polynomials print as sums of t-powers, p-adic values as fractions.
    std::string expr() const {
        if (!cfg_.laurent()) return to_string(q_);
        if (den_.c.size() == static_cast<std::size_t>(den_.ord()) + 1u) {
            // Denominator is t^k: print as a Laurent polynomial.
            return num_.str("t", -den_.ord());
        }
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.expr(); }

private:
    FieldConfig cfg_;
    PolyFp num_, den_;
    Rat q_;

    long long padic_ord(Int n) const {
        long long k = 0;
        n = abs(n);
        while (n % cfg_.p == 0) {
            n /= cfg_.p;
            ++k;
        }
        return k;
    }

    void check_same(const FieldElement& o) const {
        if (!(cfg_ == o.cfg_)) throw DomainError("mixing elements of " + cfg_.name() + " and " + o.cfg_.name());
    }

    void normalize() {
        if (den_.is_zero()) throw DomainError("division by zero");
        if (num_.is_zero()) {
            den_ = PolyFp(cfg_.p, {1});
            return;
        }
        PolyFp g = PolyFp::gcd(num_, den_);
        if (g.deg() > 0) {
            num_ = PolyFp::divmod(num_, g).first;
            den_ = PolyFp::divmod(den_, g).first;
        }
        long long li = detail::inv_mod(den_.lead(), cfg_.p);
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
};

inline Valuation valuation(const FieldElement& a) { return a.valuation(); }

// Canonical coset representative of a + F_{>=cutoff}: the expansion of a
// keeping only integer exponents e < cutoff.
struct Tail {
    FieldElement value;
    Rat cutoff;
    bool is_zero() const { return value.is_zero(); }
};

inline Tail tail_reduce(const FieldElement& a, const Rat& cutoff) {
    const FieldConfig& f = a.config();
    Tail t{FieldElement::zero(f), cutoff};
    if (a.is_zero()) return t;
    long long v = a.valuation().v;
    Int K = ceil(cutoff);  // keep exponents e <= K-1
    if (Int(v) >= K) return t;
    std::size_t count = static_cast<std::size_t>(to_ll(K - v));
    if (f.laurent()) {
        const PolyFp& n = a.numerator_poly();
        const PolyFp& d = a.denominator_poly();
        long long on = n.ord(), od = d.ord();
        PolyFp n1(f.p, std::vector<long long>(n.c.begin() + on, n.c.end()));
        PolyFp d1(f.p, std::vector<long long>(d.c.begin() + od, d.c.end()));
        PolyFp s(f.p, PolyFp::series_quotient(n1, d1, count));
        t.value = FieldElement::from_fraction(s, PolyFp(f.p, {1})) * FieldElement::pi_pow(f, v);
        return t;
    }
    // p-adic: a = p^v * u/w with u, w prime to p; digits of u/w mod p^count.
    Rat q = a.rational() / FieldElement::pi_pow(f, v).rational();
    Int pk = boost::multiprecision::pow(Int(f.p), static_cast<unsigned>(count));
    Int u = num(q) % pk, w = den(q) % pk;
    if (u < 0) u += pk;
    // inverse of w mod p^count by extended Euclid
    Int g = pk, x = 0, x1 = 1, r = w;
    while (r != 0) {
        Int qq = g / r;
        Int tmp = g - qq * r;
        g = r;
        r = tmp;
        tmp = x - qq * x1;
        x = x1;
        x1 = tmp;
    }
    Int winv = x % pk;
    if (winv < 0) winv += pk;
    Int digits = (u * winv) % pk;
    t.value = FieldElement::from_rat(f, Rat(digits)) * FieldElement::pi_pow(f, v);
    return t;
}

// Expression parser over a fixed field: integers, 't' (the uniformizer; for
// Q_p it means p), + - * / ^ with integer (possibly negative) exponents and
// parentheses.
class ExprParser {
public:
    ExprParser(const FieldConfig& f, std::string s) : f_(f), s_(std::move(s)) {}

    FieldElement parse() {
        FieldElement r = sum();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return r;
    }

private:
    FieldConfig f_;
    std::string s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw DomainError("cannot parse '" + s_ + "': " + why);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    FieldElement sum() {
        bool neg = eat('-');
        if (!neg) eat('+');
        FieldElement r = product();
        if (neg) r = -r;
        for (;;) {
            if (eat('+')) r = r + product();
            else if (eat('-')) r = r - product();
            else break;
        }
        return r;
    }
    FieldElement product() {
        FieldElement r = power();
        for (;;) {
            if (eat('*')) r = r * power();
            else if (eat('/')) r = r / power();
            else break;
        }
        return r;
    }
    long long integer() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        skip();
        std::size_t b = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (b == i_) fail("expected an integer");
        long long v = std::stoll(s_.substr(b, i_ - b));
        return neg ? -v : v;
    }
    FieldElement power() {
        FieldElement base = atom();
        if (eat('^')) {
            long long e = integer();
            FieldElement r = FieldElement::one(f_);
            FieldElement b = e < 0 ? base.inverse() : base;
            for (long long k = 0; k < (e < 0 ? -e : e); ++k) r = r * b;
            return r;
        }
        return base;
    }
    FieldElement atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            FieldElement r = sum();
            if (!eat(')')) fail("missing ')'");
            return r;
        }
        if (c == 't') {
            ++i_;
            return FieldElement::pi_pow(f_, 1);
        }
        if (c == '-') {
            ++i_;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t b = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return FieldElement::from_rat(f_, Rat(Int(s_.substr(b, i_ - b))));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

inline FieldElement parse_expr(const FieldConfig& f, const std::string& s) { return ExprParser(f, s).parse(); }

// Parses the canonical syntax produced by FieldElement::str().
inline FieldElement parse_element(const std::string& s) {
    auto at = s.find('@');
    if (at != std::string::npos) {
        auto eq = s.find("p=", at);
        if (eq == std::string::npos) throw DomainError("expected '@ p=<prime>' in '" + s + "'");
        FieldConfig f = FieldConfig::padic(std::stoll(s.substr(eq + 2)));
        return parse_expr(f, s.substr(0, at));
    }
    auto m = s.rfind(" mod ");
    if (m == std::string::npos) throw DomainError("expected ' mod <p>' or '@ p=<p>' in '" + s + "'");
    FieldConfig f = FieldConfig::laurent(std::stoll(s.substr(m + 5)));
    return parse_expr(f, s.substr(0, m));
}

struct Mat2 {
    FieldElement a, b, c, d;

    static Mat2 identity(const FieldConfig& f) {
        return {FieldElement::one(f), FieldElement::zero(f), FieldElement::zero(f), FieldElement::one(f)};
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    FieldElement det() const { return a * d - b * c; }
    Mat2 inverse() const {
        FieldElement di = det().inverse();
        return {d * di, -b * di, -c * di, a * di};
    }
    const FieldConfig& config() const { return a.config(); }
    std::string str() const {
        return "[[" + a.expr() + "," + b.expr() + "],[" + c.expr() + "," + d.expr() + "]]";
    }
};

inline Valuation matrix_valuation(const Mat2& m) {
    Valuation v = min(min(m.a.valuation(), m.b.valuation()), min(m.c.valuation(), m.d.valuation()));
    if (v.is_inf()) throw DomainError("valuation of the zero matrix");
    return v;
}

// x_+(a) = [[1,a],[0,1]], x_-(a) = [[1,0],[-a,1]], t(λ) = diag(λ, 1/λ).
inline Mat2 x_plus(const FieldElement& a) {
    const auto& f = a.config();
    return {FieldElement::one(f), a, FieldElement::zero(f), FieldElement::one(f)};
}
inline Mat2 x_minus(const FieldElement& a) {
    const auto& f = a.config();
    return {FieldElement::one(f), FieldElement::zero(f), -a, FieldElement::one(f)};
}
inline Mat2 torus(const FieldElement& l) {
    const auto& f = l.config();
    return {l, FieldElement::zero(f), FieldElement::zero(f), l.inverse()};
}

// "[[a,b],[c,d]]" with entries as field expressions.
inline Mat2 parse_mat2(const FieldConfig& f, std::string s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '[') {
            ++depth;
            continue;
        }
        if (ch == ']') {
            --depth;
            continue;
        }
        if (ch == ',' && depth <= 2) {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
            continue;
        }
        if (depth >= 1) cur += ch;
    }
    if (!cur.empty()) parts.push_back(cur);
    parts.erase(std::remove_if(parts.begin(), parts.end(),
                               [](const std::string& x) {
                                   return x.find_first_not_of(" \t") == std::string::npos;
                               }),
                parts.end());
    if (parts.size() != 4) throw DomainError("expected a 2x2 matrix [[a,b],[c,d]], got '" + s + "'");
    return {parse_expr(f, parts[0]), parse_expr(f, parts[1]), parse_expr(f, parts[2]), parse_expr(f, parts[3])};
}

}  // namespace masure
