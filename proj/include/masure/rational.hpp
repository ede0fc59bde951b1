#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace masure {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Every failure caused by bad mathematical input derives from this, so the
// CLI can map it to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int ceil(const Rat& r) { return -floor_div(-num(r), den(r)); }
inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline long long to_ll(const Int& v) {
    if (v > Int(INT64_MAX) || v < Int(INT64_MIN)) throw DomainError("integer out of 64-bit range");
    return v.convert_to<long long>();
}

inline std::string to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int d(s.substr(slash + 1));
        if (d == 0) throw DomainError("zero denominator in '" + s + "'");
        return Rat(Int(s.substr(0, slash)), d);
    } catch (const std::runtime_error&) {
        throw DomainError("cannot parse rational '" + s + "'");
    }
}

using RatVec = std::vector<Rat>;
using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;

// Overflow-checked 64-bit helpers for small integer matrices (Cartan data,
// Weyl group matrices). Overflow is a domain error, never silent.
inline long long ck_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("integer overflow");
    return r;
}
inline long long ck_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("integer overflow");
    return r;
}

inline IntMat identity_mat(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMat c(n, IntVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] = ck_add(c[i][j], ck_mul(a[i][l], b[l][j]));
        }
    return c;
}

inline IntVec mat_vec(const IntMat& a, const IntVec& v) {
    IntVec r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] = ck_add(r[i], ck_mul(a[i][j], v[j]));
    return r;
}

inline RatVec mat_vec(const IntMat& a, const RatVec& v) {
    RatVec r(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0) r[i] += Rat(a[i][j]) * v[j];
    return r;
}

inline Rat dot(const IntVec& a, const RatVec& v) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += Rat(a[i]) * v[i];
    return s;
}

inline long long dot(const IntVec& a, const IntVec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = ck_add(s, ck_mul(a[i], b[i]));
    return s;
}

inline RatVec to_rat(const IntVec& v) {
    RatVec r;
    for (auto x : v) r.emplace_back(x);
    return r;
}

// Rank over Q by fraction-free elimination.
inline std::size_t rank_of(std::vector<RatVec> m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline std::size_t rank_of(const IntMat& m) {
    std::vector<RatVec> q;
    for (auto& row : m) q.push_back(to_rat(row));
    return rank_of(q);
}

}  // namespace masure
