#pragma once

// The Bruhat–Tits tree of SL2 over a discretely valued field, in canonical
// coordinates: the point (x, b) is x_+(b).x with x in the standard apartment
// A = R and b a tail with exponents < -x.
//
// Convention: the fixator of x ∈ A is [[O, F_{>=-x}], [F_{>=x}, O]], so
// diag(λ, 1/λ) translates A by -2ω(λ) and [[0,-1],[1,0]] acts by x -> -x.

#include "hecke.hpp"
#include "kmdata.hpp"
#include "valued_field.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace masure {

struct TreePoint {
    Rat x;
    FieldElement tail;

    static TreePoint on_A(const FieldConfig& f, const Rat& x) { return {x, FieldElement::zero(f)}; }
    bool in_A() const { return tail.is_zero(); }
    bool is_vertex() const { return is_integer(x); }
    const FieldConfig& config() const { return tail.config(); }
    friend bool operator==(const TreePoint& a, const TreePoint& b) { return a.x == b.x && a.tail == b.tail; }
    std::string str() const { return "(" + to_string(x) + "; " + tail.expr() + ")"; }
};

// Canonical point x_+(b).x, reducing b modulo F_{>=-x}.
inline TreePoint make_point(const Rat& x, const FieldElement& b) { return {x, tail_reduce(b, -x).value}; }

// Ordering for sets of points: position, then canonical tail text.
struct PointOrder {
    bool operator()(const TreePoint& a, const TreePoint& b) const {
        if (a.x != b.x) return a.x < b.x;
        return a.tail.str() < b.tail.str();
    }
};

// "(x; tail)" with x rational and tail an expression in t.
inline TreePoint parse_point(const FieldConfig& f, const std::string& s) {
    auto l = s.find('('), semi = s.find(';'), r = s.rfind(')');
    if (l == std::string::npos || semi == std::string::npos || r == std::string::npos || !(l < semi && semi < r))
        throw DomainError("point syntax is (x; tail), got '" + s + "'");
    Rat x = parse_rat(s.substr(l + 1, semi - l - 1));
    FieldElement b = parse_expr(f, s.substr(semi + 1, r - semi - 1));
    return make_point(x, b);
}

inline bool in_O(const FieldElement& a) { return a.valuation() >= Valuation{0, false}; }

// ω(a) >= k for rational k (true for a = 0).
inline bool val_ge(const FieldElement& a, const Rat& k) { return a.is_zero() || Rat(a.valuation().v) >= k; }

inline TreePoint act(const Mat2& g, const TreePoint& p) {
    Mat2 h = g * x_plus(p.tail);
    const FieldElement &a = h.a, &b = h.b, &c = h.c, &d = h.d;
    // h = x_+(b/d) diag(1/d, d) x_-(-c/d) when x_-(-c/d) fixes p.x,
    // else h = x_+(a/c) diag(1/c, c) [[0,-1],[1,0]] x_+(d/c).
    if (!d.is_zero() && val_ge(c, Rat(d.valuation().v) + p.x)) {
        Rat y = p.x + 2 * d.valuation().v;
        return make_point(y, b / d);
    }
    Rat y = -p.x + 2 * c.valuation().v;
    return make_point(y, a / c);
}

// m = -ω(b - b'), or nullopt (-∞) when the tails agree.
inline std::optional<Rat> branch_height(const FieldElement& b1, const FieldElement& b2) {
    FieldElement diff = b1 - b2;
    if (diff.is_zero()) return std::nullopt;
    return Rat(-diff.valuation().v);
}

inline Rat distance(const TreePoint& p, const TreePoint& q) {
    Rat top = p.x > q.x ? p.x : q.x;
    if (auto m = branch_height(p.tail, q.tail); m && *m > top) top = *m;
    return 2 * top - p.x - q.x;
}

inline bool in_fixator(const Mat2& g, const Rat& x) {
    return in_O(g.a) && in_O(g.d) && val_ge(g.b, -x) && val_ge(g.c, x);
}

inline bool fixes_point(const Mat2& g, const TreePoint& p) {
    Mat2 conj = x_plus(-p.tail) * g * x_plus(p.tail);
    return in_fixator(conj, p.x);
}

// Closed interval of A; a missing bound is infinite.
struct Interval {
    bool empty = false;
    std::optional<Rat> lo, hi;

    static Interval none() { return {true, {}, {}}; }
    static Interval all() { return {false, {}, {}}; }
    bool contains(const Rat& x) const { return !empty && (!lo || *lo <= x) && (!hi || x <= *hi); }
    friend bool operator==(const Interval& a, const Interval& b) {
        if (a.empty || b.empty) return a.empty == b.empty;
        return a.lo == b.lo && a.hi == b.hi;
    }
    std::string str() const {
        if (empty) return "empty";
        return std::string(lo ? "[" + to_string(*lo) : "(-inf") + ", " + (hi ? to_string(*hi) + "]" : "+inf)");
    }
};

inline Interval intersect(const Interval& a, const Interval& b) {
    if (a.empty || b.empty) return Interval::none();
    Interval r;
    r.lo = !a.lo ? b.lo : (!b.lo ? a.lo : std::optional<Rat>(*a.lo > *b.lo ? *a.lo : *b.lo));
    r.hi = !a.hi ? b.hi : (!b.hi ? a.hi : std::optional<Rat>(*a.hi < *b.hi ? *a.hi : *b.hi));
    if (r.lo && r.hi && *r.lo > *r.hi) return Interval::none();
    return r;
}

// Points of A fixed by g: [-ω(b), ω(c)] when a, d ∈ O.
inline Interval fixed_interval(const Mat2& g) {
    if (!in_O(g.a) || !in_O(g.d)) return Interval::none();
    Interval r;
    if (!g.b.is_zero()) r.lo = Rat(-g.b.valuation().v);
    if (!g.c.is_zero()) r.hi = Rat(g.c.valuation().v);
    if (r.lo && r.hi && *r.lo > *r.hi) return Interval::none();
    return r;
}

// m0 = -ω(tail): where the apartment x_+(tail).A leaves A.
inline Rat branch_point(const TreePoint& p) {
    if (p.in_A()) throw DomainError("point lies in the standard apartment");
    return Rat(-p.tail.valuation().v);
}

inline Rat retract_plus(const TreePoint& p) { return p.x; }
inline Rat retract_minus(const TreePoint& p) { return p.in_A() ? p.x : 2 * branch_point(p) - p.x; }

inline TreePoint project_to_A(const TreePoint& p) {
    if (p.in_A()) return p;
    return TreePoint::on_A(p.config(), branch_point(p));
}

inline Rat distance_to_A(const TreePoint& p) { return p.in_A() ? Rat(0) : branch_point(p) - p.x; }

// Point at arclength s from p toward q.
inline TreePoint point_on_segment(const TreePoint& p, const TreePoint& q, const Rat& s) {
    Rat top = p.x > q.x ? p.x : q.x;
    if (auto m = branch_height(p.tail, q.tail); m && *m > top) top = *m;
    Rat rise = top - p.x;
    if (s <= rise) return make_point(p.x + s, p.tail);
    return make_point(top - (s - rise), q.tail);
}

inline std::vector<TreePoint> geodesic(const TreePoint& p, const TreePoint& q, long long n) {
    if (n < 1) throw DomainError("subdivision must be >= 1");
    Rat d = distance(p, q);
    std::vector<TreePoint> out;
    for (long long k = 0; k <= n; ++k) out.push_back(point_on_segment(p, q, d * Rat(k) / Rat(n)));
    return out;
}

struct Iwasawa {
    Mat2 u, n, k;
};

// g = u n k with u ∈ U^sign, n monomial and k in the Iwahori subgroup
// [[O, O], [m, O]].
inline Iwasawa iwasawa(const Mat2& g, int sign) {
    const FieldConfig& f = g.config();
    FieldElement one = FieldElement::one(f), zero = FieldElement::zero(f);
    const FieldElement &a = g.a, &b = g.b, &c = g.c, &d = g.d;
    if (sign > 0) {
        if (!d.is_zero() && (c.is_zero() || c.valuation() > d.valuation()))
            return {x_plus(b / d), {one / d, zero, zero, d}, {one, zero, c / d, one}};
        return {x_plus(a / c), {zero, -(one / c), c, zero}, {one, d / c, zero, one}};
    }
    if (!a.is_zero() && (b.is_zero() || b.valuation() >= a.valuation()))
        return {{one, zero, c / a, one}, {a, zero, zero, one / a}, {one, b / a, zero, one}};
    return {{one, zero, d / b, one}, {zero, b, -(one / b), zero}, {one, zero, a / b, one}};
}

inline bool in_iwahori(const Mat2& k) { return in_O(k.a) && in_O(k.b) && in_O(k.d) && val_ge(k.c, 1); }

inline void require_vertex(const TreePoint& v) {
    if (!v.is_vertex()) throw DomainError("not a vertex: position " + to_string(v.x) + " is not an integer");
}

// Down neighbors (x-1, b + c t^{-x}) by residue digit c, then the up
// neighbor (x+1, b mod F_{>=-x-1}).
inline std::vector<TreePoint> neighbors(const TreePoint& v) {
    require_vertex(v);
    const FieldConfig& f = v.config();
    long long x = to_ll(num(v.x));
    std::vector<TreePoint> out;
    FieldElement step = FieldElement::pi_pow(f, -x);
    for (long long c = 0; c < f.p; ++c) out.push_back(make_point(Rat(x - 1), v.tail + FieldElement::from_int(f, c) * step));
    out.push_back(make_point(Rat(x + 1), v.tail));
    return out;
}

// Vertices within distance R of the center, in breadth-first order, and
// the tree edges among them.
struct Ball {
    std::vector<TreePoint> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<long long> depth;
};

inline Ball ball(const TreePoint& center, long long R) {
    require_vertex(center);
    if (R < 0) throw DomainError("radius must be >= 0");
    Ball b;
    std::map<TreePoint, std::size_t, PointOrder> index;
    b.vertices.push_back(center);
    b.depth.push_back(0);
    index.emplace(center, 0);
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        if (b.depth[i] == R) continue;
        TreePoint cur = b.vertices[i];
        for (auto& nb : neighbors(cur)) {
            auto it = index.find(nb);
            if (it == index.end()) {
                index.emplace(nb, b.vertices.size());
                b.edges.emplace_back(i, b.vertices.size());
                b.vertices.push_back(nb);
                b.depth.push_back(b.depth[i] + 1);
            }
        }
    }
    return b;
}

inline long long orbit_class(const TreePoint& v) {
    require_vertex(v);
    Rat d = distance(TreePoint::on_A(v.config(), 0), v);
    long long k = to_ll(num(d));
    return ((k % 2) + 2) % 2;
}

// Projective end [u : v], normalized to v = 1 or [1 : 0].
struct End {
    FieldElement u, v;

    static End make(const FieldElement& u, const FieldElement& v) {
        if (u.is_zero() && v.is_zero()) throw DomainError("[0:0] is not an end");
        if (v.is_zero()) return {FieldElement::one(u.config()), v};
        return {u / v, FieldElement::one(u.config())};
    }
    static End plus_infinity(const FieldConfig& f) { return {FieldElement::one(f), FieldElement::zero(f)}; }
    static End minus_infinity(const FieldConfig& f) { return {FieldElement::zero(f), FieldElement::one(f)}; }
    bool is_plus_infinity() const { return v.is_zero(); }
    bool is_minus_infinity() const { return u.is_zero(); }
    friend bool operator==(const End& a, const End& b) { return a.u == b.u && a.v == b.v; }
    std::string str() const { return "[" + u.expr() + " : " + v.expr() + "]"; }
};

inline End act_end(const Mat2& g, const End& e) { return End::make(g.a * e.u + g.b * e.v, g.c * e.u + g.d * e.v); }

// g with g.A the apartment between e1 (image of +∞) and e2 (image of -∞).
inline Mat2 apartment_between(const End& e1, const End& e2) {
    FieldElement det = e1.u * e2.v - e2.u * e1.v;
    if (det.is_zero()) throw DomainError("an apartment needs two distinct ends");
    return {e1.u, e2.u / det, e1.v, e2.v / det};
}

// A ∩ g.A, from the two ends of g.A.
inline Interval meet_A(const Mat2& g) {
    const FieldConfig& f = g.config();
    End e1 = act_end(g, End::plus_infinity(f)), e2 = act_end(g, End::minus_infinity(f));
    auto line_plus = [](const End& e) {  // line(+∞, [u:1]) ∩ A
        Interval r;
        if (!e.u.is_zero()) r.lo = Rat(-e.u.valuation().v);
        return r;
    };
    auto line_minus = [](const End& e) {  // line(-∞, [u:1]) ∩ A
        Interval r;
        if (e.is_plus_infinity()) return r;
        r.hi = Rat(-e.u.valuation().v);
        return r;
    };
    if (e2.is_plus_infinity()) std::swap(e1, e2);
    if (e1.is_plus_infinity()) return line_plus(e2);
    if (e1.is_minus_infinity()) return line_minus(e2);
    if (e2.is_minus_infinity()) return line_minus(e1);
    // Two finite nonzero ends: rays meet A on [m0, m] below their branch
    // height m = -ω(u1 - u2).
    Rat m1 = -e1.u.valuation().v, m2 = -e2.u.valuation().v;
    Rat m = -(e1.u - e2.u).valuation().v;
    Rat lo = m1 < m2 ? m1 : m2;
    if (lo > m) return Interval::none();
    return {false, lo, m};
}

struct Exchange {
    Mat2 b;        // B = x_-(a).A
    Mat2 a2;       // A'' = x_+(-1/a).A
    End shared;    // common end of B and A''
    Interval ab, aa2, triple;
};

inline Exchange exchange_apartment(const FieldElement& a) {
    if (a.is_zero()) throw DomainError("exchange needs a nonzero element");
    const FieldConfig& f = a.config();
    Exchange e;
    e.b = x_minus(a);
    e.a2 = x_plus(-(FieldElement::one(f) / a));
    e.shared = act_end(e.b, End::plus_infinity(f));
    e.ab = fixed_interval(e.b);
    e.aa2 = fixed_interval(e.a2);
    e.triple = intersect(e.ab, e.aa2);
    return e;
}

// Sundial at ω(a): the half-apartments (-∞, ω(a)] ⊆ B and [ω(a), ∞) ⊆ A''
// each share an apartment with the end E = x_-(a).Q_{+∞}.
inline bool sundial_holds(const FieldElement& a) {
    Exchange e = exchange_apartment(a);
    const FieldConfig& f = a.config();
    Rat w = a.valuation().v;
    End b_ends[2] = {act_end(e.b, End::plus_infinity(f)), act_end(e.b, End::minus_infinity(f))};
    End a2_ends[2] = {act_end(e.a2, End::plus_infinity(f)), act_end(e.a2, End::minus_infinity(f))};
    bool e_in_b = b_ends[0] == e.shared || b_ends[1] == e.shared;
    bool e_in_a2 = a2_ends[0] == e.shared || a2_ends[1] == e.shared;
    Interval lower{false, {}, w}, upper{false, w, {}};
    return e_in_b && e_in_a2 && intersect(e.ab, lower) == lower && intersect(e.aa2, upper) == upper &&
           e.triple == Interval{false, w, w} && !(e.shared == End::plus_infinity(f)) &&
           !(e.shared == End::minus_infinity(f));
}

// ρ_{center} ∘ s_{p,q} on [0,1] as a path in A = Y⊗Q of the rank-one data.
inline PiecewisePath retract_segment(const TreePoint& p, const TreePoint& q, int center) {
    if (p == q) throw DomainError("DegenerateSegment: endpoints coincide");
    Rat d = distance(p, q);
    Rat top = p.x > q.x ? p.x : q.x;
    if (auto m = branch_height(p.tail, q.tail); m && *m > top) top = *m;
    Rat rise = top - p.x;
    // Candidate breakpoints: the turn and where either tail vanishes.
    std::set<Rat> arcs{Rat(0), d, rise};
    if (!p.in_A()) arcs.insert(branch_point(p) - p.x);
    if (!q.in_A()) arcs.insert(rise + top - branch_point(q));
    auto rho = [&](const TreePoint& z) { return center > 0 ? retract_plus(z) : retract_minus(z); };
    PiecewisePath path;
    for (const Rat& s : arcs) {
        if (s < 0 || s > d) continue;
        path.times.push_back(s / d);
        path.points.push_back({rho(point_on_segment(p, q, s))});
    }
    return merge_collinear(path);
}

}  // namespace masure
