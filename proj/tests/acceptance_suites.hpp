#pragma once

// The twelve acceptance criteria. Each suite returns pass/fail plus a short
// account of what it checked; random inputs come from one seeded engine.

#include "oracles.hpp"

#include <masure/hecke.hpp>
#include <masure/kmdata.hpp>
#include <masure/loop_sl2.hpp>
#include <masure/sl2_tree.hpp>
#include <masure/tits_cone.hpp>
#include <masure/weyl_roots.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace acceptance {

using namespace masure;

constexpr std::uint64_t default_seed = 20240601;

struct Outcome {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

using Rng = std::mt19937_64;

inline long long uniform(Rng& g, long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(g); }

// Σ c_k u^k for k in [lo, hi], u the uniformizer.
inline FieldElement random_laurent(Rng& g, const FieldConfig& f, long long lo, long long hi) {
    FieldElement s = FieldElement::zero(f);
    for (long long k = lo; k <= hi; ++k) {
        long long c = uniform(g, 0, f.p - 1);
        if (c) s = s + FieldElement::from_int(f, c) * FieldElement::pi_pow(f, k);
    }
    return s;
}

inline Rat random_position(Rng& g, long long span, long long max_den) {
    long long den = uniform(g, 1, max_den);
    return Rat(uniform(g, -span * den, span * den)) / Rat(den);
}

// A point (x, b) with b of exponents in [-x-depth, -x), nonzero when hanging.
inline TreePoint random_point(Rng& g, const FieldConfig& f, bool hanging, long long span = 4, long long max_den = 3) {
    Rat x = random_position(g, span, max_den);
    if (!hanging) return TreePoint::on_A(f, x);
    long long top = to_ll(ceil(-x)) - 1;
    FieldElement b = FieldElement::zero(f);
    while (b.is_zero()) b = random_laurent(g, f, top - uniform(g, 0, 5), top);
    return make_point(x, b);
}

inline Outcome criterion_1() {
    Outcome o{1, "classification table", true, ""};
    int checked = 0;
    for (long long a = 1; a <= 6; ++a)
        for (long long b = 1; b <= 6; ++b) {
            KacMoodyMatrix A = validate({{2, -a}, {-b, 2}});
            KMClass want = oracle::classify_2x2(a, b);
            bool ok = classify(A) == want && classify(transpose(A)) == want;
            if (!ok) {
                o.pass = false;
                o.detail += " mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")";
            }
            ++checked;
        }
    o.detail = std::to_string(checked) + " matrices and transposes" + o.detail;
    return o;
}

inline Outcome criterion_2() {
    Outcome o{2, "affine SL2 real roots to height 21", true, ""};
    KacMoodyData d = affine_sl2_data();
    RootSet rs = enumerate_real_roots(d, 21);
    auto counts = rs.counts_by_height();
    for (std::size_t h = 1; h <= 21; ++h) {
        std::size_t want = h % 2 ? 2 : 0;
        if (counts[h - 1] != want) {
            o.pass = false;
            o.detail += " height " + std::to_string(h) + " has " + std::to_string(counts[h - 1]);
        }
    }
    std::set<IntVec> got, want;
    for (auto& r : rs.roots) {
        got.insert(r.root);
        long long m = r.root[0], n = r.root[1];
        if (m < 0 || n < 0 || (m - n != 1 && n - m != 1)) {
            o.pass = false;
            o.detail += " bad root " + root_str(d, r.root);
        }
    }
    for (long long m = 0; m <= 21; ++m)
        for (long long n = 0; m + n <= 21; ++n)
            if (m - n == 1 || n - m == 1) want.insert({m, n});
    if (got != want) {
        o.pass = false;
        o.detail += " root set differs from {m a0 + n a1 : |m-n| = 1}";
    }
    o.detail = std::to_string(rs.roots.size()) + " roots" + o.detail;
    return o;
}

inline Outcome criterion_3() {
    Outcome o{3, "inversion sets for length <= 8", true, ""};
    struct Case {
        std::string name;
        KacMoodyData d;
    };
    std::vector<Case> cases{{"affine SL2", affine_sl2_data()}, {"A(1,5)", rank2_data(1, 5)}};
    std::ostringstream info;
    for (auto& c : cases) {
        const IntMat& A = c.d.A.a;
        std::size_t elements = 0, above = 0;
        long long hmax = 0;
        for (auto& word : oracle::words_up_to(A, 8)) {
            ++elements;
            WeylElement w = make_element(c.d, word);
            std::set<IntVec> formula;
            for (auto& r : inversion_set(c.d, w)) formula.insert(r.root);
            bool ok = w.length() == word.size() && formula.size() == word.size();
            for (auto& r : formula) ok = ok && oracle::positive(r);
            auto brute = oracle::inversions_brute(A, word, 40);
            std::set<IntVec> window;
            long long top = 0;
            for (auto& r : formula) {
                top = std::max(top, oracle::ht(r));
                if (oracle::ht(r) <= 40) window.insert(r);
            }
            hmax = std::max(hmax, top);
            if (top > 40) ++above;
            ok = ok && window == brute;
            if (brute.size() == word.size()) ok = ok && formula == brute;
            // The full set, with the brute-force window widened to cover it.
            ok = ok && formula == oracle::inversions_brute(A, word, std::max<long long>(top, 1));
            if (!ok) {
                o.pass = false;
                info << " mismatch for " << c.name << " word " << word_str(c.d, word) << ";";
            }
        }
        info << c.name << ": " << elements << " elements, max inversion height " << hmax << ", " << above
             << " with roots above 40; ";
    }
    o.detail = info.str();
    return o;
}

inline Outcome criterion_4() {
    Outcome o{4, "tree metric triple agreement over F2(t)", true, ""};
    FieldConfig f = FieldConfig::laurent(2);
    TreePoint center = TreePoint::on_A(f, 0);
    std::ostringstream info;
    // Radius 3 as stated; radius 4 as well, since the radius-3 ball has
    // 1 + 3(2^3 - 1) = 22 vertices and the criterion also asks for >= 40.
    for (long long R : {3LL, 4LL}) {
        Ball b = ball(center, R);
        std::size_t n = b.vertices.size();
        std::map<TreePoint, std::size_t, PointOrder> index;
        for (std::size_t i = 0; i < n; ++i) index.emplace(b.vertices[i], i);
        std::vector<std::vector<std::size_t>> adj(n);
        for (std::size_t i = 0; i < n; ++i)
            for (auto& nb : neighbors(b.vertices[i]))
                if (auto it = index.find(nb); it != index.end()) adj[i].push_back(it->second);
        std::size_t pairs = 0, bad = 0;
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<long long> bfs(n, -1);
            std::vector<std::size_t> queue{s};
            bfs[s] = 0;
            for (std::size_t k = 0; k < queue.size(); ++k)
                for (auto j : adj[queue[k]])
                    if (bfs[j] < 0) {
                        bfs[j] = bfs[queue[k]] + 1;
                        queue.push_back(j);
                    }
            Mat2 ls = oracle::vertex_lattice(b.vertices[s]);
            for (std::size_t t = s + 1; t < n; ++t) {
                ++pairs;
                Rat d = distance(b.vertices[s], b.vertices[t]);
                long long lat = oracle::lattice_distance(ls, oracle::vertex_lattice(b.vertices[t]));
                if (!(d == bfs[t] && d == lat)) ++bad;
            }
        }
        if (bad) o.pass = false;
        info << "R=" << R << ": " << n << " vertices, " << pairs << " pairs, " << bad << " disagreements; ";
    }
    o.detail = info.str();
    return o;
}

inline Outcome criterion_5() {
    Outcome o{5, "valency and ball sizes", true, ""};
    std::ostringstream info;
    FieldConfig f3 = FieldConfig::laurent(3);
    Ball b = ball(TreePoint::on_A(f3, 0), 4);
    std::size_t bad = 0;
    for (auto& v : b.vertices) {
        auto nb = neighbors(v);
        std::set<TreePoint, PointOrder> distinct(nb.begin(), nb.end());
        bool ok = nb.size() == 4 && distinct.size() == 4;
        for (auto& u : nb) {
            ok = ok && distance(u, v) == 1;
            auto back = neighbors(u);
            ok = ok && std::find(back.begin(), back.end(), v) != back.end();
        }
        if (!ok) ++bad;
    }
    if (bad) o.pass = false;
    info << b.vertices.size() << " vertices over F3 checked, " << bad << " with wrong valency; sizes";
    for (long long p : {2LL, 3LL, 5LL})
        for (long long R = 0; R <= (p == 5 ? 3 : 4); ++R) {
            FieldConfig f = FieldConfig::laurent(p);
            long long pr = 1;
            for (long long k = 0; k < R; ++k) pr *= p;
            long long want = 1 + (p + 1) * ((pr - 1) / (p - 1));
            auto got = static_cast<long long>(ball(TreePoint::on_A(f, 0), R).vertices.size());
            if (got != want) {
                o.pass = false;
                info << " [p=" << p << " R=" << R << " got " << got << " want " << want << "]";
            }
        }
    info << " match for p in {2,3,5}";
    o.detail = info.str();
    return o;
}

// g = x_+(P1) x_-(P2) or x_-(P2) x_+(P1) with P1, P2 of degree <= 2 in u, so
// every entry is a polynomial of degree <= 4 in u; u = 1/t mostly, else t.
inline Mat2 random_group_element(Rng& g, const FieldConfig& f) {
    bool inverse_var = uniform(g, 0, 3) != 0;
    auto poly = [&]() {
        return inverse_var ? random_laurent(g, f, -2, 0) : random_laurent(g, f, 0, 2);
    };
    FieldElement p1 = poly(), p2 = poly();
    return uniform(g, 0, 1) ? x_plus(p1) * x_minus(p2) : x_minus(p2) * x_plus(p1);
}

inline Outcome criterion_6(std::uint64_t seed) {
    Outcome o{6, "orbit parity and d(g.0, 0)", true, ""};
    Rng rng(seed ^ 0x6);
    std::size_t bad_orbit = 0, bad_dist = 0, bad_lattice = 0, nontrivial = 0;
    for (int k = 0; k < 100; ++k) {
        FieldConfig f = FieldConfig::laurent(k % 2 ? 3 : 2);
        Mat2 g = random_group_element(rng, f);
        TreePoint zero = TreePoint::on_A(f, 0);
        TreePoint g0 = act(g, zero);
        Rat d = distance(g0, zero);
        Rat want = Rat(g.det().valuation().v - 2 * matrix_valuation(g).v);
        if (!(d == want && d == Rat(-2 * matrix_valuation(g).v))) ++bad_dist;
        if (d != 0) ++nontrivial;
        Ball b = ball(zero, 2);
        for (auto& v : b.vertices) {
            TreePoint gv = act(g, v);
            if (orbit_class(gv) != orbit_class(v)) ++bad_orbit;
            if (oracle::lattice_distance(g * oracle::vertex_lattice(v), oracle::vertex_lattice(gv)) != 0) ++bad_lattice;
        }
    }
    o.pass = bad_orbit == 0 && bad_dist == 0 && bad_lattice == 0;
    o.detail = "100 elements over F2/F3 (" + std::to_string(nontrivial) + " moving 0), orbit mismatches " +
               std::to_string(bad_orbit) + ", distance mismatches " + std::to_string(bad_dist) +
               ", lattice action mismatches " + std::to_string(bad_lattice);
    return o;
}

inline Outcome criterion_7(std::uint64_t seed) {
    Outcome o{7, "retraction characterization on 200 points", true, ""};
    Rng rng(seed ^ 0x7);
    KacMoodyData td = tree_data();
    std::vector<FieldConfig> fields{FieldConfig::laurent(2), FieldConfig::laurent(3), FieldConfig::padic(2),
                                    FieldConfig::padic(3)};
    std::size_t hanging = 0, bad = 0;
    for (int k = 0; k < 200; ++k) {
        const FieldConfig& f = fields[static_cast<std::size_t>(k) % fields.size()];
        bool h = uniform(rng, 0, 1) == 1;
        TreePoint p = random_point(rng, f, h);
        hanging += h;
        Rat rp = retract_plus(p), rm = retract_minus(p);
        bool ok = (rp == rm) == p.tail.is_zero();
        ok = ok && rp == oracle::busemann_plus(p) && rm == oracle::busemann_minus(p);
        // d(p, A) by minimizing over a grid of A that contains the foot.
        Rat best = distance(p, TreePoint::on_A(f, p.x));
        for (long long j = -72; j <= 72; ++j) {
            Rat dj = distance(p, TreePoint::on_A(f, Rat(j) / Rat(6)));
            if (dj < best) best = dj;
        }
        auto coords = coroot_coordinates(td, {rm - rp});
        ok = ok && coords && best == distance_to_A(p) && best == (*coords)[0];
        if (!ok) ++bad;
    }
    o.pass = bad == 0;
    o.detail = "200 points over F2(t), F3(t), Q2, Q3 (" + std::to_string(hanging) + " hanging), " +
               std::to_string(bad) + " failures";
    return o;
}

inline Outcome criterion_8(std::uint64_t seed) {
    Outcome o{8, "Hecke paths from 50 retracted segments", true, ""};
    Rng rng(seed ^ 0x8);
    KacMoodyData td = tree_data();
    std::size_t folded = 0, bad = 0;
    std::ostringstream why;
    for (int k = 0; k < 50; ++k) {
        FieldConfig f = FieldConfig::laurent(k % 3 ? 2 : 3);
        TreePoint p = random_point(rng, f, uniform(rng, 0, 3) != 0, 4, 2);
        TreePoint q = random_point(rng, f, uniform(rng, 0, 3) != 0, 4, 2);
        if (p == q) q = make_point(q.x + 1, q.tail);
        Rat d = distance(p, q);
        PiecewisePath path = retract_segment(p, q, -1);
        auto folds = path.folds();
        bool ok = folds.size() <= 1;
        for (auto kf : folds) {
            ++folded;
            ok = ok && is_integer(path.points[kf][0]);
            // Toward -∞ the path descends, folds, and leaves with positive sign.
            ok = ok && path.velocity(kf - 1)[0] < 0 && path.velocity(kf)[0] > 0;
        }
        for (long long j = 0; j <= 24; ++j) {
            Rat tau = Rat(j) / Rat(24);
            TreePoint z = point_on_segment(p, q, tau * d);
            ok = ok && distance(p, z) == tau * d && distance(z, q) == (1 - tau) * d;
            ok = ok && path.at(tau)[0] == oracle::busemann_minus(z);
        }
        HeckeReport r = verify_hecke_path(td, path, {d}, -1, 9, 6, 3);
        ok = ok && r.ok();
        FaceDescriptor chamber{identity_element(td), {}, -1};
        for (auto& fv : r.folds) ok = ok && chain_holds(td, fv.chain, chamber);
        if (!ok) {
            ++bad;
            why << " " << p.str() << "->" << q.str();
        }
    }
    o.pass = bad == 0;
    o.detail = "50 segments, " + std::to_string(folded) + " folded, " + std::to_string(bad) + " failures" + why.str();
    return o;
}

inline Outcome criterion_9() {
    Outcome o{9, "exchange apartment and sundial", true, ""};
    FieldConfig f = FieldConfig::laurent(2);
    std::ostringstream info;
    for (std::string s : {"1", "t", "t^2", "1+t"}) {
        FieldElement a = parse_expr(f, s);
        Rat w = a.valuation().v;
        Exchange e = exchange_apartment(a);
        bool ok = e.ab == Interval{false, {}, w} && e.aa2 == Interval{false, w, {}} && e.triple == Interval{false, w, w};
        ok = ok && meet_A(e.b) == e.ab && meet_A(e.a2) == e.aa2 && sundial_holds(a);
        for (long long x = to_ll(num(w)) - 5; x <= to_ll(num(w)) + 5; ++x) {
            TreePoint px = TreePoint::on_A(f, x);
            ok = ok && fixes_point(e.b, px) == (x <= w) && fixes_point(e.a2, px) == (x >= w);
        }
        if (!ok) o.pass = false;
        info << s << ": A∩B=" << e.ab.str() << " A∩A''=" << e.aa2.str() << " triple=" << e.triple.str()
             << (ok ? "" : " FAIL") << "; ";
    }
    o.detail = info.str();
    return o;
}

inline Outcome criterion_10() {
    Outcome o{10, "Garland-Mitzman polynomials", true, ""};
    std::size_t nv = 3;
    auto Z = [&](std::size_t i) { return MPoly::var(nv, i - 1); };
    MPoly one = MPoly::constant(nv, 1);
    std::vector<MPoly> display{one, Z(1), Rat(1, 2) * (Z(1) * Z(1)) + Rat(1, 2) * Z(2),
                               Rat(1, 6) * (Z(1) * Z(1) * Z(1)) + Rat(1, 2) * (Z(1) * Z(2)) + Rat(1, 3) * Z(3)};
    auto lam = gm_polys(3, nv);
    bool displays = lam == display;
    auto rec = gm_polys(12, 12), gen = gm_generating(12, 12);
    bool generating = rec == gen;
    for (std::size_t n = 0; n <= 12; ++n) generating = generating && rec[n].homogeneous({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, static_cast<long long>(n));
    bool binomial = true, convolution = true;
    for (std::size_t n = 0; n <= 8; ++n) binomial = binomial && check_binomial_specialization(n);
    for (std::size_t n = 0; n <= 6; ++n) convolution = convolution && check_convolution(n);
    o.pass = displays && generating && binomial && convolution;
    o.detail = std::string("displays ") + (displays ? "match" : "differ") + ", generating function n<=12 " +
               (generating ? "agrees" : "differs") + ", binomial n<=8 " + (binomial ? "holds" : "fails") +
               ", convolution n<=6 " + (convolution ? "holds" : "fails");
    return o;
}

inline Rat random_coeff(Rng& g, const BaseRing& R) {
    if (R.p > 0) return Rat(uniform(g, 0, R.p - 1));
    return Rat(uniform(g, -5, 5)) / Rat(uniform(g, 1, 4));
}

inline TruncSeries random_series(Rng& g, const BaseRing& R, std::size_t N, std::size_t from, const Rat* constant) {
    std::vector<Rat> c(N, Rat(0));
    for (std::size_t k = from; k < N; ++k) c[k] = random_coeff(g, R);
    if (constant) c[0] = *constant;
    return TruncSeries(R, N, c);
}

inline Outcome criterion_11(std::uint64_t seed) {
    Outcome o{11, "U^{ma+} factorization and product parameters", true, ""};
    Rng rng(seed ^ 0xb);
    std::size_t bad_fact = 0, bad_params = 0;
    Rat one = 1;
    for (BaseRing R : {BaseRing::fp(2), BaseRing::rationals()}) {
        const std::size_t N = 12;
        TruncSeries I = TruncSeries::one(R, N), Zr(R, N);
        for (int k = 0; k < 100; ++k) {
            TruncSeries c = random_series(rng, R, N, 1, nullptr);
            TruncSeries a = random_series(rng, R, N, 1, &one);
            TruncSeries b = random_series(rng, R, N, 0, nullptr);
            SeriesMatrix L{I, Zr, c, I}, D{a, Zr, Zr, a.inverse()}, U{I, b, Zr, I};
            SeriesMatrix M = L * D * U;
            bool ok = uma_membership(M);
            if (ok) {
                UmaFactors fct = uma_factorize(M);
                ok = fct.L == L && fct.D == D && fct.U == U && fct.L * fct.D * fct.U == M;
                ok = ok && is_lower_member(fct.L) && is_imaginary_member(fct.D) && is_upper_member(fct.U);
            }
            if (!ok) ++bad_fact;
        }
        const std::size_t N2 = 16;
        for (int k = 0; k < 100; ++k) {
            TruncSeries f = random_series(rng, R, N2, 1, &one);
            auto r = series_to_product_params(f);
            bool ok = r.size() == N2 - 1 && product_from_params(R, r, N2) == f;
            std::vector<Rat> r2;
            for (std::size_t n = 1; n < N2; ++n) r2.push_back(random_coeff(rng, R));
            ok = ok && series_to_product_params(product_from_params(R, r2, N2)) == r2;
            if (!ok) ++bad_params;
        }
    }
    o.pass = bad_fact == 0 && bad_params == 0;
    o.detail = "200 matrices mod t^12 over F2 and Q, " + std::to_string(bad_fact) +
               " factorization failures; 200 series mod t^16 each way, " + std::to_string(bad_params) +
               " roundtrip failures";
    return o;
}

inline std::vector<RealRoot> signed_roots(const KacMoodyData& d, long long H) {
    std::vector<RealRoot> out;
    for (auto& r : enumerate_real_roots(d, H).roots) {
        out.push_back(r);
        out.push_back(negate(d, r));
    }
    return out;
}

inline Outcome criterion_12(std::uint64_t seed) {
    Outcome o{12, "prenilpotency closed forms against word search", true, ""};
    // Affine A2 is checked at L = 14: at height 9 some of its prenilpotent
    // pairs have no witness of length <= 8. Those pairs are counted and
    // reported, not hidden.
    struct Case {
        std::string name;
        KacMoodyData d;
        std::size_t L;
    };
    std::vector<Case> cases{
        {"A2", minimal_realization(validate({{2, -1}, {-1, 2}})), 8},
        {"B2", rank2_data(2, 1), 8},
        {"G2", rank2_data(1, 3), 8},
        {"A3", minimal_realization(validate({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})), 8},
        {"affine A1", affine_sl2_data(), 8},
        {"A(1,5)", rank2_data(1, 5), 8},
        {"A(2,3)", rank2_data(2, 3), 8},
        {"A(3,3)", rank2_data(3, 3), 8},
        {"affine A2", minimal_realization(validate({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})), 14},
    };
    std::ostringstream info;
    for (auto& c : cases) {
        auto roots = signed_roots(c.d, 9);
        auto elements = elements_up_to(c.d, c.L);
        std::size_t pairs = 0, bad = 0, pren = 0, beyond8 = 0;
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i; j < roots.size(); ++j) {
                ++pairs;
                auto closed = prenilpotent_pair(c.d, roots[i], roots[j], 8);
                auto search = word_search(c.d, roots[i], roots[j], elements, c.L);
                bool cp = closed.kind == PrenilpotencyVerdict::Kind::Prenilpotent;
                bool sp = search.kind == PrenilpotencyVerdict::Kind::Prenilpotent;
                pren += cp;
                if (closed.method == "word-search" || cp != sp) ++bad;
                if (c.L > 8 && cp && word_search(c.d, roots[i], roots[j], elements, 8).kind !=
                                         PrenilpotencyVerdict::Kind::Prenilpotent)
                    ++beyond8;
            }
        if (bad) o.pass = false;
        info << c.name << " " << pairs << " pairs (" << pren << " prenilpotent, " << bad << " disagree at L=" << c.L;
        if (c.L > 8) info << ", " << beyond8 << " need witnesses longer than 8";
        info << "); ";
    }
    // Rank 2 indefinite: exactly one of {α, β}, {α, -β} is prenilpotent.
    Rng rng(seed ^ 0xc);
    KacMoodyData d = rank2_data(1, 5);
    auto pool = signed_roots(d, 40);
    std::size_t bad = 0;
    for (int k = 0; k < 20; ++k) {
        RealRoot a, b;
        do {
            a = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(pool.size()) - 1))];
            b = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(pool.size()) - 1))];
        } while (a.root == b.root || a.root == negated(b.root));
        bool p1 = prenilpotent_pair(d, a, b).kind == PrenilpotencyVerdict::Kind::Prenilpotent;
        bool p2 = prenilpotent_pair(d, a, negate(d, b)).kind == PrenilpotencyVerdict::Kind::Prenilpotent;
        if (p1 == p2) ++bad;
    }
    if (bad) o.pass = false;
    info << "A(1,5) exactly-one on 20 sampled pairs: " << bad << " failures";
    o.detail = info.str();
    return o;
}

inline std::vector<Outcome> run_all(std::uint64_t seed) {
    std::vector<std::function<Outcome()>> suites{
        [] { return criterion_1(); },         [] { return criterion_2(); },
        [] { return criterion_3(); },         [] { return criterion_4(); },
        [] { return criterion_5(); },         [=] { return criterion_6(seed); },
        [=] { return criterion_7(seed); },    [=] { return criterion_8(seed); },
        [] { return criterion_9(); },         [] { return criterion_10(); },
        [=] { return criterion_11(seed); },   [=] { return criterion_12(seed); },
    };
    std::vector<Outcome> out;
    for (std::size_t i = 0; i < suites.size(); ++i) {
        try {
            out.push_back(suites[i]());
        } catch (const std::exception& e) {
            out.push_back({static_cast<int>(i + 1), "suite " + std::to_string(i + 1), false,
                           std::string("exception: ") + e.what()});
        }
    }
    return out;
}

}  // namespace acceptance
