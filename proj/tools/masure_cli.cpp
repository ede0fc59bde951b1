// masure: command-line front end to the library.
// Exit status: 0 success, 1 domain error, 2 usage error.

#include "acceptance_suites.hpp"

#include <masure/json_io.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace masure;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Result {
    json j;
    std::string text;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n"), e = s.find_last_not_of(" \t\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// Splits "a, b, [c, d]" at top-level commas.
std::vector<std::string> split_top(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

std::string strip_brackets(std::string s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') return s.substr(1, s.size() - 2);
    return s;
}

RatVec parse_vector(const std::string& s) {
    RatVec v;
    for (auto& x : split_top(strip_brackets(s))) v.push_back(parse_rat(x));
    if (v.empty()) throw UsageError("empty vector '" + s + "'");
    return v;
}

IntVec parse_int_vector(const std::string& s) {
    IntVec v;
    for (auto& x : parse_vector(s)) {
        if (!is_integer(x)) throw DomainError("root coordinates must be integers, got " + to_string(x));
        v.push_back(to_ll(num(x)));
    }
    return v;
}

// Inline JSON, a preset name, or a path to a JSON file.
json load_json(const std::string& s) {
    std::string t = trim(s);
    if (t.empty()) throw UsageError("empty JSON payload");
    if (t[0] == '{' || t[0] == '[') return json::parse(t);
    std::ifstream in(t);
    if (!in) throw UsageError("cannot read '" + t + "' (expected inline JSON, a preset or a file)");
    return json::parse(in);
}

KacMoodyData load_data(const std::string& s) {
    if (s == "affine-sl2") return affine_sl2_data();
    if (s == "tree") return tree_data();
    json j = load_json(s);
    if (j.is_array()) return minimal_realization(validate(intmat_from_json(j)));
    return kmdata_from_json(j);
}

int parse_sign(const std::string& s) {
    if (s == "+" || s == "+inf" || s == "plus" || s == "1" || s == "C") return 1;
    if (s == "-" || s == "-inf" || s == "minus" || s == "-1" || s == "-C") return -1;
    throw UsageError("sign must be + or -, got '" + s + "'");
}

std::string vec_str(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

std::string mat_str(const IntMat& m) {
    std::ostringstream o;
    for (auto& row : m) {
        o << " ";
        for (auto x : row) o << " " << x;
        o << "\n";
    }
    return o.str();
}

json chamber_face_json(const KacMoodyData& d, const FaceDescriptor& f) {
    json J = json::array();
    for (auto i : f.J) J.push_back(d.labels[i]);
    return {{"w", weyl_to_json(d, f.w)}, {"J", J}, {"sign", f.sign}};
}

// ---- subcommands ----

Result cmd_classify(const std::string& matrix) {
    KacMoodyMatrix A = validate(intmat_from_json(load_json(matrix)));
    std::string c = to_string(classify(A));
    return {{{"class", c}}, c + "\n"};
}

Result cmd_roots(const KacMoodyData& d, long long H) {
    RootSet rs = enumerate_real_roots(d, H);
    json roots = json::array();
    std::map<long long, std::vector<std::string>> by_height;
    for (auto& r : rs.roots) {
        roots.push_back(real_root_to_json(d, r));
        by_height[r.height()].push_back(root_str(d, r.root));
    }
    auto counts = rs.counts_by_height();
    std::ostringstream t;
    for (long long h = 1; h <= H; ++h) {
        t << "height " << h << " (" << counts[static_cast<std::size_t>(h - 1)] << "):";
        for (auto& s : by_height[h]) t << " " << s;
        t << "\n";
    }
    return {{{"max_height", H}, {"counts", counts}, {"roots", roots}}, t.str()};
}

Result cmd_weyl(const KacMoodyData& d, const std::string& word) {
    Word raw = parse_word(d, word);
    WeylElement w = make_element(d, raw);
    auto inv = inversion_set(d, w);
    json ji = json::array();
    std::ostringstream t;
    t << "length " << w.length() << "\nreduced word " << (w.word.empty() ? "(empty)" : word_str(d, w.word))
      << "\naction on Y\n"
      << mat_str(w.y) << "inversion set:";
    for (auto& r : inv) {
        ji.push_back(real_root_to_json(d, r));
        t << " " << root_str(d, r.root);
    }
    json j = weyl_to_json(d, w);
    j["inversion_set"] = ji;
    return {j, t.str() + "\n"};
}

Result cmd_cone(const KacMoodyData& d, const std::string& vec, long long cap) {
    RatVec v = parse_vector(vec);
    if (v.size() != d.rank) throw DomainError("vector must have " + std::to_string(d.rank) + " coordinates");
    ConeCertificate c = normalize_to_dominant(d, v, cap);
    json j{{"verdict", to_string(c.kind)}};
    std::ostringstream t;
    t << to_string(c.kind);
    if (c.kind == ConeCertificate::Kind::InCone) {
        FaceDescriptor f = face_of(d, v, cap);
        j["w"] = weyl_to_json(d, c.w);
        j["image"] = ratvec_to_json(c.image);
        j["face"] = chamber_face_json(d, f);
        t << "\nw = " << (c.w.word.empty() ? "1" : word_str(d, c.w.word)) << "\ndominant image " << vec_str(c.image);
    } else if (c.kind == ConeCertificate::Kind::NotInCone) {
        j["reason"] = c.reason;
        t << "\n" << c.reason;
    } else {
        j["steps"] = c.steps;
        t << " after " << c.steps << " reflections";
    }
    return {j, t.str() + "\n"};
}

Result cmd_prenilpotent(const KacMoodyData& d, const std::string& alpha, const std::string& beta, std::size_t L) {
    RealRoot a = real_root(d, parse_int_vector(alpha)), b = real_root(d, parse_int_vector(beta));
    PrenilpotencyVerdict v = prenilpotent_pair(d, a, b, L);
    json j{{"verdict", to_string(v.kind)}, {"method", v.method}, {"bound", v.bound}};
    std::ostringstream t;
    t << to_string(v.kind) << " (" << v.method << ")";
    if (!v.reason.empty()) {
        j["reason"] = v.reason;
        t << "\n" << v.reason;
    }
    if (v.kind == PrenilpotencyVerdict::Kind::Prenilpotent) {
        j["w"] = weyl_to_json(d, v.w);
        j["w2"] = weyl_to_json(d, v.w2);
        json ci = json::array();
        t << "\nclosed interval:";
        for (auto& r : closed_interval(d, a, b, v)) {
            ci.push_back(real_root_to_json(d, r));
            t << " " << root_str(d, r.root);
        }
        j["closed_interval"] = ci;
    }
    return {j, t.str() + "\n"};
}

Result point_result(const TreePoint& p) { return {point_to_json(p), p.str() + "\n"}; }

Result cmd_tree_act(const FieldConfig& f, const std::string& g, const std::string& p) {
    Mat2 m = parse_mat2(f, g);
    if (m.det().is_zero()) throw DomainError("matrix is singular");
    return point_result(act(m, parse_point(f, p)));
}

Result cmd_tree_dist(const FieldConfig& f, const std::string& p, const std::string& q) {
    Rat d = distance(parse_point(f, p), parse_point(f, q));
    json j = is_integer(d) ? json(to_ll(num(d))) : json(to_string(d));
    return {j, to_string(d) + "\n"};
}

Result cmd_tree_retract(const FieldConfig& f, const std::string& p, const std::string& q, const std::string& center) {
    TreePoint a = parse_point(f, p);
    int s = parse_sign(center);
    if (q.empty()) {
        Rat r = s > 0 ? retract_plus(a) : retract_minus(a);
        TreePoint pr = project_to_A(a);
        return {{{"retraction", rat_to_json(r)}, {"projection", point_to_json(pr)}},
                "retraction " + to_string(r) + "\nprojection " + pr.str() + "\n"};
    }
    PiecewisePath path = retract_segment(a, parse_point(f, q), s);
    std::ostringstream t;
    for (std::size_t k = 0; k < path.times.size(); ++k)
        t << "t=" << to_string(path.times[k]) << "  " << to_string(path.points[k][0]) << "\n";
    return {path_to_json(path), t.str()};
}

Result cmd_tree_geodesic(const FieldConfig& f, const std::string& p, const std::string& q, long long n) {
    json j = json::array();
    std::ostringstream t;
    for (auto& z : geodesic(parse_point(f, p), parse_point(f, q), n)) {
        j.push_back(point_to_json(z));
        t << z.str() << "\n";
    }
    return {j, t.str()};
}

Result cmd_tree_neighbors(const FieldConfig& f, const std::string& p) {
    json j = json::array();
    std::ostringstream t;
    for (auto& z : neighbors(parse_point(f, p))) {
        j.push_back(point_to_json(z));
        t << z.str() << "\n";
    }
    return {j, t.str()};
}

Result cmd_tree_ball(const FieldConfig& f, const std::string& center, long long R, bool dot) {
    Ball b = ball(parse_point(f, center), R);
    json v = json::array(), e = json::array();
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        json p = point_to_json(b.vertices[i]);
        p["depth"] = b.depth[i];
        v.push_back(p);
    }
    for (auto [i, k] : b.edges) e.push_back({i, k});
    std::ostringstream t;
    if (dot) {
        t << "graph ball {\n";
        for (std::size_t i = 0; i < b.vertices.size(); ++i) t << "  v" << i << " [label=\"" << b.vertices[i].str() << "\"];\n";
        for (auto [i, k] : b.edges) t << "  v" << i << " -- v" << k << ";\n";
        t << "}\n";
    } else {
        t << b.vertices.size() << " vertices, " << b.edges.size() << " edges\n";
        for (std::size_t i = 0; i < b.vertices.size(); ++i) t << b.depth[i] << "  " << b.vertices[i].str() << "\n";
    }
    return {{{"radius", R}, {"vertices", v}, {"edges", e}}, t.str()};
}

Result cmd_tree_orbit(const FieldConfig& f, const std::string& p) {
    long long c = orbit_class(parse_point(f, p));
    return {{{"class", c}}, std::to_string(c) + "\n"};
}

Result cmd_tree_exchange(const FieldConfig& f, const std::string& a) {
    FieldElement x = parse_expr(f, a);
    Exchange e = exchange_apartment(x);
    bool sundial = sundial_holds(x);
    json j{{"B", e.b.str()},
           {"A2", e.a2.str()},
           {"shared_end", e.shared.str()},
           {"A_cap_B", interval_to_json(e.ab)},
           {"A_cap_A2", interval_to_json(e.aa2)},
           {"triple", interval_to_json(e.triple)},
           {"sundial", sundial}};
    std::ostringstream t;
    t << "B = " << e.b.str() << "\nA'' = " << e.a2.str() << "\nshared end " << e.shared.str() << "\nA cap B = "
      << e.ab.str() << "\nA cap A'' = " << e.aa2.str() << "\nA cap B cap A'' = " << e.triple.str() << "\nsundial "
      << (sundial ? "holds" : "fails") << "\n";
    return {j, t.str()};
}

Result cmd_hecke_verify(const KacMoodyData& d, const std::string& path_s, const std::string& shape, const std::string& chamber,
                        const std::string& bounds) {
    PiecewisePath path = path_from_json(load_json(path_s));
    RatVec lambda = parse_vector(shape);
    if (lambda.size() != d.rank || path.points[0].size() != d.rank)
        throw DomainError("shape and positions must have " + std::to_string(d.rank) + " coordinates");
    auto b = split_top(bounds);
    if (b.size() != 3) throw UsageError("--bounds must be H,L,K");
    std::size_t H = std::stoul(b[0]), L = std::stoul(b[1]), K = std::stoul(b[2]);
    int sign = parse_sign(chamber);
    HeckeReport r = verify_hecke_path(d, path, lambda, sign, H, L, K);
    json wit = json::array();
    for (auto& w : r.billiard.witnesses) wit.push_back(w ? weyl_to_json(d, *w) : json(nullptr));
    json folds = json::array();
    std::ostringstream t;
    t << "billiard " << (r.billiard.ok ? "yes" : "no") << "\n";
    for (auto& f : r.folds) {
        bool ok = f.kind == FoldVerdict::Kind::Verified;
        json betas = json::array(), xis = json::array();
        for (auto& x : f.chain.betas) betas.push_back(real_root_to_json(d, x));
        for (auto& x : f.chain.xis) xis.push_back(ratvec_to_json(x));
        folds.push_back({{"verdict", ok ? "verified" : "refuted-within-bound"},
                         {"anchor", ratvec_to_json(f.chain.anchor)},
                         {"betas", betas},
                         {"xis", xis}});
        t << "fold at " << vec_str(f.chain.anchor) << ": " << (ok ? "chain of length " + std::to_string(f.chain.betas.size())
                                                                   : std::string("no chain within bounds"))
          << "\n";
    }
    t << "dominance " << (r.dominance.ok() ? "holds" : "fails") << "\nhecke path " << (r.ok() ? "yes" : "no") << "\n";
    json j{{"hecke_path", r.ok()},
           {"billiard", {{"ok", r.billiard.ok}, {"witnesses", wit}}},
           {"folds", folds},
           {"dominance",
            {{"monotone", r.dominance.monotone},
             {"initial_dominates", r.dominance.initial_dominates},
             {"strict_unless_segment", r.dominance.strict_unless_segment}}},
           {"bounds", {{"H", H}, {"L", L}, {"K", K}}}};
    return {j, t.str()};
}

Result cmd_gm(std::size_t n) {
    std::size_t nv = std::max<std::size_t>(n, 1);
    MPoly p = gm_polys(n, nv)[n];
    std::string s = p.str(z_names(nv));
    return {{{"n", n}, {"polynomial", s}}, s + "\n"};
}

SeriesMatrix load_series_matrix(const std::string& s, const std::string& ring, std::size_t mod) {
    json j = load_json(s);
    if (j.is_object()) return series_matrix_from_json(j);
    if (mod < 1) throw UsageError("--mod is required with a bare matrix");
    return series_matrix_from_json({{"ring", ring}, {"mod", mod}, {"matrix", j}});
}

Result cmd_uma_factorize(const std::string& matrix, const std::string& ring, std::size_t mod) {
    SeriesMatrix m = load_series_matrix(matrix, ring, mod);
    UmaFactors f = uma_factorize(m);
    auto entries = [](const SeriesMatrix& x) {
        return "[[" + x.a.str() + ", " + x.b.str() + "], [" + x.c.str() + ", " + x.d.str() + "]]";
    };
    auto params = series_to_product_params(f.D.a);
    json jp = json::array();
    for (auto& r : params) jp.push_back(rat_to_json(r));
    std::string t = "L = " + entries(f.L) + "\nD = " + entries(f.D) + "\nU = " + entries(f.U) + "\n";
    return {{{"L", series_matrix_to_json(f.L)},
             {"D", series_matrix_to_json(f.D)},
             {"U", series_matrix_to_json(f.U)},
             {"D_product_params", jp}},
            t};
}

Result cmd_selftest(std::uint64_t seed, int& failed) {
    json rows = json::array();
    std::ostringstream t;
    failed = 0;
    for (auto& o : acceptance::run_all(seed)) {
        rows.push_back({{"id", o.id}, {"title", o.title}, {"pass", o.pass}, {"detail", o.detail}});
        t << (o.pass ? "PASS" : "FAIL") << "  " << o.id << ". " << o.title << ": " << o.detail << "\n";
        failed += !o.pass;
    }
    t << (12 - failed) << "/12 criteria passed (seed " << seed << ")\n";
    return {{{"seed", seed}, {"criteria", rows}, {"passed", 12 - failed}}, t.str()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"masure: exact computations with Kac-Moody data, the SL2 tree and affine SL2"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::uint64_t seed = acceptance::default_seed;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
    app.add_option("--seed", seed, "Seed for randomized self-tests (MASURE_SEED overrides)");

    std::string matrix, data, word, vec, alpha, beta, field = "F2(t)", p, q, g, center = "(0;0)", sign = "-", a,
                                                                         path, shape, chamber = "+", bounds = "9,6,3",
                                                                         ring = "Q";
    long long H = 10, cap = -1, steps = 4, radius = 2;
    std::size_t L = 8, n = 3, mod = 0;
    Result out;
    int status = 0;

    auto need_data = [&](CLI::App* c) { c->add_option("--data", data, "Kac-Moody data: JSON, file, or preset affine-sl2|tree")->required(); };

    auto* classify_c = app.add_subcommand("classify", "Classify an indecomposable generalized Cartan matrix");
    classify_c->add_option("--matrix", matrix, "Matrix as JSON")->required();
    classify_c->callback([&] { out = cmd_classify(matrix); });

    auto* roots_c = app.add_subcommand("roots", "Positive real roots up to a height");
    need_data(roots_c);
    roots_c->add_option("--max-height", H, "Height bound")->required();
    roots_c->callback([&] { out = cmd_roots(load_data(data), H); });

    auto* weyl_c = app.add_subcommand("weyl", "Length, reduced word, action and inversion set of a word");
    need_data(weyl_c);
    weyl_c->add_option("--word", word, "Comma-separated labels")->required();
    weyl_c->callback([&] { out = cmd_weyl(load_data(data), word); });

    auto* cone_c = app.add_subcommand("cone", "Tits cone membership with certificate");
    need_data(cone_c);
    cone_c->add_option("--vector", vec, "Vector in Y (comma-separated rationals)")->required();
    cone_c->add_option("--cap", cap, "Reflection cap for the greedy search");
    cone_c->callback([&] { out = cmd_cone(load_data(data), vec, cap); });

    auto* pre_c = app.add_subcommand("prenilpotent", "Prenilpotency of a pair of real roots");
    need_data(pre_c);
    pre_c->add_option("--alpha", alpha, "Root coordinates")->required();
    pre_c->add_option("--beta", beta, "Root coordinates")->required();
    pre_c->add_option("--bound", L, "Word-length bound for the search fallback");
    pre_c->callback([&] { out = cmd_prenilpotent(load_data(data), alpha, beta, L); });

    auto* tree_c = app.add_subcommand("tree", "The Bruhat-Tits tree of SL2");
    tree_c->require_subcommand(1);
    tree_c->add_option("--field", field, "F<p>(t) or Q_<p>");
    auto F = [&] { return FieldConfig::parse(field); };
    auto* act_c = tree_c->add_subcommand("act", "Apply a matrix to a point");
    act_c->add_option("--matrix", g, "[[a,b],[c,d]]")->required();
    act_c->add_option("--p", p, "Point (x; tail)")->required();
    act_c->callback([&] { out = cmd_tree_act(F(), g, p); });
    auto* dist_c = tree_c->add_subcommand("dist", "Distance between two points");
    dist_c->add_option("--p", p)->required();
    dist_c->add_option("--q", q)->required();
    dist_c->callback([&] { out = cmd_tree_dist(F(), p, q); });
    auto* ret_c = tree_c->add_subcommand("retract", "Retraction of a point, or of the segment [p,q]");
    ret_c->add_option("--p", p)->required();
    ret_c->add_option("--q", q, "Second endpoint (segment mode)");
    ret_c->add_option("--center", sign, "+ or - (end of A)");
    ret_c->callback([&] { out = cmd_tree_retract(F(), p, q, sign); });
    auto* geo_c = tree_c->add_subcommand("geodesic", "Points of the geodesic [p,q]");
    geo_c->add_option("--p", p)->required();
    geo_c->add_option("--q", q)->required();
    geo_c->add_option("--steps", steps, "Number of subdivisions");
    geo_c->callback([&] { out = cmd_tree_geodesic(F(), p, q, steps); });
    auto* nb_c = tree_c->add_subcommand("neighbors", "Neighbors of a vertex");
    nb_c->add_option("--p", p)->required();
    nb_c->callback([&] { out = cmd_tree_neighbors(F(), p); });
    auto* ball_c = tree_c->add_subcommand("ball", "Vertex ball with edges");
    ball_c->add_option("--center", center, "Center vertex");
    ball_c->add_option("--radius", radius, "Radius")->required();
    ball_c->callback([&] { out = cmd_tree_ball(F(), center, radius, format == "dot"); });
    auto* orbit_c = tree_c->add_subcommand("orbit", "SL2-orbit class of a vertex");
    orbit_c->add_option("--p", p)->required();
    orbit_c->callback([&] { out = cmd_tree_orbit(F(), p); });
    auto* ex_c = tree_c->add_subcommand("exchange", "Exchange apartment of x_-(a)");
    ex_c->add_option("--a", a, "Nonzero field element")->required();
    ex_c->callback([&] { out = cmd_tree_exchange(F(), a); });

    auto* hecke_c = app.add_subcommand("hecke", "Hecke path verification");
    hecke_c->require_subcommand(1);
    auto* hv_c = hecke_c->add_subcommand("verify", "Check a piecewise path against the Hecke conditions");
    need_data(hv_c);
    hv_c->add_option("--path", path, "{\"breakpoints\": [...], \"positions\": [[...]]}")->required();
    hv_c->add_option("--shape", shape, "Shape lambda in Y")->required();
    hv_c->add_option("--chamber", chamber, "+ or -");
    hv_c->add_option("--bounds", bounds, "H,L,K");
    hv_c->callback([&] { out = cmd_hecke_verify(load_data(data), path, shape, chamber, bounds); });

    auto* gm_c = app.add_subcommand("gm", "Garland-Mitzman polynomial");
    gm_c->add_option("--n", n, "Index")->required();
    gm_c->callback([&] { out = cmd_gm(n); });

    auto* uma_c = app.add_subcommand("uma", "Completed unipotent group of affine SL2");
    uma_c->require_subcommand(1);
    auto* uf_c = uma_c->add_subcommand("factorize", "Lower-imaginary-upper factorization");
    uf_c->add_option("--matrix", matrix, "Series matrix JSON")->required();
    uf_c->add_option("--ring", ring, "Q or Fp (bare matrices)");
    uf_c->add_option("--mod", mod, "Truncation modulus N (bare matrices)");
    uf_c->callback([&] { out = cmd_uma_factorize(matrix, ring, mod); });

    auto* self_c = app.add_subcommand("selftest", "Run the acceptance suites");
    self_c->callback([&] {
        if (const char* env = std::getenv("MASURE_SEED")) seed = std::stoull(env);
        int failed = 0;
        out = cmd_selftest(seed, failed);
        status = failed ? 1 : 0;
    });

    try {
        app.parse(argc, argv);
        if (format == "dot" && !ball_c->parsed()) throw UsageError("--format dot is only available for tree ball");
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "usage error: bad JSON: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    if (format == "json") std::cout << out.j.dump() << "\n";
    else std::cout << out.text;
    return status;
}
