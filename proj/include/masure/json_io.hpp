#pragma once

// JSON views of the domain values. Rationals are written as strings
// ("3/4") and read from strings or integers.

#include "hecke.hpp"
#include "kmdata.hpp"
#include "loop_sl2.hpp"
#include "sl2_tree.hpp"
#include "tits_cone.hpp"
#include "weyl_roots.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace masure {

using json = nlohmann::json;

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw DomainError("expected a rational (integer or \"p/q\" string), got " + j.dump());
}

inline json rat_to_json(const Rat& r) { return to_string(r); }

inline RatVec ratvec_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("expected an array, got " + j.dump());
    RatVec v;
    for (auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

inline json ratvec_to_json(const RatVec& v) {
    json j = json::array();
    for (auto& x : v) j.push_back(rat_to_json(x));
    return j;
}

inline IntMat intmat_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("expected a matrix, got " + j.dump());
    IntMat m;
    for (auto& row : j) {
        if (!row.is_array()) throw DomainError("expected a matrix row, got " + row.dump());
        IntVec r;
        for (auto& x : row) {
            if (!x.is_number_integer()) throw DomainError("matrix entries must be integers, got " + x.dump());
            r.push_back(x.get<long long>());
        }
        m.push_back(r);
    }
    return m;
}

// {"matrix": [[...]], "realization": {"rank", "simple_roots", "simple_coroots"}, "labels": [...]}
inline KacMoodyData kmdata_from_json(const json& j) {
    if (!j.is_object() || !j.contains("matrix")) throw DomainError("data needs a \"matrix\" field");
    KacMoodyMatrix A = validate(intmat_from_json(j.at("matrix")));
    std::vector<long long> labels;
    if (j.contains("labels"))
        for (auto& x : j.at("labels")) labels.push_back(x.get<long long>());
    if (!j.contains("realization")) {
        KacMoodyData d = minimal_realization(A);
        if (!labels.empty()) {
            if (labels.size() != d.n()) throw DomainError("wrong number of labels");
            d.labels = labels;
        }
        return d;
    }
    const json& r = j.at("realization");
    return validate_data(A, r.at("rank").get<std::size_t>(), intmat_from_json(r.at("simple_roots")),
                         intmat_from_json(r.at("simple_coroots")), labels);
}

inline json kmdata_to_json(const KacMoodyData& d) {
    return {{"matrix", d.A.a},
            {"realization", {{"rank", d.rank}, {"simple_roots", d.roots}, {"simple_coroots", d.coroots}}},
            {"labels", d.labels}};
}

inline json word_to_json(const KacMoodyData& d, const Word& w) {
    json j = json::array();
    for (auto i : w) j.push_back(d.labels[i]);
    return j;
}

inline json root_to_json(const KacMoodyData& d, const IntVec& r) { return {{"coords", r}, {"text", root_str(d, r)}}; }

inline json real_root_to_json(const KacMoodyData& d, const RealRoot& r) {
    return {{"coords", r.root},
            {"text", root_str(d, r.root)},
            {"height", height(r.root)},
            {"coroot", r.coroot},
            {"witness", {{"word", word_to_json(d, r.word)}, {"index", d.labels[r.index]}}}};
}

inline json weyl_to_json(const KacMoodyData& d, const WeylElement& w) {
    return {{"word", word_to_json(d, w.word)}, {"length", w.length()}, {"action_on_Q", w.q}, {"action_on_Y", w.y}};
}

inline PiecewisePath path_from_json(const json& j) {
    std::vector<Rat> times;
    std::vector<RatVec> points;
    for (auto& t : j.at("breakpoints")) times.push_back(rat_from_json(t));
    for (auto& p : j.at("positions")) points.push_back(ratvec_from_json(p));
    return make_path(times, points);
}

inline json path_to_json(const PiecewisePath& p) {
    json t = json::array(), pos = json::array();
    for (auto& x : p.times) t.push_back(rat_to_json(x));
    for (auto& v : p.points) pos.push_back(ratvec_to_json(v));
    return {{"breakpoints", t}, {"positions", pos}};
}

inline json point_to_json(const TreePoint& p) {
    return {{"field", p.config().name()}, {"x", rat_to_json(p.x)}, {"tail", p.tail.expr()}};
}

inline TreePoint point_from_json(const json& j) {
    FieldConfig f = FieldConfig::parse(j.at("field").get<std::string>());
    return make_point(rat_from_json(j.at("x")), parse_expr(f, j.at("tail").get<std::string>()));
}

inline json interval_to_json(const Interval& i) {
    if (i.empty) return {{"empty", true}};
    return {{"empty", false},
            {"lo", i.lo ? json(rat_to_json(*i.lo)) : json("-inf")},
            {"hi", i.hi ? json(rat_to_json(*i.hi)) : json("+inf")}};
}

inline json series_to_json(const TruncSeries& s) {
    json c = json::array();
    for (auto& x : s.coeffs()) c.push_back(rat_to_json(x));
    return c;
}

inline TruncSeries series_from_json(BaseRing R, std::size_t N, const json& j) {
    RatVec c = ratvec_from_json(j);
    if (c.size() > N) throw DomainError("series has more than N coefficients");
    return TruncSeries(R, N, c);
}

// {"ring": "F2", "mod": N, "matrix": [[a, b], [c, d]]} with entries as
// coefficient lists c_0, c_1, ...
inline json series_matrix_to_json(const SeriesMatrix& m) {
    return {{"ring", m.ring().name()},
            {"mod", m.N()},
            {"matrix", {{series_to_json(m.a), series_to_json(m.b)}, {series_to_json(m.c), series_to_json(m.d)}}}};
}

inline SeriesMatrix series_matrix_from_json(const json& j) {
    BaseRing R = BaseRing::parse(j.at("ring").get<std::string>());
    std::size_t N = j.at("mod").get<std::size_t>();
    const json& m = j.at("matrix");
    return make_series_matrix(series_from_json(R, N, m.at(0).at(0)), series_from_json(R, N, m.at(0).at(1)),
                              series_from_json(R, N, m.at(1).at(0)), series_from_json(R, N, m.at(1).at(1)));
}

}  // namespace masure
