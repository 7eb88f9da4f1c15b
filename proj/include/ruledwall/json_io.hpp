#pragma once

// JSON encodings. Rationals are strings "p/q" in lowest terms; integers in
// Chern data are plain JSON numbers. Object keys come out sorted, so dumps
// are byte-deterministic.

#include "fixtures.hpp"
#include "wallcross.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ruledwall::io {

using json = nlohmann::json;

inline Rational rational_from(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw Error("expected a rational as \"p/q\" or an integer");
}

inline Integer integer_from(const json& j) {
    Rational q = rational_from(j);
    if (!is_integral(q)) throw Error("expected an integer, got " + to_string(q));
    return q.get_num();
}

inline long small_from(const json& j, const char* what) {
    if (!j.is_number_integer()) throw Error(std::string("expected an integer for ") + what);
    return j.get<long>();
}

inline json to_json(const Rational& q) { return to_string(q); }

inline json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

inline json to_json(const DivClass& d) { return json::array({to_json(d.a), to_json(d.b)}); }

inline DivClass divclass_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("expected a class as [a, b]");
    return DivClass(rational_from(j[0]), rational_from(j[1]));
}

inline const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw Error(std::string("missing field '") + name + "'");
    return j.at(name);
}

inline SurfaceData surface_from(const json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "ruled") return SurfaceData::ruled(small_from(field(j, "g"), "g"), small_from(field(j, "e"), "e"));
    if (kind == "abstract") {
        const json& m = field(j, "gram");
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 || !m[1].is_array() ||
            m[1].size() != 2)
            throw Error("gram must be a 2x2 matrix");
        SurfaceData::Gram gram{{{integer_from(m[0][0]), integer_from(m[0][1])},
                                {integer_from(m[1][0]), integer_from(m[1][1])}}};
        return SurfaceData::abstract(gram, divclass_from(field(j, "K")), integer_from(field(j, "chiO")));
    }
    throw Error("unknown surface kind '" + kind + "'");
}

inline json to_json(const SurfaceData& s) {
    const auto& m = s.gram();
    json out = {
        {"kind", s.is_ruled() ? "ruled" : "abstract"},
        {"gram", json::array({json::array({integer_json(m[0][0]), integer_json(m[0][1])}),
                              json::array({integer_json(m[1][0]), integer_json(m[1][1])})})},
        {"K", to_json(s.K())},
        {"chiO", integer_json(s.chiO())},
        {"nonrational", s.nonrational()},
    };
    if (s.is_ruled()) {
        out["g"] = s.g();
        out["e"] = s.e();
    }
    return out;
}

inline ChernData chern_from(const json& j) {
    const json& c1 = field(j, "c1");
    if (!c1.is_array() || c1.size() != 2) throw Error("c1 must be [a, b]");
    return ChernData(small_from(field(j, "r"), "r"), DivClass(integer_from(c1[0]), integer_from(c1[1])),
                     integer_from(field(j, "c2")));
}

inline json to_json(const ChernData& c) {
    return {{"r", c.r()},
            {"c1", json::array({integer_json(c.c1().a.get_num()), integer_json(c.c1().b.get_num())})},
            {"c2", integer_json(c.c2())}};
}

inline json to_json(const Gamma& g) { return {{"r", g.r}, {"mu", to_json(g.mu)}, {"Delta", to_json(g.Delta)}}; }

inline Gamma gamma_from(const json& j) {
    return Gamma{small_from(field(j, "r"), "r"), divclass_from(field(j, "mu")), rational_from(field(j, "Delta"))};
}

/// Either Chern form {"r","c1","c2"} or slope form {"r","mu","Delta"}.
inline ChernData datum_from(const SurfaceData& s, const json& j) {
    if (j.is_object() && j.contains("mu")) return chern_of(s, gamma_from(j));
    return chern_from(j);
}

inline json to_json(const Witness& w) {
    return {{"r1", w.r1}, {"r2", w.r2}, {"sub_c1", to_json(w.sub_c1)}, {"xi", to_json(w.xi)}, {"budget", to_json(w.budget)}};
}

inline json to_json(const Wall& w) {
    json wit = json::array();
    for (const Witness& x : w.witnesses) wit.push_back(to_json(x));
    return {{"x", to_json(w.x)}, {"witnesses", wit}};
}

inline json bound_json(const std::optional<Rational>& b, const char* inf) { return b ? to_json(*b) : json(inf); }

inline json to_json(const Chamber& c) { return json::array({bound_json(c.lo, "-inf"), bound_json(c.hi, "inf")}); }

inline std::optional<Rational> bound_from(const json& j) {
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "inf" || s == "-inf" || s == "+inf") return std::nullopt;
    }
    return rational_from(j);
}

inline Chamber chamber_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("chamber must be [lo, hi]");
    return Chamber{bound_from(j[0]), bound_from(j[1])};
}

inline json to_json(const HNType& t) {
    json out = json::array();
    for (const ChernData& p : t.parts) out.push_back(to_json(p));
    return out;
}

/// Array of parts, or {"parts": [...]}.
inline HNType hntype_from(const SurfaceData& s, const json& j) {
    const json& arr = j.is_object() ? field(j, "parts") : j;
    if (!arr.is_array()) throw Error("HN type must be an array of parts");
    HNType t;
    for (const json& p : arr) t.parts.push_back(datum_from(s, p));
    return t;
}

inline json to_json(const Poly& p) {
    json out = json::object();
    for (const auto& [k, c] : p.terms()) out[std::to_string(k)] = to_json(c);
    return out;
}

inline Poly poly_from(const json& j, Var var, std::optional<long> cap) {
    if (!j.is_object()) throw Error("polynomial must be an object {exponent: coefficient}");
    Poly p(var, cap);
    for (const auto& [k, v] : j.items()) {
        long exp = 0;
        try {
            std::size_t used = 0;
            exp = std::stol(k, &used);
            if (used != k.size()) throw std::invalid_argument(k);
        } catch (const std::exception&) {
            throw Error("malformed exponent '" + k + "'");
        }
        p.add_term(exp, rational_from(v));
    }
    return p;
}

/// [{"gamma": datum, "chamber": [lo, hi], "poly": {...}}, ...]
inline ChamberTable table_from(const SurfaceData& s, const json& j, Var var, std::optional<long> cap) {
    if (!j.is_array()) throw Error("chamber table must be an array");
    ChamberTable table(var, cap);
    for (const json& row : j)
        table.insert(datum_from(s, field(row, "gamma")), chamber_from(field(row, "chamber")),
                     poly_from(field(row, "poly"), var, cap));
    return table;
}

inline json to_json(const ChamberTable& t) {
    json out = json::array();
    for (const auto& [gamma, slots] : t.entries())
        for (const auto& [ch, poly] : slots)
            out.push_back({{"gamma", to_json(gamma)}, {"chamber", to_json(ch)}, {"poly", to_json(poly)}});
    return out;
}

inline json to_json(const PairTerm& p) {
    return {{"i", p.i},
            {"j", p.j},
            {"a", integer_json(p.a)},
            {"b", integer_json(p.b)},
            {"hodge", to_json(p.hodge)},
            {"canonical", to_json(p.canonical)},
            {"chi", to_json(p.chi)},
            {"delta", to_json(p.delta)},
            {"total", to_json(p.total)}};
}

inline json to_json(const TypeReport& t) {
    json pairs = json::array();
    for (const auto& p : t.pairs) pairs.push_back(to_json(p));
    return {{"type", to_json(t.type)},     {"d", to_json(t.d)},           {"pairs", pairs},
            {"integral", t.integral},     {"d_ge_2", t.at_least_2},      {"d_ge_3", t.at_least_3},
            {"parts_exist", t.parts_exist}};
}

inline json to_json(const PositivityReport& r) {
    json types = json::array();
    for (const auto& t : r.types) types.push_back(to_json(t));
    return {{"wall", to_json(r.wall)}, {"types", types}, {"warnings", r.warnings}};
}

inline json to_json(const PicardDescription& p) {
    json rank = p.free_rank_determined() ? json(p.free_rank_min)
                                         : json(std::to_string(p.free_rank_min) + ".." + std::to_string(p.free_rank_max));
    return {{"normalized", to_json(p.normalized)},
            {"normalization", p.normalization_note},
            {"r1", p.r1},
            {"r2", p.r2},
            {"d", integer_json(p.d)},
            {"d1", integer_json(p.d1)},
            {"d2", integer_json(p.d2)},
            {"x0", to_json(p.x0)},
            {"x1", to_json(p.x1)},
            {"base", json::array({integer_json(p.d1), integer_json(p.d2)})},
            {"free_rank", rank},
            {"kappa_generated", p.kappa_generated},
            {"off_wall_stable_exists", p.off_wall_stable_exists},
            {"locally_factorial", p.locally_factorial}};
}

inline json to_json(const FixtureCheck& f) {
    return {{"label", f.label},
            {"degree", f.degree},
            {"expdim", f.expected_dimension},
            {"euler", to_json(f.euler)},
            {"palindromic", f.palindromic},
            {"degree_matches", f.degree_matches},
            {"positive", f.positive},
            {"passed", f.passed()}};
}

}  // namespace ruledwall::io
