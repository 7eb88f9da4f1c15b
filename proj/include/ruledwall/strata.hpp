#pragma once

// Codimension of Harder-Narasimhan strata,
//   d = - sum_{i<j} r_i r_j (P(mu_j - mu_i) - Delta_i - Delta_j),
// and the positivity bounds on the minus side of a wall.

#include "criteria.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ruledwall {

inline Rational codim(const SurfaceData& s, const HNType& t) {
    if (t.length() < 2) throw Error("codimension needs at least two parts");
    std::vector<Gamma> g;
    for (const ChernData& p : t.parts) g.push_back(gamma_of(s, p));
    Rational d = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            d -= Rational(g[i].r * g[j].r) * (hilbert_P(s, g[j].mu - g[i].mu) - g[i].Delta - g[j].Delta);
    d.canonicalize();
    return d;
}

/// Minimum codimension over the HN types on the given side; empty means +inf.
inline std::optional<Rational> min_codim_at(const SurfaceData& s, const ChernData& c, const Wall& w, Side side) {
    std::optional<Rational> best;
    for (const HNType& t : hn_types_at(s, c, w, side)) {
        Rational d = codim(s, t);
        if (!best || d < *best) best = d;
    }
    return best;
}

/// One pair i < j of a type, with r_i r_j (mu_j - mu_i) = a C0 - b f and
/// total = hodge + canonical + chi + delta.
struct PairTerm {
    std::size_t i = 0;
    std::size_t j = 0;
    Integer a;
    Integer b;
    Rational hodge;      ///< -r_i r_j (xi^2)/2
    Rational canonical;  ///< r_i r_j (xi, K/2) = b + (g - 1 + e/2) a
    Rational chi;        ///< -r_i r_j chi(O)
    Rational delta;      ///< r_i r_j (Delta_i + Delta_j)
    Rational total;
};

struct TypeReport {
    HNType type;
    Rational d;
    std::vector<PairTerm> pairs;
    bool integral = true;
    bool at_least_2 = false;
    bool at_least_3 = false;
    /// Every part satisfies the existence bound at the wall; d >= 3 is
    /// expected exactly in this case.
    bool parts_exist = false;
};

struct PositivityReport {
    Rational wall;
    std::vector<TypeReport> types;
    std::vector<std::string> warnings;

    bool all_at_least_2() const {
        for (const auto& t : types)
            if (!t.at_least_2) return false;
        return true;
    }
    bool all_expected_at_least_3() const {
        for (const auto& t : types)
            if (t.parts_exist && !t.at_least_3) return false;
        return true;
    }
};

inline TypeReport analyze_type(const SurfaceData& s, const HNType& t, const Rational& x_w) {
    TypeReport rep;
    rep.type = t;
    rep.d = codim(s, t);
    rep.integral = is_integral(rep.d);
    rep.at_least_2 = rep.d >= 2;
    rep.at_least_3 = rep.d >= 3;
    rep.parts_exist = true;
    for (const ChernData& p : t.parts) rep.parts_exist = rep.parts_exist && part_exists_at(s, p, x_w);

    DivClass halfK = s.K() / Rational(2);
    for (std::size_t i = 0; i < t.length(); ++i) {
        for (std::size_t j = i + 1; j < t.length(); ++j) {
            const ChernData& pi = t.parts[i];
            const ChernData& pj = t.parts[j];
            Rational rr = Rational(pi.r() * pj.r());
            DivClass xi = slope(pj) - slope(pi);
            DivClass scaled = pj.c1() * Rational(pi.r()) - pi.c1() * Rational(pj.r());
            PairTerm pt;
            pt.i = i;
            pt.j = j;
            pt.a = scaled.a.get_num();
            pt.b = -scaled.b.get_num();
            pt.hodge = -rr * square(s, xi) / 2;
            pt.canonical = rr * intersect(s, xi, halfK);
            pt.chi = -rr * s.chiO();
            pt.delta = rr * (discriminant(s, pi) + discriminant(s, pj));
            pt.total = pt.hodge + pt.canonical + pt.chi + pt.delta;
            for (Rational* q : {&pt.hodge, &pt.canonical, &pt.chi, &pt.delta, &pt.total}) q->canonicalize();
            rep.pairs.push_back(std::move(pt));
        }
    }
    return rep;
}

/// Positivity of the minus-side (below) strata at a wall.
inline PositivityReport check_positivity(const SurfaceData& s, const ChernData& c, const Wall& w) {
    if (!s.nonrational()) throw Error("positivity bounds not guaranteed");
    PositivityReport rep;
    rep.wall = w.x;
    for (const HNType& t : hn_types_at(s, c, w, Side::below)) {
        rep.types.push_back(analyze_type(s, t, w.x));
        if (!rep.types.back().integral)
            rep.warnings.push_back("non-integral codimension " + to_string(rep.types.back().d));
    }
    return rep;
}

}  // namespace ruledwall
