#pragma once

// Wall-crossing recursion over externally supplied base values.
//
// Gluing at a wall H:
//   P(M_H) = P(M_C) + sum_{types} z^{2 d(g1..gs)} prod_i P(M_C^{gi})
// Crossing from chamber C to the opposite chamber C':
//   P(M_C') = P(M_C) + sum_{types of C} { z^{2 d(g1..gs)} prod P(M_C^{gi})
//                                        - z^{2 d(gs..g1)} prod P(M_C'^{gi}) }
// Finite-field masses use q^{d} with the two exponents exchanged.

#include "poly.hpp"
#include "strata.hpp"

#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace ruledwall {

/// Base values keyed by (datum, chamber). Chambers of one datum must not
/// overlap; every stored polynomial shares the table's variable and cap.
class ChamberTable {
public:
    explicit ChamberTable(Var var = Var::z, std::optional<long> cap = std::nullopt) : var_(var), cap_(cap) {}

    Var var() const { return var_; }
    std::optional<long> cap() const { return cap_; }

    void insert(const ChernData& gamma, const Chamber& chamber, const Poly& value) {
        if (value.var() != var_) throw Error("polynomial variable mismatch");
        if (chamber.lo && chamber.hi && !(*chamber.lo < *chamber.hi)) throw Error("empty chamber");
        auto& slots = entries_[gamma];
        for (const auto& [other, _] : slots) {
            bool disjoint = (other.hi && chamber.lo && *other.hi <= *chamber.lo) ||
                            (chamber.hi && other.lo && *chamber.hi <= *other.lo);
            if (!disjoint) throw Error("overlapping chambers for " + key_of(gamma));
        }
        slots.emplace_back(chamber, value.with_cap(cap_));
    }

    /// Value in the chamber adjacent to x on the given side.
    const Poly& at(const ChernData& gamma, const Rational& x, Side side) const {
        if (auto it = entries_.find(gamma); it != entries_.end()) {
            for (const auto& [ch, poly] : it->second) {
                bool ok = side == Side::below ? ((!ch.lo || *ch.lo < x) && (!ch.hi || x <= *ch.hi))
                                              : ((!ch.lo || *ch.lo <= x) && (!ch.hi || x < *ch.hi));
                if (ok) return poly;
            }
        }
        throw Error("missing base value (" + key_of(gamma) + ", chamber " + to_string(side) + " x=" + to_string(x) +
                    ")");
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& [_, v] : entries_) n += v.size();
        return n;
    }

    const std::map<ChernData, std::vector<std::pair<Chamber, Poly>>>& entries() const { return entries_; }

private:
    Var var_;
    std::optional<long> cap_;
    std::map<ChernData, std::vector<std::pair<Chamber, Poly>>> entries_;
};

using PartValues = std::function<Poly(const ChernData&)>;

/// Exponent from a codimension; must be a nonnegative integer.
inline long stratum_exponent(const Rational& d, long scale) {
    Rational k = d * scale;
    k.canonicalize();
    if (!is_integral(k) || k < 0)
        throw Error("stratum exponent " + to_string(k) + " is not a nonnegative integer (unrealizable HN type)");
    return to_long(k.get_num());
}

inline Poly product_over(const HNType& t, const PartValues& values, const Poly& unit) {
    Poly acc = unit;
    for (const ChernData& p : t.parts) acc = acc * values(p);
    return acc;
}

inline Poly glue_over(const SurfaceData& s, const Poly& base, std::span<const HNType> types, const PartValues& values) {
    Poly unit = Poly::constant(1, base.var(), base.cap());
    Poly out = base;
    long scale = base.var() == Var::z ? 2 : 1;
    for (const HNType& t : types) out += product_over(t, values, unit).shifted(stratum_exponent(codim(s, t), scale));
    return out;
}

inline Poly cross_over(const SurfaceData& s, const Poly& base, std::span<const HNType> types, const PartValues& from,
                       const PartValues& to) {
    if (base.var() != Var::z) throw Error("poincare crossing needs a z-tagged table");
    Poly unit = Poly::constant(1, base.var(), base.cap());
    Poly out = base;
    for (const HNType& t : types) {
        out += product_over(t, from, unit).shifted(stratum_exponent(codim(s, t), 2));
        out -= product_over(t, to, unit).shifted(stratum_exponent(codim(s, t.reversed()), 2));
    }
    return out;
}

inline Poly mass_cross_over(const SurfaceData& s, const Poly& base, std::span<const HNType> types,
                            const PartValues& from, const PartValues& to) {
    if (base.var() != Var::q) throw Error("mass crossing needs a q-tagged table");
    Poly unit = Poly::constant(1, base.var(), base.cap());
    Poly out = base;
    for (const HNType& t : types) {
        out += product_over(t, from, unit).shifted(stratum_exponent(codim(s, t.reversed()), 1));
        out -= product_over(t, to, unit).shifted(stratum_exponent(codim(s, t), 1));
    }
    return out;
}

namespace detail {
inline PartValues table_values(const ChamberTable& table, const Rational& x, Side side) {
    return [&table, x, side](const ChernData& g) { return table.at(g, x, side); };
}
}  // namespace detail

/// Value at the wall itself, glued from the chamber on `side`.
inline Poly poincare_glue(const SurfaceData& s, const ChernData& c, const Wall& w, Side side, const ChamberTable& table) {
    if (table.var() != Var::z) throw Error("poincare gluing needs a z-tagged table");
    auto types = hn_types_at(s, c, w, side);
    return glue_over(s, table.at(c, w.x, side), types, detail::table_values(table, w.x, side));
}

/// Value in the chamber opposite to `from` (default: cross upward).
inline Poly poincare_cross(const SurfaceData& s, const ChernData& c, const Wall& w, const ChamberTable& table,
                           Side from = Side::below) {
    if (table.var() != Var::z) throw Error("poincare crossing needs a z-tagged table");
    auto types = hn_types_at(s, c, w, from);
    return cross_over(s, table.at(c, w.x, from), types, detail::table_values(table, w.x, from),
                      detail::table_values(table, w.x, opposite(from)));
}

inline Poly mass_cross(const SurfaceData& s, const ChernData& c, const Wall& w, const ChamberTable& table,
                       Side from = Side::below) {
    if (table.var() != Var::q) throw Error("mass crossing needs a q-tagged table");
    auto types = hn_types_at(s, c, w, from);
    return mass_cross_over(s, table.at(c, w.x, from), types, detail::table_values(table, w.x, from),
                           detail::table_values(table, w.x, opposite(from)));
}

}  // namespace ruledwall
