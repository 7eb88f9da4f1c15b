#pragma once

// Parameter sweep and random chamber tables shared by the wall-crossing
// tests and the acceptance binary.

#include <ruledwall/wallcross.hpp>

#include <random>
#include <set>
#include <vector>

namespace sweep {

using namespace ruledwall;

struct Instance {
    SurfaceData s;
    ChernData c;
};

// g in {1,2,3}, 2g-1 <= e <= 2g+2, 1 <= r <= 3, c1 in [-2,2]^2, 0 <= c2 <= 4.
inline std::vector<Instance> instances() {
    std::vector<Instance> out;
    for (long g = 1; g <= 3; ++g)
        for (long e = 2 * g - 1; e <= 2 * g + 2; ++e)
            for (long r = 1; r <= 3; ++r)
                for (long a = -2; a <= 2; ++a)
                    for (long b = -2; b <= 2; ++b)
                        for (long c2 = 0; c2 <= 4; ++c2)
                            out.push_back({SurfaceData::ruled(g, e), ChernData(r, DivClass(a, b), c2)});
    return out;
}

inline Poly random_poly(std::mt19937& rng, Var v, std::optional<long> cap) {
    Poly p(v, cap);
    p.add_term(0, 1);
    int n = rng() % 4;
    for (int i = 0; i < n; ++i) p.add_term(rng() % 12, static_cast<long>(rng() % 7) - 2);
    return p;
}

inline std::set<ChernData> parts_at(const std::vector<HNType>& types) {
    std::set<ChernData> out;
    for (const HNType& t : types)
        for (const ChernData& p : t.parts) out.insert(p);
    return out;
}

// Random values for c below the wall and for every part on both sides.
// With `same_parts`, each part gets one value used on both sides.
inline ChamberTable random_table(const SurfaceData& s, const ChernData& c, const Wall& w, std::mt19937& rng, Var v,
                                 std::optional<long> cap = std::nullopt, bool same_parts = false) {
    ChamberTable table(v, cap);
    Rational e = s.e();
    Chamber below{e, w.x};
    Chamber above{w.x, std::nullopt};
    table.insert(c, below, random_poly(rng, v, cap));
    for (const ChernData& p : parts_at(hn_types_at(s, c, w, Side::below))) {
        Poly lo = random_poly(rng, v, cap);
        table.insert(p, below, lo);
        table.insert(p, above, same_parts ? lo : random_poly(rng, v, cap));
    }
    return table;
}

// Both crossing directions need nonnegative integral exponents for every
// type and its reversal.
inline bool crossing_defined(const SurfaceData& s, const ChernData& c, const Wall& w) {
    for (const HNType& t : hn_types_at(s, c, w, Side::below))
        for (const Rational& d : {codim(s, t), codim(s, t.reversed())})
            if (d < 0 || !is_integral(d)) return false;
    return true;
}

// Copy of `table` with c's value above the wall set to `value`.
inline ChamberTable with_above(const ChamberTable& table, const ChernData& c, const Wall& w, const Poly& value) {
    ChamberTable out(table.var(), table.cap());
    for (const auto& [gamma, slots] : table.entries())
        for (const auto& [ch, poly] : slots) out.insert(gamma, ch, poly);
    out.insert(c, Chamber{w.x, std::nullopt}, value);
    return out;
}

}  // namespace sweep
