#pragma once

// Existence of semistable sheaves along H_x, the expected dimension of the
// moduli space and the structure of its Picard group, all for a non-rational
// ruled surface (g >= 1, e > 2g - 2) and fibre degree 0 < (c1.f) < r.

#include "walls.hpp"

#include <string>
#include <vector>

namespace ruledwall {

inline void require_nonrational(const SurfaceData& s) {
    if (!s.nonrational()) throw Error("requires a non-rational ruled surface with e > 2g-2");
}

/// Fibre degree (c1.f) reduced into [0, r).
inline long fibre_degree_mod(const ChernData& c) {
    long r = c.r();
    long a = to_long(c.c1().a.get_num());
    return ((a % r) + r) % r;
}

struct FibreSplit {
    long r1;
    long r2;
};

inline FibreSplit fibre_split(const ChernData& c) {
    long r1 = fibre_degree_mod(c);
    if (r1 == 0) throw Error("fiber-degree divisible case out of scope");
    return {r1, c.r() - r1};
}

/// x0 = e/2 + r^2/(r1 r2) Delta: semistable sheaves exist along H_x iff x <= x0.
inline Rational existence_bound_x0(const SurfaceData& s, const ChernData& c) {
    require_nonrational(s);
    auto [r1, r2] = fibre_split(c);
    Rational r = c.r();
    Rational x0 = Rational(s.e()) / 2 + r * r / (r1 * r2) * discriminant(s, c);
    x0.canonicalize();
    return x0;
}

inline bool exists_semistable(const SurfaceData& s, const ChernData& c, const Rational& x) {
    Rational x0 = existence_bound_x0(s, c);
    if (!ample_slice_contains(s, x)) throw Error("polarization is not ample");
    return x <= x0;
}

/// 2 r^2 Delta - r^2 (1 - g) + 1.
inline Rational moduli_dim(const SurfaceData& s, const ChernData& c) {
    s.require_ruled("moduli dimension");
    Rational r2 = Rational(c.r() * c.r());
    Rational d = 2 * r2 * discriminant(s, c) - r2 * (1 - s.g()) + 1;
    d.canonicalize();
    return d;
}

/// E -> E (x) O(L).
inline ChernData twist(const SurfaceData& s, const ChernData& c, const DivClass& L) {
    Rational r = c.r();
    Rational c2 = Rational(c.c2()) + (r - 1) * intersect(s, c.c1(), L) + r * (r - 1) / 2 * square(s, L);
    c2.canonicalize();
    return ChernData(c.r(), c.c1() + L * r, c2.get_num());
}

/// E -> E^dual (c2 unchanged numerically).
inline ChernData dual(const ChernData& c) { return ChernData(c.r(), -c.c1(), c.c2()); }

struct Normalization {
    ChernData datum;
    long first_twist = 0;   ///< multiple of C0 applied first
    bool dualized = false;
    long second_twist = 0;  ///< multiple of C0 applied after dualizing
    std::string note;
};

/// Brings c to 0 < (c1.f) <= r/2 by twisting with multiples of C0 and, if
/// needed, dualizing. Neither operation changes walls or Picard groups.
inline Normalization normalize_fibre_degree(const SurfaceData& s, const ChernData& c) {
    s.require_ruled("normalization");
    Normalization n{c, 0, false, 0, {}};
    long r = c.r();
    long a = to_long(c.c1().a.get_num());
    long k = -static_cast<long>(floor_of(make_rational(a, r)).get_si());
    if (k != 0) n.datum = twist(s, n.datum, DivClass(k, 0));
    long a1 = a + k * r;
    if (a1 == 0) throw Error("fiber-degree divisible case out of scope");
    if (2 * a1 > r) {
        n.dualized = true;
        n.datum = twist(s, dual(n.datum), DivClass(1, 0));
        n.second_twist = 1;
    }
    n.first_twist = k;
    std::vector<std::string> steps;
    if (k != 0) steps.push_back("twist by " + std::to_string(k) + "*C0");
    if (n.dualized) steps.push_back("dualize");
    if (n.second_twist != 0) steps.push_back("twist by C0");
    if (steps.empty()) {
        n.note = "none";
    } else {
        for (std::size_t i = 0; i < steps.size(); ++i) n.note += (i ? ", then " : "") + steps[i];
    }
    return n;
}

struct PicardDescription {
    ChernData normalized;
    std::string normalization_note;
    long r1 = 0;
    long r2 = 0;
    Integer d;   ///< f-coefficient of the normalized c1
    Integer d1;  ///< base is Pic(J^{d1} x J^{d2})
    Integer d2;
    Rational x0;
    Rational x1;
    long free_rank_min = 0;  ///< free part Z^a with a in [min, max]
    long free_rank_max = 0;
    bool kappa_generated = false;
    bool off_wall_stable_exists = false;
    bool locally_factorial = false;

    bool free_rank_determined() const { return free_rank_min == free_rank_max; }
};

/// x1 = e/2 + r^2/(r1 r2) (Delta - 1/r).
inline Rational picard_threshold_x1(const SurfaceData& s, const ChernData& c) {
    require_nonrational(s);
    auto [r1, r2] = fibre_split(c);
    Rational r = c.r();
    Rational x1 = Rational(s.e()) / 2 + r * r / (r1 * r2) * (discriminant(s, c) - 1 / r);
    x1.canonicalize();
    return x1;
}

inline PicardDescription picard_structure(const SurfaceData& s, const ChernData& c, const Rational& x) {
    require_nonrational(s);
    if (!ample_slice_contains(s, x)) throw Error("polarization is not ample");
    if (fibre_degree_mod(c) == 0) throw Error("fiber-degree divisible case out of scope");
    if (is_on_wall(s, c, x)) throw Error("on-wall: theorem hypothesis violated");

    PicardDescription p;
    Normalization n = normalize_fibre_degree(s, c);
    p.normalized = n.datum;
    p.normalization_note = n.note;
    const ChernData& nc = n.datum;
    p.r1 = to_long(nc.c1().a.get_num());
    p.r2 = nc.r() - p.r1;
    p.d = nc.c1().b.get_num();
    p.d1 = p.r1 * p.d + (p.r1 * p.r1 - p.r1) / 2 * s.e() - nc.c2();
    p.d2 = p.d - p.d1;
    p.x0 = existence_bound_x0(s, nc);
    p.x1 = picard_threshold_x1(s, nc);

    if (x == p.x0 || x == p.x1) throw Error("threshold value: x equals x0 or x1");
    if (x > p.x0) throw Error("moduli empty at x");

    if (s.g() >= 2) {
        long a = (p.r1 == 1 && p.x1 < x) ? 2 : 3;
        p.free_rank_min = p.free_rank_max = a;
        p.kappa_generated = true;
    } else {
        p.free_rank_min = 1;
        p.free_rank_max = 3;
    }
    p.off_wall_stable_exists = true;
    p.locally_factorial = true;
    return p;
}

/// Whether a semistable sheaf of type `part` can exist just off H_{x_w}.
/// Parts with divisible fibre degree (including all rank-1 parts) are taken
/// to exist; the others must satisfy x_w <= x0(part).
inline bool part_exists_at(const SurfaceData& s, const ChernData& part, const Rational& x_w) {
    require_nonrational(s);
    if (fibre_degree_mod(part) == 0) return true;
    return x_w <= existence_bound_x0(s, part);
}

}  // namespace ruledwall
