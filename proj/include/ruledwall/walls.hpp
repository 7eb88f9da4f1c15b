#pragma once

// Walls, chambers and Harder-Narasimhan types along the slice H_x = C0 + x f.
//
// A two-step split of (r, c1, c2) is a sub datum (r1, c1', c2') with
// quotient (r2, c1 - c1', c2'') fixed by the Whitney formula
//   c2 = c2' + c2'' + (c1' . c1'').
// With eta = r c1' - r1 c1 = r1 r2 xi (xi the slope difference), the wall is
// where (eta, H_x) = 0, i.e. x = e - eta_b / eta_a. Both graded pieces must
// have Delta >= 0, which forces
//   eta_a^2 (2x - e) <= 2 r^2 r1 r2 Delta,
// and there must be an integer c2' realising both inequalities.

#include "chern.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ruledwall {

enum class Side { below, above };

inline Side opposite(Side s) { return s == Side::below ? Side::above : Side::below; }
inline const char* to_string(Side s) { return s == Side::below ? "below" : "above"; }

/// Numerical two-step datum certifying a wall.
struct Witness {
    long r1 = 0;
    long r2 = 0;
    DivClass sub_c1;  ///< c1 of the subsheaf
    DivClass xi;      ///< mu(sub) - mu(quotient)
    Rational budget;  ///< r1 Delta1 + r2 Delta2 = r Delta + r1 r2/(2r) (xi^2)

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Wall {
    Rational x;
    std::vector<Witness> witnesses;
};

/// Open interval of slice parameters. An empty bound is infinite.
struct Chamber {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    bool contains(const Rational& x) const { return (!lo || *lo < x) && (!hi || x < *hi); }
    friend bool operator==(const Chamber&, const Chamber&) = default;
};

struct HNType {
    std::vector<ChernData> parts;

    std::size_t length() const { return parts.size(); }
    HNType reversed() const { return HNType{{parts.rbegin(), parts.rend()}}; }
    friend bool operator==(const HNType&, const HNType&) = default;
    friend auto operator<=>(const HNType& x, const HNType& y) { return x.parts <=> y.parts; }
};

inline DivClass whitney_quotient_c1(const ChernData& total, const DivClass& sub_c1) { return total.c1() - sub_c1; }

/// c2 of the quotient given the sub datum.
inline Integer whitney_quotient_c2(const SurfaceData& s, const ChernData& total, const DivClass& sub_c1,
                                   const Integer& sub_c2) {
    Rational cross = intersect(s, sub_c1, total.c1() - sub_c1);
    return total.c2() - sub_c2 - cross.get_num();
}

namespace detail {

// Smallest integer c2 of a rank-r datum with first class c1 and Delta >= 0.
inline Integer min_c2(const SurfaceData& s, long r, const DivClass& c1) {
    return ceil_of(Rational(r - 1) / (2 * Rational(r)) * square(s, c1));
}

// Range [lo, hi] of sub c2 values giving Delta >= 0 on both pieces; empty
// when lo > hi.
inline std::pair<Integer, Integer> sub_c2_range(const SurfaceData& s, const ChernData& total, long r1,
                                                const DivClass& sub_c1) {
    long r2 = total.r() - r1;
    DivClass quot_c1 = total.c1() - sub_c1;
    Integer lo = min_c2(s, r1, sub_c1);
    // c2'' = c2 - c2' - (c1'.c1'') >= min_c2(r2, c1'')
    Integer hi = total.c2() - intersect(s, sub_c1, quot_c1).get_num() - min_c2(s, r2, quot_c1);
    return {lo, hi};
}

// Lower edge of the enumeration: 2 x_min - e must be positive to bound eta_a.
inline Rational positive_margin(const SurfaceData& s, const Rational& x_min) {
    Rational m = 2 * x_min - s.e();
    if (m <= 0) throw Error("slice range must stay away from the ample boundary when e = 0");
    return m;
}

// Visits every admissible eta_a != 0 for the split r1 with
// eta_a^2 * margin <= 2 r^2 r1 r2 Delta, in increasing order.
template <class F>
void for_each_eta_a(const ChernData& c, long r1, const Rational& Delta, const Rational& margin, F&& visit) {
    long r = c.r();
    long r2 = r - r1;
    Rational cap = 2 * Rational(r * r) * r1 * r2 * Delta / margin;
    if (cap < 1) return;
    Integer bound = isqrt_floor(cap);
    Integer shift = r1 * c.c1().a.get_num();  // eta_a = r alpha - r1 c1_a
    Integer alpha_lo = ceil_of(make_rational(Integer(shift - bound), Integer(r)));
    Integer alpha_hi = floor_of(make_rational(Integer(shift + bound), Integer(r)));
    for (Integer alpha = alpha_lo; alpha <= alpha_hi; ++alpha) {
        Integer eta_a = r * alpha - shift;
        if (eta_a == 0) continue;
        visit(alpha, eta_a);
    }
}

}  // namespace detail

/// All walls of c with position in (max(x_lo, e), x_hi], ascending.
/// An empty x_hi means the whole ample slice; the set is finite either way.
inline std::vector<Wall> enumerate_walls(const SurfaceData& s, const ChernData& c, const Rational& x_lo,
                                         const std::optional<Rational>& x_hi = std::nullopt) {
    if (!s.is_ruled()) throw Error("walls are unsupported on an abstract surface");
    if (x_hi && *x_hi <= x_lo) throw Error("empty slice range");
    const long r = c.r();
    if (r < 2) return {};
    const Rational e = s.e();
    const Rational x_min = std::max(x_lo, e);
    if (x_hi && *x_hi <= x_min) return {};
    const Rational Delta = discriminant(s, c);
    if (Delta <= 0) return {};  // (xi^2) < 0 leaves no budget
    const Rational margin = detail::positive_margin(s, x_min);

    std::map<Rational, Wall> found;
    for (long r1 = 1; r1 < r; ++r1) {
        const long r2 = r - r1;
        const Integer shift_b = r1 * c.c1().b.get_num();
        detail::for_each_eta_a(c, r1, Delta, margin, [&](const Integer& alpha, const Integer& eta_a) {
            Integer abs_a = abs(eta_a);
            // x - e = k / |eta_a| with k > 0 integral, bounded by the budget.
            Rational x_max = e / 2 + Rational(r * r) * r1 * r2 * Delta / (eta_a * eta_a);
            if (x_hi && *x_hi < x_max) x_max = *x_hi;
            Integer k_lo = floor_of((x_min - e) * abs_a) + 1;
            Integer k_hi = floor_of((x_max - e) * abs_a);
            for (Integer k = k_lo; k <= k_hi; ++k) {
                Integer eta_b = eta_a > 0 ? Integer(-k) : k;
                Integer num_b = eta_b + shift_b;
                if (num_b % r != 0) continue;
                DivClass sub_c1(alpha, Integer(num_b / r));
                auto [lo, hi] = detail::sub_c2_range(s, c, r1, sub_c1);
                if (lo > hi) continue;
                Rational x = e + make_rational(k, abs_a);
                DivClass xi = DivClass(eta_a, eta_b) / Rational(r1 * r2);
                Rational budget = r * Delta + make_rational(r1 * r2, 2 * r) * square(s, xi);
                budget.canonicalize();
                auto& wall = found[x];
                wall.x = x;
                wall.witnesses.push_back(Witness{r1, r2, sub_c1, xi, budget});
            }
        });
    }

    std::vector<Wall> out;
    out.reserve(found.size());
    for (auto& [x, wall] : found) {
        std::sort(wall.witnesses.begin(), wall.witnesses.end(), [](const Witness& p, const Witness& q) {
            if (p.r1 != q.r1) return p.r1 < q.r1;
            return p.sub_c1 < q.sub_c1;
        });
        out.push_back(std::move(wall));
    }
    return out;
}

inline std::vector<Rational> wall_positions(const std::vector<Wall>& walls) {
    std::vector<Rational> out;
    for (const Wall& w : walls) out.push_back(w.x);
    return out;
}

/// Open intervals between consecutive walls, clipped to (max(x_lo, e), x_hi).
inline std::vector<Chamber> chambers(const SurfaceData& s, const ChernData& c, const Rational& x_lo,
                                     const std::optional<Rational>& x_hi = std::nullopt) {
    auto walls = enumerate_walls(s, c, x_lo, x_hi);
    std::vector<Chamber> out;
    std::optional<Rational> lo = std::max(x_lo, Rational(s.e()));
    for (const Wall& w : walls) {
        if (*lo < w.x) out.push_back(Chamber{lo, w.x});
        lo = w.x;
    }
    if (!x_hi || *lo < *x_hi) out.push_back(Chamber{lo, x_hi});
    return out;
}

/// True iff x is a wall position of c.
inline bool is_on_wall(const SurfaceData& s, const ChernData& c, const Rational& x) {
    if (!s.is_ruled()) throw Error("walls are unsupported on an abstract surface");
    if (c.r() < 2 || x <= s.e()) return false;
    Rational lo = (Rational(s.e()) + x) / 2;
    auto walls = enumerate_walls(s, c, lo, x);
    return !walls.empty() && walls.back().x == x;
}

namespace detail {

// Sign of (xi, H_x) just off the wall on the given side is sign(xi_a) for
// "above" and -sign(xi_a) for "below".
inline bool leads_on_side(const DivClass& xi, Side side) { return side == Side::above ? xi.a > 0 : xi.a < 0; }

class HNEnumerator {
public:
    HNEnumerator(const SurfaceData& s, const Rational& x_w, Side side) : s_(s), x_w_(x_w), side_(side) {}

    // Ordered sequences (s >= 1) of parts with Delta_i >= 0, all slopes on
    // the wall, strictly decreasing on the chosen side.
    const std::vector<std::vector<ChernData>>& sequences(const ChernData& c) {
        if (auto it = memo_.find(c); it != memo_.end()) return it->second;
        std::vector<std::vector<ChernData>> out;
        if (discriminant(s_, c) >= 0) out.push_back({c});
        for (const ChernData& sub : leading_subs(c)) {
            ChernData quot(c.r() - sub.r(), c.c1() - sub.c1(), whitney_quotient_c2(s_, c, sub.c1(), sub.c2()));
            DivClass mu_sub = slope(sub);
            for (const auto& rest : sequences(quot)) {
                if (!leads_on_side(mu_sub - slope(rest.front()), side_)) continue;
                std::vector<ChernData> seq;
                seq.reserve(rest.size() + 1);
                seq.push_back(sub);
                seq.insert(seq.end(), rest.begin(), rest.end());
                out.push_back(std::move(seq));
            }
        }
        return memo_.emplace(c, std::move(out)).first->second;
    }

private:
    // Subsheaf data F1 of c on the wall with Delta(F1), Delta(c/F1) >= 0 and
    // mu(F1) > mu(c/F1) on the chosen side.
    std::vector<ChernData> leading_subs(const ChernData& c) {
        std::vector<ChernData> out;
        const long r = c.r();
        if (r < 2) return out;
        const Rational e = s_.e();
        const Rational Delta = discriminant(s_, c);
        if (Delta <= 0) return out;
        const Rational margin = 2 * x_w_ - e;
        const Rational t = x_w_ - e;
        for (long r1 = 1; r1 < r; ++r1) {
            const Integer shift_b = r1 * c.c1().b.get_num();
            for_each_eta_a(c, r1, Delta, margin, [&](const Integer& alpha, const Integer& eta_a) {
                if (!(side_ == Side::above ? eta_a > 0 : eta_a < 0)) return;
                Rational eb = -eta_a * t;
                eb.canonicalize();
                if (!is_integral(eb)) return;
                Integer num_b = eb.get_num() + shift_b;
                if (num_b % r != 0) return;
                DivClass sub_c1(alpha, Integer(num_b / r));
                auto [lo, hi] = sub_c2_range(s_, c, r1, sub_c1);
                for (Integer c2 = lo; c2 <= hi; ++c2) out.emplace_back(r1, sub_c1, c2);
            });
        }
        return out;
    }

    const SurfaceData& s_;
    Rational x_w_;
    Side side_;
    std::map<ChernData, std::vector<std::vector<ChernData>>> memo_;
};

// Every prefix F_i and quotient E/F_i has Delta >= 0.
inline bool closed_under_truncation(const SurfaceData& s, const std::vector<ChernData>& parts) {
    std::vector<Gamma> gammas;
    for (const ChernData& p : parts) gammas.push_back(gamma_of(s, p));
    std::span<const Gamma> all(gammas);
    for (std::size_t i = 1; i < gammas.size(); ++i) {
        if (delta_of_filtration(s, all.first(i)).Delta < 0) return false;
        if (delta_of_filtration(s, all.subspan(i)).Delta < 0) return false;
    }
    return true;
}

inline void check_wall_matches(const SurfaceData& s, const ChernData& c, const Wall& w) {
    if (w.x <= s.e()) throw Error("wall/datum mismatch");
    for (const Witness& wit : w.witnesses) {
        bool ok = wit.r1 >= 1 && wit.r2 >= 1 && wit.r1 + wit.r2 == c.r() && wit.sub_c1.integral();
        if (ok) {
            DivClass xi = wit.sub_c1 / Rational(wit.r1) - (c.c1() - wit.sub_c1) / Rational(wit.r2);
            ok = xi == wit.xi && intersect(s, xi, slice_class(w.x)) == 0;
        }
        if (!ok) throw Error("wall/datum mismatch");
    }
}

}  // namespace detail

/// HN types (s >= 2) that appear at H_{x_w} and are destabilizing on the
/// given side, in lexicographic order of their part lists.
inline std::vector<HNType> hn_types_at(const SurfaceData& s, const ChernData& c, const Rational& x_w, Side side) {
    if (!s.is_ruled()) throw Error("walls are unsupported on an abstract surface");
    if (x_w <= s.e()) throw Error("wall/datum mismatch");
    detail::HNEnumerator hn(s, x_w, side);
    std::vector<HNType> out;
    for (const auto& seq : hn.sequences(c)) {
        if (seq.size() < 2) continue;
        if (!detail::closed_under_truncation(s, seq)) continue;
        out.push_back(HNType{seq});
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<HNType> hn_types_at(const SurfaceData& s, const ChernData& c, const Wall& w, Side side) {
    if (!s.is_ruled()) throw Error("walls are unsupported on an abstract surface");
    detail::check_wall_matches(s, c, w);
    return hn_types_at(s, c, w.x, side);
}

/// Total datum of an HN type (Whitney sum of its parts).
inline ChernData total_of(const SurfaceData& s, const HNType& t) {
    if (t.parts.empty()) throw Error("empty HN type");
    long r = 0;
    DivClass c1(0, 0);
    Integer c2 = 0;
    for (const ChernData& p : t.parts) {
        c2 += p.c2() + intersect(s, c1, p.c1()).get_num();
        r += p.r();
        c1 += p.c1();
    }
    return ChernData(r, c1, c2);
}

}  // namespace ruledwall
