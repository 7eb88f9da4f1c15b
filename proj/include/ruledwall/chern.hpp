#pragma once

// Integral Chern data (r, c1, c2) and the slope/discriminant view
// (r, mu, Delta) with mu = c1/r and
//   Delta = (1/r) (c2 - (r-1)/(2r) c1^2).
// ChernData is the canonical representation; Gamma is derived from it.

#include "surface.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace ruledwall {

class ChernData {
public:
    ChernData() = default;
    ChernData(long r, DivClass c1, Integer c2) : r_(r), c1_(std::move(c1)), c2_(std::move(c2)) {
        if (r_ < 1) throw Error("rank must be positive");
        if (!c1_.integral()) throw Error("c1 must be integral");
    }

    long r() const { return r_; }
    const DivClass& c1() const { return c1_; }
    const Integer& c2() const { return c2_; }

    friend bool operator==(const ChernData&, const ChernData&) = default;
    friend std::strong_ordering operator<=>(const ChernData& x, const ChernData& y) {
        if (auto c = x.r_ <=> y.r_; c != 0) return c;
        if (auto c = x.c1_ <=> y.c1_; c != 0) return c;
        int c = cmp(x.c2_, y.c2_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    long r_ = 1;
    DivClass c1_{0, 0};
    Integer c2_ = 0;
};

/// Stable text key, e.g. "2;1,0;1".
inline std::string key_of(const ChernData& c) {
    return std::to_string(c.r()) + ";" + c.c1().a.get_num().get_str() + "," + c.c1().b.get_num().get_str() + ";" +
           c.c2().get_str();
}

struct Gamma {
    long r = 1;
    DivClass mu;
    Rational Delta;

    friend bool operator==(const Gamma&, const Gamma&) = default;
};

inline Rational discriminant(const SurfaceData& s, const ChernData& c) {
    Rational r = c.r();
    return (Rational(c.c2()) - (r - 1) / (2 * r) * square(s, c.c1())) / r;
}

inline Gamma gamma_of(const SurfaceData& s, const ChernData& c) {
    return Gamma{c.r(), c.c1() / Rational(c.r()), discriminant(s, c)};
}

inline DivClass slope(const ChernData& c) { return c.c1() / Rational(c.r()); }

inline ChernData chern_of(const SurfaceData& s, const Gamma& gamma) {
    if (gamma.r < 1) throw Error("unrealizable gamma");
    Rational r = gamma.r;
    DivClass c1 = gamma.mu * r;
    Rational c2 = r * gamma.Delta + (r - 1) / (2 * r) * square(s, c1);
    c2.canonicalize();
    if (!c1.integral() || !is_integral(c2)) throw Error("unrealizable gamma");
    return ChernData(gamma.r, c1, c2.get_num());
}

/// Gamma of E in 0 -> F1 -> E -> F2 -> 0.
inline Gamma delta_of_extension(const SurfaceData& s, const Gamma& g1, const Gamma& g2) {
    long r = g1.r + g2.r;
    Rational rr = r;
    DivClass mu = (g1.mu * Rational(g1.r) + g2.mu * Rational(g2.r)) / rr;
    Rational weight = Rational(g1.r * g2.r) / (2 * rr * rr);
    Rational Delta = Rational(g1.r) / rr * g1.Delta + Rational(g2.r) / rr * g2.Delta - weight * square(s, g1.mu - g2.mu);
    Delta.canonicalize();
    return Gamma{r, mu, Delta};
}

/// Gamma of E carrying a filtration whose graded pieces are `parts`,
/// listed from the first subsheaf upward.
inline Gamma delta_of_filtration(const SurfaceData& s, std::span<const Gamma> parts) {
    if (parts.empty()) throw Error("filtration must have at least one part");
    Gamma acc = parts.front();
    for (const Gamma& p : parts.subspan(1)) acc = delta_of_extension(s, acc, p);
    return acc;
}

/// Closed form of the iterated extension:
///   Delta = sum r_i/r Delta_i
///         - sum_{i>=2} rk F_{i-1} rk F_i / (2 r_i r) ((mu(F_{i-1}) - mu(F_i))^2)
/// with F_i the partial sums.
inline Rational filtration_discriminant(const SurfaceData& s, std::span<const Gamma> parts) {
    if (parts.empty()) throw Error("filtration must have at least one part");
    long total = 0;
    for (const Gamma& p : parts) total += p.r;
    Rational r = total;
    Rational out = 0;
    for (const Gamma& p : parts) out += Rational(p.r) / r * p.Delta;
    long rank_prev = parts[0].r;
    DivClass c1_prev = parts[0].mu * Rational(parts[0].r);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        long rank_cur = rank_prev + parts[i].r;
        DivClass c1_cur = c1_prev + parts[i].mu * Rational(parts[i].r);
        DivClass dmu = c1_prev / Rational(rank_prev) - c1_cur / Rational(rank_cur);
        out -= Rational(rank_prev * rank_cur) / (2 * Rational(parts[i].r) * r) * square(s, dmu);
        rank_prev = rank_cur;
        c1_prev = c1_cur;
    }
    out.canonicalize();
    return out;
}

}  // namespace ruledwall
