#pragma once

// Numerical intersection theory on a ruled surface X -> C.
//
// Classes live in the basis (C0, f): C0 is the minimal section with
// (C0^2) = -e and f is a fibre. The polarizations considered are the
// slice H_x = C0 + x f, which is ample exactly when x > e.
//
// An abstract mode (arbitrary symmetric Gram matrix, K and chi(O) given as
// inputs) supports only the intersection calculus; walls and ampleness
// need the ruled structure.

#include "rational.hpp"

#include <array>
#include <compare>
#include <string>

namespace ruledwall {

/// Rational divisor class a*C0 + b*f.
struct DivClass {
    Rational a;
    Rational b;

    DivClass() = default;
    DivClass(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

    static DivClass c0() { return {1, 0}; }
    static DivClass fibre() { return {0, 1}; }

    bool integral() const { return is_integral(a) && is_integral(b); }
    bool is_zero() const { return a == 0 && b == 0; }

    DivClass& operator+=(const DivClass& o) { a += o.a; b += o.b; return *this; }
    DivClass& operator-=(const DivClass& o) { a -= o.a; b -= o.b; return *this; }
    DivClass& operator*=(const Rational& s) { a *= s; b *= s; return *this; }
    DivClass& operator/=(const Rational& s) {
        if (s == 0) throw Error("division of a class by zero");
        a /= s; b /= s;
        return *this;
    }

    friend DivClass operator+(DivClass x, const DivClass& y) { return x += y; }
    friend DivClass operator-(DivClass x, const DivClass& y) { return x -= y; }
    friend DivClass operator-(DivClass x) { x.a = -x.a; x.b = -x.b; return x; }
    friend DivClass operator*(const Rational& s, DivClass x) { return x *= s; }
    friend DivClass operator*(DivClass x, const Rational& s) { return x *= s; }
    friend DivClass operator/(DivClass x, const Rational& s) { return x /= s; }

    friend bool operator==(const DivClass& x, const DivClass& y) { return x.a == y.a && x.b == y.b; }
    friend std::strong_ordering operator<=>(const DivClass& x, const DivClass& y) {
        if (int c = cmp(x.a, y.a)) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (int c = cmp(x.b, y.b)) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

inline std::string to_string(const DivClass& d) {
    return "(" + to_string(d.a) + "," + to_string(d.b) + ")";
}

enum class SurfaceKind { ruled, abstract };

class SurfaceData {
public:
    using Gram = std::array<std::array<Integer, 2>, 2>;

    /// Ruled surface over a genus-g curve with (C0^2) = -e.
    static SurfaceData ruled(long g, long e) {
        if (g < 0) throw Error("genus must be nonnegative");
        if (e < 0) throw Error("invariant e must be nonnegative");
        SurfaceData s;
        s.kind_ = SurfaceKind::ruled;
        s.g_ = g;
        s.e_ = e;
        s.gram_ = {{{Integer(-e), Integer(1)}, {Integer(1), Integer(0)}}};
        s.K_ = DivClass(-2, 2 * g - 2 - e);
        s.chiO_ = 1 - g;
        return s;
    }

    /// Rank-2 lattice with user-supplied intersection form, K and chi(O).
    static SurfaceData abstract(Gram gram, DivClass K, Integer chiO) {
        if (gram[0][1] != gram[1][0]) throw Error("gram matrix must be symmetric");
        SurfaceData s;
        s.kind_ = SurfaceKind::abstract;
        s.gram_ = std::move(gram);
        s.K_ = std::move(K);
        s.chiO_ = std::move(chiO);
        return s;
    }

    SurfaceKind kind() const { return kind_; }
    bool is_ruled() const { return kind_ == SurfaceKind::ruled; }
    long g() const { require_ruled("genus"); return g_; }
    long e() const { require_ruled("invariant e"); return e_; }
    const Gram& gram() const { return gram_; }
    const DivClass& K() const { return K_; }
    const Integer& chiO() const { return chiO_; }

    /// Non-rational ruled surface with e > 2g - 2 (the setting of the
    /// positivity, existence and Picard results).
    bool nonrational() const { return is_ruled() && g_ >= 1 && e_ > 2 * g_ - 2; }

    void require_ruled(const char* what) const {
        if (kind_ != SurfaceKind::ruled)
            throw Error(std::string(what) + " is undefined on an abstract surface");
    }

private:
    SurfaceKind kind_ = SurfaceKind::ruled;
    long g_ = 0;
    long e_ = 0;
    Gram gram_{};
    DivClass K_;
    Integer chiO_ = 1;
};

/// D1^T * gram * D2.
inline Rational intersect(const SurfaceData& s, const DivClass& d1, const DivClass& d2) {
    const auto& m = s.gram();
    Rational out = d1.a * (m[0][0] * d2.a + m[0][1] * d2.b) + d1.b * (m[1][0] * d2.a + m[1][1] * d2.b);
    out.canonicalize();
    return out;
}

inline Rational square(const SurfaceData& s, const DivClass& d) { return intersect(s, d, d); }

inline DivClass canonical_class(const SurfaceData& s) {
    if (!s.is_ruled()) throw Error("K is a stored input, not derived");
    return s.K();
}

/// P(x) = (x, x - K)/2 + chi(O).
inline Rational hilbert_P(const SurfaceData& s, const DivClass& x) {
    return intersect(s, x, x - s.K()) / 2 + s.chiO();
}

/// The slice polarization C0 + x f.
inline DivClass slice_class(const Rational& x) { return DivClass(1, x); }

inline bool ample_slice_contains(const SurfaceData& s, const Rational& x) {
    if (!s.is_ruled()) throw Error("ampleness is unsupported on an abstract surface");
    return x > s.e();
}

}  // namespace ruledwall
