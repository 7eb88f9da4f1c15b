#pragma once

// Published Betti polynomials of rank-3 moduli on the projective plane,
// used as reference data for the polynomial checks. The coefficient lists
// are stored verbatim (index = power of z) and never recomputed.

#include "poly.hpp"

#include <array>
#include <string>
#include <vector>

namespace ruledwall {

struct Fixture {
    std::string label;
    long r;
    long c1_degree;  ///< c1 = c1_degree * (line class), so c1^2 = c1_degree^2
    long c2;
    std::vector<long> coefficients;

    Poly polynomial() const {
        Poly p(Var::z);
        for (std::size_t k = 0; k < coefficients.size(); ++k) p.add_term(static_cast<long>(k), coefficients[k]);
        return p;
    }

    /// 2 r c2 - (r-1) c1^2 - (r^2 - 1) on the projective plane.
    long expected_dimension() const { return 2 * r * c2 - (r - 1) * c1_degree * c1_degree - (r * r - 1); }
};

// P(M_H(3;1,2)) = 1 + z^2 + z^4
// P(M_H(3;1,3)) = 1 + 2z^2 + 5z^4 + 8z^6 + 10z^8 + 8z^10 + 5z^12 + 2z^14 + z^16
// P(M_H(3;1,4)) = 1 + 2z^2 + 6z^4 + 12z^6 + 24z^8 + 38z^10 + 54z^12 + 59z^14
//                 + 54z^16 + 38z^18 + 24z^20 + 12z^22 + 6z^24 + 2z^26 + z^28
inline const std::vector<Fixture>& published_fixtures() {
    static const std::vector<Fixture> all = {
        {"(3;1,2)", 3, 1, 2, {1, 0, 1, 0, 1}},
        {"(3;1,3)", 3, 1, 3, {1, 0, 2, 0, 5, 0, 8, 0, 10, 0, 8, 0, 5, 0, 2, 0, 1}},
        {"(3;1,4)", 3, 1, 4, {1, 0, 2, 0, 6, 0, 12, 0, 24, 0, 38, 0, 54, 0, 59, 0, 54, 0, 38, 0, 24, 0, 12, 0, 6, 0, 2, 0, 1}},
    };
    return all;
}

struct FixtureCheck {
    std::string label;
    long degree = 0;
    long expected_dimension = 0;
    Rational euler;
    bool palindromic = false;
    bool degree_matches = false;
    bool positive = false;

    bool passed() const { return palindromic && degree_matches && positive; }
};

inline FixtureCheck check_fixture(const Fixture& f) {
    FixtureCheck out;
    Poly p = f.polynomial();
    out.label = f.label;
    out.degree = p.degree();
    out.expected_dimension = f.expected_dimension();
    out.euler = p.value_at_one();
    out.degree_matches = out.degree == 2 * out.expected_dimension;
    out.palindromic = true;
    for (long k = 0; k <= out.degree; ++k)
        if (p.coefficient(k) != p.coefficient(out.degree - k)) out.palindromic = false;
    out.positive = !p.is_zero();
    for (const auto& [k, c] : p.terms())
        if (c <= 0) out.positive = false;
    return out;
}

inline std::vector<FixtureCheck> verify_fixtures() {
    std::vector<FixtureCheck> out;
    for (const Fixture& f : published_fixtures()) out.push_back(check_fixture(f));
    return out;
}

}  // namespace ruledwall
