#pragma once

// Exact arithmetic primitives shared by every module.
//
// Rational is GMP's mpq_class; values are kept canonical (lowest terms,
// positive denominator) after every operation that can denormalize them.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ruledwall {

using Integer = mpz_class;
using Rational = mpq_class;

/// Domain error. The message is the user-facing diagnostic.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    if (den == 0) throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_of(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

inline Integer ceil_of(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

/// Largest integer n >= 0 with n*n <= q, for q >= 0.
inline Integer isqrt_floor(const Rational& q) {
    if (q < 0) throw Error("isqrt of a negative value");
    Integer fl = floor_of(q);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
    return root;
}

/// Canonical "p/q" form; integers carry an explicit "/1".
inline std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p/q", "p", with optional sign on p.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto to_int = [](std::string_view s) {
        if (!s.empty() && s[0] == '+') s.remove_prefix(1);
        return Integer(std::string(s), 10);
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw Error("malformed rational '" + std::string(text) + "'");
    return make_rational(to_int(num), to_int(den));
}

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw Error("integer out of machine range: " + z.get_str());
    return z.get_si();
}

}  // namespace ruledwall
