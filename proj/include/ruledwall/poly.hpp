#pragma once

#include "rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace ruledwall {

/// z for Poincare series, q for finite-field masses.
enum class Var { z, q };

inline const char* to_string(Var v) { return v == Var::z ? "z" : "q"; }

inline Var parse_var(const std::string& s) {
    if (s == "z") return Var::z;
    if (s == "q") return Var::q;
    throw Error("unknown polynomial variable '" + s + "'");
}

/// Sparse univariate polynomial with exact coefficients, optionally
/// truncated: with a cap N every value is reduced mod var^(N+1).
class Poly {
public:
    using Terms = std::map<long, Rational>;

    explicit Poly(Var var = Var::z, std::optional<long> cap = std::nullopt) : var_(var), cap_(cap) {
        if (cap_ && *cap_ < 0) throw Error("truncation cap must be nonnegative");
    }

    static Poly constant(const Rational& c, Var var = Var::z, std::optional<long> cap = std::nullopt) {
        return monomial(0, c, var, cap);
    }

    static Poly monomial(long exponent, const Rational& c, Var var = Var::z, std::optional<long> cap = std::nullopt) {
        Poly p(var, cap);
        p.add_term(exponent, c);
        return p;
    }

    Var var() const { return var_; }
    std::optional<long> cap() const { return cap_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(long exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// -1 for the zero polynomial.
    long degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    void add_term(long exponent, const Rational& c) {
        if (exponent < 0) throw Error("negative exponent " + std::to_string(exponent));
        if (cap_ && exponent > *cap_) return;
        if (c == 0) return;
        Rational& slot = terms_[exponent];
        slot += c;
        slot.canonicalize();
        if (slot == 0) terms_.erase(exponent);
    }

    Poly with_cap(std::optional<long> cap) const {
        Poly out(var_, cap);
        for (const auto& [k, c] : terms_) out.add_term(k, c);
        return out;
    }

    /// Multiplication by var^k.
    Poly shifted(long k) const {
        Poly out(var_, cap_);
        for (const auto& [e, c] : terms_) out.add_term(e + k, c);
        return out;
    }

    Poly& operator+=(const Poly& o) {
        absorb(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        absorb(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }

    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }

    friend Poly operator*(const Poly& x, const Poly& y) {
        Poly out(x.var_, x.cap_);
        out.absorb(y);
        for (const auto& [i, a] : x.terms_)
            for (const auto& [j, b] : y.terms_) out.add_term(i + j, a * b);
        return out;
    }

    friend bool operator==(const Poly& x, const Poly& y) {
        return x.var_ == y.var_ && x.cap_ == y.cap_ && x.terms_ == y.terms_;
    }

    /// Sum of coefficients (value at 1).
    Rational value_at_one() const {
        Rational s = 0;
        for (const auto& [k, c] : terms_) s += c;
        return s;
    }

private:
    // Mixed arithmetic requires a common variable; the tighter cap wins.
    void absorb(const Poly& o) {
        if (o.var_ != var_) throw Error("polynomial variable mismatch");
        if (o.cap_ && (!cap_ || *o.cap_ < *cap_)) {
            cap_ = o.cap_;
            for (auto it = terms_.begin(); it != terms_.end();)
                it = it->first > *cap_ ? terms_.erase(it) : std::next(it);
        }
    }

    Terms terms_;
    Var var_;
    std::optional<long> cap_;
};

inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(c);
        if (k > 0) out += std::string("*") + to_string(p.var()) + "^" + std::to_string(k);
    }
    return out;
}

}  // namespace ruledwall
