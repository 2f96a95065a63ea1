#pragma once

#include "ospq/spoly.hpp"

#include <compare>
#include <string>

namespace ospq {

// Laurent-rational function of s in canonical form:
//     s^exp * num(s) / den(s)
// with num(0) != 0, den(0) != 0, gcd(num, den) = 1, den monic.  Zero is
// represented as exp = 0, num = 0, den = 1, so equality of canonical forms is
// plain field-wise comparison.
class LaurentRational {
public:
    LaurentRational() : den_(SPoly(Rational(1))) {}
    LaurentRational(Rational c);                               // implicit: constants embed
    LaurentRational(int c) : LaurentRational(Rational(c)) {}
    LaurentRational(SPoly num, SPoly den, int exp = 0);        // canonicalizes

    static LaurentRational s_power(int k);
    static LaurentRational q_power(int k) { return s_power(2 * k); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return exp_ == 0 && num_.is_one() && den_.is_one(); }
    bool is_constant() const;
    Rational as_rational() const;                              // requires is_constant()

    int exp() const { return exp_; }
    const SPoly& num() const { return num_; }
    const SPoly& den() const { return den_; }

    LaurentRational operator-() const;
    LaurentRational operator+(const LaurentRational& o) const;
    LaurentRational operator-(const LaurentRational& o) const;
    LaurentRational operator*(const LaurentRational& o) const;
    LaurentRational operator/(const LaurentRational& o) const;
    LaurentRational inverse() const;
    bool operator==(const LaurentRational& o) const = default;
    std::strong_ordering operator<=>(const LaurentRational& o) const = default;

    Real eval(const Real& s_value) const;
    Rational eval(const Rational& s_value) const;              // throws on pole

    std::string to_string() const;

    // Square-root support: writes *this = outside^2 * kernel with the kernel in
    // canonical square-free form (s^{0,1} times a square-free primitive integer
    // polynomial with square-free positive integer content; denominator 1).
    // Requires *this nonzero; the sign is not inspected here.
    void sqrt_split(LaurentRational& outside, LaurentRational& kernel) const;

private:
    void canonicalize();
    int exp_ = 0;
    SPoly num_;
    SPoly den_;
};

} // namespace ospq
