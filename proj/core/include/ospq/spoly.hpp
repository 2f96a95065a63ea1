#pragma once

#include "ospq/numbers.hpp"

#include <compare>
#include <string>
#include <vector>

namespace ospq {

// Dense univariate polynomial in s over the rationals.  Invariant: the
// coefficient vector carries no trailing zeros (empty vector = zero poly).
class SPoly {
public:
    SPoly() = default;
    explicit SPoly(Rational constant);
    static SPoly monomial(const Rational& coeff, int degree);
    static SPoly s();   // the variable itself

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }   // -1 for zero
    int low_degree() const;                        // smallest i with c_i != 0
    const Rational& coeff(int i) const;            // 0 outside range
    const Rational& leading() const;
    bool is_one() const;

    SPoly operator-() const;
    SPoly operator+(const SPoly& o) const;
    SPoly operator-(const SPoly& o) const;
    SPoly operator*(const SPoly& o) const;
    SPoly operator*(const Rational& c) const;
    bool operator==(const SPoly& o) const = default;
    std::strong_ordering operator<=>(const SPoly& o) const;

    // Euclidean division; requires a nonzero divisor.
    static void divmod(const SPoly& num, const SPoly& den, SPoly& quot, SPoly& rem);
    SPoly divided_by(const SPoly& den) const;      // exact division, asserts rem == 0

    SPoly derivative() const;
    static SPoly gcd(SPoly a, SPoly b);            // monic gcd (or zero)

    SPoly monic() const;
    Rational content() const;                      // signed: content * primitive = *this,
    SPoly primitive() const;                       // primitive has positive leading coeff

    // Shift by s^k (k may be negative provided low_degree() >= -k).
    SPoly shifted(int k) const;

    // Yun square-free decomposition of a nonzero poly: *this = lc * prod_i f_i^i
    // with the f_i monic, square-free, pairwise coprime.  Returns f_1..f_n.
    std::vector<SPoly> squarefree_decomposition() const;

    Real eval(const Real& s_value) const;
    Rational eval(const Rational& s_value) const;

    std::string to_string() const;                 // e.g. "2*s^3 - 1/2*s + 1"

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace ospq
