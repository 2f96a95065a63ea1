#pragma once

#include "ospq/laurent.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ospq {

// Registry of formal parameters (even symbols like r, xi, g2 and odd Grassmann
// symbols like xi_odd).  Symbols are global and append-only; the predeclared
// set covers everything the library itself needs.
class Symbols {
public:
    static int id(const std::string& name);            // registers on first use (even)
    static int declare(const std::string& name, int parity, int square_of = -1);
    static const std::string& name(int id);
    static int parity(int id);
    static int square_of(int id);                      // -1, or the symbol this one squares to
    static bool known(const std::string& name);
};

// Predeclared symbol ids.
namespace sym {
int r();
int xi();
int xi_odd();
int g1();
int g2();
int g3();
int sqrt_g1();   // squares to g1
int sqrt_g3();   // squares to g3
} // namespace sym

// Monomial in the formal parameters: an exponent vector over even symbols plus
// an ordered set of odd symbols.  Odd symbols anticommute; a repeated odd
// symbol annihilates the product.
class ParameterMonomial {
public:
    ParameterMonomial() = default;
    static ParameterMonomial symbol(int id);
    // Direct construction; odd ids must be sorted and unique.  Folds declared
    // square roots (sqrt_g1^2 -> g1 etc.).
    static ParameterMonomial build(std::map<int, long> even, std::vector<int> odd);

    bool is_trivial() const { return even_.empty() && odd_.empty(); }
    int parity() const { return static_cast<int>(odd_.size()) % 2; }
    const std::map<int, long>& even() const { return even_; }
    const std::vector<int>& odd() const { return odd_; }

    // Product with Koszul sign; returns 0 if an odd symbol repeats, else +-1.
    static int multiply(const ParameterMonomial& a, const ParameterMonomial& b,
                        ParameterMonomial& out);
    ParameterMonomial even_inverse() const;            // negate even exponents; odd must be empty

    bool operator==(const ParameterMonomial& o) const = default;
    auto operator<=>(const ParameterMonomial& o) const = default;

private:
    void fold_squares();
    std::map<int, long> even_;   // id -> nonzero exponent
    std::vector<int> odd_;       // sorted ids
};

// A canonical radical: the square root of a square-free LaurentRational kernel
// (kernel 1 means no radical).  Products re-canonicalize, extracting perfect
// squares into an ordinary LaurentRational factor.
class RadicalMonomial {
public:
    RadicalMonomial() : kernel_(Rational(1)) {}
    explicit RadicalMonomial(LaurentRational kernel) : kernel_(std::move(kernel)) {}

    bool is_trivial() const { return kernel_.is_one(); }
    const LaurentRational& kernel() const { return kernel_; }

    // out = a * b modulo the returned LaurentRational square factor.
    static LaurentRational multiply(const RadicalMonomial& a, const RadicalMonomial& b,
                                    RadicalMonomial& out);

    bool operator==(const RadicalMonomial& o) const = default;
    auto operator<=>(const RadicalMonomial& o) const = default;

private:
    LaurentRational kernel_;
};

// The coefficient field/ring used everywhere: a finite canonical sum of
// LaurentRational * radical * parameter-monomial terms.
class Scalar {
public:
    struct Term {
        LaurentRational coef;
        RadicalMonomial rad;
        ParameterMonomial par;
        bool operator==(const Term&) const = default;
        auto operator<=>(const Term&) const = default;
    };

    Scalar() = default;
    Scalar(Rational c);                                 // implicit: constants embed
    Scalar(int c) : Scalar(Rational(c)) {}
    Scalar(LaurentRational c);
    static Scalar s_power(int k);
    static Scalar q_power(int k) { return s_power(2 * k); }
    static Scalar parameter(int symbol_id);
    static Scalar parameter(const std::string& name);
    static Scalar term(LaurentRational coef, RadicalMonomial rad, ParameterMonomial par);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::vector<Term>& terms() const { return terms_; }

    // Parity of a homogeneous scalar; throws on mixed parity.
    int parity() const;
    bool is_homogeneous() const;
    bool has_parameters() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    bool operator==(const Scalar& o) const = default;
    auto operator<=>(const Scalar& o) const = default;

    // Multiplicative inverse for the cases the library needs: a single term
    // (with invertible parameter part), or a two-kernel combination a + b*sqrt(k)
    // handled by conjugation.  Throws otherwise.
    Scalar inverse() const;

    // Replace every occurrence of a parameter symbol by a Scalar value.
    Scalar substitute(int symbol_id, const Scalar& value) const;

    // Numeric oracle.  q in (0,1); bindings map parameter names to values; odd
    // parameters must be bound to zero.  precision <= kMaxEvalDigits.
    Real eval_numeric(const Rational& q, const std::map<std::string, Real>& bindings,
                      int precision = kDefaultDigits) const;

    // True iff |eval| < 10^-30 at the three probe points with all even
    // parameters bound to 1 and odd ones to 0 (term-wise on odd parts).
    bool numerically_zero() const;

    std::string to_string() const;

private:
    void insert_term(Term t);
    std::vector<Term> terms_;    // sorted by (rad, par), coefficients nonzero
};

Scalar sqrt_scalar(const Scalar& x);

// Kulish symbols and friends.
Scalar kulish(int n);
Scalar kulish_factorial(int n);
Scalar kulish_binomial(long y, long x);
Scalar varrho();
Scalar varpi();        // q^(1/2) + q^(-1/2)
Scalar omega_const();  // q - q^(-1)
Scalar lambda_R();     // -q^(-1/2) * omega
Scalar rho_R();        // (1 + q^(-1)) * omega

bool verify_kulish_summation(int n, int r, int k);
bool verify_kulish_binomial_identity(int n, int r, int k);

// Probe q values for numeric zero/positivity checks.
const std::vector<Rational>& probe_qs();

} // namespace ospq
