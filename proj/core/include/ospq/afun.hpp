#pragma once

#include "ospq/scalar.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace ospq {

// Generators of the quantized function algebra, in canonical (ascending)
// normal-form order.  alpha and delta are odd, the latin letters even.
enum class AGen : int { a = 0, alpha = 1, b = 2, c = 3, delta = 4, d = 5 };

int agen_parity(AGen g);
const std::string& agen_name(AGen g);

// Canonical monomial a^k alpha^eps b^i c^j delta^eta d^m.  eps, eta in {0,1}.
// Under the superdeterminant reduction (the default), k and m are never both
// nonzero; the reduction-free mode used for the centrality check keeps mixed
// monomials, still in sorted letter order.
struct AMonomial {
    std::array<int, 6> e{};

    int exp(AGen g) const { return e[static_cast<int>(g)]; }
    int degree() const;
    int parity() const { return (e[1] + e[4]) % 2; }
    bool is_unit() const { return degree() == 0; }

    bool operator==(const AMonomial&) const = default;
    auto operator<=>(const AMonomial&) const = default;

    std::vector<AGen> letters() const;      // ascending canonical order
    std::string to_string() const;          // e.g. "a*alpha*b^2"
};

// Element of the function algebra in normal form: Scalar-weighted sum of
// canonical monomials.  All arithmetic keeps the normal form.
class NCPoly {
public:
    NCPoly() = default;
    NCPoly(Scalar constant);                               // implicit embed
    NCPoly(int constant) : NCPoly(Scalar(constant)) {}
    static NCPoly gen(AGen g);
    static NCPoly mono(AMonomial m, Scalar coeff = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<AMonomial, Scalar>& terms() const { return terms_; }
    Scalar coeff(const AMonomial& m) const;
    Scalar constant_part() const { return coeff(AMonomial{}); }
    // Parity of a homogeneous element (0 if zero); throws on mixed parity.
    int parity() const;

    NCPoly operator-() const;
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const Scalar& c) const;
    NCPoly& operator+=(const NCPoly& o) { *this = *this + o; return *this; }
    NCPoly& operator-=(const NCPoly& o) { *this = *this - o; return *this; }
    bool operator==(const NCPoly& o) const = default;

    std::string to_string() const;

    void add_term(const AMonomial& m, const Scalar& c);    // canonicalizing insert

private:
    std::map<AMonomial, Scalar> terms_;
};

// Products, parameterized by whether the superdeterminant rule ad -> 1 + q bc
// + q^(1/2) alpha delta participates in the reduction.  The reduction-free
// variant is used to check that D is central from the 17 relations alone.
NCPoly mul(const NCPoly& x, const NCPoly& y, bool use_det = true);
NCPoly operator*(const NCPoly& x, const NCPoly& y);        // mul(x, y, true)

// Normal form of an arbitrary word over the generators.
NCPoly nf_word(const std::vector<AGen>& word, bool use_det = true);

// The oriented rewrite rules: 15 swaps, two odd squares, and the
// superdeterminant rule.  Exposed for the termination and confluence tests.
struct ARule {
    AGen x, y;          // left-hand side is the two-letter word x*y
    NCPoly rhs;
    bool det_only;      // true only for the a*d rule
};
const std::vector<ARule>& afun_rules();

// Every rule right-hand side is strictly smaller than its left-hand side in
// the degree-lexicographic order on words (termination measure).
bool verify_termination_order();
// All critical pairs (overlapping rule applications on three-letter words)
// reduce to equal normal forms, in both reduction modes.
bool verify_local_confluence();

// Tensor square of the algebra with the Koszul sign
// (x1 (x) x2)(y1 (x) y2) = (-1)^(parity(x2) parity(y1)) x1 y1 (x) x2 y2.
class TensorPoly {
public:
    TensorPoly() = default;
    static TensorPoly simple(const NCPoly& left, const NCPoly& right, bool use_det = true);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<AMonomial, AMonomial>, Scalar>& terms() const { return terms_; }

    TensorPoly operator+(const TensorPoly& o) const;
    TensorPoly operator-(const TensorPoly& o) const;
    TensorPoly operator*(const Scalar& c) const;
    bool operator==(const TensorPoly& o) const = default;

    std::string to_string() const;

    void add_term(const AMonomial& l, const AMonomial& r, const Scalar& c);

private:
    std::map<std::pair<AMonomial, AMonomial>, Scalar> terms_;
};
TensorPoly mul(const TensorPoly& x, const TensorPoly& y, bool use_det = true);

// Derived matrix entries: e, beta, gamma as polynomials in the six
// generators, and the superdeterminant D (not reduced).
NCPoly e_poly();
NCPoly beta_poly();
NCPoly gamma_poly();
NCPoly sdet_poly();

// Hopf structure maps, extended from the matrix formulas Delta(T) = T (.x) T,
// epsilon(T) = id, and the printed antipode matrix.
TensorPoly coproduct(const NCPoly& p, bool use_det = true);
Scalar counit(const NCPoly& p);
NCPoly antipode(const NCPoly& p, bool use_det = true);

// Verification reports: one record per checked component.
struct CheckRecord {
    std::string id;
    bool residual_is_zero;
    std::string residual_text;   // empty when the residual is zero
};
struct Report {
    std::vector<CheckRecord> records;
    bool all_pass() const;
    std::string to_string() const;
};

Report verify_rtt();
Report verify_orthosymplectic();
Report verify_derived_generators();
Report verify_hopf();

// Parsing of the textual grammar: generators `a alpha b c delta d`,
// juxtaposition or `*`, scalar literals per the scalar grammar.
NCPoly parse_ncpoly(const std::string& text);
NCPoly normal_form(const std::string& text);   // alias of parse_ncpoly
// Pretty rendering for the CLI: coefficients are snapped to short
// bracket/q-power forms when possible.
std::string pretty_ncpoly(const NCPoly& p);

} // namespace ospq
