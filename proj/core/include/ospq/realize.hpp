#pragma once

#include "ospq/corep.hpp"
#include "ospq/covariant.hpp"

#include <array>
#include <map>

namespace ospq {

// ---------------------------------------------------------------------------
// Embedding of the supersphere into the function algebra
// ---------------------------------------------------------------------------

// Folds the embedding constraint g1*g3 = ([3]!/[4])*g2^2 into every parameter
// monomial: each sqrt_g1*sqrt_g3 pair becomes sqrt([3]!/[4])*g2 (positive
// branch), so g1*g3 products fold as well.  g1 and g3 individually stay free.
Scalar fold_g_constraint(const Scalar& x);
NCPoly fold_g_constraint(const NCPoly& p);

// Y_k = g1*T_{2,k} + g2*T_{0,k} + g3*T_{-2,k} with T = T^2(0), plus the
// induced sphere parameters r = ([2]*g2)^2 and xi = ([6]/[3])*g2.
struct EmbeddingMap {
    std::array<NCPoly, 5> Y;        // index ell - k = 2 - k
    Scalar r, xi;

    const NCPoly& at(int k) const { return Y[2 - k]; }
};
EmbeddingMap embed_sphere();

// Reduces every supersphere relation (radius, twelve commutation relations,
// three constraints, and the fifteen raw covariant relations) under the
// embedding, modulo the g-constraint; one record per relation.
Report verify_embedding();

// P_R = -sqrt(g3)*v+ + sqrt(g1)*v-.  Verifies Y_k (.) P_R = 0 for all five k
// (closed right-action forms, cross-checked against the pairing-based
// action), the twisted-primitive product rule
// (ab) (.) P_R = (a (.) K)(b (.) P_R) + (-1)^|b| (a (.) P_R)(b (.) K^-1)
// on all products Y_j Y_k, and the induced subalgebra property
// (Y_j Y_k) (.) P_R = 0.
Report twisted_primitive_annihilation();

// Right action of P_R on an arbitrary function-algebra element.
NCPoly right_action_PR(const NCPoly& p);

// ---------------------------------------------------------------------------
// The covariant oscillator
// ---------------------------------------------------------------------------

// Normal-ordered oscillator monomial abar^i a^j c^eps, eps in {0,1}; the
// parity is eps.
struct OscMonomial {
    int i = 0, j = 0, eps = 0;
    bool operator==(const OscMonomial&) const = default;
    auto operator<=>(const OscMonomial&) const = default;
};

// Element of the oscillator algebra in normal form under
//   abar*c = q*c*abar,  a*c = q^-1*c*a,  a*abar = 1 + q^-2*abar*a,
//   c^2 = q^-1*[2]*abar*a + varpi^-1.
class OscPoly {
public:
    OscPoly() = default;
    OscPoly(Scalar constant);                       // implicit embed
    OscPoly(int constant) : OscPoly(Scalar(constant)) {}
    static OscPoly abar();
    static OscPoly a();
    static OscPoly c();
    static OscPoly mono(OscMonomial m, Scalar coeff = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<OscMonomial, Scalar>& terms() const { return terms_; }
    Scalar coeff(const OscMonomial& m) const;

    OscPoly operator-() const;
    OscPoly operator+(const OscPoly& o) const;
    OscPoly operator-(const OscPoly& o) const;
    OscPoly operator*(const OscPoly& o) const;      // normal-form product
    OscPoly operator*(const Scalar& s) const;
    OscPoly& operator+=(const OscPoly& o) { *this = *this + o; return *this; }
    OscPoly& operator-=(const OscPoly& o) { *this = *this - o; return *this; }
    bool operator==(const OscPoly& o) const = default;

    std::string to_string() const;

    void add_term(const OscMonomial& m, const Scalar& c);

private:
    std::map<OscMonomial, Scalar> terms_;
};

// Parses the shared noncommutative grammar over the generators abar, a, c and
// reduces to oscillator normal form.
OscPoly oscillator_normal_form(const std::string& text);

// z1 = abar, z0 = c, z-1 = -a identifies the oscillator with the lambda = 0
// quantum superspace at r = -q*varpi^-1: every presentation rule reduces to
// zero and the radius combination evaluates to that r.
bool superplane_iso_check();

// The printed quadratic Y(abar, a, c) assignments satisfy the full
// supersphere suite (radius, raw and final relations) with
// r = (q^2/varpi^2)*([4]/[3]!) and xi = ([6]/[3]!)*sqrt(r), exactly.
bool oscillator_sphere_check();

// The oscillator realization's sphere parameters.
Scalar oscillator_r();
Scalar oscillator_xi();
std::array<OscPoly, 5> oscillator_sphere_generators();   // Y2..Y-2

// ---------------------------------------------------------------------------
// Numeric Fock-space matrix model
// ---------------------------------------------------------------------------

// Matrices act on cutoff Fock levels tensored with a two-dimensional parity
// factor; state (n, p) sits at column 2n + p.  abar and a ladder the level
// with weights lambda_n = (q^-2n - 1)/(q^-2 - 1) (vacuum annihilated by a);
// c = varpi^(-1/2) * q^-N on the level factor times the parity flip.
struct FockModel {
    int cutoff = 0;
    Rational q;
    int precision = kDefaultDigits;
    std::vector<std::vector<Real>> abar, a, c;      // dense, size 2*cutoff
    std::map<std::string, Real> residuals;          // relation id -> max residual
    Real max_residual() const;

    int dim() const { return 2 * cutoff; }
};

// Builds the model and fills the residual table: the four oscillator
// relations on states of level <= cutoff-2, the sphere suite (radius, raw
// and final relations) on states of level <= cutoff-4, and the deviation of
// the evaluated radius from the exact oscillator r.
FockModel fock_representation(int cutoff, const Rational& q,
                              int precision = kDefaultDigits);

} // namespace ospq
