#pragma once

#include "ospq/graded_matrix.hpp"

namespace ospq {

// Generators of U_q[osp(1/2)]: K, K^-1 even, v+- odd.
enum class Gen { K, Kinv, Vplus, Vminus };

int gen_parity(Gen g);

// Weight bookkeeping for the irreducible V^(ell) with highest-weight parity
// lambda.  Basis ordering is m = ell, ell-1, ..., -ell (index i = ell - m).
struct WeightLabel {
    int ell;
    int m;
    int lambda;
    int parity() const { return (((ell - m + lambda) % 2) + 2) % 2; }
    int class_index() const { return (lambda + 1) % 2; }   // epsilon
};

// Parities of the ordered basis of V^(ell).
std::vector<int> basis_parities(int ell, int lambda);

// The generator matrices of the grade-star irreducible representations.
GradedMatrix rep_generator(Gen g, int ell, int lambda);

// Casimir evaluated as a polynomial in the generator matrices; it comes out
// as the scalar matrix with the highest-weight eigenvalue.
GradedMatrix casimir(int ell, int lambda);
Scalar casimir_eigenvalue(int ell);

bool verify_defining_relations(int ell, int lambda);
bool verify_grade_star(int ell, int lambda);

// Defining relations checked for any set of generator matrices (used for the
// tensor representations too).
bool check_defining_relations(const GradedMatrix& K, const GradedMatrix& Kinv,
                              const GradedMatrix& vp, const GradedMatrix& vm);

// Action of the coproduct of g on V^(ell1) (x) V^(ell2).
GradedMatrix tensor_rep(Gen g, int ell1, int ell2, int lambda);

// Graded adjoint of a representation matrix of an operator with parity
// op_parity, with respect to the orthonormal basis.
GradedMatrix graded_adjoint(const GradedMatrix& a, int op_parity);

} // namespace ospq
