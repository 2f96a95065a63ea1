#pragma once

#include "ospq/graded_matrix.hpp"

#include <map>
#include <string>

namespace ospq {

struct CGCQuery {
    int ell1, ell2, ell;
    int m1, m2;
    int lambda;
    int m() const { return m1 + m2; }
    int product_parity() const { return (((ell1 + ell2 + ell) % 2) + 2) % 2; }   // Lambda
    bool in_domain() const;
};

// Closed-form Clebsch-Gordan coefficient (sum over k).
Scalar cgc_closed(const CGCQuery& qry);

// Independent oracle: highest-weight vector from the recurrence solution,
// lowered with graded coproduct powers of v-.  Must equal cgc_closed.
Scalar cgc_lowering(const CGCQuery& qry);

// Full coefficient vector of the coupled basis vector e^ell_m as a map
// (m1, m2) -> Scalar, via the lowering construction.
std::map<std::pair<int, int>, Scalar> cgc_lowering_vector(int ell1, int ell2, int ell,
                                                          int m, int lambda);

bool verify_orthogonality(int ell1, int ell2, int lambda);
bool verify_coupled_transform(int ell1, int ell2, int ell, int lambda);

// Table of all CGC for fixed (ell1, ell2, ell, lambda).
struct CGCTable {
    int ell1, ell2, ell, lambda;
    std::map<std::pair<int, int>, Scalar> entries;   // (m1, m2) -> value
    // Overall row factor for display, when registered (key: m); entries print
    // as value / OF in the latex rendering.
    std::map<int, Scalar> row_factors;
};

CGCTable cgc_table(int ell1, int ell2, int ell, int lambda);

// Rendered export; format in {json, csv, latex}.  Emits the tables for every
// admissible ell from ell1+ell2 down to |ell1-ell2|.
std::string emit_table(int ell1, int ell2, int lambda, const std::string& format);

} // namespace ospq
