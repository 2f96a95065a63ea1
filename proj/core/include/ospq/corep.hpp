#pragma once

#include "ospq/afun.hpp"
#include "ospq/urep.hpp"

namespace ospq {

// Matrix corepresentation T^ell(lambda) of the function algebra.  Rows and
// columns are labelled m', m = ell, ell-1, ..., -ell; entry (m', m) is a
// polynomial of parity (m' + m) mod 2.
struct CorepMatrix {
    int ell = 0;
    int lambda = 0;
    std::vector<std::vector<NCPoly>> entries;   // [ell - m'][ell - m]

    int dim() const { return 2 * ell + 1; }
    const NCPoly& at(int mp, int m) const { return entries[ell - mp][ell - m]; }
    int entry_parity(int mp, int m) const { return (((mp + m) % 2) + 2) % 2; }
};

// Cached construction: T^0 = (1), T^1(0) is the defining matrix, higher ell
// by fusing T^(ell-1)(0) with T^1(0) through the coupled-basis coefficients;
// T^ell(1) differs from T^ell(0) by the sign (-1)^(m'+m) entrywise.
const CorepMatrix& corep_matrix(int ell, int lambda);

// Delta(T_{m'm}) = sum_k T_{m'k} (x) T_{km} and eps(T_{m'm}) = delta_{m'm}.
Report verify_corep_coproduct(int ell, int lambda);
Report verify_corep_counit(int ell, int lambda);

// Product law: for each ell in [|ell1-ell2|, ell1+ell2], the double
// coupled-basis contraction of T^ell1(lambda) T^ell2(lambda) against the
// (ellp, ell) coefficient pair equals delta_{ellp,ell} T^ell(Lambda) with
// Lambda = (ell1 + ell2 + ell) mod 2.
Report verify_product_law(int ell1, int ell2, int ellp, int lambda);

// Words in the generators of the quantized enveloping algebra.
struct UWord {
    std::vector<Gen> letters;
    int parity() const;
};
// Grammar: letters K, K^-1 (or Kinv), v+, v- joined by '*' or whitespace,
// each with an optional integer power.
UWord parse_uword(const std::string& text);

// Left and right regular actions of the enveloping algebra on the function
// algebra, u (.) a = (id (x) u) Delta(a) and a (.) u = (u (x) id) Delta(a)
// with the Koszul sign conventions of the graded pairing.
NCPoly left_action(Gen g, const NCPoly& p);
NCPoly right_action(const NCPoly& p, Gen g);
NCPoly left_action(const UWord& w, const NCPoly& p);
NCPoly right_action(const NCPoly& p, const UWord& w);

// Graded pairing <w, p> = eps(w (.) p).
Scalar pairing(const UWord& w, const NCPoly& p);

// Closed forms of the actions on a corepresentation entry T^ell(lambda)_{m'm}
// (zero polynomial when the target index leaves the weight range).
NCPoly corep_left_action_closed(Gen g, int ell, int lambda, int mp, int m);
NCPoly corep_right_action_closed(Gen g, int ell, int lambda, int mp, int m);

} // namespace ospq
