#pragma once

#include "ospq/free_poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ospq {

// Generator set for the weight basis of V^(ell) with highest-weight parity
// lambda, in the canonical (descending weight) order; index(m) = ell - m.
// Named z/theta/Y for the flavors appearing in print, x otherwise.
std::shared_ptr<const GeneratorSet> covariant_generators(int ell, int lambda);

// The composite covariant combination E^L_M over the weight basis, using the
// display-normalized coupling coefficients (table entries divided by the
// registered row factor), minus its flavor target: r for L = 0, xi times the
// matching generator for L = ell (with xi odd exactly when L + lambda is
// odd), nothing for the remaining L.
FreeGradedPoly composite_relation(int ell, int lambda, int L, int M);

// True iff every E^L_M relation of this block degenerates, at s = 1, to a
// super-commutativity statement (the test that separates the acceptable
// blocks from the quarantined ones).
bool relation_has_classical_limit(int ell, int lambda, int L);

// phi_R(E^L_M) = sum_{M'} E^L_{M'} (x) T^L_{M'M}(Lambda), Lambda = L mod 2,
// verified coefficient-wise in the free algebra tensor the function algebra.
bool verify_coaction_covariance(int ell, int lambda, int L);

// The sign-flipped theta basis (theta'_0 = theta_0, theta'_{+-1} =
// -theta_{+-1}) corepresents via T^1(0) instead of T^1(1).
bool verify_primed_basis_corep();

// ---------------------------------------------------------------------------
// Presentations
// ---------------------------------------------------------------------------

struct PresRule {
    int x, y;              // left-hand side word (x, y), generator indices
    FreeGradedPoly rhs;
};

// Completion rule with a longer left-hand side (overlap consequences of the
// quadratic rules that the quadratic set alone cannot resolve).
struct PresWordRule {
    std::vector<int> lhs;
    FreeGradedPoly rhs;
};

struct PresConstant {
    std::string name;
    FreeGradedPoly expr;
    std::optional<Scalar> expected;   // scalar value the expression reduces to
};

struct Presentation {
    std::string name;
    std::shared_ptr<const GeneratorSet> gens;
    std::vector<std::pair<std::string, int>> parameters;   // (name, parity)
    std::vector<PresRule> rules;
    std::vector<PresWordRule> word_rules;   // longer lhs, from completion
    std::vector<PresConstant> constants;
    long step_bound = 200000;

    const FreeGradedPoly* rule_for(int x, int y) const;
    FreeGradedPoly normal_form(const FreeGradedPoly& p) const;   // throws on bound
    FreeGradedPoly nf_word(const std::vector<int>& w, const Scalar& c = Scalar(1)) const;

    std::string to_string() const;   // structured text, parseable below
};

Presentation parse_presentation(const std::string& text);

struct CentralityRecord {
    std::string constant, generator;
    bool residual_is_zero;
    std::string residual_text;
};
struct DiamondRecord {
    std::array<int, 3> triple;
    bool equal;
    std::string nf1, nf2;
};
struct ConsistencyReport {
    std::vector<CentralityRecord> condition_a;
    std::vector<DiamondRecord> condition_b;
    bool condition_a_pass() const;
    bool condition_b_pass() const;
    bool pass() const { return condition_a_pass() && condition_b_pass(); }
    std::string to_string() const;
};

// (a) registered constants reduce to their scalar values and commute with
// every generator; (b) every ordered generator triple reduces to the same
// normal form along both one-step reduction paths.
ConsistencyReport consistency_check(const Presentation& pres);

// Every rule coefficient, evaluated in the classical limit, turns the rule
// into plain super-(anti)commutativity: the coefficient of the reversed word
// is (-1)^(parity product), all other degree-2 coefficients vanish
// (lower-degree terms are exempt since they carry the deformation
// parameters).
bool verify_classical_limit(const Presentation& pres);

// Relation-set form of the classical-limit check, for the lists whose
// printed members degenerate to super-(anti)commutativity: evaluate every
// coefficient at s = 1 with the vanishing parameters sent to zero, map each
// word into the free supercommutative algebra (sorting with Koszul signs,
// odd squares to zero), and require the image of each relation to vanish.
struct RawRelation;
bool verify_classical_limit_relations(const std::vector<RawRelation>& rels);

// ---------------------------------------------------------------------------
// The concrete covariant algebras
// ---------------------------------------------------------------------------

// Quantum superspace (ell = 1, lambda = 0) on z1, z0, z-1.  Passing a nonzero
// odd xi yields the pre-quotient variant whose diamond condition fails; the
// adopted algebra has xi = 0.
Presentation superspace0(const Scalar& r = Scalar::parameter("r"),
                         const Scalar& xi = Scalar());

enum class Superspace1Kind { L2_only, with_radius };
// Quantum superspace (ell = 1, lambda = 1) on theta generators.
Presentation superspace1(Superspace1Kind kind,
                         const Scalar& r = Scalar::parameter("r"));

// The quantum supersphere on Y2..Y-2: radius relation, twelve commutation
// relations, three constraints.  The family has one free parameter: the
// relations are consistent exactly when r = ([3]!/[6])^2 xi^2 (equivalently
// xi = ([6]/[3]!) sqrt(r), the value both realizations take), and that is
// what r defaults to; passing an unrelated r yields a presentation whose
// consistency check reports the failure.
Presentation supersphere(const std::optional<Scalar>& r = std::nullopt,
                         const Scalar& xi = Scalar::parameter("xi"));

// Presentation assembled from the raw L in {2,3} covariant relations only
// (oriented by solving for the reducible words); its consistency check fails.
Presentation sphere_raw_presentation();

// The printed raw covariant relation lists for the sphere (L in {1, 2, 3}),
// as lhs-minus-rhs elements of the free algebra; 3 + 5 + 7 relations.
struct RawRelation {
    std::string id;
    FreeGradedPoly rel;
};
std::vector<RawRelation> raw_sphere_relations(int L);

// The fifteen printed final sphere relations (twelve commutation relations,
// then the three constraints), as lhs-minus-rhs elements.
std::vector<RawRelation> final_sphere_relations();

// Certificate that each of the fifteen final sphere relations is a
// Scalar-linear combination of the fifteen raw relations.
struct CombinationRecord {
    std::string target;
    bool found;
    std::vector<Scalar> coefficients;   // indexed like the concatenated raw list
};
struct LinearCombinationReport {
    std::vector<CombinationRecord> records;
    bool all_found() const;
    std::string to_string() const;
};
LinearCombinationReport verify_linear_combination_report();
bool verify_linear_combination();

// Shared exact-linear-algebra helper: writes target in the Scalar-span of the
// given relations, if possible.
std::optional<std::vector<Scalar>> express_in_span(
    const FreeGradedPoly& target, const std::vector<FreeGradedPoly>& relations);

// Registered named constants of the sphere displays (kappa/mu/varpi/F).
Scalar sphere_constant(const std::string& name);

} // namespace ospq
