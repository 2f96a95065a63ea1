#pragma once

#include "ospq/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ospq {

// A named set of graded generators.  The declared order is the canonical
// (ascending) order used by rewrite systems built on top of the free algebra.
struct GeneratorSet {
    std::vector<std::string> names;
    std::vector<int> parities;

    int size() const { return static_cast<int>(names.size()); }
    int index(const std::string& name) const;   // -1 when unknown
    int parity(int i) const { return parities[i]; }
    bool operator==(const GeneratorSet&) const = default;
};

// Free graded algebra on a GeneratorSet: Scalar-weighted words with no
// relations.  Odd Scalar parameters anticommute past odd generators (the
// Koszul sign is applied when a coefficient crosses a word).
class FreeGradedPoly {
public:
    FreeGradedPoly() = default;
    explicit FreeGradedPoly(std::shared_ptr<const GeneratorSet> gens) : gens_(std::move(gens)) {}

    static FreeGradedPoly constant(std::shared_ptr<const GeneratorSet> gens, Scalar c);
    static FreeGradedPoly word(std::shared_ptr<const GeneratorSet> gens,
                               std::vector<int> w, Scalar c = Scalar(1));

    const std::shared_ptr<const GeneratorSet>& gens() const { return gens_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }
    int word_parity(const std::vector<int>& w) const;

    FreeGradedPoly operator-() const;
    FreeGradedPoly operator+(const FreeGradedPoly& o) const;
    FreeGradedPoly operator-(const FreeGradedPoly& o) const;
    FreeGradedPoly operator*(const FreeGradedPoly& o) const;   // concatenation
    FreeGradedPoly operator*(const Scalar& c) const;            // right multiply
    FreeGradedPoly scalar_left(const Scalar& c) const;          // left multiply
    FreeGradedPoly& operator+=(const FreeGradedPoly& o) { *this = *this + o; return *this; }
    FreeGradedPoly& operator-=(const FreeGradedPoly& o) { *this = *this - o; return *this; }
    bool operator==(const FreeGradedPoly& o) const;

    std::string to_string() const;

    void add_term(const std::vector<int>& w, const Scalar& c);

private:
    std::shared_ptr<const GeneratorSet> gens_;
    std::map<std::vector<int>, Scalar> terms_;
};

// Parses the shared noncommutative grammar: generator names per the set,
// juxtaposition or `*` for products, `+`/`-`, integer powers `^n`, scalar
// atoms per the scalar grammar (numbers, [n], [n]!, sqrt(...), q, s, omega,
// rho, varpi and declared parameter symbols).
FreeGradedPoly parse_free_poly(const std::string& text,
                               std::shared_ptr<const GeneratorSet> gens);

} // namespace ospq
