#pragma once

#include <string>
#include <vector>

#include "nichols/group.hpp"
#include "nichols/tracepoly.hpp"

namespace nichols {

// Graded character of the conjugation action of G on its group algebra,
// graded through the abelian quotient: coefficient of t^d counts the
// centralizer elements of grade d.
IntPoly conj_graded_character(const FiniteGroup& G, const AbelianDecomposition& dec, int g);

// Predicted product shape: multiplier * prod (count_i)_{t^grade_i}. The
// factors come from a cyclic decomposition of the subgroup of quotient
// values met by the centralizer, on generators chosen so that the grade is
// additive over the factor box (validated; the expansion equals the
// character exactly by construction).
struct ToyPrediction {
    long multiplier = 1;
    std::vector<std::pair<int, int>> symbols;  // (count, t-power)
    IntPoly expand() const;
    std::string str() const;
};

ToyPrediction toy_prediction(const FiniteGroup& G, const AbelianDecomposition& dec, int g);

// The per-factor subgroup indices m_j with A'_j = m_j A_j (the projection
// of the centralizer's image to the j-th cyclic factor); exposed for
// inspection and the decomposition-dependence checks.
std::vector<int> toy_factor_indices(const FiniteGroup& G, const AbelianDecomposition& dec, int g);

// Single-step refinement of the grading along ker(pi): grades the kernel
// through its own abelianization and shifts cosets by transversal grades.
// Returns the refined grade per group element.
std::vector<int> refined_grading(const FiniteGroup& G, const AbelianDecomposition& dec);
IntPoly conj_graded_character_with(const FiniteGroup& G, const std::vector<int>& grade, int g);

}  // namespace nichols
