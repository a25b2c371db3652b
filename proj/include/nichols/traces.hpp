#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/algebra.hpp"

namespace nichols {

// Per-layer matrices of an algebra automorphism induced by a letter
// operator, in the chosen layer bases; columns are sparse.
struct ActionMatrices {
    std::vector<std::vector<SparseVec>> cols;  // cols[n][j]

    // Walks the layers: column j of layer n is lambda_x * e_{sigma x} *
    // (previous column i), with basis word j = (x, i).
    static ActionMatrices compute(const Algebra& A, const LetterOperator& Q,
                                  int up_to_degree, unsigned threads = 1);
    Scalar trace(int n, Field f) const;
    // Image coordinates of a vector living in layer n.
    SparseVec apply(int n, const SparseVec& v) const;
};

struct GradedTraceReport {
    std::string label;
    TracePoly trace;
    Scalar at_one;
    std::optional<Scalar> top_scalar;  // action on the integral, complete algebras only
};

GradedTraceReport graded_trace(const Algebra& A, const LetterOperator& Q,
                               const std::string& label = "", unsigned threads = 1);
// Trace coefficients only up to the given degree (partial builds).
TracePoly graded_trace_partial(const Algebra& A, const LetterOperator& Q, int up_to_degree,
                               unsigned threads = 1);

// Checks trace_Q(t) == lambda_Q * t^L * trace_{Q^{-1}}(1/t) coefficientwise;
// requires a complete algebra with one-dimensional top layer.
struct PoincareResult {
    Scalar lambda;
    bool holds;
};
PoincareResult poincare_check(const Algebra& A, const LetterOperator& Q, unsigned threads = 1);

// Completes a trace known to degree floor(L/2) from the lower half of the
// inverse operator's trace and the top-layer scalar; the overlapping middle
// coefficient must agree exactly.
TracePoly duality_completion(const TracePoly& lower_q, const TracePoly& lower_qinv,
                             const Scalar& lambda, int L);

}  // namespace nichols
