#pragma once

#include <vector>

#include "nichols/algebra.hpp"
#include "nichols/traces.hpp"

namespace nichols {

// Positive root data of a diagonal braiding: Lyndon words whose iterated
// q-commutator brackets survive in the built algebra. Complete when the
// product of the per-root truncation symbols reproduces the Hilbert series.
struct RootDatum {
    struct Root {
        std::vector<int> word;    // Lyndon word in letter indices
        std::vector<int> alpha;   // letter multiplicities
        unsigned height;          // order of the self-braiding
        SparseVec vec;            // bracket coordinates in layer |word|
    };
    std::vector<Root> roots;  // sorted by word, lexicographically ascending

    int rank() const { return (int)roots.size(); }
    std::string str() const;
    std::string serialize() const;
};

// chi(alpha, beta) = prod q_{ij}^(alpha_i beta_j), the braiding bilinear form.
Scalar diagonal_chi(const Braiding& b, const std::vector<int>& alpha, const std::vector<int>& beta);

// Bracket of a Lyndon word as a word combination: [x] = e_x, [u] = [v][w] -
// chi(v,w) [w][v] along the standard (Shirshov) factorization u = vw.
std::vector<std::pair<Scalar, std::vector<int>>> lyndon_bracket(const Braiding& b,
                                                                const std::vector<int>& word);

// Extracts the roots by brute-force bracket evaluation over all Lyndon
// words up to the top degree; throws if the q-symbol product of the result
// does not reproduce the Hilbert series.
RootDatum lyndon_roots(const Algebra& A);

// Eigenvalue of the diagonal generator g_i on the root vector of alpha.
Scalar diagonal_action_eigenvalue(const Braiding& b, int i, const std::vector<int>& alpha);

// Product formula for an operator fixing every root with the given
// eigenvalues: prod (N_a)_{lambda_a t^|a|}.
TracePoly stabilizing_trace(const RootDatum& rd, const std::vector<Scalar>& eigenvalues, Field f);

// Root permutation induced by a letter operator, with the scalar on each
// root: Q [u_a] = scalar_a [u_{perm(a)}]. Throws when an image is not
// proportional to a root vector (the operator fails to normalize the
// root system).
struct RootAction {
    std::vector<int> perm;
    std::vector<Scalar> scalar;
};
RootAction root_action(const Algebra& A, const RootDatum& rd, const LetterOperator& Q);

// Orbit product formula: per Q-orbit, (N_A)_{q_A lambda_A t^|A|} with q_A
// the braiding factor of the orbit cycle collected along a reduced
// expression of the sorting permutation.
TracePoly orbit_trace(const Braiding& b, const RootDatum& rd, const RootAction& act, Field f);

// The braiding factor alone (exposed so tests can compare two reduced
// expressions of the same cycle).
Scalar orbit_braiding_factor(const Braiding& b, const RootDatum& rd, const std::vector<int>& orbit,
                             const RootAction& act, bool alternate_expression = false);

}  // namespace nichols
