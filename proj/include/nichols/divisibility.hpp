#pragma once

#include <string>
#include <vector>

#include "nichols/algebra.hpp"
#include "nichols/traces.hpp"

namespace nichols {

// Opposite skew derivations, layer n -> layer n-1 per letter:
//   dop_x(e_y v) = delta_{x,y} v + q_{y,z} e_y dop_z(v),  y|>z = x.
// The recursion couples the letters, so they are computed jointly;
// cols[n][j] holds the image of basis word j of layer n.
struct OpDerivation {
    std::vector<std::vector<SparseVec>> cols;
    SparseVec apply(int n, const SparseVec& v) const;
};
std::vector<OpDerivation> op_derivations(const Algebra& A);

// Minimal m with 1 + q + .. + q^(m-1) = 0 for the (constant) diagonal
// self-braiding q; asserts every cocycle entry is an m-th root of unity.
unsigned sector_order(const Algebra& A);

// The shift v -> dop_x^(m-1)(v) + e_x v, assembled per total-degree-mod-m
// sector and verified to be a bijection between consecutive sectors.
struct XiShift {
    unsigned modulus;
    int letter;
    std::vector<std::vector<int>> sector_layers;        // layers per residue
    std::vector<std::vector<std::vector<Scalar>>> mat;  // mat[j]: sector j -> j+1, column-major
    // Image of a vector supported on one layer; the result mixes the two
    // target layers inside sector (n+1) mod m.
    static XiShift compute(const Algebra& A, int letter);
};

// Applies xi_x to a single-layer vector, returning per-layer components
// (degree n-m+1 and n+1 parts, either possibly absent).
std::vector<std::pair<int, SparseVec>> xi_apply(const Algebra& A, const OpDerivation& dop,
                                                unsigned m, int letter, int n, const SparseVec& v);

// Checks g . xi_x == lambda * xi_x . g on every computed layer.
bool xi_commutes(const Algebra& A, int letter, const LetterOperator& g, const Scalar& lambda);

// Sector sums of a polynomial: s_j = sum of coefficients in degrees = j mod k.
std::vector<Scalar> sector_sums(const TracePoly& p, unsigned k);
// Balancedness: s_{j+1} = lambda s_j cyclically.
bool balanced(const TracePoly& p, unsigned k, const Scalar& lambda);

struct DivisibilityLine {
    std::string label;
    bool divides;
    TracePoly quotient;
};
DivisibilityLine divisibility_check(const TracePoly& trace, const TracePoly& divisor,
                                    const std::string& label);

// dim of the joint kernel of the derivations of the given letters on one layer.
long joint_kernel_dim(const Algebra& A, const std::vector<int>& letters, int layer);

// Orbit of the unit under the group generated by all shifts xi_x spans the
// whole algebra (checked by incremental span growth).
bool xi_orbit_spans(const Algebra& A);

}  // namespace nichols
