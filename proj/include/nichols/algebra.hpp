#pragma once

#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/linalg.hpp"
#include "nichols/tracepoly.hpp"

namespace nichols {

// One homogeneous layer: a chosen word basis together with the data needed
// to fold products and derivations through it.
//   words[j]  = (x, i): basis word j is the letter x times basis word i of
//               the previous layer (layer 0: the empty word).
//   red[x*dim_prev + i] = coordinates of e_x * w_i in this layer's basis.
//   der[y][j] = coordinates of the y-th skew derivation of basis word j in
//               the previous layer's basis.
struct Layer {
    int degree = 0;
    std::vector<std::pair<int, int>> words;
    std::vector<SparseVec> red;
    std::vector<std::vector<SparseVec>> der;
    int dim() const { return (int)words.size(); }
};

struct BuildOptions {
    int max_degree = 24;
    unsigned threads = 1;
    std::string cache_file;  // empty: no caching
    bool progress = false;
};

// The graded algebra generated by the letters, cut out degree by degree as
// the image of the stacked skew-derivation map: a degree-n combination
// vanishes iff all derivations send it to zero in degree n-1. Basis words
// are the greedy-lexicographic independent candidates e_x * w.
class Algebra {
public:
    static Algebra build(const Braiding& b, const BuildOptions& opts = {});

    const Braiding& braiding() const { return b_; }
    Field field() const { return b_.field(); }
    int computed_degree() const { return (int)layers_.size() - 1; }
    bool complete() const { return complete_; }
    int top_degree() const;  // requires complete()
    const Layer& layer(int n) const { return layers_[n]; }
    const std::vector<long>& dims() const { return dims_; }
    long dimension() const;  // requires complete()

    IntPoly hilbert_int() const;
    TracePoly hilbert(Field f) const;  // dims cast into the field

    // Letter sequence of a basis word, leftmost factor first.
    std::vector<int> basis_word(int degree, int j) const;
    // Coordinates of an arbitrary word in layer |word|.
    SparseVec reduce_word(const std::vector<int>& word) const;
    // Coordinates of e_x * v for v in layer n, landing in layer n+1.
    SparseVec left_mul(int x, int n, const SparseVec& v) const;
    // Reduction of a scalar combination of words (all of one degree).
    SparseVec reduce_combination(const std::vector<std::pair<Scalar, std::vector<int>>>& terms) const;

private:
    friend struct CacheIO;
    Braiding b_;
    std::vector<Layer> layers_;
    std::vector<long> dims_;
    bool complete_ = false;
};

// Rank of the n-th quantum symmetrizer on the n-fold tensor power of the
// letter space; an implementation-independent oracle for layer dimensions.
// Guarded by letters^n <= cap.
long symmetrizer_rank(const Braiding& b, int n, long cap = 20736);

}  // namespace nichols
