#pragma once

#include <optional>
#include <vector>

#include "nichols/scalar.hpp"

namespace nichols {

// Sparse vector: (index, value) pairs, strictly ascending indices, no zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sparse_unit(int i, Field f);
void sparse_axpy(SparseVec& dst, const Scalar& c, const SparseVec& src);  // dst += c*src
SparseVec sparse_scale(const SparseVec& v, const Scalar& c);
std::vector<Scalar> sparse_to_dense(const SparseVec& v, int n, Field f);
SparseVec dense_to_sparse(const std::vector<Scalar>& v);

// Incremental reduced row echelon form over the coefficient field, with an
// expression for every row in terms of the accepted (independent) inputs.
// Pivot columns are chosen by smallest coefficient height, ties broken by
// first column, and scaled to one; rows are kept mutually reduced.
class Echelon {
public:
    explicit Echelon(Field f, int width) : f_(f), width_(width) {}

    struct Insert {
        bool independent;
        SparseVec expr;  // dependent: coordinates over accepted ids
    };
    // Consumes v. id is the caller's label for this vector if accepted.
    Insert insert(std::vector<Scalar> v, int id);
    // Reduction-only query: coordinates if in the span.
    std::optional<SparseVec> coordinates(std::vector<Scalar> v) const;

    int rank() const { return (int)rows_.size(); }
    bool contains(const std::vector<Scalar>& v) const;

private:
    struct Row {
        int pivot;
        std::vector<Scalar> v;  // dense, v[pivot] == 1
        SparseVec expr;
    };
    void reduce(std::vector<Scalar>& v, SparseVec& expr) const;
    Field f_;
    int width_;
    std::vector<Row> rows_;
};

// Rank of a set of dense vectors (no bookkeeping).
int dense_rank(Field f, std::vector<std::vector<Scalar>> rows);

}  // namespace nichols
