#include "nichols/linalg.hpp"

#include <algorithm>

namespace nichols {

SparseVec sparse_unit(int i, Field f) {
    return {{i, Scalar::one(f)}};
}

void sparse_axpy(SparseVec& dst, const Scalar& c, const SparseVec& src) {
    if (c.is_zero() || src.empty())
        return;
    SparseVec out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j >= src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(std::move(dst[i++]));
        } else if (i >= dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, c * src[j].second);
            if (out.back().second.is_zero())
                out.pop_back();
            ++j;
        } else {
            Scalar v = std::move(dst[i].second);
            v += c * src[j].second;
            if (!v.is_zero())
                out.emplace_back(dst[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

SparseVec sparse_scale(const SparseVec& v, const Scalar& c) {
    SparseVec out;
    if (c.is_zero())
        return out;
    out.reserve(v.size());
    for (const auto& [i, x] : v) {
        Scalar y = x * c;
        if (!y.is_zero())
            out.emplace_back(i, std::move(y));
    }
    return out;
}

std::vector<Scalar> sparse_to_dense(const SparseVec& v, int n, Field f) {
    std::vector<Scalar> out(n, Scalar::zero(f));
    for (const auto& [i, x] : v)
        out[i] = x;
    return out;
}

SparseVec dense_to_sparse(const std::vector<Scalar>& v) {
    SparseVec out;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            out.emplace_back((int)i, v[i]);
    return out;
}

void Echelon::reduce(std::vector<Scalar>& v, SparseVec& expr) const {
    // Rows are mutually reduced, so one pass suffices.
    for (const auto& row : rows_) {
        const Scalar& c = v[row.pivot];
        if (c.is_zero())
            continue;
        Scalar coef = c;  // v -= coef*row, expr += coef*row.expr
        for (size_t j = 0; j < row.v.size(); ++j) {
            if (!row.v[j].is_zero())
                v[j].sub_mul(coef, row.v[j]);
        }
        sparse_axpy(expr, coef, row.expr);
    }
}

Echelon::Insert Echelon::insert(std::vector<Scalar> v, int id) {
    check((int)v.size() == width_, "echelon width mismatch");
    SparseVec expr;
    reduce(v, expr);
    int pivot = -1;
    size_t best_height = 0;
    for (int j = 0; j < width_; ++j) {
        if (v[j].is_zero())
            continue;
        size_t h = v[j].height();
        if (pivot < 0 || h < best_height) {
            pivot = j;
            best_height = h;
        }
    }
    if (pivot < 0)
        return {false, std::move(expr)};
    Scalar piv_inv = v[pivot].inverse();
    for (auto& x : v)
        x *= piv_inv;
    // expression of the new row over accepted ids: (unit(id) - expr)/piv
    SparseVec new_expr = sparse_unit(id, f_);
    sparse_axpy(new_expr, -Scalar::one(f_), expr);
    new_expr = sparse_scale(new_expr, piv_inv);
    // keep previous rows reduced against the new pivot
    for (auto& row : rows_) {
        const Scalar c = row.v[pivot];
        if (c.is_zero())
            continue;
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero())
                row.v[j].sub_mul(c, v[j]);
        sparse_axpy(row.expr, -c, new_expr);
    }
    rows_.push_back(Row{pivot, std::move(v), std::move(new_expr)});
    return {true, {}};
}

std::optional<SparseVec> Echelon::coordinates(std::vector<Scalar> v) const {
    check((int)v.size() == width_, "echelon width mismatch");
    SparseVec expr;
    reduce(v, expr);
    for (const auto& x : v)
        if (!x.is_zero())
            return std::nullopt;
    return expr;
}

bool Echelon::contains(const std::vector<Scalar>& v) const {
    return coordinates(v).has_value();
}

int dense_rank(Field f, std::vector<std::vector<Scalar>> rows) {
    if (rows.empty())
        return 0;
    Echelon e(f, (int)rows[0].size());
    int id = 0;
    for (auto& r : rows)
        e.insert(std::move(r), id++);
    return e.rank();
}

}  // namespace nichols
