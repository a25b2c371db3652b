#include "nichols/traces.hpp"

namespace nichols {

ActionMatrices ActionMatrices::compute(const Algebra& A, const LetterOperator& Q,
                                       int up_to_degree, unsigned threads) {
    check(up_to_degree <= A.computed_degree(), "layers incomplete beyond requested degree");
    Field f = A.field();
    ActionMatrices M;
    M.cols.resize(up_to_degree + 1);
    M.cols[0] = {sparse_unit(0, f)};
    for (int n = 1; n <= up_to_degree; ++n) {
        const Layer& l = A.layer(n);
        M.cols[n].resize(l.dim());
        parallel_for((size_t)l.dim(), threads, [&](size_t j) {
            auto [x, i] = l.words[j];
            SparseVec img = A.left_mul(Q.sigma[x], n - 1, M.cols[n - 1][i]);
            M.cols[n][j] = sparse_scale(img, Q.lambda[x]);
        });
    }
    return M;
}

Scalar ActionMatrices::trace(int n, Field f) const {
    Scalar t = Scalar::zero(f);
    for (size_t j = 0; j < cols[n].size(); ++j) {
        for (const auto& [i, v] : cols[n][j])
            if (i == (int)j) {
                t += v;
                break;
            }
    }
    return t;
}

SparseVec ActionMatrices::apply(int n, const SparseVec& v) const {
    SparseVec out;
    for (const auto& [i, c] : v)
        sparse_axpy(out, c, cols[n][i]);
    return out;
}

TracePoly graded_trace_partial(const Algebra& A, const LetterOperator& Q, int up_to_degree,
                               unsigned threads) {
    Field f = A.field();
    ActionMatrices M = ActionMatrices::compute(A, Q, up_to_degree, threads);
    std::vector<Scalar> c;
    c.reserve(up_to_degree + 1);
    for (int n = 0; n <= up_to_degree; ++n)
        c.push_back(M.trace(n, f));
    return TracePoly(f, std::move(c));
}

GradedTraceReport graded_trace(const Algebra& A, const LetterOperator& Q,
                               const std::string& label, unsigned threads) {
    check(A.complete(), "layers incomplete beyond requested degree");
    Field f = A.field();
    ActionMatrices M = ActionMatrices::compute(A, Q, A.top_degree(), threads);
    GradedTraceReport rep;
    rep.label = label;
    std::vector<Scalar> c;
    for (int n = 0; n <= A.top_degree(); ++n)
        c.push_back(M.trace(n, f));
    rep.trace = TracePoly(f, std::move(c));
    rep.at_one = rep.trace.at_one();
    if (A.layer(A.top_degree()).dim() == 1) {
        const SparseVec& col = M.cols[A.top_degree()][0];
        check(col.size() == 1 && col[0].first == 0, "top layer action is not scalar (internal)");
        rep.top_scalar = col[0].second;
    }
    return rep;
}

PoincareResult poincare_check(const Algebra& A, const LetterOperator& Q, unsigned threads) {
    check(A.complete(), "poincare check needs a complete algebra");
    const int L = A.top_degree();
    check(A.layer(L).dim() == 1, "top layer is not one-dimensional");
    GradedTraceReport fwd = graded_trace(A, Q, "", threads);
    GradedTraceReport bwd = graded_trace(A, Q.inverse(A.braiding()), "", threads);
    Scalar lambda = *fwd.top_scalar;
    // trace_Q(t) == lambda * t^L * trace_{Q^-1}(t^-1)
    TracePoly rhs = bwd.trace.reversed(L) * lambda;
    return {lambda, fwd.trace == rhs};
}

TracePoly duality_completion(const TracePoly& lower_q, const TracePoly& lower_qinv,
                             const Scalar& lambda, int L) {
    Field f = lower_q.field();
    const int half = L / 2;
    check(lower_q.degree() <= L && lower_qinv.degree() <= L, "lower traces exceed top degree");
    std::vector<Scalar> c(L + 1, Scalar::zero(f));
    for (int l = 0; l <= half; ++l)
        c[l] = lower_q.coeff(l);
    for (int l = half + 1; l <= L; ++l)
        c[l] = lambda * lower_qinv.coeff(L - l);
    if (L % 2 == 0)
        check(lower_q.coeff(half) == lambda * lower_qinv.coeff(half),
              "duality completion: middle coefficient mismatch");
    return TracePoly(f, std::move(c));
}

}  // namespace nichols
