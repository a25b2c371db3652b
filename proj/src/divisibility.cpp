#include "nichols/divisibility.hpp"

#include <algorithm>

namespace nichols {

std::vector<OpDerivation> op_derivations(const Algebra& A) {
    const Braiding& b = A.braiding();
    Field f = A.field();
    const int m = b.letters();
    std::vector<OpDerivation> D(m);
    for (int x = 0; x < m; ++x) {
        D[x].cols.resize(A.computed_degree() + 1);
        D[x].cols[0] = {SparseVec{}};
    }
    for (int n = 1; n <= A.computed_degree(); ++n) {
        const Layer& l = A.layer(n);
        for (int x = 0; x < m; ++x)
            D[x].cols[n].resize(l.dim());
        for (int j = 0; j < l.dim(); ++j) {
            auto [y, i] = l.words[j];
            for (int x = 0; x < m; ++x) {
                SparseVec col;
                if (y == x)
                    col = sparse_unit(i, f);
                if (n >= 2) {
                    int z = b.rack_inv(y, x);  // y |> z = x
                    const SparseVec& sub = D[z].cols[n - 1][i];
                    if (!sub.empty()) {
                        SparseVec lifted = A.left_mul(y, n - 2, sub);
                        sparse_axpy(col, b.q(y, z), lifted);
                    }
                }
                D[x].cols[n][j] = std::move(col);
            }
        }
    }
    return D;
}

SparseVec OpDerivation::apply(int n, const SparseVec& v) const {
    SparseVec out;
    for (const auto& [i, c] : v)
        sparse_axpy(out, c, cols[n][i]);
    return out;
}

unsigned sector_order(const Algebra& A) {
    const Braiding& b = A.braiding();
    Field f = A.field();
    Scalar q = b.q(0, 0);
    for (int x = 1; x < b.letters(); ++x)
        check(b.q(x, x) == q, "diagonal self-braiding is not constant");
    Scalar acc = Scalar::one(f);
    Scalar sum = Scalar::zero(f);
    unsigned m = 0;
    for (unsigned k = 1; k <= 512; ++k) {
        sum += acc;
        acc *= q;
        if (sum.is_zero()) {
            m = k;
            break;
        }
    }
    check(m != 0, "self-braiding has no finite order");
    for (int x = 0; x < b.letters(); ++x)
        for (int y = 0; y < b.letters(); ++y)
            check(b.q(x, y).pow(m).is_one(), "cocycle entry is not an m-th root of unity");
    return m;
}

std::vector<std::pair<int, SparseVec>> xi_apply(const Algebra& A, const OpDerivation& dop,
                                                unsigned m, int letter, int n, const SparseVec& v) {
    std::vector<std::pair<int, SparseVec>> out;
    // (dop)^(m-1) lowers the degree by m-1
    if (n >= (int)m - 1) {
        SparseVec w = v;
        for (unsigned s = 0; s < m - 1; ++s)
            w = dop.apply(n - (int)s, w);
        if (!w.empty())
            out.push_back({n - (int)m + 1, std::move(w)});
    }
    if (n + 1 <= A.computed_degree()) {
        SparseVec w = A.left_mul(letter, n, v);
        if (!w.empty())
            out.push_back({n + 1, std::move(w)});
    }
    return out;
}

XiShift XiShift::compute(const Algebra& A, int letter) {
    check(A.complete(), "sector maps need a complete algebra");
    Field f = A.field();
    const unsigned m = sector_order(A);
    XiShift xi;
    xi.modulus = m;
    xi.letter = letter;
    xi.sector_layers.assign(m, {});
    const int L = A.top_degree();
    for (int n = 0; n <= L; ++n)
        xi.sector_layers[n % m].push_back(n);
    std::vector<long> sector_dim(m, 0), sector_base_of_layer(L + 1, 0);
    for (unsigned j = 0; j < m; ++j)
        for (int n : xi.sector_layers[j]) {
            sector_base_of_layer[n] = sector_dim[j];
            sector_dim[j] += A.layer(n).dim();
        }
    OpDerivation dop = op_derivations(A)[letter];
    xi.mat.resize(m);
    for (unsigned j = 0; j < m; ++j) {
        unsigned jn = (j + 1) % m;
        xi.mat[j].assign(sector_dim[j],
                         std::vector<Scalar>(sector_dim[jn], Scalar::zero(f)));
        long col = 0;
        for (int n : xi.sector_layers[j]) {
            for (int i = 0; i < A.layer(n).dim(); ++i, ++col) {
                auto parts = xi_apply(A, dop, m, letter, n, sparse_unit(i, f));
                for (const auto& [deg, vec] : parts) {
                    check(deg % (int)m == (int)jn, "sector shift landed off-sector (internal)");
                    for (const auto& [row, val] : vec)
                        xi.mat[j][col][sector_base_of_layer[deg] + row] += val;
                }
            }
        }
        check(sector_dim[j] == sector_dim[jn],
              "sector dimensions differ; shift cannot be bijective");
        check(dense_rank(f, xi.mat[j]) == (int)sector_dim[j],
              "sector shift is not bijective (engine bug)");
    }
    return xi;
}

bool xi_commutes(const Algebra& A, int letter, const LetterOperator& g, const Scalar& lambda) {
    Field f = A.field();
    const unsigned m = sector_order(A);
    OpDerivation dop = op_derivations(A)[letter];
    ActionMatrices act = ActionMatrices::compute(A, g, A.computed_degree());
    for (int n = 0; n <= A.computed_degree(); ++n) {
        for (int i = 0; i < A.layer(n).dim(); ++i) {
            SparseVec unit = sparse_unit(i, f);
            // g(xi(v)) vs lambda * xi(g(v))
            auto lhs_parts = xi_apply(A, dop, m, letter, n, unit);
            std::vector<std::pair<int, SparseVec>> lhs;
            for (auto& [deg, vec] : lhs_parts)
                if (deg <= A.computed_degree())
                    lhs.push_back({deg, act.apply(deg, vec)});
            SparseVec gv = act.apply(n, unit);
            auto rhs_parts = xi_apply(A, dop, m, letter, n, gv);
            std::vector<std::pair<int, SparseVec>> rhs;
            for (auto& [deg, vec] : rhs_parts)
                if (deg <= A.computed_degree())
                    rhs.push_back({deg, sparse_scale(vec, lambda)});
            auto collect = [&](std::vector<std::pair<int, SparseVec>>& parts) {
                std::sort(parts.begin(), parts.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                return parts;
            };
            auto L = collect(lhs), R = collect(rhs);
            if (L.size() != R.size())
                return false;
            for (size_t k = 0; k < L.size(); ++k) {
                if (L[k].first != R[k].first || L[k].second.size() != R[k].second.size())
                    return false;
                for (size_t e = 0; e < L[k].second.size(); ++e)
                    if (L[k].second[e].first != R[k].second[e].first ||
                        L[k].second[e].second != R[k].second[e].second)
                        return false;
            }
        }
    }
    return true;
}

std::vector<Scalar> sector_sums(const TracePoly& p, unsigned k) {
    Field f = p.field();
    std::vector<Scalar> s(k, Scalar::zero(f));
    for (int i = 0; i <= p.degree(); ++i)
        s[i % k] += p.coeff(i);
    return s;
}

bool balanced(const TracePoly& p, unsigned k, const Scalar& lambda) {
    auto s = sector_sums(p, k);
    for (unsigned j = 0; j < k; ++j)
        if (!(s[(j + 1) % k] == lambda * s[j]))
            return false;
    return true;
}

DivisibilityLine divisibility_check(const TracePoly& trace, const TracePoly& divisor,
                                    const std::string& label) {
    auto [quot, exact] = trace.exact_div(divisor);
    return {label, exact, quot};
}

long joint_kernel_dim(const Algebra& A, const std::vector<int>& letters, int layer) {
    if (layer == 0)
        return 1;
    Field f = A.field();
    const Layer& l = A.layer(layer);
    const int dp = A.layer(layer - 1).dim();
    // stack the derivation images of the basis words; kernel dim = dim - rank
    std::vector<std::vector<Scalar>> rows(l.dim());
    for (int j = 0; j < l.dim(); ++j) {
        rows[j].assign((size_t)letters.size() * dp, Scalar::zero(f));
        for (size_t yi = 0; yi < letters.size(); ++yi)
            for (const auto& [k, v] : l.der[letters[yi]][j])
                rows[j][yi * dp + k] = v;
    }
    return l.dim() - dense_rank(f, std::move(rows));
}

bool xi_orbit_spans(const Algebra& A) {
    check(A.complete(), "span check needs a complete algebra");
    Field f = A.field();
    const unsigned m = sector_order(A);
    const int L = A.top_degree();
    std::vector<long> base(L + 1, 0);
    long total = 0;
    for (int n = 0; n <= L; ++n) {
        base[n] = total;
        total += A.layer(n).dim();
    }
    std::vector<OpDerivation> dops = op_derivations(A);
    // vectors in the full space, grown by applying every xi_x
    Echelon span(f, (int)total);
    std::vector<std::vector<std::pair<int, SparseVec>>> frontier;
    auto add = [&](std::vector<std::pair<int, SparseVec>> parts) {
        std::vector<Scalar> dense(total, Scalar::zero(f));
        for (const auto& [deg, vec] : parts)
            for (const auto& [i, v] : vec)
                dense[base[deg] + i] += v;
        if (span.insert(std::move(dense), span.rank()).independent)
            frontier.push_back(std::move(parts));
    };
    add({{0, sparse_unit(0, f)}});
    for (size_t i = 0; i < frontier.size() && span.rank() < (int)total; ++i) {
        auto current = frontier[i];
        for (int x = 0; x < A.braiding().letters(); ++x) {
            std::vector<std::pair<int, SparseVec>> image;
            for (const auto& [deg, vec] : current)
                for (auto& [d2, v2] : xi_apply(A, dops[x], m, x, deg, vec)) {
                    bool merged = false;
                    for (auto& [d3, v3] : image)
                        if (d3 == d2) {
                            sparse_axpy(v3, Scalar::one(f), v2);
                            merged = true;
                        }
                    if (!merged)
                        image.push_back({d2, std::move(v2)});
                }
            add(std::move(image));
        }
    }
    return span.rank() == (int)total;
}

}  // namespace nichols
