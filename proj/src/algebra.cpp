#include "nichols/algebra.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <mutex>

#include "nichols/cache.hpp"

namespace nichols {

namespace {

// Stacked derivation image of the candidate e_x * w_i in degree n >= 1:
// block y holds the coordinates (in layer n-1) of the y-th derivation,
//   d_y(e_x w) = delta_{x,y} w + q_{y,x} e_{y|>x} d_y(w).
std::vector<Scalar> candidate_image(const Algebra& A, const Braiding& b,
                                    const Layer& prev, int n, int x, int i) {
    Field f = b.field();
    const int m = b.letters();
    const int dp = prev.dim();
    std::vector<Scalar> img((size_t)m * dp, Scalar::zero(f));
    img[(size_t)x * dp + i] += Scalar::one(f);
    if (n >= 2) {
        for (int y = 0; y < m; ++y) {
            const SparseVec& dw = prev.der[y][i];
            if (dw.empty())
                continue;
            SparseVec lifted = A.left_mul(b.rack(y, x), n - 2, dw);
            const Scalar& q = b.q(y, x);
            for (const auto& [k, v] : lifted)
                img[(size_t)y * dp + k] += q * v;
        }
    }
    return img;
}

}  // namespace

int Algebra::top_degree() const {
    check(complete_, "algebra is not complete");
    return (int)dims_.size() - 1;
}

long Algebra::dimension() const {
    check(complete_, "algebra is not complete");
    long s = 0;
    for (long d : dims_)
        s += d;
    return s;
}

IntPoly Algebra::hilbert_int() const {
    return dims_;
}

TracePoly Algebra::hilbert(Field f) const {
    return ipoly_to_trace(f, dims_);
}

std::vector<int> Algebra::basis_word(int degree, int j) const {
    std::vector<int> w;
    for (int n = degree; n >= 1; --n) {
        w.push_back(layers_[n].words[j].first);
        j = layers_[n].words[j].second;
    }
    return w;
}

SparseVec Algebra::left_mul(int x, int n, const SparseVec& v) const {
    const Layer& next = layers_[n + 1];
    const int dp = layers_[n].dim();
    SparseVec acc;
    for (const auto& [i, c] : v)
        sparse_axpy(acc, c, next.red[(size_t)x * dp + i]);
    return acc;
}

SparseVec Algebra::reduce_word(const std::vector<int>& word) const {
    check((int)word.size() <= computed_degree(), "word degree beyond computed layers");
    SparseVec v = sparse_unit(0, field());
    int n = 0;
    for (size_t pos = word.size(); pos-- > 0;) {
        v = left_mul(word[pos], n, v);
        ++n;
        if (v.empty())
            return v;
    }
    return v;
}

SparseVec Algebra::reduce_combination(
    const std::vector<std::pair<Scalar, std::vector<int>>>& terms) const {
    SparseVec acc;
    for (const auto& [c, w] : terms)
        sparse_axpy(acc, c, reduce_word(w));
    return acc;
}

Algebra Algebra::build(const Braiding& b, const BuildOptions& opts) {
    Algebra A;
    A.b_ = b;
    Field f = b.field();
    const int m = b.letters();
    check(opts.max_degree >= 1, "degree cap must be >= 1");

    if (!opts.cache_file.empty() && cache_load(A, opts.cache_file)) {
        if (A.complete_ || A.computed_degree() >= opts.max_degree)
            return A;
    }
    if (A.layers_.empty()) {
        Layer l0;
        l0.degree = 0;
        l0.words.push_back({-1, -1});
        A.layers_.push_back(std::move(l0));
        A.dims_ = {1};
    }

    while (!A.complete_ && A.computed_degree() < opts.max_degree) {
        const int n = A.computed_degree() + 1;
        const Layer& prev = A.layers_.back();
        const int dp = prev.dim();
        Layer cur;
        cur.degree = n;
        const int candidates = m * dp;
        auto t0 = std::chrono::steady_clock::now();

        // candidate images, computable independently
        std::vector<std::vector<Scalar>> images((size_t)candidates);
        parallel_for((size_t)candidates, opts.threads, [&](size_t c) {
            int x = (int)(c / dp), i = (int)(c % dp);
            images[c] = candidate_image(A, b, prev, n, x, i);
        });

        // greedy-lexicographic basis selection over candidates
        Echelon ech(f, m * dp);
        cur.red.resize(candidates);
        std::vector<int> basis_candidate;
        for (int c = 0; c < candidates; ++c) {
            auto res = ech.insert(std::move(images[c]), (int)basis_candidate.size());
            if (res.independent) {
                cur.red[c] = sparse_unit((int)basis_candidate.size(), f);
                basis_candidate.push_back(c);
            } else {
                cur.red[c] = std::move(res.expr);
            }
        }
        images.clear();
        for (int c : basis_candidate)
            cur.words.push_back({c / dp, c % dp});

        // derivation matrices of the new basis words
        const int dn = (int)cur.words.size();
        cur.der.assign(m, std::vector<SparseVec>(dn));
        for (int j = 0; j < dn; ++j) {
            auto [x, i] = cur.words[j];
            for (int y = 0; y < m; ++y) {
                SparseVec col;
                if (y == x)
                    col = sparse_unit(i, f);
                if (n >= 2) {
                    const SparseVec& dw = prev.der[y][i];
                    if (!dw.empty()) {
                        SparseVec lifted = A.left_mul(b.rack(y, x), n - 2, dw);
                        sparse_axpy(col, b.q(y, x), lifted);
                    }
                }
                cur.der[y][j] = std::move(col);
            }
        }

        A.dims_.push_back(dn);
        A.layers_.push_back(std::move(cur));
        if (dn == 0) {
            A.complete_ = true;
            A.dims_.pop_back();
            A.layers_.pop_back();
        }
        if (opts.progress) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            std::fprintf(stderr, "  layer %d: dim %d (%lld ms)\n", n, dn, (long long)ms);
        }
        if (!opts.cache_file.empty())
            cache_store(A, opts.cache_file);
    }
    return A;
}

long symmetrizer_rank(const Braiding& b, int n, long cap) {
    Field f = b.field();
    const int m = b.letters();
    check(n >= 0, "negative degree");
    if (n == 0)
        return 1;
    long dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= m;
        check(dim <= cap, "symmetrizer size cap exceeded");
    }
    // Index of a word = sum word[i]*m^(n-1-i).
    auto index_of = [&](const std::vector<int>& w) {
        long idx = 0;
        for (int x : w)
            idx = idx * m + x;
        return idx;
    };
    // All permutations with a reduced word (adjacent transpositions sorting
    // one-line notation by bubble sort; swap count = inversion count).
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    std::vector<std::vector<Scalar>> rows((size_t)dim);
    std::vector<int> word(n);
    do {
        std::vector<int> reduced;  // positions of adjacent swaps
        {
            std::vector<int> a = perm;
            bool moved = true;
            while (moved) {
                moved = false;
                for (int i = 0; i + 1 < n; ++i)
                    if (a[i] > a[i + 1]) {
                        std::swap(a[i], a[i + 1]);
                        reduced.push_back(i);
                        moved = true;
                    }
            }
        }
        // Apply the braid lift T_{i1}..T_{ik} of the reduced word to every
        // basis word; each T_i sends a word to a scalar multiple of a word.
        for (long w0 = 0; w0 < dim; ++w0) {
            long tmp = w0;
            for (int i = n - 1; i >= 0; --i) {
                word[i] = (int)(tmp % m);
                tmp /= m;
            }
            Scalar coef = Scalar::one(f);
            for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
                int pos = *it;
                int x = word[pos], y = word[pos + 1];
                coef *= b.q(x, y);
                word[pos] = b.rack(x, y);
                word[pos + 1] = x;
            }
            if (rows[w0].empty())
                rows[w0].assign(dim, Scalar::zero(f));
            rows[w0][index_of(word)] += coef;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return dense_rank(f, std::move(rows));
}

}  // namespace nichols
