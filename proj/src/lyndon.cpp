#include "nichols/lyndon.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace nichols {

namespace {

bool is_lyndon(const std::vector<int>& w) {
    // strictly smaller than all proper rotations
    for (size_t r = 1; r < w.size(); ++r) {
        for (size_t i = 0; i < w.size(); ++i) {
            int a = w[i], b = w[(i + r) % w.size()];
            if (a != b) {
                if (a > b)
                    return false;
                break;
            }
            if (i + 1 == w.size())
                return false;  // equal rotation: not primitive
        }
    }
    return true;
}

std::vector<std::vector<int>> lyndon_words(int m, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<int> w;
    double total = 0;
    for (int len = 1; len <= max_len; ++len) {
        total += std::pow((double)m, len);
        check(total < 2e7, "root extraction cap exceeded");
        w.assign(len, 0);
        while (true) {
            if (is_lyndon(w))
                out.push_back(w);
            int i = len - 1;
            while (i >= 0 && w[i] == m - 1)
                w[i--] = 0;
            if (i < 0)
                break;
            ++w[i];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// longest proper Lyndon suffix, the standard factorization point
size_t shirshov_split(const std::vector<int>& w) {
    for (size_t start = 1; start < w.size(); ++start) {
        std::vector<int> suffix(w.begin() + start, w.end());
        if (is_lyndon(suffix))
            return start;
    }
    throw engine_error("no Lyndon factorization (internal)");
}

std::vector<int> word_alpha(int m, const std::vector<int>& w) {
    std::vector<int> a(m, 0);
    for (int x : w)
        ++a[x];
    return a;
}

using Combo = std::vector<std::pair<Scalar, std::vector<int>>>;

Combo combo_concat(const Combo& a, const Combo& b, const Scalar& scale, bool negate) {
    Combo out;
    for (const auto& [ca, wa] : a)
        for (const auto& [cb, wb] : b) {
            Scalar c = ca * cb * scale;
            if (negate)
                c = -c;
            std::vector<int> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.push_back({std::move(c), std::move(w)});
        }
    return out;
}

}  // namespace

Scalar diagonal_chi(const Braiding& b, const std::vector<int>& alpha, const std::vector<int>& beta) {
    Scalar out = Scalar::one(b.field());
    for (int i = 0; i < b.letters(); ++i)
        for (int j = 0; j < b.letters(); ++j) {
            long e = (long)alpha[i] * beta[j];
            if (e)
                out *= b.q(i, j).pow(e);
        }
    return out;
}

Combo lyndon_bracket(const Braiding& b, const std::vector<int>& word) {
    check(b.is_diagonal(), "lyndon brackets need a diagonal braiding");
    if (word.size() == 1)
        return {{Scalar::one(b.field()), word}};
    size_t split = shirshov_split(word);
    std::vector<int> v(word.begin(), word.begin() + split);
    std::vector<int> w(word.begin() + split, word.end());
    Combo bv = lyndon_bracket(b, v);
    Combo bw = lyndon_bracket(b, w);
    Scalar chi = diagonal_chi(b, word_alpha(b.letters(), v), word_alpha(b.letters(), w));
    Combo out = combo_concat(bv, bw, Scalar::one(b.field()), false);
    Combo twisted = combo_concat(bw, bv, chi, true);
    out.insert(out.end(), twisted.begin(), twisted.end());
    return out;
}

RootDatum lyndon_roots(const Algebra& A) {
    const Braiding& b = A.braiding();
    check(b.is_diagonal(), "root extraction needs a diagonal braiding");
    check(A.complete(), "root extraction needs a complete algebra");
    Field f = b.field();
    const int L = A.top_degree();
    RootDatum rd;
    for (const auto& w : lyndon_words(b.letters(), L)) {
        SparseVec vec = A.reduce_combination(lyndon_bracket(b, w));
        if (vec.empty())
            continue;
        RootDatum::Root r;
        r.word = w;
        r.alpha = word_alpha(b.letters(), w);
        Scalar self = diagonal_chi(b, r.alpha, r.alpha);
        unsigned ord = 0;
        // order of the self-braiding = truncation level of the root vector
        {
            Scalar acc = Scalar::one(f);
            Scalar sum = Scalar::zero(f);
            unsigned k = 0;
            for (k = 1; k <= 512; ++k) {
                sum += acc;
                acc *= self;
                if (sum.is_zero())
                    break;
            }
            check(k <= 512, "self-braiding has no finite truncation order");
            ord = k;
        }
        r.height = ord;
        r.vec = std::move(vec);
        rd.roots.push_back(std::move(r));
    }
    // completeness: the q-symbol product over the roots must give the
    // Hilbert series
    IntPoly prod{1};
    for (const auto& r : rd.roots) {
        int len = (int)r.word.size();
        IntPoly sym((r.height - 1) * len + 1, 0);
        for (unsigned j = 0; j < r.height; ++j)
            sym[j * len] = 1;
        prod = ipoly_mul(prod, sym);
    }
    check(prod == A.hilbert_int(), "root extraction is incomplete (PBW check failed)");
    return rd;
}

Scalar diagonal_action_eigenvalue(const Braiding& b, int i, const std::vector<int>& alpha) {
    Scalar out = Scalar::one(b.field());
    for (int j = 0; j < b.letters(); ++j)
        if (alpha[j])
            out *= b.q(i, j).pow(alpha[j]);
    return out;
}

TracePoly stabilizing_trace(const RootDatum& rd, const std::vector<Scalar>& eigenvalues, Field f) {
    check(eigenvalues.size() == rd.roots.size(), "one eigenvalue per root required");
    TracePoly acc = TracePoly::one(f);
    for (size_t a = 0; a < rd.roots.size(); ++a)
        acc *= qsymbol(f, rd.roots[a].height, eigenvalues[a], (unsigned)rd.roots[a].word.size());
    return acc;
}

namespace {

// image = ratio * target, or nothing
std::optional<Scalar> proportionality(const SparseVec& img, const SparseVec& target) {
    if (img.size() != target.size() || img.empty())
        return std::nullopt;
    if (img[0].first != target[0].first)
        return std::nullopt;
    Scalar ratio = img[0].second * target[0].second.inverse();
    for (size_t e = 0; e < img.size(); ++e)
        if (img[e].first != target[e].first || !(img[e].second == ratio * target[e].second))
            return std::nullopt;
    return ratio;
}

Combo apply_letterwise(const LetterOperator& Q, const Combo& combo) {
    Combo out;
    out.reserve(combo.size());
    for (const auto& [c, w] : combo) {
        Scalar coef = c;
        std::vector<int> img(w.size());
        for (size_t i = 0; i < w.size(); ++i) {
            coef *= Q.lambda[w[i]];
            img[i] = Q.sigma[w[i]];
        }
        out.push_back({std::move(coef), std::move(img)});
    }
    return out;
}

}  // namespace

RootAction root_action(const Algebra& A, const RootDatum& rd, const LetterOperator& Q) {
    const Braiding& b = A.braiding();
    Field f = A.field();

    // The permutation is forced on letter multiplicities: root alpha maps to
    // the root with the sigma-permuted degree vector.
    const int m = b.letters();
    RootAction act;
    act.perm.assign(rd.roots.size(), -1);
    act.scalar.assign(rd.roots.size(), Scalar::one(f));
    for (size_t a = 0; a < rd.roots.size(); ++a) {
        std::vector<int> target_alpha(m, 0);
        for (int x = 0; x < m; ++x)
            target_alpha[Q.sigma[x]] = rd.roots[a].alpha[x];
        int found = -1;
        for (size_t bidx = 0; bidx < rd.roots.size(); ++bidx)
            if (rd.roots[bidx].alpha == target_alpha) {
                check(found < 0, "root degree vectors are ambiguous");
                found = (int)bidx;
            }
        check(found >= 0 && rd.roots[found].height == rd.roots[a].height &&
                  rd.roots[found].word.size() == rd.roots[a].word.size(),
              "permutation does not preserve root invariants");
        act.perm[a] = found;
    }

    // Root vectors are re-bracketed compatibly with the operator: orbit
    // representatives get the Shirshov bracket built from already-adapted
    // shorter vectors, the rest of the orbit is transported through Q. The
    // orbit has to close onto a scalar multiple of its representative; that
    // ratio is the orbit scalar (it is independent of the vector choices)
    // and is carried on the orbit's closing edge.
    std::vector<Combo> adapted(rd.roots.size());
    std::vector<bool> assigned(rd.roots.size(), false);
    auto index_of_word = [&](const std::vector<int>& w) -> int {
        for (size_t i = 0; i < rd.roots.size(); ++i)
            if (rd.roots[i].word == w)
                return (int)i;
        return -1;
    };
    std::function<Combo(const std::vector<int>&)> bracket_adapted =
        [&](const std::vector<int>& word) -> Combo {
        int idx = index_of_word(word);
        if (idx >= 0 && assigned[idx])
            return adapted[idx];
        if (word.size() == 1)
            return {{Scalar::one(f), word}};
        size_t split = shirshov_split(word);
        std::vector<int> v(word.begin(), word.begin() + split);
        std::vector<int> w(word.begin() + split, word.end());
        Combo bv = bracket_adapted(v);
        Combo bw = bracket_adapted(w);
        Scalar chi = diagonal_chi(b, word_alpha(b.letters(), v), word_alpha(b.letters(), w));
        Combo out = combo_concat(bv, bw, Scalar::one(f), false);
        Combo twisted = combo_concat(bw, bv, chi, true);
        out.insert(out.end(), twisted.begin(), twisted.end());
        return out;
    };
    // shortest words first so orbit representatives see adapted children
    std::vector<int> order(rd.roots.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (rd.roots[x].word.size() != rd.roots[y].word.size())
            return rd.roots[x].word.size() < rd.roots[y].word.size();
        return rd.roots[x].word < rd.roots[y].word;
    });
    for (int start : order) {
        if (assigned[start])
            continue;
        Combo rep_combo = bracket_adapted(rd.roots[start].word);
        std::vector<int> cycle;
        int a = start;
        while (!assigned[a]) {
            assigned[a] = true;
            cycle.push_back(a);
            a = act.perm[a];
        }
        adapted[start] = std::move(rep_combo);
        for (size_t step = 1; step < cycle.size(); ++step)
            adapted[cycle[step]] = apply_letterwise(Q, adapted[cycle[step - 1]]);
        SparseVec closing = A.reduce_combination(apply_letterwise(Q, adapted[cycle.back()]));
        SparseVec base = A.reduce_combination(adapted[start]);
        check(!base.empty(), "adapted root vector vanished");
        auto ratio = proportionality(closing, base);
        check(ratio.has_value(),
              "operator image of a root vector is not proportional to a root vector");
        act.scalar[cycle.back()] = *ratio;
    }
    return act;
}

Scalar orbit_braiding_factor(const Braiding& b, const RootDatum& rd, const std::vector<int>& orbit,
                             const RootAction& act, bool alternate_expression) {
    // Positions hold the orbit's roots in PBW order (word-descending); the
    // operator replaces root a by perm(a); the factor collects the
    // braiding scalars of the adjacent swaps that re-sort the sequence.
    std::vector<int> sorted = orbit;
    std::sort(sorted.begin(), sorted.end(),
              [&](int a, int c) { return rd.roots[a].word > rd.roots[c].word; });
    std::vector<int> arr;
    for (int a : sorted)
        arr.push_back(act.perm[a]);
    Scalar factor = Scalar::one(b.field());
    auto swap_cost = [&](int u, int v) {
        factor *= diagonal_chi(b, rd.roots[u].alpha, rd.roots[v].alpha);
    };
    auto greater = [&](int u, int v) { return rd.roots[u].word > rd.roots[v].word; };
    bool moved = true;
    while (moved) {
        moved = false;
        if (!alternate_expression) {
            for (size_t j = 0; j + 1 < arr.size(); ++j)
                if (greater(arr[j + 1], arr[j])) {
                    swap_cost(arr[j], arr[j + 1]);
                    std::swap(arr[j], arr[j + 1]);
                    moved = true;
                }
        } else {
            for (size_t j = arr.size(); j-- > 1;)
                if (greater(arr[j], arr[j - 1])) {
                    swap_cost(arr[j - 1], arr[j]);
                    std::swap(arr[j - 1], arr[j]);
                    moved = true;
                }
        }
    }
    return factor;
}

TracePoly orbit_trace(const Braiding& b, const RootDatum& rd, const RootAction& act, Field f) {
    TracePoly acc = TracePoly::one(f);
    std::vector<bool> seen(rd.roots.size(), false);
    for (size_t start = 0; start < rd.roots.size(); ++start) {
        if (seen[start])
            continue;
        std::vector<int> orbit;
        int a = (int)start;
        Scalar lambda = Scalar::one(f);
        while (!seen[a]) {
            seen[a] = true;
            orbit.push_back(a);
            lambda *= act.scalar[a];
            a = act.perm[a];
        }
        unsigned count = rd.roots[start].height;
        unsigned span = (unsigned)(rd.roots[start].word.size() * orbit.size());
        Scalar qa = orbit_braiding_factor(b, rd, orbit, act);
        acc *= qsymbol(f, count, qa * lambda, span);
    }
    return acc;
}

std::string RootDatum::str() const {
    std::ostringstream os;
    for (const auto& r : roots) {
        os << "[";
        for (size_t i = 0; i < r.word.size(); ++i)
            os << (i ? " " : "") << r.word[i] + 1;
        os << "] height " << r.height << "\n";
    }
    return os.str();
}

std::string RootDatum::serialize() const {
    std::ostringstream os;
    os << "roots " << roots.size() << "\n";
    for (const auto& r : roots) {
        os << "word";
        for (int x : r.word)
            os << " " << x;
        os << "\nheight " << r.height << "\nvec ";
        bool first = true;
        for (const auto& [i, s] : r.vec) {
            os << (first ? "" : ";") << i << ":" << s.tuple();
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace nichols
