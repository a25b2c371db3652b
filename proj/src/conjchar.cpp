#include "nichols/conjchar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace nichols {

IntPoly conj_graded_character(const FiniteGroup& G, const AbelianDecomposition& dec, int g) {
    IntPoly chi;
    for (int h : G.centralizer(g)) {
        int d = dec.grade(h);
        if ((int)chi.size() <= d)
            chi.resize(d + 1, 0);
        ++chi[d];
    }
    return chi;
}

IntPoly conj_graded_character_with(const FiniteGroup& G, const std::vector<int>& grade, int g) {
    IntPoly chi;
    for (int h : G.centralizer(g)) {
        int d = grade[h];
        if ((int)chi.size() <= d)
            chi.resize(d + 1, 0);
        ++chi[d];
    }
    return chi;
}

IntPoly ToyPrediction::expand() const {
    IntPoly acc{multiplier};
    for (auto [count, power] : symbols) {
        IntPoly sym((count - 1) * power + 1, 0);
        for (int j = 0; j < count; ++j)
            sym[j * power] = 1;
        acc = ipoly_mul(acc, sym);
    }
    return acc;
}

std::string ToyPrediction::str() const {
    std::ostringstream os;
    os << multiplier;
    for (auto [count, power] : symbols) {
        os << " (" << count << ")_{t";
        if (power > 1)
            os << "^" << power;
        os << "}";
    }
    return os.str();
}

namespace {

using Tuple = std::vector<int>;

Tuple tuple_add(const Tuple& a, const Tuple& b, const std::vector<int>& orders) {
    Tuple r(a.size());
    for (size_t j = 0; j < a.size(); ++j)
        r[j] = (a[j] + b[j]) % orders[j];
    return r;
}

int tuple_grade(const Tuple& a) {
    int s = 0;
    for (int c : a)
        s += c;
    return s;
}

int tuple_order(const Tuple& a, const std::vector<int>& orders) {
    Tuple zero(a.size(), 0);
    Tuple x = a;
    int k = 1;
    while (x != zero) {
        x = tuple_add(x, a, orders);
        ++k;
    }
    return k;
}

// Searches a cyclic decomposition of the subgroup whose grades are additive
// over the coefficient box; the expansion then factors exactly.
bool decompose_graded(const std::set<Tuple>& sub, const std::vector<int>& orders,
                      std::set<Tuple> span, std::vector<Tuple>& gens) {
    if (span.size() == sub.size())
        return true;
    // candidates outside the current span, smallest grade first
    std::vector<Tuple> cands;
    for (const auto& t : sub)
        if (!span.count(t))
            cands.push_back(t);
    std::sort(cands.begin(), cands.end(), [&](const Tuple& a, const Tuple& b) {
        int ga = tuple_grade(a), gb = tuple_grade(b);
        if (ga != gb)
            return ga < gb;
        return a < b;
    });
    for (const auto& cand : cands) {
        int ord = tuple_order(cand, orders);
        // box-additivity of the candidate against the existing span: every
        // multiple c*cand must have grade c*grade(cand), and the sums with
        // span elements must grade additively and be fresh
        bool ok = true;
        std::set<Tuple> next = span;
        Tuple zero(orders.size(), 0);
        Tuple mult = zero;
        for (int c = 1; c < ord && ok; ++c) {
            mult = tuple_add(mult, cand, orders);
            if (tuple_grade(mult) != c * tuple_grade(cand)) {
                ok = false;
                break;
            }
            for (const auto& s : span) {
                Tuple sum = tuple_add(s, mult, orders);
                if (!sub.count(sum) || next.count(sum) ||
                    tuple_grade(sum) != tuple_grade(s) + c * tuple_grade(cand)) {
                    ok = false;
                    break;
                }
                next.insert(sum);
            }
        }
        if (!ok)
            continue;
        gens.push_back(cand);
        if (decompose_graded(sub, orders, next, gens))
            return true;
        gens.pop_back();
    }
    return false;
}

}  // namespace

std::vector<int> toy_factor_indices(const FiniteGroup& G, const AbelianDecomposition& dec, int g) {
    std::vector<int> m(dec.factors());
    for (int j = 0; j < dec.factors(); ++j) {
        std::set<int> proj;
        for (int h : G.centralizer(g))
            proj.insert(dec.coords[h][j]);
        m[j] = dec.orders[j] / (int)proj.size();
    }
    return m;
}

ToyPrediction toy_prediction(const FiniteGroup& G, const AbelianDecomposition& dec, int g) {
    std::set<Tuple> sub;
    long kernel_count = 0;
    Tuple zero(dec.factors(), 0);
    for (int h : G.centralizer(g)) {
        sub.insert(dec.coords[h]);
        if (dec.coords[h] == zero)
            ++kernel_count;
    }
    ToyPrediction pred;
    pred.multiplier = kernel_count;
    std::vector<Tuple> gens;
    std::set<Tuple> span{zero};
    check(decompose_graded(sub, dec.orders, span, gens),
          "no grade-additive cyclic decomposition found");
    for (const auto& gen : gens) {
        int ord = tuple_order(gen, dec.orders);
        if (ord > 1)
            pred.symbols.push_back({ord, tuple_grade(gen)});
    }
    std::sort(pred.symbols.begin(), pred.symbols.end(),
              [](const auto& a, const auto& b) { return a.second != b.second ? a.second < b.second : a.first < b.first; });
    return pred;
}

std::vector<int> refined_grading(const FiniteGroup& G, const AbelianDecomposition& dec) {
    // kernel of pi = elements with zero coordinates
    std::vector<int> kernel;
    std::vector<int> zero(dec.factors(), 0);
    for (int h = 0; h < G.size(); ++h)
        if (dec.coords[h] == zero)
            kernel.push_back(h);
    // the kernel as a group in its own right
    std::vector<Perm> kperms;
    for (int h : kernel)
        kperms.push_back(G.perm(h));
    FiniteGroup K = FiniteGroup::from_generators(kperms);
    check(K.size() == (int)kernel.size(), "kernel closure mismatch (internal)");
    AbelianDecomposition kdec = abelianization(K);
    // right transversal: minimal element of each coset K*u
    std::vector<int> coset_rep(G.size(), -1);
    for (int u = 0; u < G.size(); ++u) {
        if (coset_rep[u] != -1)
            continue;
        std::vector<int> coset;
        for (int h : kernel)
            coset.push_back(G.mul(h, u));
        int rep = *std::min_element(coset.begin(), coset.end());
        for (int c : coset)
            coset_rep[c] = rep;
    }
    std::vector<int> grade(G.size(), 0);
    for (int u = 0; u < G.size(); ++u) {
        int r = coset_rep[u];
        int k_elem = G.mul(u, G.inv(r));  // u = k * r
        auto idx = K.element_by_perm(G.perm(k_elem));
        check(idx.has_value(), "transversal decomposition failed (internal)");
        grade[u] = kdec.grade(*idx) + dec.grade(r);
    }
    return grade;
}

}  // namespace nichols
