#include "nichols/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace nichols {

Perm perm_identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i)
        p[i] = i;
    return p;
}

Perm perm_compose(const Perm& f, const Perm& g) {
    check(f.size() == g.size(), "permutation size mismatch");
    Perm r(f.size());
    for (size_t x = 0; x < g.size(); ++x)
        r[x] = f[g[x]];
    return r;
}

Perm perm_inverse(const Perm& f) {
    Perm r(f.size());
    for (size_t x = 0; x < f.size(); ++x)
        r[f[x]] = (int)x;
    return r;
}

Perm perm_parse(const std::string& text, int n_points) {
    Perm p = perm_identity(n_points);
    std::string s = trim(text);
    if (s == "e" || s == "()" || s.empty())
        return p;
    size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && isspace((unsigned char)s[pos]))
            ++pos;
        if (pos >= s.size())
            break;
        check(s[pos] == '(', "expected '(' in permutation '" + text + "'");
        size_t close = s.find(')', pos);
        check(close != std::string::npos, "unbalanced cycle in '" + text + "'");
        std::string body = s.substr(pos + 1, close - pos - 1);
        for (auto& ch : body)
            if (ch == ',')
                ch = ' ';
        std::istringstream is(body);
        std::vector<int> cyc;
        int v;
        while (is >> v) {
            check(v >= 1 && v <= n_points, "cycle point out of range in '" + text + "'");
            cyc.push_back(v - 1);
        }
        Perm c = perm_identity(n_points);
        for (size_t i = 0; i < cyc.size(); ++i)
            c[cyc[i]] = cyc[(i + 1) % cyc.size()];
        p = perm_compose(c, p);
        pos = close + 1;
    }
    return p;
}

std::string perm_cycles(const Perm& f) {
    std::string out;
    std::vector<bool> seen(f.size(), false);
    for (size_t start = 0; start < f.size(); ++start) {
        if (seen[start] || f[start] == (int)start)
            continue;
        out += "(";
        size_t x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first)
                out += " ";
            first = false;
            out += std::to_string(x + 1);
            x = f[x];
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

FiniteGroup FiniteGroup::from_generators(const std::vector<Perm>& gens, size_t order_cap) {
    check(!gens.empty(), "no generators");
    size_t n = gens[0].size();
    for (const auto& g : gens)
        check(g.size() == n, "generators act on different point sets");
    FiniteGroup G;
    std::map<Perm, int> index;
    G.perms_.push_back(perm_identity((int)n));
    index[G.perms_[0]] = 0;
    for (size_t i = 0; i < G.perms_.size(); ++i) {
        for (const auto& g : gens) {
            Perm q = perm_compose(G.perms_[i], g);
            if (index.emplace(q, (int)G.perms_.size()).second) {
                G.perms_.push_back(q);
                check(G.perms_.size() <= order_cap, "group order exceeds cap");
            }
        }
    }
    int m = (int)G.perms_.size();
    G.mul_.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            G.mul_[a][b] = index.at(perm_compose(G.perms_[a], G.perms_[b]));
    G.inv_.assign(m, 0);
    for (int a = 0; a < m; ++a)
        G.inv_[a] = index.at(perm_inverse(G.perms_[a]));
    for (const auto& g : gens)
        G.gens_.push_back(index.at(g));
    return G;
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    int x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

int FiniteGroup::power(int a, long e) const {
    int ord = element_order(a);
    long r = e % ord;
    if (r < 0)
        r += ord;
    int acc = 0;
    for (long i = 0; i < r; ++i)
        acc = mul(acc, a);
    return acc;
}

std::string FiniteGroup::element_name(int a) const {
    return perm_cycles(perms_[a]);
}

std::optional<int> FiniteGroup::element_by_perm(const Perm& p) const {
    for (int i = 0; i < size(); ++i)
        if (perms_[i] == p)
            return i;
    return std::nullopt;
}

std::vector<int> FiniteGroup::conjugacy_class(int g) const {
    std::vector<bool> seen(size(), false);
    for (int t = 0; t < size(); ++t)
        seen[conjugate(t, g)] = true;
    std::vector<int> cls;
    for (int i = 0; i < size(); ++i)
        if (seen[i])
            cls.push_back(i);
    return cls;
}

std::vector<int> FiniteGroup::centralizer(int g) const {
    std::vector<int> c;
    for (int h = 0; h < size(); ++h)
        if (mul(g, h) == mul(h, g))
            c.push_back(h);
    return c;
}

std::vector<int> FiniteGroup::class_representatives() const {
    std::vector<bool> covered(size(), false);
    std::vector<int> reps;
    for (int g = 0; g < size(); ++g) {
        if (covered[g])
            continue;
        reps.push_back(g);
        for (int c : conjugacy_class(g))
            covered[c] = true;
    }
    return reps;
}

std::vector<int> FiniteGroup::subgroup_closure(std::vector<int> seed) const {
    std::vector<bool> in(size(), false);
    std::vector<int> queue;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = true;
            queue.push_back(x);
        }
    };
    add(0);
    for (int s : seed)
        add(s);
    for (size_t i = 0; i < queue.size(); ++i) {
        add(inv_[queue[i]]);
        for (size_t j = 0; j < queue.size(); ++j) {
            add(mul(queue[i], queue[j]));
            add(mul(queue[j], queue[i]));
        }
    }
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (in[i])
            out.push_back(i);
    return out;
}

std::vector<int> FiniteGroup::commutator_subgroup() const {
    std::vector<int> comms;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            comms.push_back(commutator(a, b));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroup_closure(comms);
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

int AbelianDecomposition::grade(int g) const {
    int s = 0;
    for (int c : coords[g])
        s += c;
    return s;
}

long AbelianDecomposition::quotient_size() const {
    long n = 1;
    for (int o : orders)
        n *= o;
    return n;
}

namespace {

// Quotient of G by a normal subgroup, as coset index per element plus a
// multiplication table on cosets.
struct Quotient {
    std::vector<int> coset_of;       // per G element
    std::vector<int> coset_rep;      // minimal representative
    std::vector<std::vector<int>> mul;
    int size() const { return (int)coset_rep.size(); }
};

Quotient make_quotient(const FiniteGroup& G, const std::vector<int>& normal) {
    std::vector<bool> in_n(G.size(), false);
    for (int x : normal)
        in_n[x] = true;
    Quotient q;
    q.coset_of.assign(G.size(), -1);
    for (int g = 0; g < G.size(); ++g) {
        if (q.coset_of[g] != -1)
            continue;
        int id = (int)q.coset_rep.size();
        q.coset_rep.push_back(g);
        for (int x : normal)
            q.coset_of[G.mul(g, x)] = id;
    }
    int m = q.size();
    q.mul.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            q.mul[a][b] = q.coset_of[G.mul(q.coset_rep[a], q.coset_rep[b])];
    return q;
}

int q_order(const Quotient& q, int a) {
    int k = 1, x = a;
    while (x != 0) {
        x = q.mul[x][a];
        ++k;
    }
    return k;
}

// Coordinates of every coset in terms of chosen generators with given
// orders; empty result if the generators do not give a direct sum.
std::vector<std::vector<int>> coordinates(const Quotient& q, const std::vector<int>& gens,
                                          const std::vector<int>& orders) {
    long total = 1;
    for (int o : orders)
        total *= o;
    if (total != q.size())
        return {};
    std::vector<std::vector<int>> coord_of(q.size());
    std::vector<int> tuple(orders.size(), 0);
    bool clash = false;
    // enumerate all tuples
    std::function<void(size_t, int)> rec = [&](size_t j, int elt) {
        if (clash)
            return;
        if (j == orders.size()) {
            if (!coord_of[elt].empty())
                clash = true;
            else
                coord_of[elt] = tuple;
            return;
        }
        int x = elt;
        for (int c = 0; c < orders[j]; ++c) {
            tuple[j] = c;
            rec(j + 1, x);
            x = q.mul[x][gens[j]];
        }
        tuple[j] = 0;
    };
    rec(0, 0);
    if (clash)
        return {};
    for (const auto& c : coord_of)
        if (c.empty() && !orders.empty())
            return {};
    if (orders.empty() && q.size() == 1)
        coord_of[0] = {};
    return coord_of;
}

// Invariant-factor generators of a finite abelian quotient, orders weakly
// decreasing. Small sizes only; greedy maximal-order element plus a
// complement search.
void decompose_abelian(const Quotient& q, std::vector<int>& gens, std::vector<int>& orders) {
    gens.clear();
    orders.clear();
    if (q.size() == 1)
        return;
    // subgroup spanned by chosen generators so far, as a sorted list
    auto span = [&](const std::vector<int>& gs) {
        std::vector<bool> in(q.size(), false);
        in[0] = true;
        std::vector<int> elems{0};
        for (size_t i = 0; i < elems.size(); ++i)
            for (int g : gs) {
                int x = q.mul[elems[i]][g];
                if (!in[x]) {
                    in[x] = true;
                    elems.push_back(x);
                }
            }
        std::sort(elems.begin(), elems.end());
        return elems;
    };
    while ((long)span(gens).size() < q.size()) {
        // next generator: maximal-order element whose cyclic group meets the
        // current span trivially, minimal coset index among those
        long cur_size = (long)span(gens).size();
        int best = -1, best_ord = 0;
        for (int x = 1; x < q.size(); ++x) {
            int o = q_order(q, x);
            if (o <= best_ord)
                continue;
            std::vector<int> try_gens = gens;
            try_gens.push_back(x);
            if ((long)span(try_gens).size() == cur_size * o) {
                best = x;
                best_ord = o;
            }
        }
        check(best >= 0, "abelian decomposition failed (internal)");
        gens.push_back(best);
        orders.push_back(best_ord);
    }
}

AbelianDecomposition decomposition_from(const FiniteGroup& G, const Quotient& q,
                                        const std::vector<int>& gens, const std::vector<int>& orders) {
    auto coord_of = coordinates(q, gens, orders);
    check(!coord_of.empty(), "chosen generators do not decompose the quotient as a direct sum");
    AbelianDecomposition dec;
    dec.orders = orders;
    dec.coords.resize(G.size());
    for (int g = 0; g < G.size(); ++g)
        dec.coords[g] = coord_of[q.coset_of[g]];
    return dec;
}

}  // namespace

AbelianDecomposition abelianization(const FiniteGroup& G) {
    Quotient q = make_quotient(G, G.commutator_subgroup());
    std::vector<int> gens, orders;
    decompose_abelian(q, gens, orders);
    return decomposition_from(G, q, gens, orders);
}

AbelianDecomposition abelian_decomposition(const FiniteGroup& G, const std::vector<int>& gen_elems) {
    Quotient q = make_quotient(G, G.commutator_subgroup());
    std::vector<int> gens, orders;
    for (int g : gen_elems) {
        int c = q.coset_of[g];
        gens.push_back(c);
        orders.push_back(q_order(q, c));
    }
    return decomposition_from(G, q, gens, orders);
}

const Scalar& CentralizerCharacter::value(int g) const {
    auto it = values.find(g);
    check(it != values.end(), "character value requested outside its domain");
    return it->second;
}

CentralizerCharacter CentralizerCharacter::extend(const FiniteGroup& G,
                                                  const std::vector<int>& subgroup,
                                                  const std::vector<std::pair<int, Scalar>>& gen_values) {
    check(!gen_values.empty(), "no character generator values");
    Field f = gen_values[0].second.field();
    CentralizerCharacter chi;
    chi.domain = subgroup;
    std::map<int, Scalar> val;
    val.emplace(G.identity(), Scalar::one(f));
    // close under right multiplication by the given generators
    std::vector<int> queue{G.identity()};
    for (size_t i = 0; i < queue.size(); ++i) {
        for (const auto& [g, v] : gen_values) {
            int x = G.mul(queue[i], g);
            Scalar vx = val.at(queue[i]) * v;
            auto it = val.find(x);
            if (it == val.end()) {
                val.emplace(x, vx);
                queue.push_back(x);
            } else {
                check(it->second == vx, "character values are inconsistent");
            }
        }
    }
    check(queue.size() == subgroup.size(), "character generators do not span the centralizer");
    for (int s : subgroup)
        check(val.count(s), "character extension missed a subgroup element");
    // exhaustive multiplicativity check
    for (int a : subgroup)
        for (int b : subgroup)
            check(val.at(G.mul(a, b)) == val.at(a) * val.at(b), "character is not multiplicative");
    chi.values = std::move(val);
    return chi;
}

int CatalogEntry::element(const std::string& word) const {
    std::string s = trim(word);
    check(!s.empty(), "empty group element");
    if (s[0] == '(') {
        auto e = group.element_by_perm(perm_parse(s, (int)group.perm(0).size()));
        check(e.has_value(), "permutation not in group: " + word);
        return *e;
    }
    if (s == "e")
        return group.identity();
    // word in named generators: tokens split by '*' or spaces, each
    // name or name^exp
    for (auto& ch : s)
        if (ch == '*')
            ch = ' ';
    std::istringstream is(s);
    std::string tok;
    int acc = group.identity();
    while (is >> tok) {
        std::string name = tok;
        long e = 1;
        auto find_gen = [&](const std::string& n) {
            for (size_t i = 0; i < gen_names.size(); ++i)
                if (gen_names[i] == n)
                    return (int)i;
            return -1;
        };
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            e = std::stol(tok.substr(caret + 1));
        } else if (find_gen(name) < 0) {
            // allow trailing digits as exponent, e.g. "a4", unless the
            // digits belong to the generator name itself (e.g. "g1")
            size_t d = name.size();
            while (d > 0 && isdigit((unsigned char)name[d - 1]))
                --d;
            if (d < name.size() && d > 0) {
                e = std::stol(name.substr(d));
                name = name.substr(0, d);
            }
        }
        int gi = find_gen(name);
        check(gi >= 0, "unknown generator '" + name + "' in word '" + word + "'");
        acc = group.mul(acc, group.power(group.generator(gi), e));
    }
    return acc;
}

std::string CatalogEntry::describe_element(int g) const {
    return group.element_name(g);
}

}  // namespace nichols
