#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nichols/scalar.hpp"

namespace nichols {

// Permutations act on points 0..n-1 from the left; (f*g)(x) = f(g(x)).
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& f, const Perm& g);
Perm perm_inverse(const Perm& f);
// Cycle notation with 1-based points, e.g. "(1 2)(3 4)"; "e" or "()" is the
// identity. Points may also be comma-separated.
Perm perm_parse(const std::string& text, int n_points);
std::string perm_cycles(const Perm& f);

// Finite group with a full multiplication table and a fixed, reproducible
// element order: breadth-first from the identity, multiplying on the right
// by the generators in the order given.
class FiniteGroup {
public:
    static FiniteGroup from_generators(const std::vector<Perm>& gens, size_t order_cap = 8192);

    int size() const { return (int)mul_.size(); }
    int identity() const { return 0; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int conjugate(int t, int g) const { return mul(mul(t, g), inv(t)); }
    int commutator(int a, int b) const { return mul(mul(a, b), mul(inv_[a], inv_[b])); }
    int element_order(int a) const;
    int power(int a, long e) const;

    int generator_count() const { return (int)gens_.size(); }
    int generator(int i) const { return gens_[i]; }
    const Perm& perm(int a) const { return perms_[a]; }
    std::string element_name(int a) const;  // cycle notation
    std::optional<int> element_by_perm(const Perm& p) const;

    std::vector<int> conjugacy_class(int g) const;   // ascending element order
    std::vector<int> centralizer(int g) const;       // ascending element order
    std::vector<int> class_representatives() const;  // minimal member of each class
    std::vector<int> commutator_subgroup() const;
    std::vector<int> subgroup_closure(std::vector<int> seed) const;

    bool is_abelian() const;

private:
    std::vector<Perm> perms_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<int> gens_;
};

// Graded abelian quotient: an epimorphism pi onto A = (+)_j Z/n_j with the
// canonical sections f_j(x) = x for 0 <= x < n_j; the Z-grade of a group
// element is the sum of its coordinates.
struct AbelianDecomposition {
    std::vector<int> orders;                 // n_j
    std::vector<std::vector<int>> coords;    // per group element, tuple in prod Z/n_j
    int factors() const { return (int)orders.size(); }
    int grade(int g) const;
    long quotient_size() const;
};

// Canonical decomposition of G/[G,G] with invariant-factor orders in weakly
// decreasing order.
AbelianDecomposition abelianization(const FiniteGroup& G);
// Decomposition of G/[G,G] along the images of the given group elements;
// fails unless the images decompose the quotient as a direct sum.
AbelianDecomposition abelian_decomposition(const FiniteGroup& G, const std::vector<int>& gens);

// One-dimensional character of a subgroup, stored on every element.
struct CentralizerCharacter {
    std::vector<int> domain;          // subgroup elements, ascending
    std::map<int, Scalar> values;     // element -> root of unity
    const Scalar& value(int g) const;
    // Extends generator values to the whole subgroup and verifies
    // multiplicativity exhaustively.
    static CentralizerCharacter extend(const FiniteGroup& G, const std::vector<int>& subgroup,
                                       const std::vector<std::pair<int, Scalar>>& gen_values);
};

// Groups used by the example runs; generators are named.
struct CatalogEntry {
    std::string name;
    FiniteGroup group;
    std::vector<std::string> gen_names;  // one per generator

    // Word in the named generators, e.g. "a^4*b", "a b", "g1^3"; or cycle
    // notation when it starts with '('.
    int element(const std::string& word) const;
    std::string describe_element(int g) const;
};

const CatalogEntry& catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace nichols
