#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/group.hpp"
#include "nichols/scalar.hpp"

namespace nichols {

// Braided vector space of group type on a finite letter set: a rack
// operation x|>y together with a nonzero cocycle q_{x,y}, realizing
// c(e_x (x) e_y) = q_{x,y} e_{x|>y} (x) e_x. Diagonal braidings carry the
// trivial rack. Validated at construction (bijectivity, self-
// distributivity, Yang-Baxter).
class Braiding {
public:
    Braiding() = default;  // empty placeholder; populate via the factories
    static Braiding diagonal(Field f, const std::vector<std::vector<Scalar>>& q);
    static Braiding group_type(Field f, std::vector<std::vector<int>> rack,
                               std::vector<std::vector<Scalar>> q, std::vector<int> degrees);

    Field field() const { return f_; }
    int letters() const { return m_; }
    int rack(int x, int y) const { return rack_[x][y]; }
    int rack_inv(int x, int y) const { return rack_inv_[x][y]; }  // z with x|>z = y
    const Scalar& q(int x, int y) const { return q_[x][y]; }
    bool is_diagonal() const { return diagonal_; }
    // Group element grading the letter, or -1 for abstract diagonal input.
    int degree(int x) const { return degree_[x]; }

    // Content hash covering the field and all structure constants.
    std::string content_hash() const;

private:
    void validate() const;
    Field f_ = nullptr;
    int m_ = 0;
    bool diagonal_ = false;
    std::vector<std::vector<int>> rack_, rack_inv_;
    std::vector<std::vector<Scalar>> q_;
    std::vector<int> degree_;
};

// Letter-level operator Q e_x = lambda_x e_{sigma(x)}. Construction asserts
// that Q preserves the braiding, i.e. sigma(x|>y) = sigma(x)|>sigma(y),
// q_{sigma x, sigma y} = q_{x,y} and lambda_{x|>y} q_{x,y} = lambda_y
// q_{sigma x, sigma y}, which is what extending Q to an algebra
// automorphism requires.
struct LetterOperator {
    std::vector<int> sigma;
    std::vector<Scalar> lambda;

    static LetterOperator make(const Braiding& b, std::vector<int> sigma, std::vector<Scalar> lambda);
    static LetterOperator identity(const Braiding& b);
    LetterOperator inverse(const Braiding& b) const;
    LetterOperator compose(const Braiding& b, const LetterOperator& then) const;
    bool operator==(const LetterOperator& o) const;
};

// A sum of conjugacy-class modules over a group: for each block, the class
// of a representative with a one-dimensional centralizer character,
// realized through deterministically chosen coset representatives.
struct YDRealization {
    struct Block {
        int rep;
        std::vector<int> cls;        // class elements, ascending group order
        std::vector<int> coset_rep;  // s with s*rep*s^-1 = cls[i], minimal
        CentralizerCharacter chi;
    };
    const FiniteGroup* G = nullptr;
    Field f = nullptr;
    std::vector<Block> blocks;
    Braiding b;  // assembled braiding; letter order: blocks, then class order

    int letter_count() const { return b.letters(); }
    std::pair<int, int> letter_block(int letter) const;  // (block, position)
    int letter_element(int letter) const;                // group degree
    std::optional<int> letter_of(int block, int element) const;
};

YDRealization from_orbits(const FiniteGroup& G, Field f,
                          const std::vector<std::pair<int, CentralizerCharacter>>& blocks);

// Action of a group element on the letters, t.v_h = chi(s_j^-1 t s_i) v_{t h t^-1}.
LetterOperator group_action_operator(const YDRealization& r, int t);

}  // namespace nichols
