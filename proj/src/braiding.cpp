#include "nichols/braiding.hpp"

#include <algorithm>
#include <sstream>

namespace nichols {

namespace {

// One application of the braiding on a tensor factor pair: (x, y) with a
// scalar becomes (x|>y, x) scaled by q_{x,y}.
struct Tagged {
    std::vector<int> word;
    Scalar coef;
};

Tagged apply_c(const Braiding& b, Tagged t, int pos) {
    int x = t.word[pos], y = t.word[pos + 1];
    t.word[pos] = b.rack(x, y);
    t.word[pos + 1] = x;
    t.coef *= b.q(x, y);
    return t;
}

}  // namespace

void Braiding::validate() const {
    for (int x = 0; x < m_; ++x) {
        std::vector<bool> hit(m_, false);
        for (int y = 0; y < m_; ++y) {
            check(!q_[x][y].is_zero(), "cocycle entry is zero");
            int z = rack_[x][y];
            check(z >= 0 && z < m_, "rack entry out of range");
            check(!hit[z], "rack row is not a bijection");
            hit[z] = true;
        }
    }
    for (int x = 0; x < m_; ++x)
        for (int y = 0; y < m_; ++y)
            for (int z = 0; z < m_; ++z)
                check(rack_[x][rack_[y][z]] == rack_[rack_[x][y]][rack_[x][z]],
                      "rack is not self-distributive");
    // Yang-Baxter on basis triples: both lifts must agree with scalars.
    for (int x = 0; x < m_; ++x)
        for (int y = 0; y < m_; ++y)
            for (int z = 0; z < m_; ++z) {
                Tagged t{{x, y, z}, Scalar::one(f_)};
                Tagged lhs = apply_c(*this, apply_c(*this, apply_c(*this, t, 1), 0), 1);
                Tagged rhs = apply_c(*this, apply_c(*this, apply_c(*this, t, 0), 1), 0);
                check(lhs.word == rhs.word && lhs.coef == rhs.coef,
                      "braiding fails the Yang-Baxter equation");
            }
}

Braiding Braiding::diagonal(Field f, const std::vector<std::vector<Scalar>>& q) {
    Braiding b;
    b.f_ = f;
    b.m_ = (int)q.size();
    b.diagonal_ = true;
    b.q_ = q;
    for (const auto& row : q)
        check((int)row.size() == b.m_, "braiding matrix is not square");
    b.rack_.assign(b.m_, std::vector<int>(b.m_));
    b.rack_inv_.assign(b.m_, std::vector<int>(b.m_));
    for (int x = 0; x < b.m_; ++x)
        for (int y = 0; y < b.m_; ++y)
            b.rack_[x][y] = b.rack_inv_[x][y] = y;
    b.degree_.assign(b.m_, -1);
    b.validate();
    return b;
}

Braiding Braiding::group_type(Field f, std::vector<std::vector<int>> rack,
                              std::vector<std::vector<Scalar>> q, std::vector<int> degrees) {
    Braiding b;
    b.f_ = f;
    b.m_ = (int)rack.size();
    b.rack_ = std::move(rack);
    b.q_ = std::move(q);
    b.degree_ = std::move(degrees);
    b.diagonal_ = true;
    for (int x = 0; x < b.m_ && b.diagonal_; ++x)
        for (int y = 0; y < b.m_; ++y)
            if (b.rack_[x][y] != y) {
                b.diagonal_ = false;
                break;
            }
    b.rack_inv_.assign(b.m_, std::vector<int>(b.m_, -1));
    for (int x = 0; x < b.m_; ++x)
        for (int y = 0; y < b.m_; ++y)
            b.rack_inv_[x][b.rack_[x][y]] = y;
    b.validate();
    return b;
}

std::string Braiding::content_hash() const {
    Fnv64 h;
    h.feed((uint64_t)f_->characteristic());
    h.feed((uint64_t)f_->zeta_order());
    h.feed((uint64_t)m_);
    for (int x = 0; x < m_; ++x)
        for (int y = 0; y < m_; ++y) {
            h.feed((uint64_t)rack_[x][y]);
            h.feed(q_[x][y].tuple());
        }
    return h.hex();
}

LetterOperator LetterOperator::make(const Braiding& b, std::vector<int> sigma,
                                    std::vector<Scalar> lambda) {
    const int m = b.letters();
    check((int)sigma.size() == m && (int)lambda.size() == m, "operator has wrong arity");
    std::vector<bool> hit(m, false);
    for (int x = 0; x < m; ++x) {
        check(sigma[x] >= 0 && sigma[x] < m && !hit[sigma[x]], "operator permutation invalid");
        hit[sigma[x]] = true;
        check(!lambda[x].is_zero(), "operator scalar is zero");
    }
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            check(sigma[b.rack(x, y)] == b.rack(sigma[x], sigma[y]),
                  "operator does not preserve the rack");
            check(lambda[b.rack(x, y)] * b.q(x, y) == lambda[y] * b.q(sigma[x], sigma[y]),
                  "operator does not preserve the braiding");
        }
    return LetterOperator{std::move(sigma), std::move(lambda)};
}

LetterOperator LetterOperator::identity(const Braiding& b) {
    std::vector<int> sigma(b.letters());
    std::vector<Scalar> lambda(b.letters(), Scalar::one(b.field()));
    for (int i = 0; i < b.letters(); ++i)
        sigma[i] = i;
    return LetterOperator{std::move(sigma), std::move(lambda)};
}

LetterOperator LetterOperator::inverse(const Braiding& b) const {
    const int m = b.letters();
    std::vector<int> s(m);
    std::vector<Scalar> l(m, Scalar::zero(b.field()));
    for (int x = 0; x < m; ++x)
        s[sigma[x]] = x;
    for (int x = 0; x < m; ++x)
        l[x] = lambda[s[x]].inverse();
    return LetterOperator{std::move(s), std::move(l)};
}

LetterOperator LetterOperator::compose(const Braiding& b, const LetterOperator& then) const {
    const int m = b.letters();
    std::vector<int> s(m);
    std::vector<Scalar> l(m, Scalar::zero(b.field()));
    for (int x = 0; x < m; ++x) {
        s[x] = then.sigma[sigma[x]];
        l[x] = then.lambda[sigma[x]] * lambda[x];
    }
    return LetterOperator{std::move(s), std::move(l)};
}

bool LetterOperator::operator==(const LetterOperator& o) const {
    if (sigma != o.sigma || lambda.size() != o.lambda.size())
        return false;
    for (size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] != o.lambda[i])
            return false;
    return true;
}

std::pair<int, int> YDRealization::letter_block(int letter) const {
    for (size_t k = 0; k < blocks.size(); ++k) {
        if (letter < (int)blocks[k].cls.size())
            return {(int)k, letter};
        letter -= (int)blocks[k].cls.size();
    }
    throw engine_error("letter out of range");
}

int YDRealization::letter_element(int letter) const {
    auto [k, i] = letter_block(letter);
    return blocks[k].cls[i];
}

std::optional<int> YDRealization::letter_of(int block, int element) const {
    int base = 0;
    for (int k = 0; k < block; ++k)
        base += (int)blocks[k].cls.size();
    const auto& cls = blocks[block].cls;
    auto it = std::lower_bound(cls.begin(), cls.end(), element);
    if (it == cls.end() || *it != element)
        return std::nullopt;
    return base + (int)(it - cls.begin());
}

YDRealization from_orbits(const FiniteGroup& G, Field f,
                          const std::vector<std::pair<int, CentralizerCharacter>>& blocks) {
    YDRealization r;
    r.G = &G;
    r.f = f;
    for (const auto& [rep, chi] : blocks) {
        YDRealization::Block blk;
        blk.rep = rep;
        blk.cls = G.conjugacy_class(rep);
        blk.chi = chi;
        check(chi.domain == G.centralizer(rep), "character domain is not the centralizer");
        // minimal coset representative per class element
        for (int h : blk.cls) {
            int s = -1;
            for (int t = 0; t < G.size(); ++t)
                if (G.conjugate(t, rep) == h) {
                    s = t;
                    break;
                }
            check(s >= 0, "class element without coset representative (internal)");
            blk.coset_rep.push_back(s);
        }
        r.blocks.push_back(std::move(blk));
    }
    int m = 0;
    for (const auto& blk : r.blocks)
        m += (int)blk.cls.size();
    std::vector<int> degree(m);
    {
        int l = 0;
        for (const auto& blk : r.blocks)
            for (int h : blk.cls)
                degree[l++] = h;
    }
    std::vector<std::vector<int>> rack(m, std::vector<int>(m));
    std::vector<std::vector<Scalar>> q(m, std::vector<Scalar>(m, Scalar::zero(f)));
    for (int x = 0; x < m; ++x) {
        int gx = degree[x];
        int y = 0;
        for (const auto& blk : r.blocks) {
            for (size_t i = 0; i < blk.cls.size(); ++i, ++y) {
                int h = blk.cls[i];
                int hh = G.conjugate(gx, h);
                auto pos = std::lower_bound(blk.cls.begin(), blk.cls.end(), hh);
                check(pos != blk.cls.end() && *pos == hh, "class is not conjugation-closed (internal)");
                size_t j = pos - blk.cls.begin();
                int base = y - (int)i;
                rack[x][y] = base + (int)j;
                // chi(s_j^-1 * gx * s_i)
                int c = G.mul(G.mul(G.inv(blk.coset_rep[j]), gx), blk.coset_rep[i]);
                q[x][y] = blk.chi.value(c);
            }
        }
    }
    r.b = Braiding::group_type(f, std::move(rack), std::move(q), std::move(degree));
    return r;
}

LetterOperator group_action_operator(const YDRealization& r, int t) {
    const FiniteGroup& G = *r.G;
    int m = r.letter_count();
    std::vector<int> sigma(m);
    std::vector<Scalar> lambda(m, Scalar::zero(r.f));
    int letter = 0;
    for (const auto& blk : r.blocks) {
        for (size_t i = 0; i < blk.cls.size(); ++i, ++letter) {
            int h = blk.cls[i];
            int hh = G.conjugate(t, h);
            auto pos = std::lower_bound(blk.cls.begin(), blk.cls.end(), hh);
            size_t j = pos - blk.cls.begin();
            int base = letter - (int)i;
            sigma[letter] = base + (int)j;
            int c = G.mul(G.mul(G.inv(blk.coset_rep[j]), t), blk.coset_rep[i]);
            lambda[letter] = blk.chi.value(c);
        }
    }
    return LetterOperator::make(r.b, std::move(sigma), std::move(lambda));
}

}  // namespace nichols
