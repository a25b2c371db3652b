#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nichols/conjchar.hpp"

using namespace nichols;

TEST_CASE("D4 conjugation characters") {
    const auto& cat = catalog("D4");
    auto dec = abelianization(cat.group);
    REQUIRE(dec.orders == std::vector<int>{2, 2});
    // 2(1+t)^2
    CHECK(conj_graded_character(cat.group, dec, cat.element("e")) == IntPoly{2, 4, 2});
    CHECK(conj_graded_character(cat.group, dec, cat.element("a^2")) == IntPoly{2, 4, 2});
    // 2(1+t)
    CHECK(conj_graded_character(cat.group, dec, cat.element("a")) == IntPoly{2, 2});
    CHECK(conj_graded_character(cat.group, dec, cat.element("b")) == IntPoly{2, 2});
    // 2(1+t^2)
    CHECK(conj_graded_character(cat.group, dec, cat.element("a*b")) == IntPoly{2, 0, 2});
}

TEST_CASE("trivial group character is constant one") {
    FiniteGroup triv = FiniteGroup::from_generators({perm_identity(1)});
    auto dec = abelianization(triv);
    CHECK(conj_graded_character(triv, dec, 0) == IntPoly{1});
    auto pred = toy_prediction(triv, dec, 0);
    CHECK(pred.multiplier == 1);
    CHECK(pred.symbols.empty());
}

TEST_CASE("D4 predictions expand to the characters") {
    const auto& cat = catalog("D4");
    auto dec = abelianization(cat.group);
    for (int g = 0; g < cat.group.size(); ++g) {
        auto pred = toy_prediction(cat.group, dec, g);
        CHECK(pred.expand() == conj_graded_character(cat.group, dec, g));
    }
    // the g = a line: multiplier 2, a single (2)_t
    auto pred_a = toy_prediction(cat.group, dec, cat.element("a"));
    CHECK(pred_a.multiplier == 2);
    REQUIRE(pred_a.symbols.size() == 1);
    CHECK(pred_a.symbols[0] == std::pair<int, int>{2, 1});
}

TEST_CASE("abelian groups: every class is central") {
    FiniteGroup Z12 = FiniteGroup::from_generators({perm_parse("(1 2 3 4)", 7),
                                                    perm_parse("(5 6 7)", 7)});
    REQUIRE(Z12.size() == 12);
    auto dec = abelianization(Z12);
    long expected_multiplier = Z12.size() / dec.quotient_size();
    for (int g = 0; g < Z12.size(); ++g) {
        auto pred = toy_prediction(Z12, dec, g);
        CHECK(pred.multiplier == expected_multiplier);
        CHECK(pred.expand() == conj_graded_character(Z12, dec, g));
    }
}

TEST_CASE("S3 three-cycle prediction against brute force") {
    const auto& cat = catalog("S3");
    auto dec = abelianization(cat.group);
    int g = cat.element("(1 2 3)");
    // brute-force fixed-point count per grade
    IntPoly direct;
    for (int h = 0; h < cat.group.size(); ++h) {
        if (cat.group.mul(g, h) != cat.group.mul(h, g))
            continue;
        int d = dec.grade(h);
        if ((int)direct.size() <= d)
            direct.resize(d + 1, 0);
        ++direct[d];
    }
    CHECK(conj_graded_character(cat.group, dec, g) == direct);
    CHECK(toy_prediction(cat.group, dec, g).expand() == direct);
}

TEST_CASE("theorem holds exhaustively on the catalog") {
    for (const auto& name : catalog_names()) {
        const FiniteGroup& G = catalog(name).group;
        auto dec = abelianization(G);
        for (int g : G.class_representatives()) {
            auto chi = conj_graded_character(G, dec, g);
            auto pred = toy_prediction(G, dec, g);
            CHECK(pred.expand() == chi);
            // multiplier = centralizer elements inside ker(pi)
            long kernel_count = 0;
            std::vector<int> zero(dec.factors(), 0);
            for (int h : G.centralizer(g))
                if (dec.coords[h] == zero)
                    ++kernel_count;
            CHECK(pred.multiplier == kernel_count);
        }
    }
}

TEST_CASE("prediction data depends on the decomposition") {
    const auto& cat = catalog("D4");
    int a = cat.element("a"), b = cat.element("b");
    auto dec1 = abelian_decomposition(cat.group, {a, b});
    auto dec2 = abelian_decomposition(cat.group, {b, a});
    // identical gradings, hence identical characters...
    for (int g = 0; g < cat.group.size(); ++g)
        CHECK(conj_graded_character(cat.group, dec1, g) ==
              conj_graded_character(cat.group, dec2, g));
    // ...but the per-factor subgroup indices m_j differ
    CHECK(toy_factor_indices(cat.group, dec1, a) == std::vector<int>{1, 2});
    CHECK(toy_factor_indices(cat.group, dec2, a) == std::vector<int>{2, 1});
    CHECK(toy_factor_indices(cat.group, dec1, b) == std::vector<int>{2, 1});
    // a genuinely different grading: generators (ab-bar, b-bar)
    auto dec3 = abelian_decomposition(cat.group, {cat.group.mul(a, b), b});
    CHECK(conj_graded_character(cat.group, dec3, a) != conj_graded_character(cat.group, dec1, a));
    for (int g = 0; g < cat.group.size(); ++g)
        CHECK(toy_prediction(cat.group, dec3, g).expand() ==
              conj_graded_character(cat.group, dec3, g));
}

TEST_CASE("non-splitting centralizer image still factors exactly") {
    // D4, g = ab: the centralizer meets only the diagonal of Z2 x Z2, so the
    // per-factor indices alone would predict 2(1+t)^2; the graded character
    // is 2(1+t^2)
    const auto& cat = catalog("D4");
    auto dec = abelianization(cat.group);
    int g = cat.element("a*b");
    CHECK(toy_factor_indices(cat.group, dec, g) == std::vector<int>{1, 1});
    auto pred = toy_prediction(cat.group, dec, g);
    CHECK(pred.expand() == IntPoly{2, 0, 2});
    REQUIRE(pred.symbols.size() == 1);
    CHECK(pred.symbols[0] == std::pair<int, int>{2, 2});
}

TEST_CASE("single-step refined grading on D4") {
    const auto& cat = catalog("D4");
    auto dec = abelianization(cat.group);
    auto grade = refined_grading(cat.group, dec);
    // the refined degree-zero subspace is one-dimensional
    int zero_count = 0;
    for (int u = 0; u < cat.group.size(); ++u)
        if (grade[u] == 0)
            ++zero_count;
    CHECK(zero_count == 1);
    CHECK(grade[cat.group.identity()] == 0);
    // refined characters still count fixed points per grade
    auto chi = conj_graded_character_with(cat.group, grade, cat.element("a"));
    CHECK(ipoly_eval1(chi) == 4);  // |Cent(a)|
}
