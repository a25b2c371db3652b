#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "nichols/group.hpp"

using namespace nichols;

TEST_CASE("closure from generators") {
    FiniteGroup S3 = FiniteGroup::from_generators({perm_parse("(1 2)", 3), perm_parse("(1 2 3)", 3)});
    CHECK(S3.size() == 6);
    CHECK(S3.identity() == 0);
    for (int a = 0; a < S3.size(); ++a) {
        CHECK(S3.mul(a, S3.inv(a)) == 0);
        CHECK(S3.mul(0, a) == a);
    }
    // associativity of the table
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                CHECK(S3.mul(S3.mul(a, b), c) == S3.mul(a, S3.mul(b, c)));
}

TEST_CASE("order cap") {
    CHECK_THROWS(FiniteGroup::from_generators({perm_parse("(1 2 3 4 5 6 7)", 7)}, 5));
}

TEST_CASE("catalog relations") {
    // every entry loads with its defining relations asserted internally
    for (const auto& name : catalog_names())
        CHECK_NOTHROW(catalog(name));
    CHECK(catalog("S3").group.size() == 6);
    CHECK(catalog("S4").group.size() == 24);
    CHECK(catalog("A4").group.size() == 12);
    CHECK(catalog("D4").group.size() == 8);
    CHECK(catalog("Z3xS3").group.size() == 18);
    CHECK(catalog("A4xZ2").group.size() == 24);
    CHECK(catalog("SL(2,3)").group.size() == 24);
    CHECK(catalog("G20").group.size() == 20);
    CHECK_THROWS(catalog("M11"));
}

TEST_CASE("SL(2,3) satisfies a^3 = b^3 = (ab)^2") {
    const auto& e = catalog("SL(2,3)");
    int a3 = e.element("a^3");
    CHECK(a3 == e.element("b^3"));
    CHECK(a3 == e.element("a*b*a*b"));
    CHECK(a3 != e.group.identity());
    CHECK(e.group.element_order(e.element("a")) == 6);
}

TEST_CASE("G20 satisfies its presentation") {
    const auto& e = catalog("G20");
    CHECK(e.element("a^4") == e.group.identity());
    CHECK(e.element("b^4") == e.group.identity());
    CHECK(e.element("a*b^3*a^2*b^2") == e.group.identity());
}

TEST_CASE("classes and centralizers") {
    const auto& s3 = catalog("S3");
    int g = s3.element("(1 2)");
    auto cls = s3.group.conjugacy_class(g);
    CHECK(cls.size() == 3);
    CHECK(s3.group.centralizer(g).size() == 2);

    const auto& s4 = catalog("S4");
    int t = s4.element("(1 2)");
    auto cent = s4.group.centralizer(t);
    CHECK(cent.size() == 4);
    // the centralizer is generated by (1 2) and (3 4)
    std::set<int> expect;
    for (const char* w : {"e", "(1 2)", "(3 4)", "(1 2)(3 4)"})
        expect.insert(s4.element(w));
    CHECK(std::set<int>(cent.begin(), cent.end()) == expect);

    const auto& sl = catalog("SL(2,3)");
    int a4 = sl.element("a^4");
    auto cent_a4 = sl.group.centralizer(a4);
    CHECK(cent_a4.size() == 6);
    // equals the cyclic group generated by a
    std::set<int> pow_a;
    for (int k = 0; k < 6; ++k)
        pow_a.insert(sl.group.power(sl.element("a"), k));
    CHECK(std::set<int>(cent_a4.begin(), cent_a4.end()) == pow_a);
}

TEST_CASE("classes partition the group and sizes divide the order") {
    for (const auto& name : catalog_names()) {
        const FiniteGroup& G = catalog(name).group;
        long total = 0;
        for (int rep : G.class_representatives()) {
            auto cls = G.conjugacy_class(rep);
            total += (long)cls.size();
            CHECK(G.size() % cls.size() == 0);
        }
        CHECK(total == G.size());
    }
}

TEST_CASE("abelianizations") {
    auto dec_d4 = abelianization(catalog("D4").group);
    CHECK(dec_d4.orders == std::vector<int>{2, 2});
    auto dec_s3 = abelianization(catalog("S3").group);
    CHECK(dec_s3.orders == std::vector<int>{2});
    auto dec_a4 = abelianization(catalog("A4").group);
    CHECK(dec_a4.orders == std::vector<int>{3});
    auto dec_sl = abelianization(catalog("SL(2,3)").group);
    CHECK(dec_sl.orders == std::vector<int>{3});
    auto dec_g20 = abelianization(catalog("G20").group);
    CHECK(dec_g20.orders == std::vector<int>{4});
    auto dec_z3s3 = abelianization(catalog("Z3xS3").group);
    CHECK(dec_z3s3.orders == std::vector<int>{6});
}

TEST_CASE("A4 commutator subgroup by brute force") {
    // independent oracle: close the plain commutator set by hand
    const FiniteGroup& G = catalog("A4").group;
    std::set<int> comms;
    for (int a = 0; a < G.size(); ++a)
        for (int b = 0; b < G.size(); ++b)
            comms.insert(G.commutator(a, b));
    std::set<int> closed = comms;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x : std::set<int>(closed))
            for (int y : std::set<int>(closed))
                if (closed.insert(G.mul(x, y)).second)
                    grew = true;
    }
    CHECK(closed.size() == 4);  // the Klein four group
    auto derived = G.commutator_subgroup();
    CHECK(std::set<int>(derived.begin(), derived.end()) == closed);
    // quotient of order 3, necessarily cyclic
    CHECK(abelianization(G).quotient_size() == 3);
}

TEST_CASE("custom abelian decompositions of D4") {
    const auto& d4 = catalog("D4");
    int a = d4.element("a"), b = d4.element("b");
    auto dec_ab = abelian_decomposition(d4.group, {a, b});
    auto dec_ba = abelian_decomposition(d4.group, {b, a});
    CHECK(dec_ab.orders == std::vector<int>{2, 2});
    CHECK(dec_ba.orders == std::vector<int>{2, 2});
    // grades agree even though the coordinates are swapped
    for (int g = 0; g < d4.group.size(); ++g)
        CHECK(dec_ab.grade(g) == dec_ba.grade(g));
    // a bad choice: images that do not span
    CHECK_THROWS(abelian_decomposition(d4.group, {a, a}));
}

TEST_CASE("centralizer characters extend and verify") {
    const auto& s3 = catalog("S3");
    int g = s3.element("(1 2)");
    auto cent = s3.group.centralizer(g);
    Field f = FieldContext::get({0, 1});
    auto chi = CentralizerCharacter::extend(s3.group, cent, {{g, Scalar(f, -1)}});
    CHECK(chi.value(s3.group.identity()).is_one());
    CHECK(chi.value(g) == Scalar(f, -1));
    // inconsistent assignment rejected: chi((1 2)) = -1 with (1 2)^2 = e is
    // fine, but a third root on an involution is not
    Field f3 = FieldContext::get({0, 3});
    CHECK_THROWS(CentralizerCharacter::extend(s3.group, cent, {{g, Scalar::zeta(f3)}}));
}

TEST_CASE("element words and cycle names") {
    const auto& s4 = catalog("S4");
    CHECK(s4.element("a") == s4.element("(1 2)"));
    CHECK(s4.element("b^2") == s4.element("(1 3)(2 4)"));
    CHECK(s4.element("a*b") == s4.group.mul(s4.element("a"), s4.element("b")));
    CHECK(s4.element("e") == 0);
    CHECK(s4.group.element_name(0) == "e");
    CHECK(s4.element("b^-1") == s4.group.inv(s4.element("b")));
    CHECK(s4.element("a4") == s4.group.identity());  // trailing digits as exponent
    CHECK_THROWS(s4.element("c"));
    CHECK_THROWS(s4.element("(1 5)"));
}
