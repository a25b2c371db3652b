#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nichols/divisibility.hpp"
#include "nichols/qfactor.hpp"

using namespace nichols;

namespace {

Field Q(unsigned n) {
    return FieldContext::get({0, n});
}

struct S3Setup {
    YDRealization r;
    Algebra A;
};

S3Setup s3_algebra() {
    const auto& cat = catalog("S3");
    Field f = Q(1);
    int g = cat.element("(1 2)");
    auto chi = CentralizerCharacter::extend(cat.group, cat.group.centralizer(g),
                                            {{g, Scalar(f, -1)}});
    auto r = from_orbits(cat.group, f, {{g, chi}});
    Algebra A = Algebra::build(r.b, {.max_degree = 10});
    return {r, std::move(A)};
}

}  // namespace

TEST_CASE("opposite derivations: degree one and the degree-two closed form") {
    auto [r, A] = s3_algebra();
    Field f = A.field();
    auto D = op_derivations(A);
    const int m = r.b.letters();
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            SparseVec img = D[x].apply(1, sparse_unit(y, f));
            if (x == y) {
                REQUIRE(img.size() == 1);
                CHECK(img[0].second.is_one());
            } else {
                CHECK(img.empty());
            }
        }
    // dop_x(e_y e_z) = delta_{x,y} e_z + q_{y,z} delta_{x,y|>z} e_y on every
    // degree-2 word, expanded through the reduction maps
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z) {
                SparseVec lhs = D[x].apply(2, A.reduce_word({y, z}));
                SparseVec rhs;
                if (x == y)
                    sparse_axpy(rhs, Scalar::one(f), A.reduce_word({z}));
                if (r.b.rack(y, z) == x)
                    sparse_axpy(rhs, r.b.q(y, z), A.reduce_word({y}));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("sector order of the transposition class is two") {
    auto [r, A] = s3_algebra();
    CHECK(sector_order(A) == 2);
    // mixed diagonal self-braidings are rejected
    Field f = Q(3);
    Scalar z = Scalar::zeta(f);
    Braiding mixed = Braiding::diagonal(f, {{z, Scalar::one(f)}, {Scalar::one(f), z * z}});
    Algebra M = Algebra::build(mixed, {.max_degree = 3});
    CHECK_THROWS(sector_order(M));
}

TEST_CASE("xi of the unit is the letter") {
    auto [r, A] = s3_algebra();
    Field f = A.field();
    auto D = op_derivations(A);
    auto parts = xi_apply(A, D[0], 2, 0, 0, sparse_unit(0, f));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == 1);
    CHECK(parts[0].second == A.reduce_word({0}));
}

TEST_CASE("the shift is a bijection between consecutive parity sectors") {
    auto [r, A] = s3_algebra();
    for (int x = 0; x < r.b.letters(); ++x) {
        XiShift xi = XiShift::compute(A, x);
        CHECK(xi.modulus == 2);
        // even and odd sector dimensions both equal six
        CHECK(xi.sector_layers[0] == std::vector<int>{0, 2, 4});
        CHECK(xi.mat[0].size() == 6);
        CHECK(xi.mat[1].size() == 6);
    }
}

TEST_CASE("commutation g xi_x = lambda xi_x g for commuting pairs") {
    auto [r, A] = s3_algebra();
    const auto& cat = catalog("S3");
    int g = cat.element("(1 2)");
    int letter = -1;
    for (int l = 0; l < r.letter_count(); ++l)
        if (r.letter_element(l) == g)
            letter = l;
    REQUIRE(letter >= 0);
    // g = g_x itself: lambda = q_{x,x} = -1
    CHECK(xi_commutes(A, letter, group_action_operator(r, g), Scalar(A.field(), -1)));
    CHECK_FALSE(xi_commutes(A, letter, group_action_operator(r, g), Scalar::one(A.field())));
    // identity commutes with lambda = 1
    CHECK(xi_commutes(A, letter, LetterOperator::identity(r.b), Scalar::one(A.field())));
}

TEST_CASE("balancedness is equivalent to divisibility") {
    auto [r, A] = s3_algebra();
    Field f = A.field();
    const auto& cat = catalog("S3");
    std::vector<TracePoly> traces;
    for (int g : cat.group.class_representatives())
        traces.push_back(graded_trace(A, group_action_operator(r, g), "").trace);
    for (const auto& tr : traces)
        for (unsigned k = 2; k <= 4; ++k)
            for (int s = -1; s <= 1; s += 2) {
                Scalar lam(f, s);
                if (!lam.pow(k).is_one())
                    continue;
                bool bal = balanced(tr, k, lam);
                bool div = tr.exact_div(qsymbol(f, k, lam, 1)).second;
                CHECK(bal == div);
            }
    // spot check: the transposition trace is divisible by (2)_{-t}, so its
    // parity sector sums satisfy s_{j+1} = -s_j
    TracePoly tr12 = traces[1];
    CHECK(balanced(tr12, 2, Scalar(f, -1)));
    auto sums = sector_sums(tr12, 2);
    CHECK(sums[1] == -sums[0]);
}

TEST_CASE("sub-algebra divisibility: S3 over its two-element subgroup") {
    auto [r, A] = s3_algebra();
    Field f = A.field();
    const auto& cat = catalog("S3");
    int g = cat.element("(1 2)");
    int letter = -1;
    for (int l = 0; l < r.letter_count(); ++l)
        if (r.letter_element(l) == g)
            letter = l;
    // the one-letter subalgebra is k[x]/(x^2): traces 1+t and 1-t
    TracePoly h_small = qsymbol(f, 2, Scalar::one(f), 1);
    TracePoly tr_small = qsymbol(f, 2, Scalar(f, -1), 1);
    TracePoly h_big = A.hilbert(f);
    TracePoly tr_big = graded_trace(A, group_action_operator(r, g), "").trace;
    CHECK(divisibility_check(h_big, h_small, "e").divides);
    CHECK(divisibility_check(tr_big, tr_small, "(1 2)").divides);
    // part 2: x = (1 2) commutes with itself, lambda = q = -1, m = 2
    REQUIRE(xi_commutes(A, letter, group_action_operator(r, g), Scalar(f, -1)));
    auto line = divisibility_check(tr_big, qsymbol(f, 2, Scalar(f, -1), 1) * tr_small, "(1 2)+");
    CHECK(line.divides);
    CHECK(line.quotient * qsymbol(f, 2, Scalar(f, -1), 1) * tr_small == tr_big);

    // freeness: the joint kernel dimensions against the quotient series
    IntPoly k_dims;
    for (int n = 0; n <= A.top_degree(); ++n) {
        long d = joint_kernel_dim(A, {letter}, n);
        if (d || !k_dims.empty())
            k_dims.resize(n + 1, 0);
        if ((int)k_dims.size() == n + 1)
            k_dims[n] = d;
    }
    while (!k_dims.empty() && k_dims.back() == 0)
        k_dims.pop_back();
    CHECK(ipoly_eval1(k_dims) == 6);  // 12 / dim k[x]/(x^2)
    CHECK(ipoly_mul(k_dims, IntPoly{1, 1}) == A.hilbert_int());
}

TEST_CASE("the joint kernel of all derivations vanishes in positive degree") {
    auto [r, A] = s3_algebra();
    std::vector<int> all_letters;
    for (int x = 0; x < r.b.letters(); ++x)
        all_letters.push_back(x);
    for (int n = 1; n <= A.top_degree(); ++n)
        CHECK(joint_kernel_dim(A, all_letters, n) == 0);
}

TEST_CASE("the xi orbit of the unit spans the whole algebra") {
    auto [r, A] = s3_algebra();
    CHECK(xi_orbit_spans(A));
    // and for the 36-dimensional characteristic-2 algebra
    const auto& a4 = catalog("A4");
    Field f2 = FieldContext::get({2, 1});
    int g = a4.element("(1 2 3)");
    auto chi = CentralizerCharacter::extend(a4.group, a4.group.centralizer(g),
                                            {{g, Scalar::one(f2)}});
    auto r2 = from_orbits(a4.group, f2, {{g, chi}});
    Algebra A2 = Algebra::build(r2.b, {.max_degree = 10});
    REQUIRE(A2.dimension() == 36);
    CHECK(xi_orbit_spans(A2));
}
