#include <algorithm>
#include <map>
#include <mutex>

#include "nichols/group.hpp"

// Group catalog for the example runs. Groups given by presentation are
// shipped with explicit permutation realizations; the defining relations
// are asserted at load so a bad realization cannot slip through.

namespace nichols {

namespace {

void require_relations(const CatalogEntry& e, int expected_order,
                       const std::vector<std::pair<std::string, std::string>>& relations) {
    check(e.group.size() == expected_order,
          e.name + ": order " + std::to_string(e.group.size()) + " != " + std::to_string(expected_order));
    for (const auto& [lhs, rhs] : relations)
        check(e.element(lhs) == e.element(rhs), e.name + ": relation " + lhs + " = " + rhs + " fails");
}

CatalogEntry make_s3() {
    CatalogEntry e;
    e.name = "S3";
    e.group = FiniteGroup::from_generators({perm_parse("(1 2)", 3), perm_parse("(1 2 3)", 3)});
    e.gen_names = {"a", "b"};
    require_relations(e, 6, {{"a^2", "e"}, {"b^3", "e"}, {"a*b*a", "b^2"}});
    return e;
}

CatalogEntry make_s4() {
    CatalogEntry e;
    e.name = "S4";
    e.group = FiniteGroup::from_generators({perm_parse("(1 2)", 4), perm_parse("(1 2 3 4)", 4)});
    e.gen_names = {"a", "b"};
    require_relations(e, 24, {{"a^2", "e"}, {"b^4", "e"}});
    return e;
}

CatalogEntry make_a4() {
    CatalogEntry e;
    e.name = "A4";
    e.group = FiniteGroup::from_generators({perm_parse("(1 2 3)", 4), perm_parse("(1 2)(3 4)", 4)});
    e.gen_names = {"a", "b"};
    require_relations(e, 12, {{"a^3", "e"}, {"b^2", "e"}, {"a*b*a*b*a*b", "e"}});
    return e;
}

CatalogEntry make_d4() {
    CatalogEntry e;
    e.name = "D4";
    e.group = FiniteGroup::from_generators({perm_parse("(1 2 3 4)", 4), perm_parse("(1 3)", 4)});
    e.gen_names = {"a", "b"};
    require_relations(e, 8, {{"a^4", "e"}, {"b^2", "e"}, {"a*b", "b*a^3"}});
    return e;
}

CatalogEntry make_z3s3() {
    CatalogEntry e;
    e.name = "Z3xS3";
    e.group = FiniteGroup::from_generators(
        {perm_parse("(1 2)(4 5 6)", 6), perm_parse("(1 3)(4 5 6)", 6)});
    e.gen_names = {"g1", "g2"};
    require_relations(e, 18,
                      {{"g1^6", "e"}, {"g2^6", "e"}, {"g1*g2*g1*g2*g1*g2", "e"}, {"g1^2", "g2^2"}});
    return e;
}

CatalogEntry make_a4z2() {
    CatalogEntry e;
    e.name = "A4xZ2";
    e.group = FiniteGroup::from_generators(
        {perm_parse("(1 2 3)(5 6)", 6), perm_parse("(1 3 4)(5 6)", 6)});
    e.gen_names = {"g1", "g2"};
    require_relations(e, 24,
                      {{"g1^6", "e"},
                       {"g2^6", "e"},
                       {"g1^3*g2", "g2*g1^3"},
                       {"g1*g2*g1*g2*g1*g2", "e"},
                       {"g1*g2^2*g1*g2^2", "e"}});
    return e;
}

// SL(2,3) acting on the eight nonzero vectors of F_3^2.
CatalogEntry make_sl23() {
    auto points = [] {
        std::vector<std::pair<int, int>> pts;
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
                if (x || y)
                    pts.push_back({x, y});
        return pts;
    }();
    auto matrix_perm = [&](int m00, int m01, int m10, int m11) {
        Perm p(points.size());
        for (size_t i = 0; i < points.size(); ++i) {
            int x = (m00 * points[i].first + m01 * points[i].second) % 3;
            int y = (m10 * points[i].first + m11 * points[i].second) % 3;
            auto it = std::find(points.begin(), points.end(), std::make_pair(x, y));
            p[i] = (int)(it - points.begin());
        }
        return p;
    };
    CatalogEntry e;
    e.name = "SL(2,3)";
    // a = -[[1,1],[0,1]], b = -[[1,0],[1,1]]; both of order 6 with
    // a^3 = b^3 = (ab)^2 = -id.
    e.group = FiniteGroup::from_generators({matrix_perm(2, 2, 0, 2), matrix_perm(2, 0, 2, 2)});
    e.gen_names = {"a", "b"};
    require_relations(e, 24, {{"a^3", "b^3"}, {"b^3", "a*b*a*b"}, {"a^6", "e"}});
    return e;
}

// Small group (20,3): the affine maps x -> cx+d over F_5. The presentation
// generators a, b with a^4 = b^4 = a b^3 a^2 b^2 = e are located by search.
CatalogEntry make_g20() {
    auto affine_perm = [](int c, int d) {
        Perm p(5);
        for (int x = 0; x < 5; ++x)
            p[x] = (c * x + d) % 5;
        return p;
    };
    FiniteGroup F20 = FiniteGroup::from_generators({affine_perm(2, 0), affine_perm(1, 1)});
    check(F20.size() == 20, "F20 realization has wrong order");
    for (int a = 0; a < F20.size(); ++a) {
        if (F20.element_order(a) != 4)
            continue;
        for (int b = 0; b < F20.size(); ++b) {
            if (F20.element_order(b) != 4)
                continue;
            int b3 = F20.power(b, 3);
            int rel = F20.mul(F20.mul(a, b3), F20.mul(F20.power(a, 2), F20.power(b, 2)));
            if (rel != F20.identity())
                continue;
            FiniteGroup G = FiniteGroup::from_generators({F20.perm(a), F20.perm(b)});
            if (G.size() != 20)
                continue;
            CatalogEntry e;
            e.name = "G20";
            e.group = G;
            e.gen_names = {"a", "b"};
            require_relations(e, 20, {{"a^4", "e"}, {"b^4", "e"}, {"a*b^3*a^2*b^2", "e"}});
            return e;
        }
    }
    throw engine_error("G20: presentation generators not found");
}

}  // namespace

const CatalogEntry& catalog(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, CatalogEntry> entries;
    std::lock_guard<std::mutex> lock(mu);
    auto it = entries.find(name);
    if (it != entries.end())
        return it->second;
    CatalogEntry e;
    if (name == "S3")
        e = make_s3();
    else if (name == "S4")
        e = make_s4();
    else if (name == "A4")
        e = make_a4();
    else if (name == "D4")
        e = make_d4();
    else if (name == "Z3xS3")
        e = make_z3s3();
    else if (name == "A4xZ2")
        e = make_a4z2();
    else if (name == "SL(2,3)")
        e = make_sl23();
    else if (name == "G20")
        e = make_g20();
    else
        throw engine_error("unknown catalog group '" + name + "'");
    return entries.emplace(name, std::move(e)).first->second;
}

std::vector<std::string> catalog_names() {
    return {"S3", "S4", "A4", "D4", "Z3xS3", "A4xZ2", "SL(2,3)", "G20"};
}

}  // namespace nichols
