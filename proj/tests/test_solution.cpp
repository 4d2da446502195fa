#include "doctest.h"
#include "helpers.hpp"
#include "ybe/solution.hpp"

using namespace ybe;
using namespace ybe::testing;

TEST_SUITE("solution") {

TEST_CASE("trivial solution from a pair map") {
    std::vector<std::pair<int, int>> images{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    QuadraticSet qs = QuadraticSet::from_pair_map({"x1", "x2"}, images);
    CHECK(qs.left(0, 1) == 1);   // L_x = id
    CHECK(qs.right(0, 1) == 0);  // R_y = id
    AxiomReport rep = check_axioms(qs);
    for (const auto& [name, flag] : axiom_flag_list(rep)) {
        INFO(name);
        CHECK(flag->holds);
    }
    CHECK(rep.square_free_symmetric);
}

TEST_CASE("duplicate image is rejected") {
    // (x1,x2) and (x2,x1) both mapped to (x1,x2).
    std::vector<std::pair<int, int>> images{{0, 0}, {0, 1}, {0, 1}, {1, 1}};
    CHECK_THROWS_WITH_AS(QuadraticSet::from_pair_map({"x1", "x2"}, images),
                         doctest::Contains("listed twice"), Error);
}

TEST_CASE("incomplete table is rejected") {
    CHECK_THROWS_AS(QuadraticSet::from_pair_map({"x1", "x2"}, {{0, 0}}), Error);
}

TEST_CASE("example of order 5 via its full r table") {
    ParsedSolution ps = load_fixture("example_5_3.ybe");
    // Rebuild through the raw pair map r(x,y) = (L_x(y), L_y^{-1}(x)).
    const int n = ps.qs.size();
    std::vector<std::pair<int, int>> images;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) images.push_back(ps.qs.r(x, y));
    QuadraticSet qs = QuadraticSet::from_pair_map(ps.qs.names(), images);
    CHECK(qs == ps.qs);
    AxiomReport rep = check_axioms(qs);
    CHECK(rep.square_free_symmetric);
    CHECK(rep.lri.holds);
}

TEST_CASE("from_left_actions requires permutations of the right degree") {
    CHECK_THROWS_AS(QuadraticSet::from_left_actions({"a", "b", "c"}, {Perm(3), Perm(3), Perm(2)}),
                    Error);
}

TEST_CASE("lri holds by construction for from_left_actions") {
    // Even for assignments that are not solutions.
    QuadraticSet qs = QuadraticSet::from_left_actions(
        {"e1", "e2", "e3"},
        {cycles_perm(3, {{1, 2}}), cycles_perm(3, {{0, 2}}), Perm(3)});
    AxiomReport rep = check_axioms(qs);
    CHECK(rep.lri.holds);
    CHECK(rep.nondegenerate.holds);
    // This particular assignment violates l1 (evaluated independently before
    // the build: L_1 L_2 != L_{1|>2} L_{1<|2} already at z = e1).
    CHECK_FALSE(rep.l1.holds);
    CHECK(reevaluate_witness(qs, "l1", rep.l1.witness));
    CHECK_FALSE(rep.braid.holds);
}

TEST_CASE("false flags carry genuine witnesses") {
    QuadraticSet bad = QuadraticSet::from_left_actions(
        {"e1", "e2", "e3"},
        {cycles_perm(3, {{1, 2}}), cycles_perm(3, {{0, 2}}), cycles_perm(3, {{0, 1}})});
    AxiomReport rep = check_axioms(bad);
    for (const auto& [name, flag] : axiom_flag_list(rep)) {
        if (flag->holds) continue;
        INFO(name);
        CHECK(reevaluate_witness(bad, name, flag->witness));
    }
}

TEST_CASE("braid equals l1 & r1 & lr3 for nondegenerate sets") {
    // All eight square-free action assignments on three elements.
    std::vector<Perm> opts[3] = {
        {Perm(3), cycles_perm(3, {{1, 2}})},
        {Perm(3), cycles_perm(3, {{0, 2}})},
        {Perm(3), cycles_perm(3, {{0, 1}})},
    };
    int checked = 0;
    for (const Perm& p0 : opts[0])
        for (const Perm& p1 : opts[1])
            for (const Perm& p2 : opts[2]) {
                QuadraticSet qs =
                    QuadraticSet::from_left_actions({"e1", "e2", "e3"}, {p0, p1, p2});
                AxiomReport rep = check_axioms(qs);
                REQUIRE(rep.nondegenerate.holds);
                CHECK(rep.braid.holds == (rep.l1.holds && rep.r1.holds && rep.lr3.holds));
                // Fact: for nondegenerate involutive square-free sets the four
                // conditions are equivalent.
                if (rep.involutive.holds && rep.square_free.holds) {
                    CHECK(rep.l1.holds == rep.r1.holds);
                    CHECK(rep.l1.holds == rep.lr3.holds);
                    CHECK(rep.l1.holds == rep.braid.holds);
                    if (rep.l1.holds) {
                        CHECK(rep.cl1.holds);
                        CHECK(rep.cl2.holds);
                        CHECK(rep.cr1.holds);
                        CHECK(rep.cr2.holds);
                        CHECK(rep.lri.holds);
                    }
                }
                ++checked;
            }
    CHECK(checked == 8);
}

TEST_CASE("order-14 fixture satisfies every symmetric-set flag") {
    ParsedSolution ps = load_fixture("example_5_1.ybe");
    CHECK(ps.qs.size() == 14);
    AxiomReport rep = check_axioms(ps.qs);
    for (const auto& [name, flag] : axiom_flag_list(rep)) {
        INFO(name);
        CHECK(flag->holds);
    }
    CHECK(rep.square_free_symmetric);
}

TEST_CASE("one-element solution is legal") {
    QuadraticSet qs = QuadraticSet::from_pair_map({"x"}, {{0, 0}});
    AxiomReport rep = check_axioms(qs);
    CHECK(rep.square_free_symmetric);
}

}  // TEST_SUITE
