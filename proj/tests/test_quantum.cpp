#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "ybe/exterior.hpp"
#include "ybe/quantum.hpp"

using namespace ybe;
using namespace ybe::testing;

namespace {

struct Fixture {
    ParsedSolution ps;
    CompleteDatum d;
    MuTable mu;
};

Fixture level2_fixture(const char* name) {
    Fixture f{load_fixture(name), {}, {}};
    OrbitDecomposition orb = orbits(f.ps.qs);
    f.d = build_datum(f.ps.qs, resolve_basis_override(f.ps, orb));
    f.mu = mu_table(f.d);
    return f;
}

}  // namespace

TEST_SUITE("quantum") {

TEST_CASE("x relations of the trivial solution") {
    RelationSet rs = relations_x(trivial_solution(2));
    REQUIRE(rs.lines.size() == 1);
    CHECK(rs.lines[0] == "t1*t2 = t2*t1");
}

TEST_CASE("x relations of the order-5 fixture") {
    ParsedSolution ps = load_fixture("example_5_3.ybe");
    RelationSet rs = relations_x(ps.qs);
    CHECK(rs.rewrites.size() == 10);  // (25 - 5 fixed) / 2
    // a*x1 = x2*a (whichever of the two orientations got listed).
    bool found = std::find(rs.lines.begin(), rs.lines.end(), "a*x1 = x2*a") != rs.lines.end() ||
                 std::find(rs.lines.begin(), rs.lines.end(), "x2*a = a*x1") != rs.lines.end();
    CHECK(found);
    // Diagonal pairs are omitted.
    for (const auto& line : rs.lines) CHECK(line.find("x1*x1") == std::string::npos);
}

TEST_CASE("y relations of the order-14 fixture") {
    Fixture f = level2_fixture("example_5_1.ybe");
    RelationSet rs = relations_y(f.ps.qs, f.d, f.mu);
    // 14 generators -> 91 ordered pairs a < b.
    CHECK(rs.lines.size() == 91);
    // The a <-> y_k commutation: listed with the orbit-ordered orientation,
    // y[5]*a = theta^{-10} a*y[5]; equivalently a*y[5] = theta^{10} y[5]*a.
    CHECK(std::find(rs.lines.begin(), rs.lines.end(), "y[5]*a = zeta(6)^1 * a*y[5]") !=
          rs.lines.end());
    CHECK(std::find(rs.lines.begin(), rs.lines.end(), "a*b = b*a") != rs.lines.end());
    // Same-orbit pairs commute with q = 1.
    for (const QRelation& q : rs.qcomms)
        if (q.i == q.j) CHECK(q.q == unit_one());
    // Antisymmetry q_ab q_ba = 1 over all pairs.
    for (const QRelation& q : rs.qcomms) {
        CycExp back = unit_mul(f.mu.mu[q.j][q.i][q.eta], unit_inv(f.mu.mu[q.i][q.j][q.zeta]));
        CHECK(unit_mul(q.q, back) == unit_one());
    }
}

TEST_CASE("bullet product basics") {
    Fixture f = level2_fixture("example_5_1.ybe");
    BulletAlgebra alg(f.ps.qs);
    int a = f.ps.qs.index_of_name("a");
    int x1 = f.ps.qs.index_of_name("x1");
    int x3 = f.ps.qs.index_of_name("x3");
    // a . x1 = a x3 (L_a moves x1 to x3).
    auto m = alg.bullet(alg.word_monomial({a}), alg.word_monomial({x1}));
    CHECK(m == alg.word_monomial({a, x3}));
    // Same-orbit letters multiply plainly.
    CHECK(alg.bullet(alg.word_monomial({x1}), alg.word_monomial({x3})) ==
          alg.word_monomial({x1, x3}));
    // Unit law.
    CHECK(alg.bullet(alg.word_monomial({}), alg.word_monomial({a, x1})) ==
          alg.word_monomial({a, x1}));
    CHECK(alg.defining_check());
}

TEST_CASE("bullet on the trivial solution and associativity") {
    BulletAlgebra triv(trivial_solution(3));
    CHECK(triv.defining_check());
    CHECK(triv.associativity_check(3));

    Fixture f1 = level2_fixture("example_5_1.ybe");
    BulletAlgebra alg1(f1.ps.qs);
    CHECK(alg1.defining_check());
    CHECK(alg1.associativity_check(3));

    Fixture f2 = level2_fixture("example_5_2.ybe");
    BulletAlgebra alg2(f2.ps.qs);
    CHECK(alg2.defining_check());
    // One letter per orbit keeps the degree-3 sweep small.
    std::vector<int> letters{f2.ps.qs.index_of_name("a1"), f2.ps.qs.index_of_name("b1"),
                             f2.ps.qs.index_of_name("c1")};
    CHECK(alg2.associativity_check(3, letters));
}

TEST_CASE("bullet rejects non-level-2 input") {
    ParsedSolution ps = load_fixture("example_5_3.ybe");
    CHECK_THROWS_AS(BulletAlgebra{ps.qs}, Error);
}

TEST_CASE("hilbert dimensions") {
    QuadraticSet triv = trivial_solution(2);
    CHECK(hilbert_dimension(triv, 2) == 3);
    CHECK(hilbert_check(triv, 2));

    ParsedSolution ps = load_fixture("example_5_3.ybe");
    CHECK(hilbert_dimension(ps.qs, 2) == 15);
    CHECK(hilbert_dimension(ps.qs, 3) == 35);
    CHECK(hilbert_check(ps.qs, 2));
    CHECK(hilbert_check(ps.qs, 3));
    CHECK_THROWS_AS(hilbert_dimension(ps.qs, 10), Error);
}

TEST_CASE("x calculus relations") {
    ParsedSolution ps = load_fixture("example_5_3.ybe");
    RelationSet rs = calculus_relations_x(ps.qs);
    CHECK(std::find(rs.lines.begin(), rs.lines.end(), "a*dx1 = dx2*a") != rs.lines.end());
    CHECK(std::find(rs.lines.begin(), rs.lines.end(), "da*dx1 + dx2*da = 0") != rs.lines.end());
}

TEST_CASE("y calculus relations of the order-14 fixture") {
    Fixture f = level2_fixture("example_5_1.ybe");
    RelationSet rs = calculus_relations_y(f.ps.qs, f.d, f.mu);
    // dy[k]*a = zeta^{-2k} a*dy[k]; k = 1 gives zeta(6)^5.
    CHECK(std::find(rs.lines.begin(), rs.lines.end(), "dy[1]*a = zeta(6)^5 * a*dy[1]") !=
          rs.lines.end());
    // Same-orbit differentials anticommute.
    CHECK(std::find(rs.lines.begin(), rs.lines.end(), "dy[1]*dy[2] + dy[2]*dy[1] = 0") !=
          rs.lines.end());
}

TEST_CASE("exterior model: d^2, Leibniz, action equivariance") {
    ExteriorModel triv(trivial_solution(2));
    CHECK(triv.d_squared_zero(3));
    CHECK(triv.graded_leibniz(3));

    ParsedSolution ps = load_fixture("example_5_1.ybe");
    ExteriorModel model(ps.qs);
    // d(1) = 0 and d(dx) = 0.
    CHECK(model.d(model.term({}, {})).empty());
    CHECK(model.d(model.term({}, {0})).empty());
    CHECK(model.d_squared_zero(2));
    CHECK(model.graded_leibniz(2));
    CHECK(model.d_action_equivariant(2));
    // x . dy = d(x|>y) . x<|y on letters.
    int a = ps.qs.index_of_name("a");
    int x1 = ps.qs.index_of_name("x1");
    auto [z, t] = ps.qs.r(a, x1);
    CHECK(model.bullet(model.term({a}, {}), model.term({}, {x1})) ==
          model.bullet(model.term({}, {z}), model.term({t}, {})));
    // dx . dy + d(x|>y) . d(x<|y) = 0 on all letter pairs: two 1-forms pick
    // up the graded swap sign.
    for (int u = 0; u < ps.qs.size(); ++u)
        for (int v = 0; v < ps.qs.size(); ++v) {
            auto [zz, tt] = ps.qs.r(u, v);
            QForm lhs = model.bullet(model.term({}, {u}), model.term({}, {v}));
            QForm rhs = model.bullet(model.term({}, {zz}), model.term({}, {tt}));
            for (auto& [key, c] : rhs) c = -c;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("diagonal exterior model: braided partials") {
    Fixture f = level2_fixture("example_5_1.ybe");
    DiagonalExteriorModel model(f.d, f.mu);
    REQUIRE(model.generators() == 14);
    const int gen_a = model.generator_of(1, 0);
    // partial_i y_j = delta_ij.
    for (int k : {0, 3, 7}) {
        int g = model.generator_of(0, k);
        CForm yk = model.term({g}, {});
        CHECK(model.partial(g, yk) == model.term({}, {}));
        CHECK(model.partial(gen_a, yk).empty());
    }
    // partial_{y_k}(y_k . a) = rho_{y_k,a} a with rho = zeta^{-2k}; the
    // braided rule and the direct expansion agree.
    for (int k = 1; k < 12; ++k) {
        int g = model.generator_of(0, k);
        CForm yk = model.term({g}, {});
        CForm prod = model.bullet(yk, model.term({gen_a}, {}));
        CForm direct = model.partial(g, prod);
        CHECK(direct == model.scale(unit(-2 * k, 12), model.term({gen_a}, {})));
        CHECK(model.braided_derivation_check(g, yk, {gen_a}));
    }
    // Twenty deterministic (f, word) pairs.
    int checked = 0;
    for (int k = 0; k < 5; ++k)
        for (int l = 0; l < 4; ++l) {
            int g1 = model.generator_of(0, k);
            int g2 = model.generator_of(0, (k + l + 1) % 12);
            CForm fpoly = model.add(model.term({g1}, {}), model.term({g1, g2}, {}));
            std::vector<int> word{gen_a, g2};
            for (int gen = 0; gen < model.generators(); gen += 5)
                CHECK(model.braided_derivation_check(gen, fpoly, word));
            ++checked;
        }
    CHECK(checked == 20);
}

}  // TEST_SUITE
