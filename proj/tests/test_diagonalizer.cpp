#include <algorithm>
#include <map>
#include <tuple>

#include "doctest.h"
#include "helpers.hpp"
#include "ybe/diagonalizer.hpp"
#include "ybe/io.hpp"

using namespace ybe;
using namespace ybe::testing;

namespace {

CompleteDatum fixture_datum(const char* name) {
    ParsedSolution ps = load_fixture(name);
    OrbitDecomposition orb = orbits(ps.qs);
    return build_datum(ps.qs, resolve_basis_override(ps, orb));
}

}  // namespace

TEST_SUITE("diagonalizer") {

TEST_CASE("y vectors of the order-14 fixture") {
    ParsedSolution ps = load_fixture("example_5_1.ybe");
    CompleteDatum d = fixture_datum("example_5_1.ybe");
    DiagonalBasis y = build_y_basis(d);
    REQUIRE(y.vecs[0].size() == 12);
    // y_0 is the all-ones vector.
    for (const CycExp& c : y.vecs[0][0]) CHECK(c == unit_one());
    // y_k has entry theta^{k(12-j)} at position j (1-based).
    for (int k = 0; k < 12; ++k)
        for (long j = 1; j <= 12; ++j)
            CHECK(y.vecs[0][k][j - 1] == unit(static_cast<long long>(k) * (12 - j), 12));
    // Trivial orbit blocks are the single vector (1).
    CHECK(y.vecs[1].size() == 1);
    CHECK(y.vecs[1][0] == std::vector<CycExp>{unit_one()});
    (void)ps;
}

TEST_CASE("the two constructions agree on every fixture") {
    for (const char* name : {"example_5_1.ybe", "example_5_2.ybe"}) {
        CompleteDatum d = fixture_datum(name);
        for (const OrbitDatum& od : d.orbit_data)
            for (long pos = 0; pos < od.block_size; ++pos) {
                std::vector<int> eta = lambda_at(od, pos);
                CHECK(y_vector_character_route(od, eta) == y_vector_block_route(od, eta));
            }
    }
}

TEST_CASE("printed 18-entry vector of the order-42 fixture") {
    CompleteDatum d = fixture_datum("example_5_2.ybe");
    DiagonalBasis y = build_y_basis(d);
    const OrbitDatum& od = d.orbit_data[0];
    // eta = (1,1) sits at lambda position 1 + 3*1 = 4.
    long pos = od.abel.pos_of({1, 1});
    CHECK(pos == 4);
    std::vector<int> expected{3, 1, 5, 2, 0, 4, 1, 5, 3, 0, 4, 2, 5, 3, 1, 4, 2, 0};
    REQUIRE(y.vecs[0][pos].size() == 18);
    for (size_t k = 0; k < 18; ++k) CHECK(y.vecs[0][pos][k] == unit(expected[k], 6));
}

TEST_CASE("eigenvector check and eigenvalues") {
    ParsedSolution ps = load_fixture("example_5_1.ybe");
    CompleteDatum d = fixture_datum("example_5_1.ybe");
    DiagonalBasis y = build_y_basis(d);
    CHECK(eigen_check(ps.qs, d, y).ok);
    // L_a acts on y_k with eigenvalue exponent 2k/12, L_b with 3k/12.
    MuTable mu = mu_table(d);
    for (int k = 0; k < 12; ++k) {
        CHECK(mu.mu[1][0][k] == unit(2 * k, 12));
        CHECK(mu.mu[2][0][k] == unit(3 * k, 12));
        CHECK(mu.mu[0][0][k] == unit_one());
    }
}

TEST_CASE("orthogonality of characters over each restricted group") {
    for (const char* name : {"example_5_1.ybe", "example_5_2.ybe"}) {
        CompleteDatum d = fixture_datum(name);
        for (const OrbitDatum& od : d.orbit_data) {
            if (od.trivial()) continue;
            long N = od.orders.back();
            for (long pos = 1; pos < od.block_size; ++pos) {
                std::vector<int> eta = lambda_at(od, pos);
                CycNum sum = CycNum::zero(N);
                for (int g = 0; g < od.group.order(); ++g)
                    sum = sum + CycNum::embed(chi_eval(od, eta, od.abel.coords[g]), N);
                CHECK(sum.is_zero());
            }
        }
    }
}

TEST_CASE("verify_diagonal on the fixtures") {
    for (const char* name : {"example_5_1.ybe", "example_5_2.ybe"}) {
        ParsedSolution ps = load_fixture(name);
        CompleteDatum d = fixture_datum(name);
        DiagonalBasis y = build_y_basis(d);
        MuTable mu = mu_table(d);
        DiagonalReport rep = verify_diagonal(ps.qs, d, y, mu);
        CHECK(rep.ok);
        // Involutivity at the coefficient level and the intro q-formula.
        std::map<std::tuple<int, long, int, long>, CycExp> coeff;
        for (const auto& pc : rep.pairs) coeff[{pc.i, pc.eta, pc.j, pc.zeta}] = pc.coeff;
        for (const auto& pc : rep.pairs) {
            CHECK(unit_mul(pc.coeff, coeff[{pc.j, pc.zeta, pc.i, pc.eta}]) == unit_one());
            CHECK(pc.coeff ==
                  unit_mul(mu.mu[pc.i][pc.j][pc.zeta], unit_inv(mu.mu[pc.j][pc.i][pc.eta])));
        }
    }
}

TEST_CASE("order-14 fixture: the four coefficient families") {
    ParsedSolution ps = load_fixture("example_5_1.ybe");
    CompleteDatum d = fixture_datum("example_5_1.ybe");
    DiagonalBasis y = build_y_basis(d);
    MuTable mu = mu_table(d);
    DiagonalReport rep = verify_diagonal(ps.qs, d, y, mu);
    REQUIRE(rep.ok);
    auto find = [&](int i, long eta, int j, long zeta) {
        for (const auto& pc : rep.pairs)
            if (pc.i == i && pc.eta == eta && pc.j == j && pc.zeta == zeta) return pc.coeff;
        FAIL("pair not found");
        return unit_one();
    };
    for (int k = 0; k < 12; ++k) {
        CHECK(find(1, 0, 0, k) == unit(2 * k, 12));  // (a, y_k)
        CHECK(find(2, 0, 0, k) == unit(3 * k, 12));  // (b, y_k)
        CHECK(find(0, k, 1, 0) == unit(-2 * k, 12));
        for (int j = 0; j < 12; ++j) CHECK(find(0, j, 0, k) == unit_one());
    }
    CHECK(find(1, 0, 2, 0) == unit_one());  // (a, b)
}

TEST_CASE("check_diagonal_in_basis accepts the constructed basis") {
    ParsedSolution ps = load_fixture("example_5_1.ybe");
    CompleteDatum d = fixture_datum("example_5_1.ybe");
    DiagonalBasis y = build_y_basis(d);
    MuTable mu = mu_table(d);
    // Convert to a user basis at level 12.
    UserBasis basis;
    basis.level = 12;
    for (int i = 0; i < d.orb.count(); ++i) {
        const OrbitDatum& od = d.orbit_data[i];
        std::vector<int> local_of_enum(od.members.size());
        for (size_t k = 0; k < od.members.size(); ++k) {
            int member_pos = static_cast<int>(
                std::find(od.members.begin(), od.members.end(), od.enumeration[k]) -
                od.members.begin());
            local_of_enum[k] = member_pos;
        }
        for (long eta = 0; eta < od.block_size; ++eta) {
            UserBasisVector v;
            v.name = y_generator_name(ps.qs, d, i, eta);
            v.orbit = i;
            v.entries.assign(od.members.size(), CycNum::zero(12));
            for (long k = 0; k < od.block_size; ++k)
                v.entries[local_of_enum[k]] = CycNum::embed(y.vecs[i][eta][k], 12);
            basis.vecs.push_back(std::move(v));
        }
    }
    OrbitDecomposition orb = orbits(ps.qs);
    BasisCheckResult res = check_diagonal_in_basis(ps.qs, orb, basis);
    REQUIRE(res.diagonalizable);
    // mu values match the mu-table ratios.
    std::vector<std::pair<int, long>> flat;
    for (int i = 0; i < d.orb.count(); ++i)
        for (long e = 0; e < d.orbit_data[i].block_size; ++e) flat.push_back({i, e});
    for (size_t a = 0; a < flat.size(); ++a)
        for (size_t b = 0; b < flat.size(); ++b) {
            auto [i, eta] = flat[a];
            auto [j, zeta] = flat[b];
            CycExp q = unit_mul(mu.mu[i][j][zeta], unit_inv(mu.mu[j][i][eta]));
            CHECK(res.mu[a][b] == CycNum::embed(q, 12));
        }
}

TEST_CASE("trivial solution is diagonal in the x basis") {
    QuadraticSet triv = trivial_solution(2);
    OrbitDecomposition orb = orbits(triv);
    UserBasis basis;
    basis.level = 1;
    for (int i = 0; i < orb.count(); ++i) {
        UserBasisVector v;
        v.name = triv.name(orb.orbits[i][0]);
        v.orbit = i;
        v.entries = {CycNum::from_rational(1, 1)};
        basis.vecs.push_back(std::move(v));
    }
    BasisCheckResult res = check_diagonal_in_basis(triv, orb, basis);
    REQUIRE(res.diagonalizable);
    for (const auto& row : res.mu)
        for (const auto& m : row) CHECK(m == CycNum::from_rational(1, 1));
}

TEST_CASE("order-5 fixture: forced eigenbasis is obstructed at (y1, y2)") {
    ParsedSolution ps = load_fixture("example_5_3.ybe");
    OrbitDecomposition orb = orbits(ps.qs);
    UserBasis basis = load_basis_file(fixture_path("example_5_3_basis.ybasis"), ps.qs, orb);
    REQUIRE(basis.vecs.size() == 5);
    CHECK(basis.level == 4);
    BasisCheckResult res = check_diagonal_in_basis(ps.qs, orb, basis);
    REQUIRE_FALSE(res.diagonalizable);
    REQUIRE(res.first_obstruction.has_value());
    CHECK(basis.vecs[res.first_obstruction->a].name == "y1");
    CHECK(basis.vecs[res.first_obstruction->b].name == "y2");
    // The inconsistent conditions are mu = 1 and mu = -1.
    REQUIRE(res.first_obstruction->required.size() == 2);
    CycNum one = CycNum::from_rational(1, 4);
    CycNum minus_one = CycNum::from_rational(-1, 4);
    bool has_one = false, has_minus = false;
    for (const auto& v : res.first_obstruction->required) {
        if (v == one) has_one = true;
        if (v == minus_one) has_minus = true;
    }
    CHECK(has_one);
    CHECK(has_minus);
}

TEST_CASE("singular bases are rejected") {
    QuadraticSet triv = trivial_solution(2);
    OrbitDecomposition orb = orbits(triv);
    UserBasis basis;
    basis.level = 1;
    UserBasisVector v;
    v.name = "z";
    v.orbit = 0;
    v.entries = {CycNum::zero(1)};
    basis.vecs.push_back(v);
    v.orbit = 1;
    v.entries = {CycNum::from_rational(1, 1)};
    basis.vecs.push_back(v);
    CHECK_THROWS_AS(check_diagonal_in_basis(triv, orb, basis), Error);
}

}  // TEST_SUITE
