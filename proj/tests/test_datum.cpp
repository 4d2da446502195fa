#include <numeric>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "ybe/datum.hpp"
#include "ybe/io.hpp"

using namespace ybe;
using namespace ybe::testing;

TEST_SUITE("datum") {

TEST_CASE("sigma table of the order-14 fixture") {
    ParsedSolution ps = load_fixture("example_5_1.ybe");
    OrbitDecomposition orb = orbits(ps.qs);
    SigmaTable sig = sigma_table(ps.qs, orb);
    // Orbit 1 = x's, orbit 2 = {a}, orbit 3 = {b}.
    CHECK(sig.sigma[0][0].is_identity());
    CHECK(sig.cycle_len[1][0] == 6);  // L_a on the x's: two 6-cycles
    CHECK(sig.cycle_len[2][0] == 4);  // L_b: three 4-cycles
    CHECK(sig.sigma[1][0].order() == 6);
    CHECK(sig.sigma[2][0].order() == 4);
}

TEST_CASE("sigma table of the order-42 fixture") {
    ParsedSolution ps = load_fixture("example_5_2.ybe");
    OrbitDecomposition orb = orbits(ps.qs);
    SigmaTable sig = sigma_table(ps.qs, orb);
    CHECK(sig.cycle_len[2][0] == 3);  // c's act on a's by six 3-cycles
    CHECK(sig.cycle_len[1][0] == 6);
    CHECK(sig.cycle_len[0][1] == 4);
    CHECK(sig.cycle_len[2][1] == 4);
    CHECK(sig.cycle_len[0][2] == 2);
    CHECK(sig.cycle_len[1][2] == 4);
    for (int i = 0; i < 3; ++i) CHECK(sig.sigma[i][i].is_identity());
}

TEST_CASE("sigma table rejects non-level-2 inputs") {
    ParsedSolution ps = load_fixture("example_5_3.ybe");
    OrbitDecomposition orb = orbits(ps.qs);
    CHECK_THROWS_AS(sigma_table(ps.qs, orb), Error);
}

TEST_CASE("datum of the order-14 fixture with the pinned basis") {
    ParsedSolution ps = load_fixture("example_5_1.ybe");
    OrbitDecomposition orb = orbits(ps.qs);
    BasisOverride ov = resolve_basis_override(ps, orb);
    CompleteDatum d = build_datum(ps.qs, ov);
    const OrbitDatum& od = d.orbit_data[0];
    CHECK(od.orders == std::vector<long>{12});
    CHECK(od.m[1] == std::vector<int>{2});
    CHECK(od.m[2] == std::vector<int>{3});
    CHECK(od.m[0] == std::vector<int>{0});
    // x_{1j} follows the 12-cycle from x1.
    for (long j = 0; j < 12; ++j) CHECK(ps.qs.name(od.enumeration[j]) == "x" + std::to_string(j + 1));
    // Trivial orbits carry the placeholder.
    CHECK(d.orbit_data[1].trivial());
    CHECK(d.orbit_data[1].block_size == 1);
    CHECK(d.orbit_data[1].m[0].empty());
}

TEST_CASE("datum of the order-42 fixture with the pinned bases") {
    ParsedSolution ps = load_fixture("example_5_2.ybe");
    OrbitDecomposition orb = orbits(ps.qs);
    BasisOverride ov = resolve_basis_override(ps, orb);
    CompleteDatum d = build_datum(ps.qs, ov);
    CHECK(d.orbit_data[0].orders == std::vector<long>{3, 6});
    CHECK(d.orbit_data[1].orders == std::vector<long>{4, 4});
    CHECK(d.orbit_data[2].orders == std::vector<long>{2, 4});
    CHECK(d.orbit_data[0].m[1] == std::vector<int>{0, 1});
    CHECK(d.orbit_data[0].m[2] == std::vector<int>{1, 0});
    CHECK(d.orbit_data[1].m[0] == std::vector<int>{1, 0});
    CHECK(d.orbit_data[1].m[2] == std::vector<int>{0, 1});
    CHECK(d.orbit_data[2].m[0] == std::vector<int>{1, 0});
    CHECK(d.orbit_data[2].m[1] == std::vector<int>{0, 1});
    // The enumerations follow the element numbering by construction.
    for (long j = 0; j < 18; ++j)
        CHECK(ps.qs.name(d.orbit_data[0].enumeration[j]) == "a" + std::to_string(j + 1));
    for (long j = 0; j < 16; ++j)
        CHECK(ps.qs.name(d.orbit_data[1].enumeration[j]) == "b" + std::to_string(j + 1));
    for (long j = 0; j < 8; ++j)
        CHECK(ps.qs.name(d.orbit_data[2].enumeration[j]) == "c" + std::to_string(j + 1));
}

TEST_CASE("datum invariants: reconstruction, cycle divisibility, enumeration") {
    for (const char* name : {"example_5_1.ybe", "example_5_2.ybe"}) {
        ParsedSolution ps = load_fixture(name);
        OrbitDecomposition orb = orbits(ps.qs);
        CompleteDatum d = build_datum(ps.qs, resolve_basis_override(ps, orb));
        for (int i = 0; i < d.orb.count(); ++i) {
            const OrbitDatum& od = d.orbit_data[i];
            if (od.trivial()) continue;
            CHECK(od.block_size == static_cast<long>(od.members.size()));
            CHECK(od.block_size == od.group.order());
            for (int j = 0; j < d.orb.count(); ++j) {
                // sigma^j_i = prod_k u_k^{m_k}
                Perm prod(static_cast<int>(od.members.size()));
                for (int k = 0; k < od.rank(); ++k)
                    prod = prod.after(od.group.elems[od.abel.basis[k]].power(od.m[j][k]));
                CHECK(prod == d.sig.sigma[j][i]);
                // d^j_i divides the exponent p_{i,s_i}.
                CHECK(od.orders.back() % d.sig.cycle_len[j][i] == 0);
            }
            // Enumeration covers the orbit without repeats.
            std::set<int> seen(od.enumeration.begin(), od.enumeration.end());
            CHECK(seen.size() == od.members.size());
        }
    }
}

TEST_CASE("chi_eval") {
    ParsedSolution ps = load_fixture("example_5_1.ybe");
    OrbitDecomposition orb = orbits(ps.qs);
    CompleteDatum d = build_datum(ps.qs, resolve_basis_override(ps, orb));
    const OrbitDatum& od = d.orbit_data[0];
    // Trivial character.
    for (long pos = 0; pos < 12; ++pos)
        CHECK(chi_eval(od, {0}, lambda_at(od, pos)) == unit_one());
    // eta = (k) on m = (2): exponent 2k/12.
    for (int k = 0; k < 12; ++k)
        CHECK(chi_eval(od, {k}, {2}) == unit(2 * k, 12));
    CHECK_THROWS_AS(chi_eval(od, {12}, {0}), Error);

    ParsedSolution e2 = load_fixture("example_5_2.ybe");
    OrbitDecomposition orb2 = orbits(e2.qs);
    CompleteDatum d2 = build_datum(e2.qs, resolve_basis_override(e2, orb2));
    // eta = (1,1), m = (1,0) on orbit 1: exponent 1/3 (theta_{11} = theta^2).
    CHECK(chi_eval(d2.orbit_data[0], {1, 1}, {1, 0}) == unit(1, 3));
}

TEST_CASE("default basis works when no override is given") {
    ParsedSolution ps = load_fixture("example_5_1.ybe");
    CompleteDatum d = build_datum(ps.qs);
    CHECK(d.orbit_data[0].orders == std::vector<long>{12});
    // The coordinates of sigma^2_1 depend on the chosen generator but the
    // reconstruction identity pins them.
    const OrbitDatum& od = d.orbit_data[0];
    Perm u = od.group.elems[od.abel.basis[0]];
    CHECK(u.power(od.m[1][0]) == d.sig.sigma[1][0]);
}

TEST_CASE("invalid override is rejected") {
    ParsedSolution ps = load_fixture("example_5_1.ybe");
    OrbitDecomposition orb = orbits(ps.qs);
    BasisOverride ov;
    ov[0] = {{ps.qs.index_of_name("a")}};  // order 6 != 12
    CHECK_THROWS_AS(build_datum(ps.qs, ov), Error);
}

}  // TEST_SUITE
