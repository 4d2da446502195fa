#include <random>

#include "doctest.h"
#include "ybe/cyclotomic.hpp"

using namespace ybe;

TEST_SUITE("cyclotomic") {

TEST_CASE("unit reduction and arithmetic") {
    CHECK(unit(0, 1) == unit_one());
    CHECK(unit(6, 12) == unit(1, 2));
    CHECK(unit(-1, 6) == unit(5, 6));
    CHECK(unit(14, 12) == unit(1, 6));

    // theta * theta^5 = 1 for a 6th root.
    CHECK(unit_mul(unit(1, 6), unit(5, 6)) == unit_one());
    // (zeta_12)^2 = zeta_6.
    CHECK(unit_pow(unit(1, 12), 2) == unit(1, 6));
    CHECK(unit_inv(unit(5, 6)) == unit(1, 6));
    CHECK(unit_order(unit(3, 12)) == 4);
    CHECK(to_string(unit(5, 6)) == "zeta(6)^5");
    CHECK(to_string(unit_one()) == "1");
}

TEST_CASE("unit group laws on pseudorandom fractions") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long long> num(-60, 60), den(1, 36);
    for (int it = 0; it < 500; ++it) {
        CycExp a = unit(num(rng), den(rng));
        CycExp b = unit(num(rng), den(rng));
        CycExp c = unit(num(rng), den(rng));
        CHECK(unit_mul(a, b) == unit_mul(b, a));
        CHECK(unit_mul(unit_mul(a, b), c) == unit_mul(a, unit_mul(b, c)));
        CHECK(unit_mul(a, unit_inv(a)) == unit_one());
        CHECK(unit_mul(a, unit_one()) == a);
        CHECK(unit_pow(a, unit_order(a)) == unit_one());
    }
}

TEST_CASE("cyclotomic polynomials") {
    // Phi_1 = x - 1
    CHECK(cyclotomic_poly(1) == std::vector<mpz_class>{-1, 1});
    // Phi_6 = x^2 - x + 1
    CHECK(cyclotomic_poly(6) == std::vector<mpz_class>{1, -1, 1});
    // Phi_12 = x^4 - x^2 + 1
    CHECK(cyclotomic_poly(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(36) == 12);
}

TEST_CASE("CycNum embedding and geometric sums") {
    CHECK(CycNum::embed(unit_one(), 7) == CycNum::from_rational(1, 7));

    // 1 + zeta_3 + zeta_3^2 = 0
    CycNum s = CycNum::zero(3);
    for (int k = 0; k < 3; ++k) s = s + CycNum::embed(unit(k, 3), 3);
    CHECK(s.is_zero());

    // sum over all 12th roots = 0
    CycNum s12 = CycNum::zero(12);
    for (int k = 0; k < 12; ++k) s12 = s12 + CycNum::embed(unit(k, 12), 12);
    CHECK(s12.is_zero());
}

TEST_CASE("embed is a homomorphism and the degree bound holds") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> num(0, 35);
    const long N = 36;
    for (int it = 0; it < 200; ++it) {
        CycExp a = unit(num(rng), N);
        CycExp b = unit(num(rng), N);
        CHECK(CycNum::embed(unit_mul(a, b), N) == CycNum::embed(a, N) * CycNum::embed(b, N));
    }
    for (long k = 0; k < N; ++k) {
        CycNum z = CycNum::embed(unit(k, N), N);
        for (long i = euler_phi(N); i < N; ++i) CHECK(z.coeffs()[i] == 0);
    }
}

TEST_CASE("level mismatch and lifting") {
    CHECK_THROWS_AS(CycNum::embed(unit(1, 5), 12), Error);
    CHECK_THROWS_AS((void)(CycNum::zero(3) + CycNum::zero(4)), Error);
    CycNum z = CycNum::embed(unit(1, 3), 3);
    CHECK(z.lift(12) == CycNum::embed(unit(1, 3), 12));
}

TEST_CASE("inverses in Q(zeta_N)") {
    // (1 + zeta_5)^{-1} verified by multiplication, plus pseudorandom cases.
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (long N : {4L, 5L, 6L, 12L}) {
        CycNum one = CycNum::from_rational(1, N);
        for (int it = 0; it < 40; ++it) {
            CycNum z = CycNum::zero(N);
            for (long i = 0; i < euler_phi(N); ++i)
                z = z + CycNum::from_rational(coeff(rng), N) * CycNum::embed(unit(i, N), N);
            if (z.is_zero()) continue;
            CHECK(z * z.inverse() == one);
        }
    }
}

TEST_CASE("printing") {
    CycNum z = CycNum::from_rational(mpq_class(1, 2), 12) - CycNum::embed(unit(1, 12), 12);
    CHECK(to_string(z) == "1/2 - zeta(12)^1");
    CHECK(to_string(CycNum::zero(5)) == "0");
}

}  // TEST_SUITE
