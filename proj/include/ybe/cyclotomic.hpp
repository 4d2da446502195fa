#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "ybe/errors.hpp"

namespace ybe {

// A root of unity exp(2*pi*i * num/den), reduced so that gcd(num,den)=1 and
// 0 <= num < den.  The value 1 is 0/1.  All arithmetic is exponent arithmetic
// mod 1 and therefore exact.
struct CycExp {
    long long num = 0;
    long long den = 1;

    bool operator==(const CycExp&) const = default;
    auto operator<=>(const CycExp&) const = default;
    bool is_one() const { return num == 0; }
};

CycExp unit(long long num, long long den);
inline CycExp unit_one() { return CycExp{0, 1}; }
CycExp unit_mul(CycExp a, CycExp b);
CycExp unit_pow(CycExp a, long long k);
CycExp unit_inv(CycExp a);
// Order of the root of unity (the reduced denominator).
inline long long unit_order(CycExp a) { return a.den; }
std::string to_string(const CycExp& e);

// N-th cyclotomic polynomial, ascending integer coefficients; cached.
const std::vector<mpz_class>& cyclotomic_poly(long N);

long euler_phi(long N);

// An element of Q(zeta_N): rational coefficient vector of length N indexed by
// powers of zeta_N, kept reduced modulo Phi_N.  Entries at indices >= phi(N)
// are zero after reduction, so equality of vectors is equality of values.
class CycNum {
public:
    CycNum() : level_(1), coef_(1, mpq_class(0)) {}

    static CycNum zero(long N);
    static CycNum from_rational(const mpq_class& q, long N);
    static CycNum embed(const CycExp& e, long N);  // LevelMismatch if den(e) does not divide N

    long level() const { return level_; }
    const std::vector<mpq_class>& coeffs() const { return coef_; }
    bool is_zero() const;

    CycNum lift(long M) const;  // LevelMismatch unless level | M

    CycNum operator-() const;
    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
    CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

    CycNum inverse() const;  // Internal error on zero

    bool operator==(const CycNum&) const = default;

private:
    long level_;
    std::vector<mpq_class> coef_;
    void reduce();
};

std::string to_string(const CycNum& z);

}  // namespace ybe
