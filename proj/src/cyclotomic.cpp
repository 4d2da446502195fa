#include "ybe/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ybe {

CycExp unit(long long num, long long den) {
    if (den == 0) fail(Errc::Internal, "zero denominator in root-of-unity exponent");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    num %= den;
    if (num < 0) num += den;
    long long g = std::gcd(num, den);
    return CycExp{num / g, den / g};
}

CycExp unit_mul(CycExp a, CycExp b) {
    long long l = std::lcm(a.den, b.den);
    return unit(a.num * (l / a.den) + b.num * (l / b.den), l);
}

CycExp unit_pow(CycExp a, long long k) {
    long long kk = k % a.den;
    if (kk < 0) kk += a.den;
    return unit(a.num * kk, a.den);
}

CycExp unit_inv(CycExp a) { return unit(-a.num, a.den); }

std::string to_string(const CycExp& e) {
    if (e.num == 0) return "1";
    return "zeta(" + std::to_string(e.den) + ")^" + std::to_string(e.num);
}

namespace {

using ZPoly = std::vector<mpz_class>;  // ascending coefficients

// Exact division of integer polynomials, quotient known to be integral.
ZPoly zpoly_div(const ZPoly& a, const ZPoly& b) {
    ZPoly rem = a;
    ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
    long db = static_cast<long>(b.size()) - 1;
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        mpz_class c = rem[i] / b[db];
        q[i - db] = c;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
    }
    for (const auto& r : rem)
        if (r != 0) fail(Errc::Internal, "inexact cyclotomic polynomial division");
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    return q;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_poly(long N) {
    // Recursively fills a process-wide cache; single-threaded use only, like
    // the rest of the library.
    static std::map<long, ZPoly> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    if (N < 1) fail(Errc::IndexOutOfRange, "cyclotomic level must be >= 1");
    // x^N - 1 divided by Phi_d for all proper divisors d of N.
    ZPoly p(N + 1, mpz_class(0));
    p[0] = -1;
    p[N] = 1;
    for (long d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        ZPoly phi_d = cyclotomic_poly(d);
        p = zpoly_div(p, phi_d);
    }
    return cache.emplace(N, std::move(p)).first->second;
}

long euler_phi(long N) { return static_cast<long>(cyclotomic_poly(N).size()) - 1; }

void CycNum::reduce() {
    const ZPoly& phi = cyclotomic_poly(level_);
    long d = static_cast<long>(phi.size()) - 1;
    for (long i = level_ - 1; i >= d; --i) {
        if (coef_[i] == 0) continue;
        mpq_class c = coef_[i];
        for (long j = 0; j <= d; ++j) coef_[i - d + j] -= c * mpq_class(phi[j]);
    }
    for (auto& c : coef_) c.canonicalize();
}

CycNum CycNum::zero(long N) {
    if (N < 1) fail(Errc::IndexOutOfRange, "cyclotomic level must be >= 1");
    CycNum z;
    z.level_ = N;
    z.coef_.assign(N, mpq_class(0));
    return z;
}

CycNum CycNum::from_rational(const mpq_class& q, long N) {
    CycNum z = zero(N);
    z.coef_[0] = q;
    z.reduce();
    return z;
}

CycNum CycNum::embed(const CycExp& e, long N) {
    if (N % e.den != 0)
        fail(Errc::LevelMismatch,
             "root of unity of order " + std::to_string(e.den) + " does not live in Q(zeta_" +
                 std::to_string(N) + ")");
    CycNum z = zero(N);
    z.coef_[(e.num * (N / e.den)) % N] = 1;
    z.reduce();
    return z;
}

bool CycNum::is_zero() const {
    for (const auto& c : coef_)
        if (c != 0) return false;
    return true;
}

CycNum CycNum::lift(long M) const {
    if (M % level_ != 0)
        fail(Errc::LevelMismatch, "cannot lift from level " + std::to_string(level_) + " to " +
                                      std::to_string(M));
    CycNum z = zero(M);
    long k = M / level_;
    for (long i = 0; i < level_; ++i) z.coef_[i * k] += coef_[i];
    z.reduce();
    return z;
}

CycNum CycNum::operator-() const {
    CycNum z = *this;
    for (auto& c : z.coef_) c = -c;
    return z;
}

static void require_same_level(const CycNum& a, const CycNum& b) {
    if (a.level() != b.level())
        fail(Errc::LevelMismatch, "operands at levels " + std::to_string(a.level()) + " and " +
                                      std::to_string(b.level()) + "; lift to the lcm first");
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    require_same_level(a, b);
    CycNum z = a;
    for (long i = 0; i < a.level(); ++i) z.coef_[i] += b.coef_[i];
    z.reduce();
    return z;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
    require_same_level(a, b);
    CycNum z = a;
    for (long i = 0; i < a.level(); ++i) z.coef_[i] -= b.coef_[i];
    z.reduce();
    return z;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    require_same_level(a, b);
    long N = a.level();
    CycNum z = CycNum::zero(N);
    // Convolve folding with zeta_N^N = 1, then reduce mod Phi_N.
    for (long i = 0; i < N; ++i) {
        if (a.coef_[i] == 0) continue;
        for (long j = 0; j < N; ++j) {
            if (b.coef_[j] == 0) continue;
            z.coef_[(i + j) % N] += a.coef_[i] * b.coef_[j];
        }
    }
    z.reduce();
    return z;
}

namespace {

using QPoly = std::vector<mpq_class>;

long qdeg(const QPoly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

QPoly qpoly_mod(QPoly a, const QPoly& b) {
    long db = qdeg(b);
    for (long i = qdeg(a); i >= db; i = qdeg(a)) {
        mpq_class c = a[i] / b[db];
        for (long j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return a;
}

}  // namespace

CycNum CycNum::inverse() const {
    if (is_zero()) fail(Errc::Internal, "division by zero in Q(zeta_N)");
    // Extended Euclid against Phi_N; Phi_N is irreducible over Q so the gcd
    // with any nonzero residue is a nonzero constant.
    const ZPoly& phiz = cyclotomic_poly(level_);
    QPoly phi(phiz.size());
    for (size_t i = 0; i < phiz.size(); ++i) phi[i] = mpq_class(phiz[i]);
    QPoly r0 = phi;
    QPoly r1(coef_.begin(), coef_.end());
    // Invariant: r_k == s_k * (*this) modulo Phi_N.
    QPoly s0{mpq_class(0)}, s1{mpq_class(1)};
    while (true) {
        long d1 = qdeg(r1);
        if (d1 <= 0) break;
        long d0 = qdeg(r0);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        mpq_class c = r0[d0] / r1[d1];
        long shift = d0 - d1;
        for (long j = 0; j <= d1; ++j) r0[shift + j] -= c * r1[j];
        if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, mpq_class(0));
        for (size_t j = 0; j < s1.size(); ++j) s0[shift + j] -= c * s1[j];
    }
    if (qdeg(r1) != 0) fail(Errc::Internal, "gcd with Phi_N is not constant");
    mpq_class g = r1[qdeg(r1)];
    QPoly s = qpoly_mod(std::move(s1), phi);
    CycNum z = zero(level_);
    for (size_t i = 0; i < s.size() && i < static_cast<size_t>(level_); ++i) z.coef_[i] = s[i] / g;
    z.reduce();
    if (!((*this) * z == from_rational(1, level_)))
        fail(Errc::Internal, "inverse verification failed in Q(zeta_N)");
    return z;
}

std::string to_string(const CycNum& z) {
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < z.level(); ++i) {
        const mpq_class& c = z.coeffs()[i];
        if (c == 0) continue;
        mpq_class a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string coeff = a.get_str();
        if (i == 0) {
            os << coeff;
        } else {
            if (coeff != "1") os << coeff << "*";
            os << "zeta(" << z.level() << ")^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace ybe
