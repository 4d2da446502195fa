#pragma once

#include <map>
#include <vector>

#include "ybe/datum.hpp"
#include "ybe/diagonalizer.hpp"

namespace ybe {

// Exterior-algebra basis element over letters 0..n-1: a commutative exponent
// vector and a strictly increasing list of differential letters.
struct ExtKey {
    std::vector<int> exp;
    std::vector<int> dl;

    auto operator<=>(const ExtKey&) const = default;
    int form_degree() const { return static_cast<int>(dl.size()); }
    int total_degree() const {
        int d = form_degree();
        for (int e : exp) d += e;
        return d;
    }
};

using QForm = std::map<ExtKey, mpq_class>;
using CForm = std::map<ExtKey, CycNum>;

// x-letter model of (Omega(A), d): underlying space is the classical exterior
// algebra, the product is twisted by the letterwise left action (differential
// letters act like their letters), d is the classical exterior derivative.
class ExteriorModel {
public:
    explicit ExteriorModel(const QuadraticSet& qs);  // NotLevelTwo

    int letters() const { return qs_.size(); }
    QForm term(const std::vector<int>& xword, const std::vector<int>& dletters,
               const mpq_class& c = 1) const;
    QForm bullet(const QForm& a, const QForm& b) const;
    QForm d(const QForm& f) const;

    // Transport of a form by a left action; d commutes with it.
    QForm transport(const Perm& g, const QForm& f) const;

    bool d_squared_zero(int max_degree) const;
    bool graded_leibniz(int max_degree) const;
    bool d_action_equivariant(int max_degree) const;

    std::vector<ExtKey> basis_keys(int max_degree) const;
    const QuadraticSet& solution() const { return qs_; }

private:
    QuadraticSet qs_;
    std::vector<Perm> acts_;
    Perm gamma_of(const ExtKey& k) const;
};

// Diagonal-basis model: the same calculus in the y-generators, twisted by the
// bicharacter F((i,eta),(j,zeta)) = mu^i_{j,zeta}; coefficients in Q(zeta_L).
class DiagonalExteriorModel {
public:
    DiagonalExteriorModel(const CompleteDatum& d, const MuTable& mu);

    int generators() const { return ngen_; }
    long level() const { return level_; }
    int generator_of(int orbit, long eta_pos) const;

    CForm term(const std::vector<int>& yword, const std::vector<int>& dletters) const;
    CForm term(const std::vector<int>& yword, const std::vector<int>& dletters,
               const CycNum& c) const;
    CForm scale(const CycExp& c, const CForm& f) const;
    CForm add(const CForm& a, const CForm& b) const;
    CForm bullet(const CForm& a, const CForm& b) const;
    CForm d(const CForm& f) const;

    // Braided partial from df = sum_i (partial_i f) . dy_i;  f must be a
    // function (no differential letters).
    CForm partial(int gen, const CForm& f) const;

    CycExp rho(int a, int b) const;  // R(y_a ox y_b) = rho_ab y_b ox y_a

    // partial_i(f . y_{j1}...y_{jl}) = f . partial_i(...) +
    //   (prod_b rho_{i,j_b}) (partial_i f) . (...)
    bool braided_derivation_check(int gen, const CForm& f, const std::vector<int>& word) const;

private:
    int ngen_ = 0;
    long level_ = 1;
    std::vector<CycExp> bichar_;  // row-major ngen x ngen
    std::vector<long> gen_offset_;
    CycExp F(int a, int b) const { return bichar_[a * ngen_ + b]; }
};

}  // namespace ybe
