#pragma once

#include <string>
#include <vector>

#include "ybe/datum.hpp"
#include "ybe/diagonalizer.hpp"

namespace ybe {

// One defining rewrite xy = zt of A(k,X,r); stored once per r-pair.
struct RewriteRelation {
    int x1, y1, x2, y2;
};

// y_a y_b = q * y_b y_a for diagonal-basis generators a=(i,eta), b=(j,zeta).
struct QRelation {
    int i, j;
    long eta, zeta;
    CycExp q;
};

struct RelationSet {
    std::vector<std::string> lines;  // stable print form
    std::vector<RewriteRelation> rewrites;
    std::vector<QRelation> qcomms;
};

RelationSet relations_x(const QuadraticSet& qs);
RelationSet relations_y(const QuadraticSet& qs, const CompleteDatum& d, const MuTable& mu);
// Exterior-calculus relations; x-form follows x . dy = d(x|>y) . x<|y,
// y-form the q-commutation form with the same mu-ratios.
RelationSet calculus_relations_x(const QuadraticSet& qs);
RelationSet calculus_relations_y(const QuadraticSet& qs, const CompleteDatum& d,
                                 const MuTable& mu);

// The bullet model of A(k,X,r) on commutative monomials in the x-letters:
// m . m' = m * (gamma_m applied letterwise to m'), gamma_m the composition of
// the left actions of m's letters.  Requires L constant on every orbit
// (multipermutation level <= 2).
class BulletAlgebra {
public:
    explicit BulletAlgebra(const QuadraticSet& qs);  // NotLevelTwo

    using Monomial = std::vector<int>;  // exponent vector over X

    Monomial bullet(const Monomial& a, const Monomial& b) const;
    Monomial word_monomial(const std::vector<int>& word) const;
    Perm gamma(const Monomial& m) const;

    // x . y == (x|>y) . (x<|y) for all letters.
    bool defining_check() const;
    // (a.b).c == a.(b.c) over all monomial triples of total degree <= max_degree
    // built from the given letters (all letters when empty).
    bool associativity_check(int max_degree = 3, const std::vector<int>& letters = {}) const;

    const QuadraticSet& solution() const { return qs_; }

private:
    QuadraticSet qs_;
    std::vector<Perm> acts_;
};

// Dimension of the degree-d component of the free algebra modulo the rewrite
// ideal, by exact rational row reduction; TooLarge when n^d exceeds max_dim.
long hilbert_dimension(const QuadraticSet& qs, int degree, long max_dim = 20000);
// Compares against the commutative count C(n+d-1, d).
bool hilbert_check(const QuadraticSet& qs, int degree, long max_dim = 20000);
unsigned long binomial(unsigned long n, unsigned long k);

}  // namespace ybe
