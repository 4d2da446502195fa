#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybe/cyclotomic.hpp"
#include "ybe/datum.hpp"

namespace ybe {

// Eigenvector basis {y^i_eta}.  vecs[i][eta_pos][k] is the coefficient of the
// k-th element of orbit i's datum enumeration (x_{i,k+1}); every entry is a
// root of unity.  The vectors follow the paper's block normal form, i.e. the
// eta = 0 vector is all ones and the entry at x_{i,m} is
// chi_eta(pi_m^{-1}) * prod_k theta_{ik}^{-eta_k}.
struct DiagonalBasis {
    std::vector<std::vector<std::vector<CycExp>>> vecs;
};

// Two independent constructions of the same vector; build_y_basis asserts
// they agree entrywise.
std::vector<CycExp> y_vector_character_route(const OrbitDatum& od, const std::vector<int>& eta);
std::vector<CycExp> y_vector_block_route(const OrbitDatum& od, const std::vector<int>& eta);

DiagonalBasis build_y_basis(const CompleteDatum& d);

struct EigenReport {
    bool ok = true;
    std::string failure;  // first witness, printable
};

// Checks P(g) y = chi_eta(g) y entrywise for every g in every restricted
// group and every eta, in exact root-of-unity arithmetic.
EigenReport eigen_check(const QuadraticSet& qs, const CompleteDatum& d, const DiagonalBasis& y);

// mu[j][i][eta_pos] = chi_eta(sigma^j_i).
struct MuTable {
    std::vector<std::vector<std::vector<CycExp>>> mu;
};

MuTable mu_table(const CompleteDatum& d);

enum class DiagonalForm { Swapped, Unswapped, Both };

struct PairCoefficient {
    int i = 0, j = 0;          // orbit indices
    long eta = 0, zeta = 0;    // lambda positions
    CycExp coeff;              // measured coefficient of R(y^i_eta ox y^j_zeta)
    DiagonalForm form = DiagonalForm::Swapped;
};

struct DiagonalReport {
    bool ok = true;
    std::vector<PairCoefficient> pairs;
    std::string failure;
};

// Expands R(y ox y') exactly in the x ox x basis and matches it against
// coeff * (y' ox y) with coeff = mu^i_{j,zeta} / mu^j_{i,eta}; also records
// whether the unswapped tensor order happens to hold.
DiagonalReport verify_diagonal(const QuadraticSet& qs, const CompleteDatum& d,
                               const DiagonalBasis& y, const MuTable& mu);

// User-supplied basis check ("is R diagonal in this basis?").
struct UserBasisVector {
    std::string name;
    int orbit = 0;
    std::vector<CycNum> entries;  // over the orbit's members, ascending element order
};

struct UserBasis {
    long level = 1;  // all entries live in Q(zeta_level)
    std::vector<UserBasisVector> vecs;
};

struct BasisObstruction {
    int a = 0, b = 0;                   // indices into UserBasis::vecs
    std::vector<CycNum> required;       // distinct scalar values forced at different coordinates
    bool zero_mismatch = false;         // some coordinate needs mu * 0 = nonzero
    std::string detail;
};

struct BasisCheckResult {
    bool diagonalizable = false;
    std::vector<std::vector<CycNum>> mu;  // per ordered vector pair, when diagonalizable
    std::optional<BasisObstruction> first_obstruction;
    std::vector<BasisObstruction> obstructions;
};

BasisCheckResult check_diagonal_in_basis(const QuadraticSet& qs, const OrbitDecomposition& orb,
                                         const UserBasis& basis);  // SingularBasis

// Generator display name: the element name for a trivial orbit, else
// y[eta] / y<i>[eta] depending on how many nontrivial orbits exist.
std::string y_generator_name(const QuadraticSet& qs, const CompleteDatum& d, int orbit,
                             long eta_pos);

}  // namespace ybe
