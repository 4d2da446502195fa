#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybe/cyclotomic.hpp"
#include "ybe/permgroup.hpp"
#include "ybe/retraction.hpp"

namespace ybe {

// sigma[j][i]: the single permutation (on orbit-i local positions, members
// ascending) by which every element of orbit j acts on orbit i; identity when
// the action is trivial.  cycle_len[j][i] is the uniform cycle length d^j_i
// (1 for the identity).
struct SigmaTable {
    std::vector<std::vector<Perm>> sigma;
    std::vector<std::vector<long>> cycle_len;
};

SigmaTable sigma_table(const QuadraticSet& qs, const OrbitDecomposition& orb);

// Per-orbit part of the complete datum.  For a trivial orbit everything is
// the placeholder: rank 0, block size 1, empty coordinate tuples.
struct OrbitDatum {
    std::vector<int> members;  // global element ids, ascending
    GeneratedGroup group;      // G_i on local positions
    AbelianStructure abel;
    std::vector<std::string> basis_words;   // printable labels for B_i
    std::vector<long> orders;               // P_i
    long block_size = 1;                    // N_i
    int x1 = 0;                             // global id, smallest in the orbit
    std::vector<int> enumeration;           // global ids x_{i1}..x_{iN} = pi_j(x1)
    std::vector<int> enum_pos_of_local;     // local position -> enumeration position
    std::vector<std::vector<int>> m;        // m[j] = coordinates of sigma^j_i

    int rank() const { return static_cast<int>(orders.size()); }
    bool trivial() const { return members.size() == 1; }
};

struct CompleteDatum {
    OrbitDecomposition orb;
    SigmaTable sig;
    std::vector<OrbitDatum> orbit_data;
};

// words per orbit index; each word is a sequence of element ids whose left
// actions compose (left to right) to the basis permutation.
using BasisOverride = std::map<int, std::vector<std::vector<int>>>;

CompleteDatum build_datum(const QuadraticSet& qs,
                          const std::optional<BasisOverride>& override_basis = std::nullopt,
                          long long group_cap = 1000000);

// chi_eta(g) for g with coordinates m: exponent sum_k eta_k*m_k/p_k mod 1.
CycExp chi_eval(const OrbitDatum& od, const std::vector<int>& eta, const std::vector<int>& m);

// Lambda_i position helpers (lexicographic, first coordinate fastest).
inline long lambda_size(const OrbitDatum& od) { return od.block_size; }
std::vector<int> lambda_at(const OrbitDatum& od, long pos);

}  // namespace ybe
