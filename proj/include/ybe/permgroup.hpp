#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybe/perm.hpp"
#include "ybe/solution.hpp"

namespace ybe {

struct GenLetter {
    int gen = 0;
    bool inverse = false;

    bool operator==(const GenLetter&) const = default;
};

using Word = std::vector<GenLetter>;

// Explicit closure of a finite permutation group.  Element 0 is the identity;
// the element order is breadth-first by witness word length, ties broken by
// generator index (with g^-1 right after g).
class GeneratedGroup {
public:
    int degree = 0;
    std::vector<std::string> labels;
    std::vector<Perm> gens;
    std::vector<Perm> elems;
    std::vector<Word> words;

    int order() const { return static_cast<int>(elems.size()); }
    int index_of(const Perm& p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }
    int mul(int a, int b) const;  // index of elems[a] ∘ elems[b]
    int inverse_of(int a) const;
    long element_order(int a) const { return elems[a].order(); }
    Perm eval_word(const Word& w) const;
    std::string word_string(const Word& w) const;

    friend GeneratedGroup generate(int degree,
                                   const std::vector<std::pair<std::string, Perm>>& generators,
                                   long long cap);

private:
    std::map<Perm, int> index_;
};

GeneratedGroup generate(int degree, const std::vector<std::pair<std::string, Perm>>& generators,
                        long long cap = 1000000);

struct OrbitDecomposition {
    std::vector<std::vector<int>> orbits;  // members ascending; nontrivial orbits first
    std::vector<int> orbit_of;             // element -> orbit index
    int t0 = 0;                            // number of nontrivial orbits

    int count() const { return static_cast<int>(orbits.size()); }
    bool nontrivial(int i) const { return orbits[i].size() > 1; }
};

// Orbits of the group generated by the left actions; requires nondegeneracy.
OrbitDecomposition orbits(const QuadraticSet& qs);

// Group on X_i generated by all restrictions L_x|X_i, x in X.  Identity
// restrictions are dropped; equal restrictions keep the first element's name.
GeneratedGroup restriction_group(const QuadraticSet& qs, const OrbitDecomposition& orb,
                                 int orbit_index, long long cap = 1000000);

// Full group of left actions on X.
GeneratedGroup left_action_group(const QuadraticSet& qs, long long cap = 1000000);

// Non-commuting generator pair (indices into gens), if any.
std::optional<std::pair<int, int>> nonabelian_witness(const GeneratedGroup& g);
inline bool is_abelian(const GeneratedGroup& g) { return !nonabelian_witness(g).has_value(); }

// Invariant-factor basis of a finite abelian permutation group.
struct AbelianStructure {
    std::vector<int> basis;         // group element indices u_1..u_s, orders ascending
    std::vector<long> orders;       // p_1 | p_2 | ... | p_s
    long total = 1;                 // N = prod p_k = |G|
    std::vector<std::vector<int>> coords;      // per group element index
    std::vector<int> element_at;               // lambda position -> group element index

    int rank() const { return static_cast<int>(basis.size()); }
    // Lexicographic enumeration of the coordinate box with the first
    // coordinate varying fastest.
    std::vector<int> coords_at(long pos) const;
    long pos_of(const std::vector<int>& m) const;
};

// Deterministic algorithm: split off a maximal-order cyclic factor by
// exhaustive complement search, recurse; factors emitted ascending.
AbelianStructure invariant_factors(const GeneratedGroup& g);

// Same structure but with a caller-pinned basis; validates that the given
// elements generate g as a direct product with ascending divisible orders.
AbelianStructure abelian_structure_from_basis(const GeneratedGroup& g,
                                              const std::vector<int>& basis_elems);

std::vector<int> element_coordinates(const AbelianStructure& a, const GeneratedGroup& g,
                                     const Perm& p);  // NotInGroup

}  // namespace ybe
