#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ybe/perm.hpp"

namespace ybe {

// Finite quadratic set (X, r): a bijective map on ordered pairs, written
// r(x,y) = (x|>y, x<|y) with derived left/right action tables.  Elements are
// dense 0-based indices; names are presentation-only.
class QuadraticSet {
public:
    // images indexed by x*n+y; fails with NotBijective / IncompleteTable.
    static QuadraticSet from_pair_map(std::vector<std::string> names,
                                      const std::vector<std::pair<int, int>>& images);
    // r(x,y) = (L_x(y), L_y^{-1}(x)); classification is a separate step.
    static QuadraticSet from_left_actions(std::vector<std::string> names,
                                          const std::vector<Perm>& actions);

    int size() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }
    int index_of_name(const std::string& s) const;  // -1 when absent

    std::pair<int, int> r(int x, int y) const { return map_[x * n_ + y]; }
    // Inverse pair map; Internal error when r is not a bijection on pairs
    // (possible only for sets built from inconsistent left actions).
    std::pair<int, int> r_inv(int x, int y) const;
    bool pair_bijective() const { return pair_bijective_; }
    int left(int x, int y) const { return map_[x * n_ + y].first; }    // x|>y
    int right(int x, int y) const { return map_[x * n_ + y].second; }  // x<|y

    bool left_row_bijective(int x) const;
    bool right_col_bijective(int y) const;
    Perm left_perm(int x) const;   // NotAPermutation when the row is degenerate
    Perm right_perm(int y) const;
    bool left_rows_equal(int x, int y) const;

    bool operator==(const QuadraticSet&) const = default;

private:
    static QuadraticSet assemble(std::vector<std::string> names,
                                 const std::vector<std::pair<int, int>>& images);

    int n_ = 0;
    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> map_, inv_;
    bool pair_bijective_ = true;
};

struct AxiomFlag {
    bool holds = true;
    std::vector<int> witness;  // element indices; empty when the flag holds

    explicit operator bool() const { return holds; }
};

struct AxiomReport {
    AxiomFlag nondegenerate, involutive, square_free;
    AxiomFlag l1, r1, lr3, braid;  // braid = direct check of r12 r23 r12 = r23 r12 r23
    AxiomFlag cl1, cl2, cr1, cr2, lri;
    bool braided_set = false;
    bool symmetric_set = false;
    bool square_free_symmetric = false;
};

// Every flag is computed by exhaustive loops; total, never throws.
AxiomReport check_axioms(const QuadraticSet& qs);

// Re-evaluate a false flag's witness; used to validate that witnesses are
// genuine violations.  `flag` is the field name as printed in reports.
bool reevaluate_witness(const QuadraticSet& qs, const std::string& flag,
                        const std::vector<int>& witness);

std::vector<std::pair<std::string, const AxiomFlag*>> axiom_flag_list(const AxiomReport& rep);

}  // namespace ybe
