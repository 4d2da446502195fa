#pragma once

#include <optional>
#include <vector>

#include "ybe/solution.hpp"

namespace ybe {

// The quadratic set (X, f) with f(x,y) = (x|>y, x); defined for any
// nondegenerate quadratic set.
QuadraticSet f_map(const QuadraticSet& qs);

struct FactorizationResult {
    bool holds = true;
    std::vector<int> witness;  // pair where r != f o tau o f^{-1}
};

// r = f o tau o f^{-1} iff r is involutive with lri.
FactorizationResult check_factorization(const QuadraticSet& qs);

struct RcotwistReport {
    bool lri = false;
    bool cond_a = false;  // z acted by x^y equals z acted by x, for all x,y,z
    std::vector<int> witness_a;
    bool ybe_f = false;  // braid identity for f
    std::vector<int> witness_f;
    bool ybe_r = false;  // braid identity for r
    std::vector<int> witness_r;
    bool fybe_route_agrees = false;  // direct braid check vs the reduced form
    bool two_imply_third_ok = false;
    bool factorization = false;
    bool factorization_iff_ok = false;       // factorization <=> involutive & lri
    std::optional<bool> mpl_le_2;            // square-free symmetric inputs only
    std::optional<bool> mpl_equivalence_ok;  // cond_a <=> mpl <= 2
};

RcotwistReport rcotwist_report(const QuadraticSet& qs);

}  // namespace ybe
