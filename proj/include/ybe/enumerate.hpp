#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybe/solution.hpp"

namespace ybe {

// Backtracking enumeration of all labeled nondegenerate square-free symmetric
// sets of order n: assignments x -> L_x with L_x(x) = x, r built via lri,
// pruned incrementally on involutivity, the cyclic conditions and l1.
// Deterministic emission order.  CapExceeded outside 2 <= n <= max_order.
void enumerate_sfss(int n, const std::function<void(const QuadraticSet&)>& sink,
                    int max_order = 6);

long count_sfss(int n, int max_order = 6);

// Lexicographically minimal left-action table over all relabelings.
std::vector<int> canonical_left_table(const QuadraticSet& qs);

struct ClassifyRow {
    int n = 0;
    long labeled = 0;
    std::map<int, long> by_mpl;  // level -> count
    long abelian_g = 0;          // solutions with abelian G(X,r)
    long diagonalizable = 0;     // verified diagonal basis (mpl <= 2)
    std::optional<long> iso_classes;
};

ClassifyRow classify(int n, bool dedup, int max_order = 6, long long group_cap = 1000000);

std::string classify_csv_header();
std::string classify_csv_row(const ClassifyRow& row);

}  // namespace ybe
