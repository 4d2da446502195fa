#pragma once

#include <vector>

#include "ybe/solution.hpp"

namespace ybe {

// One retraction step: classes of the relation L_x = L_y and the induced
// solution on them.  Class representatives are the smallest member indices.
struct RetractStep {
    std::vector<int> class_of;              // element -> class index
    std::vector<std::vector<int>> classes;  // members ascending, ordered by representative
    QuadraticSet retract;
};

RetractStep retract(const QuadraticSet& qs);  // NotSymmetricSet, IllDefinedInduced

struct MplResult {
    enum class Kind { Finite, NotMultipermutation } kind;
    int level = 0;            // meaningful for Finite
    int stabilized_size = 0;  // meaningful for NotMultipermutation
    std::vector<int> chain;   // sizes, starting with |X|
};

// Iterated retraction; max_steps < 0 means |X|.
MplResult mpl(const QuadraticSet& qs, int max_steps = -1);

// True iff t0 >= 1 and L is constant on every nontrivial orbit; agrees with
// mpl == 2 for nondegenerate square-free symmetric sets.
bool level2_criterion(const QuadraticSet& qs);

}  // namespace ybe
