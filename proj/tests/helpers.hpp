#pragma once

#include <string>

#include "ybe/io.hpp"

namespace ybe::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(YBE_FIXTURE_DIR) + "/" + name;
}

inline ParsedSolution load_fixture(const std::string& name) {
    return load_solution(fixture_path(name));
}

// The trivial solution r(x,y) = (y,x) on n elements.
inline QuadraticSet trivial_solution(int n) {
    std::vector<std::string> names;
    std::vector<Perm> acts;
    for (int i = 0; i < n; ++i) {
        names.push_back("t" + std::to_string(i + 1));
        acts.push_back(Perm(n));
    }
    return QuadraticSet::from_left_actions(names, acts);
}

inline Perm cycles_perm(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (const auto& c : cycles)
        for (size_t k = 0; k < c.size(); ++k) img[c[k]] = c[(k + 1) % c.size()];
    return Perm::from_image(img);
}

}  // namespace ybe::testing
