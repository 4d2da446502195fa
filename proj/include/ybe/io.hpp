#pragma once

#include <map>
#include <string>
#include <vector>

#include "ybe/cotwist.hpp"
#include "ybe/datum.hpp"
#include "ybe/diagonalizer.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/quantum.hpp"

namespace ybe {

// Solution file: line-oriented, '#' comments.
//   set <name> <name> ...
//   act <name> = id | (a b c)(d e)...        (one line per element)
//   r <x> <y> = <z> <t>                       (table mode, every ordered pair)
//   basis <orbit-member> = <name> <name> ...  (appends one word to the orbit's
//                                              pinned basis; repeat for more)
// Action and table mode cannot be mixed.
struct ParsedSolution {
    QuadraticSet qs;
    // key: element id naming the orbit; value: words as element-id sequences
    std::map<int, std::vector<std::vector<int>>> basis_words;
};

ParsedSolution parse_solution(const std::string& text);
ParsedSolution load_solution(const std::string& path);

// Canonical print: action mode when lri holds, else the full r table.
std::string print_solution(const QuadraticSet& qs);

// Resolve parsed basis words to orbit indices for build_datum.
BasisOverride resolve_basis_override(const ParsedSolution& ps, const OrbitDecomposition& orb);

// Basis file for diagonalize --check-basis:
//   block <orbit-member>
//   vec <name> = <entry> <entry> ...          (entries over the orbit's
//                                              members in element order)
// entries: rational [ '*' unit ] | unit;  unit: i | zeta(N) | zeta(N)^k.
UserBasis parse_basis_file(const std::string& text, const QuadraticSet& qs,
                           const OrbitDecomposition& orb);
UserBasis load_basis_file(const std::string& path, const QuadraticSet& qs,
                          const OrbitDecomposition& orb);

std::string export_dot(const QuadraticSet& qs, const OrbitDecomposition& orb);

// Plain-text reports (stable key: value blocks).
std::string report_axioms(const QuadraticSet& qs, const AxiomReport& rep);
std::string report_analyze(const QuadraticSet& qs, long long group_cap);
std::string report_datum(const QuadraticSet& qs, const CompleteDatum& d);
std::string report_diagonalize(const QuadraticSet& qs, const CompleteDatum& d,
                               const DiagonalBasis& y, const MuTable& mu,
                               const DiagonalReport& rep);
std::string report_basis_check(const QuadraticSet& qs, const UserBasis& basis,
                               const BasisCheckResult& res);
std::string report_cotwist(const QuadraticSet& qs, const RcotwistReport& rep);

}  // namespace ybe
