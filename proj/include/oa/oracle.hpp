#pragma once

// Brute-force cross-checks for small parameters. Nothing here calls the
// enumeration or the closed-form sign solver; only the subset/Hadamard
// helpers and the generic transforms are shared.

#include <cstdint>
#include <vector>

#include "oa/canon.hpp"

namespace oa::oracle {

inline constexpr int kMaxColumns = 7;
// Upper limit on (2 lambda + 1)^{m+1} grid cells.
inline constexpr std::int64_t kMaxGridCells = std::int64_t{1} << 27;

// Every shortened J-vector J_{t_j} = 2^d mu_j with |mu_i| + |mu_j| <= lambda
// whose full inverse transform is a valid N-vector. Sorted ascending.
// Throws SizeError beyond kMaxColumns or kMaxGridCells.
std::vector<JShort> feasible_short_j(int d, std::int64_t lambda);

// Lexicographic minimum over all m! column permutations and 2^m sign
// switches acting on the shortened J-vector. Throws SizeError for m > 7.
JShort orbit_min(const JShort& jshort);

// One representative per orbit of feasible_short_j, each reported through
// canonicalize(), sorted ascending.
std::vector<JStar> oracle_jstars(int d, std::int64_t lambda);

}  // namespace oa::oracle
