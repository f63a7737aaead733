#pragma once

// Integer transform kernels. Each kernel has an OpenMP-parallel version in
// oa::kernels and a single-threaded reference in oa::kernels::serial; the
// two must agree bit for bit, which the unit tests and the benchmark check.

#include <cstdint>
#include <span>
#include <vector>

#include "oa/design.hpp"
#include "oa/subsets.hpp"

namespace oa::kernels {

// Below this length the parallel kernels run on the calling thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;

// Largest sum of |values| accepted by the transforms; every butterfly
// intermediate is bounded by it, so 64-bit arithmetic cannot overflow.
inline constexpr std::int64_t kMagnitudeLimit = std::int64_t{1} << 62;

// In-place unnormalized Walsh-Hadamard transform in Yates order:
// v[t] <- sum_s (-1)^{|s ∩ t|} v[s]. Length must be a power of two.
// Throws ParameterError if sum |v| exceeds kMagnitudeLimit.
void hadamard_transform(std::span<std::int64_t> values);

// N_s = (n + sum_j h_{s t_j} J_{t_j}) / 2^m for the shortened J-vector
// `entries` (length m+1). Throws InfeasibleJError on a negative or
// non-integral multiplicity.
std::vector<std::int64_t> counts_from_short_j(int m, std::int64_t n,
                                              std::span<const std::int64_t> entries);

// Histogram of row masks: result[s] = number of rows equal to r_s.
std::vector<std::int64_t> run_histogram(const Design& design);

namespace serial {

void hadamard_transform(std::span<std::int64_t> values);
std::vector<std::int64_t> counts_from_short_j(int m, std::int64_t n,
                                              std::span<const std::int64_t> entries);
std::vector<std::int64_t> run_histogram(const Design& design);

}  // namespace serial

}  // namespace oa::kernels
