#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "oa/error.hpp"
#include "oa/kernels.hpp"

namespace oa::kernels::detail {

inline void check_magnitude(std::span<const std::int64_t> values) {
  std::int64_t total = 0;
  for (auto v : values) {
    const std::int64_t mag = v < 0 ? -v : v;
    if (v == INT64_MIN || mag > kMagnitudeLimit - total) {
      throw ParameterError("transform input magnitude exceeds 2^62");
    }
    total += mag;
  }
}

inline void check_transform_input(std::span<const std::int64_t> values) {
  const std::size_t size = values.size();
  if (size == 0 || (size & (size - 1)) != 0) {
    throw ParameterError("transform length " + std::to_string(size) +
                         " is not a power of two");
  }
  check_magnitude(values);
}

inline void check_short_j_input(int m, std::int64_t n,
                                std::span<const std::int64_t> entries) {
  check_columns(m);
  if (entries.size() != static_cast<std::size_t>(m) + 1) {
    throw ShapeError("shortened J-vector must have m+1=" + std::to_string(m + 1) +
                     " entries, got " + std::to_string(entries.size()));
  }
  std::vector<std::int64_t> all(entries.begin(), entries.end());
  all.push_back(n);
  check_magnitude(all);
}

inline std::int64_t short_j_numerator(SubsetMask s, std::int64_t n,
                                      std::span<const std::int64_t> entries,
                                      std::span<const SubsetMask> slots) {
  std::int64_t acc = n;
  for (std::size_t j = 0; j < slots.size(); ++j) {
    acc += hadamard_entry(s, slots[j]) * entries[j];
  }
  return acc;
}

inline std::vector<SubsetMask> slot_subsets(int m) {
  std::vector<SubsetMask> slots(static_cast<std::size_t>(m) + 1);
  for (int j = 1; j <= m + 1; ++j) slots[static_cast<std::size_t>(j - 1)] = short_slot_subset(j, m);
  return slots;
}

[[noreturn]] inline void throw_infeasible(SubsetMask s, std::int64_t numerator, int m) {
  throw InfeasibleJError("J-vector not realizable: N_" + std::to_string(s) + " = " +
                         std::to_string(numerator) + "/2^" + std::to_string(m) +
                         (numerator < 0 ? " is negative" : " is not an integer"));
}

}  // namespace oa::kernels::detail
