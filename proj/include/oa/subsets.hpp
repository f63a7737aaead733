#pragma once

#include <bit>
#include <cstdint>
#include <string_view>
#include <vector>

namespace oa {

// Subset of Z_m = {1..m} as a bitmask: element j <-> bit (j-1). With this
// convention the Yates position of a subset is its mask value, so a vector
// indexed by mask is already in Yates order.
using SubsetMask = std::uint32_t;

inline constexpr int kMinColumns = 2;
inline constexpr int kMaxColumns = 30;

// Throws ParameterError unless kMinColumns <= m <= kMaxColumns.
void check_columns(int m);

constexpr SubsetMask full_set(int m) noexcept {
  return m >= 32 ? ~SubsetMask{0} : (SubsetMask{1} << m) - 1;
}

constexpr int subset_size(SubsetMask s) noexcept { return std::popcount(s); }

constexpr bool contains(SubsetMask s, int element) noexcept {
  return (s >> (element - 1)) & 1U;
}

// h_{st} = (-1)^{|s ∩ t|}.
constexpr int hadamard_entry(SubsetMask s, SubsetMask t) noexcept {
  return (std::popcount(s & t) & 1) ? -1 : 1;
}

// r_s: -1 in position j iff j is in s.
std::vector<int> run_row(SubsetMask s, int m);

// t_j = Z_m \ {m+1-j} for 1 <= j <= m, and t_{m+1} = Z_m. These index the
// m+1 entries of a shortened J-vector.
constexpr SubsetMask short_slot_subset(int j, int m) noexcept {
  return j == m + 1 ? full_set(m) : full_set(m) ^ (SubsetMask{1} << (m - j));
}

enum class ParityCase {
  kEvenDOddLambda,
  kEvenDEvenLambda,
  kOddDOddLambda,
  kOddDEvenLambda,
};

std::string_view to_string(ParityCase c) noexcept;

// Parameters of an OA(lambda * 2^d, d+2, 2, d).
struct ArrayParams {
  int d = 0;
  std::int64_t lambda = 0;
  int m = 0;
  std::int64_t n = 0;

  // Validates d >= 2, lambda >= 1, m = d+2 within the column cap and
  // n = lambda * 2^d representable.
  static ArrayParams make(int d, std::int64_t lambda);

  // Solves n = lambda * 2^d for lambda given m = d+2; throws ParameterError
  // naming the violated relation.
  static ArrayParams from_runs(std::int64_t n, int m);

  bool lambda_even() const noexcept { return lambda % 2 == 0; }
  bool d_even() const noexcept { return d % 2 == 0; }

  // lambda / 2; meaningful only for even lambda.
  std::int64_t lambda_star() const noexcept { return lambda / 2; }

  ParityCase parity() const noexcept;

  friend bool operator==(const ArrayParams&, const ArrayParams&) = default;
};

}  // namespace oa
