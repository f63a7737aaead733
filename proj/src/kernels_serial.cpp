#include "kernels_common.hpp"

namespace oa::kernels::serial {

void hadamard_transform(std::span<std::int64_t> values) {
  detail::check_transform_input(values);
  const std::size_t size = values.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const std::int64_t a = values[i];
        const std::int64_t b = values[i + half];
        values[i] = a + b;
        values[i + half] = a - b;
      }
    }
  }
}

std::vector<std::int64_t> counts_from_short_j(int m, std::int64_t n,
                                              std::span<const std::int64_t> entries) {
  detail::check_short_j_input(m, n, entries);
  const auto slots = detail::slot_subsets(m);
  const std::size_t size = std::size_t{1} << m;
  const std::int64_t mask = (std::int64_t{1} << m) - 1;
  std::vector<std::int64_t> counts(size);
  for (std::size_t s = 0; s < size; ++s) {
    const auto numerator =
        detail::short_j_numerator(static_cast<SubsetMask>(s), n, entries, slots);
    if (numerator < 0 || (numerator & mask) != 0) {
      detail::throw_infeasible(static_cast<SubsetMask>(s), numerator, m);
    }
    counts[s] = numerator >> m;
  }
  return counts;
}

std::vector<std::int64_t> run_histogram(const Design& design) {
  std::vector<std::int64_t> counts(std::size_t{1} << design.columns(), 0);
  for (int r = 0; r < design.runs(); ++r) ++counts[design.row_mask(r)];
  return counts;
}

}  // namespace oa::kernels::serial
