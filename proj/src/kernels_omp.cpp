#include <limits>

#include "kernels_common.hpp"

namespace oa::kernels {

void hadamard_transform(std::span<std::int64_t> values) {
  detail::check_transform_input(values);
  const std::int64_t size = static_cast<std::int64_t>(values.size());
  const std::int64_t pairs = size / 2;
  std::int64_t* v = values.data();
  for (std::int64_t half = 1; half < size; half <<= 1) {
    // One butterfly per pair index; pairs within a stage are independent.
#pragma omp parallel for schedule(static) if (values.size() >= kParallelThreshold)
    for (std::int64_t p = 0; p < pairs; ++p) {
      // half is a power of two: i = (p / half) * 2 half + p % half.
      const std::int64_t i = p + (p & -half);
      const std::int64_t a = v[i];
      const std::int64_t b = v[i + half];
      v[i] = a + b;
      v[i + half] = a - b;
    }
  }
}

std::vector<std::int64_t> counts_from_short_j(int m, std::int64_t n,
                                              std::span<const std::int64_t> entries) {
  detail::check_short_j_input(m, n, entries);
  const auto slots = detail::slot_subsets(m);
  const std::int64_t size = std::int64_t{1} << m;
  const std::int64_t mask = size - 1;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(size));
  // Smallest failing s, so the reported error matches the serial kernel.
  std::int64_t first_bad = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : first_bad) \
    if (counts.size() >= kParallelThreshold)
  for (std::int64_t s = 0; s < size; ++s) {
    const auto numerator =
        detail::short_j_numerator(static_cast<SubsetMask>(s), n, entries, slots);
    if (numerator < 0 || (numerator & mask) != 0) {
      if (s < first_bad) first_bad = s;
    } else {
      counts[static_cast<std::size_t>(s)] = numerator >> m;
    }
  }
  if (first_bad != std::numeric_limits<std::int64_t>::max()) {
    const auto s = static_cast<SubsetMask>(first_bad);
    detail::throw_infeasible(s, detail::short_j_numerator(s, n, entries, slots), m);
  }
  return counts;
}

std::vector<std::int64_t> run_histogram(const Design& design) {
  std::vector<std::int64_t> counts(std::size_t{1} << design.columns(), 0);
  std::int64_t* out = counts.data();
  const int runs = design.runs();
#pragma omp parallel for schedule(static) \
    if (static_cast<std::size_t>(runs) >= kParallelThreshold)
  for (int r = 0; r < runs; ++r) {
    const SubsetMask s = design.row_mask(r);
#pragma omp atomic
    ++out[s];
  }
  return counts;
}

}  // namespace oa::kernels
