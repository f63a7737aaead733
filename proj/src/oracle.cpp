#include "oa/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "oa/error.hpp"
#include "oa/jchar.hpp"
#include "oa/subsets.hpp"

namespace oa::oracle {

namespace {

void check_size(int m) {
  if (m > kMaxColumns) {
    throw SizeError("oracle search limited to m <= " + std::to_string(kMaxColumns) +
                    ", got m=" + std::to_string(m));
  }
}

bool realizable(const std::vector<std::int64_t>& slots, int m, std::int64_t n) {
  JFull jfull{m, std::vector<std::int64_t>(std::size_t{1} << m, 0)};
  jfull.values[0] = n;
  for (int j = 1; j <= m + 1; ++j) {
    jfull.values[short_slot_subset(j, m)] = slots[static_cast<std::size_t>(j - 1)];
  }
  try {
    n_from_j(jfull);
  } catch (const InfeasibleJError&) {
    return false;
  }
  return true;
}

// Depth-first walk over mu vectors honoring the pairwise bound; `largest`
// is the biggest |mu| placed so far.
void walk(std::vector<std::int64_t>& mu, std::size_t pos, std::int64_t largest,
          std::int64_t lambda, int m, std::int64_t block, std::vector<JShort>& out) {
  if (pos == mu.size()) {
    std::vector<std::int64_t> slots(mu.size());
    for (std::size_t j = 0; j < mu.size(); ++j) slots[j] = mu[j] * block;
    if (realizable(slots, m, lambda * block)) out.push_back(JShort{m, std::move(slots)});
    return;
  }
  const std::int64_t room = pos == 0 ? lambda : lambda - largest;
  for (std::int64_t v = -room; v <= room; ++v) {
    const std::int64_t mag = v < 0 ? -v : v;
    mu[pos] = v;
    walk(mu, pos + 1, std::max(largest, mag), lambda, m, block, out);
  }
}

}  // namespace

std::vector<JShort> feasible_short_j(int d, std::int64_t lambda) {
  const auto params = ArrayParams::make(d, lambda);
  const int m = params.m;
  check_size(m);
  double cells = 1.0;
  for (int j = 0; j <= m; ++j) cells *= static_cast<double>(2 * lambda + 1);
  if (cells > static_cast<double>(kMaxGridCells)) {
    throw SizeError("oracle grid (2*lambda+1)^(m+1) too large for lambda=" +
                    std::to_string(lambda) + ", m=" + std::to_string(m));
  }
  const std::int64_t block = std::int64_t{1} << d;
  const std::int64_t first_values = 2 * lambda + 1;

  std::vector<std::vector<JShort>> parts(static_cast<std::size_t>(first_values));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < first_values; ++i) {
    std::vector<std::int64_t> mu(static_cast<std::size_t>(m) + 1, 0);
    mu[0] = i - lambda;
    const std::int64_t mag = mu[0] < 0 ? -mu[0] : mu[0];
    walk(mu, 1, mag, lambda, m, block, parts[static_cast<std::size_t>(i)]);
  }
  std::vector<JShort> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

JShort orbit_min(const JShort& jshort) {
  const int m = jshort.m;
  check_size(m);
  if (m < 2 || jshort.entries.size() != static_cast<std::size_t>(m) + 1) {
    throw ShapeError("shortened J-vector must have m+1 entries");
  }
  std::vector<SubsetMask> slot_sets(static_cast<std::size_t>(m) + 1);
  for (int j = 1; j <= m + 1; ++j) slot_sets[static_cast<std::size_t>(j - 1)] = short_slot_subset(j, m);

  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  JShort best = jshort;
  std::vector<std::int64_t> candidate(jshort.entries.size());
  do {
    for (SubsetMask negated = 0; negated <= full_set(m); ++negated) {
      for (int j = 0; j < m; ++j) {
        candidate[static_cast<std::size_t>(j)] =
            hadamard_entry(negated, slot_sets[static_cast<std::size_t>(j)]) *
            jshort.entries[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
      }
      candidate[static_cast<std::size_t>(m)] =
          hadamard_entry(negated, slot_sets[static_cast<std::size_t>(m)]) *
          jshort.entries[static_cast<std::size_t>(m)];
      if (candidate < best.entries) best.entries = candidate;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<JStar> oracle_jstars(int d, std::int64_t lambda) {
  const auto feasible = feasible_short_j(d, lambda);
  std::vector<JShort> minima(feasible.size());
  const auto total = static_cast<std::int64_t>(feasible.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < total; ++i) {
    minima[static_cast<std::size_t>(i)] = orbit_min(feasible[static_cast<std::size_t>(i)]);
  }
  std::sort(minima.begin(), minima.end());
  minima.erase(std::unique(minima.begin(), minima.end()), minima.end());

  std::vector<JStar> out;
  out.reserve(minima.size());
  for (const auto& rep : minima) out.push_back(canonicalize(rep));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oa::oracle
