#include "oa/construct.hpp"

#include <string>

#include "oa/error.hpp"
#include "oa/kernels.hpp"

namespace oa {

Design design_from_counts(const NVector& nvec) {
  check_columns(nvec.m);
  const int m = nvec.m;
  const std::int64_t n = nvec.runs();
  if (n > std::int64_t{1} << 31) throw ParameterError("design too large to materialize");
  std::vector<std::int8_t> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  for (std::size_t s = 0; s < nvec.counts.size(); ++s) {
    const auto row = run_row(static_cast<SubsetMask>(s), m);
    for (std::int64_t c = 0; c < nvec.counts[s]; ++c) {
      for (int v : row) entries.push_back(static_cast<std::int8_t>(v));
    }
  }
  return Design(static_cast<int>(n), m, std::move(entries));
}

Design build(const JStar& jstar, const ArrayParams& params) {
  if (jstar.m != params.m || jstar.entries.size() != static_cast<std::size_t>(params.m) + 1) {
    throw ShapeError("J*-vector length does not match m=" + std::to_string(params.m));
  }
  return design_from_counts(
      NVector{params.m, kernels::counts_from_short_j(params.m, params.n, jstar.entries)});
}

std::vector<Design> build_catalog(int d, std::int64_t lambda) {
  const auto params = ArrayParams::make(d, lambda);
  const auto stars = jstars(d, lambda);
  const auto total = static_cast<std::int64_t>(stars.size());
  std::vector<Design> out(stars.size());
  bool failed = false;
  std::string message;
#pragma omp parallel for schedule(dynamic, 4) if (total > 16)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = build(stars[static_cast<std::size_t>(i)], params);
    } catch (const Error& e) {
#pragma omp critical
      {
        if (!failed) message = e.what();
        failed = true;
      }
    }
  }
  if (failed) throw InfeasibleJError("catalog construction failed: " + message);
  return out;
}

Design build_d_plus_1(int d, std::int64_t lambda, const DPlusOneSolution& solution) {
  const int m = d + 1;
  check_columns(m);
  if (lambda + solution.u != 2 * solution.k || solution.u > 0 || solution.u < -lambda) {
    throw InfeasibleJError("not a solution of lambda + u = 2k with -lambda <= u <= 0");
  }
  NVector nvec{m, std::vector<std::int64_t>(std::size_t{1} << m)};
  for (std::size_t s = 0; s < nvec.counts.size(); ++s) {
    const int h = hadamard_entry(static_cast<SubsetMask>(s), full_set(m));
    nvec.counts[s] = (lambda + h * solution.u) / 2;
  }
  return design_from_counts(nvec);
}

bool verify_oa(const Design& design, int d) {
  const int m = design.columns();
  const int n = design.runs();
  if (d < 0 || d > m) return false;
  if (d == 0) return true;
  const int patterns = 1 << d;
  if (n % patterns != 0) return false;
  const int expected = n / patterns;

  std::vector<int> cols(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) cols[static_cast<std::size_t>(i)] = i;
  std::vector<int> tally(static_cast<std::size_t>(patterns));
  while (true) {
    std::fill(tally.begin(), tally.end(), 0);
    for (int r = 0; r < n; ++r) {
      int key = 0;
      for (int i = 0; i < d; ++i) {
        if (design.at(r, cols[static_cast<std::size_t>(i)]) < 0) key |= 1 << i;
      }
      ++tally[static_cast<std::size_t>(key)];
    }
    for (int c : tally) {
      if (c != expected) return false;
    }
    // Next d-combination of {0..m-1} in lexicographic order.
    int i = d - 1;
    while (i >= 0 && cols[static_cast<std::size_t>(i)] == m - d + i) --i;
    if (i < 0) break;
    ++cols[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) {
      cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return true;
}

}  // namespace oa
