#include "oa/jchar.hpp"

#include <numeric>

#include "oa/error.hpp"
#include "oa/kernels.hpp"

namespace oa {

std::int64_t NVector::runs() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

NVector n_vector(const Design& design) {
  return NVector{design.columns(), kernels::run_histogram(design)};
}

JFull j_full(const NVector& nvec) {
  check_columns(nvec.m);
  if (nvec.counts.size() != (std::size_t{1} << nvec.m)) {
    throw ShapeError("N-vector length does not equal 2^m");
  }
  for (auto c : nvec.counts) {
    if (c < 0) throw ParameterError("N-vector has a negative count");
  }
  JFull out{nvec.m, nvec.counts};
  kernels::hadamard_transform(out.values);
  return out;
}

NVector n_from_j(const JFull& jfull) {
  check_columns(jfull.m);
  if (jfull.values.size() != (std::size_t{1} << jfull.m)) {
    throw ShapeError("J-vector length does not equal 2^m");
  }
  NVector out{jfull.m, jfull.values};
  kernels::hadamard_transform(out.counts);
  const std::int64_t mask = (std::int64_t{1} << jfull.m) - 1;
  for (std::size_t s = 0; s < out.counts.size(); ++s) {
    auto& c = out.counts[s];
    if (c < 0 || (c & mask) != 0) {
      throw InfeasibleJError("J-vector not realizable: N_" + std::to_string(s) + " = " +
                             std::to_string(c) + "/2^" + std::to_string(jfull.m) +
                             (c < 0 ? " is negative" : " is not an integer"));
    }
    c >>= jfull.m;
  }
  return out;
}

int strength(const JFull& jfull) {
  int lowest_nonzero = jfull.m + 1;
  for (std::size_t t = 1; t < jfull.values.size(); ++t) {
    if (jfull.values[t] != 0) {
      lowest_nonzero = std::min(lowest_nonzero, subset_size(static_cast<SubsetMask>(t)));
    }
  }
  return lowest_nonzero - 1;
}

ParityReport check_parity(const JFull& jfull, const ArrayParams& params) {
  const int d = params.d;
  if (jfull.m < d + 2) {
    throw ParameterError("parity clauses need m >= d+2 columns");
  }
  if (jfull.runs() != params.n) {
    throw ParameterError("J_empty=" + std::to_string(jfull.runs()) +
                         " does not equal n=" + std::to_string(params.n));
  }
  ParityReport report;
  const std::int64_t block = std::int64_t{1} << d;
  const bool lambda_odd = !params.lambda_even();
  for (std::size_t idx = 0; idx < jfull.values.size(); ++idx) {
    const auto t = static_cast<SubsetMask>(idx);
    const std::int64_t j = jfull.values[idx];
    if (j % block != 0) {
      report.violations.push_back({t, "divisible by 2^d", j});
      continue;
    }
    const std::int64_t mu = j / block;
    report.mu.emplace(t, mu);
    const bool mu_odd = (mu % 2) != 0;
    const int size = subset_size(t);

    const char* expected = nullptr;
    if (!lambda_odd) {
      if (mu_odd) expected = "even";
    } else if (size == d + 1) {
      if (!mu_odd) expected = "odd";
    } else if (size == d + 2) {
      if (params.d_even() && !mu_odd) expected = "odd";
      if (!params.d_even() && mu_odd) expected = "even";
    }
    if (expected != nullptr) report.violations.push_back({t, expected, mu});
  }
  return report;
}

std::vector<BoundViolation> check_pair_bound(const JFull& jfull, int d) {
  const int m = jfull.m;
  if (d < 1 || d > m) throw ParameterError("strength d out of range for m");
  if (strength(jfull) < d) {
    throw ShapeError("pair bound requires strength >= d=" + std::to_string(d) +
                     ", design has strength " + std::to_string(strength(jfull)));
  }
  const std::int64_t n = jfull.runs();
  const auto abs64 = [](std::int64_t v) { return v < 0 ? -v : v; };

  std::vector<SubsetMask> offsets;
  for (SubsetMask x = 1; x <= full_set(m); ++x) {
    if (subset_size(x) <= d) offsets.push_back(x);
  }

  std::vector<BoundViolation> out;
  for (SubsetMask t1 = 0; t1 <= full_set(m); ++t1) {
    for (SubsetMask x : offsets) {
      const SubsetMask t2 = t1 ^ x;
      if (t2 <= t1) continue;
      if (abs64(jfull.values[t1]) + abs64(jfull.values[t2]) > n) {
        out.push_back({t1, t2, BoundKind::kPairSum});
      }
    }
  }

  if (d == 2 && n % 4 == 0 && (n / 4) % 2 == 1) {
    const std::int64_t cap = n - 4;
    for (SubsetMask t = 1; t < full_set(m); ++t) {
      if (abs64(jfull.values[t]) > cap) out.push_back({t, t, BoundKind::kDefiningWord});
    }
  }
  return out;
}

}  // namespace oa
