#include "oa/subsets.hpp"

#include <limits>
#include <string>

#include "oa/error.hpp"

namespace oa {

void check_columns(int m) {
  if (m < kMinColumns || m > kMaxColumns) {
    throw ParameterError("number of columns m=" + std::to_string(m) +
                         " outside supported range [" +
                         std::to_string(kMinColumns) + ", " +
                         std::to_string(kMaxColumns) + "]");
  }
}

std::vector<int> run_row(SubsetMask s, int m) {
  check_columns(m);
  if (s > full_set(m)) {
    throw ParameterError("subset mask " + std::to_string(s) +
                         " does not fit in m=" + std::to_string(m));
  }
  std::vector<int> row(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) row[j - 1] = contains(s, j) ? -1 : 1;
  return row;
}

std::string_view to_string(ParityCase c) noexcept {
  switch (c) {
    case ParityCase::kEvenDOddLambda:
      return "even-d/odd-lambda";
    case ParityCase::kEvenDEvenLambda:
      return "even-d/even-lambda";
    case ParityCase::kOddDOddLambda:
      return "odd-d/odd-lambda";
    case ParityCase::kOddDEvenLambda:
      return "odd-d/even-lambda";
  }
  return "unknown";
}

ArrayParams ArrayParams::make(int d, std::int64_t lambda) {
  if (d < 2) throw ParameterError("strength d must be >= 2, got " + std::to_string(d));
  if (lambda < 1) {
    throw ParameterError("index lambda must be >= 1, got " + std::to_string(lambda));
  }
  check_columns(d + 2);
  if (lambda > (std::numeric_limits<std::int64_t>::max() >> (d + 1))) {
    throw ParameterError("n = lambda * 2^d overflows 64-bit arithmetic");
  }
  return ArrayParams{d, lambda, d + 2, lambda << d};
}

ArrayParams ArrayParams::from_runs(std::int64_t n, int m) {
  const int d = m - 2;
  if (d < 2) {
    throw ParameterError("m = d + 2 requires m >= 4, got m=" + std::to_string(m));
  }
  check_columns(m);
  const std::int64_t block = std::int64_t{1} << d;
  if (n <= 0 || n % block != 0) {
    throw ParameterError("n = lambda * 2^d violated: n=" + std::to_string(n) +
                         " is not a positive multiple of 2^" + std::to_string(d) +
                         "=" + std::to_string(block));
  }
  return make(d, n / block);
}

ParityCase ArrayParams::parity() const noexcept {
  if (d_even()) {
    return lambda_even() ? ParityCase::kEvenDEvenLambda : ParityCase::kEvenDOddLambda;
  }
  return lambda_even() ? ParityCase::kOddDEvenLambda : ParityCase::kOddDOddLambda;
}

}  // namespace oa
