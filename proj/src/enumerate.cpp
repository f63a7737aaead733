#include "oa/enumerate.hpp"

#include <cassert>
#include <functional>
#include <numeric>

#include "oa/error.hpp"

namespace oa {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

bool matches(std::int64_t x, IntegerParity p) {
  switch (p) {
    case IntegerParity::kOdd:
      return x % 2 != 0;
    case IntegerParity::kEven:
      return x % 2 == 0;
    case IntegerParity::kAny:
      return true;
  }
  return true;
}

IntervalSet interval(std::int64_t lo_num, std::int64_t lo_den, std::int64_t hi_num,
                     std::int64_t hi_den, IntegerParity parity) {
  return IntervalSet{{lo_num, lo_den}, {hi_num, hi_den}, parity};
}

IntervalSet closed(std::int64_t lo, std::int64_t hi, IntegerParity parity) {
  return interval(lo, 1, hi, 1, parity);
}

template <typename Fn>
void for_each_member(const IntervalSet& set, Fn&& fn) {
  const auto first = set.first();
  if (!first) return;
  const auto last = *set.last();
  const std::int64_t step = set.parity == IntegerParity::kAny ? 1 : 2;
  for (std::int64_t x = *first; x <= last; x += step) fn(x);
}

// Fills u_j, u_{j-1}, ..., u_2 from the descending chain
//   u_j in P[-(R + u_{j+1} + ... + u_{m+1}) / j, upper],
// then each later u_i in P[-(R + u_{i+1} + ...) / i, u_{i+1}], and closes
// with u_1 = -(R + u_2 + ... + u_{m+1}). `u` is 1-based.
class ChainFiller {
 public:
  ChainFiller(std::int64_t reduced, std::int64_t k, IntegerParity parity,
              std::vector<SolutionTuple>& out)
      : reduced_(reduced), k_(k), parity_(parity), out_(out) {}

  void run(std::vector<std::int64_t>& u, int j, std::int64_t upper, std::int64_t suffix) {
    if (j == 1) {
      u[1] = -(reduced_ + suffix);
      out_.push_back(SolutionTuple{{u.begin() + 1, u.end()}, k_});
      return;
    }
    const auto set = interval(-(reduced_ + suffix), j, upper, 1, parity_);
    for_each_member(set, [&](std::int64_t x) {
      u[static_cast<std::size_t>(j)] = x;
      run(u, j - 1, x, suffix + x);
    });
  }

 private:
  std::int64_t reduced_;
  std::int64_t k_;
  IntegerParity parity_;
  std::vector<SolutionTuple>& out_;
};

// One displayed family of solutions: the admissible k values and the nested
// loops for a fixed k.
struct Family {
  IntervalSet k_range;
  std::function<void(std::int64_t k, std::vector<SolutionTuple>& out)> generate;
};

std::vector<Family> families(const ArrayParams& p) {
  const int m = p.m;
  const int d = p.d;
  const auto lambda = p.lambda;
  const auto ls = p.lambda_star();
  const auto O = IntegerParity::kOdd;
  const auto Z = IntegerParity::kAny;
  const auto E = IntegerParity::kEven;
  const auto slots = static_cast<std::size_t>(m) + 2;

  std::vector<Family> out;
  switch (p.parity()) {
    case ParityCase::kEvenDOddLambda:
      // u_{m+1} carries the smallest magnitude.
      out.push_back({interval(0, 1, lambda - d - 1, 4, Z), [=](std::int64_t k, auto& res) {
                       const std::int64_t r = lambda - 4 * k;
                       std::vector<std::int64_t> u(slots, 0);
                       ChainFiller chain(r, k, O, res);
                       for_each_member(interval(-r, m + 1, r, m - 1, O), [&](std::int64_t last) {
                         u[m + 1] = last;
                         chain.run(u, m, -abs64(last), last);
                       });
                     }});
      // u_m carries the smallest magnitude, u_{m+1} strictly below -|u_m|.
      out.push_back({interval(0, 1, lambda - d - 3, 4, Z), [=](std::int64_t k, auto& res) {
                       const std::int64_t r = lambda - 4 * k;
                       std::vector<std::int64_t> u(slots, 0);
                       ChainFiller chain(r, k, O, res);
                       for_each_member(interval(-(r - 2), m + 1, r - 2, m - 1, O), [&](std::int64_t um) {
                         u[m] = um;
                         for_each_member(closed((m - 1) * abs64(um) - um - r, -abs64(um) - 2, O),
                                         [&](std::int64_t last) {
                                           u[m + 1] = last;
                                           chain.run(u, m - 1, -abs64(um), um + last);
                                         });
                       });
                     }});
      break;

    case ParityCase::kEvenDEvenLambda:
      out.push_back({interval(0, 1, ls, 2, Z), [=](std::int64_t k, auto& res) {
                       const std::int64_t r = ls - 2 * k;
                       std::vector<std::int64_t> u(slots, 0);
                       ChainFiller chain(r, k, Z, res);
                       for_each_member(interval(-r, m + 1, r, m - 1, Z), [&](std::int64_t last) {
                         u[m + 1] = last;
                         chain.run(u, m, -abs64(last), last);
                       });
                     }});
      out.push_back({interval(0, 1, ls - 1, 2, Z), [=](std::int64_t k, auto& res) {
                       const std::int64_t r = ls - 2 * k;
                       std::vector<std::int64_t> u(slots, 0);
                       ChainFiller chain(r, k, Z, res);
                       for_each_member(interval(-(r - 1), m + 1, r - 1, m - 1, Z), [&](std::int64_t um) {
                         u[m] = um;
                         for_each_member(closed((m - 1) * abs64(um) - um - r, -abs64(um) - 1, Z),
                                         [&](std::int64_t last) {
                                           u[m + 1] = last;
                                           chain.run(u, m - 1, -abs64(um), um + last);
                                         });
                       });
                     }});
      break;

    case ParityCase::kOddDOddLambda:
      out.push_back({interval(0, 1, lambda - d, 4, Z), [=](std::int64_t k, auto& res) {
                       const std::int64_t r = lambda - 4 * k;
                       std::vector<std::int64_t> u(slots, 0);
                       ChainFiller chain(r, k, O, res);
                       for_each_member(closed(-(lambda - d - 4 * k), 0, E), [&](std::int64_t last) {
                         u[m + 1] = last;
                         for_each_member(interval(-(r + last), m, r + last, m - 2, O), [&](std::int64_t um) {
                           u[m] = um;
                           chain.run(u, m - 1, -abs64(um), um + last);
                         });
                       });
                     }});
      break;

    case ParityCase::kOddDEvenLambda:
      out.push_back({interval(0, 1, ls, 2, Z), [=](std::int64_t k, auto& res) {
                       const std::int64_t r = ls - 2 * k;
                       std::vector<std::int64_t> u(slots, 0);
                       ChainFiller chain(r, k, Z, res);
                       for_each_member(closed(-r, 0, Z), [&](std::int64_t last) {
                         u[m + 1] = last;
                         for_each_member(interval(-(r + last), m, r + last, m - 2, Z), [&](std::int64_t um) {
                           u[m] = um;
                           chain.run(u, m - 1, -abs64(um), um + last);
                         });
                       });
                     }});
      break;
  }
  return out;
}

std::vector<std::int64_t> k_values(const IntervalSet& range) {
  std::vector<std::int64_t> ks;
  for_each_member(range, [&](std::int64_t k) { ks.push_back(k); });
  return ks;
}

void append(std::vector<SolutionTuple>& out, std::vector<std::vector<SolutionTuple>>& parts) {
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
}

[[maybe_unused]] bool all_valid(const std::vector<SolutionTuple>& tuples, const ArrayParams& p) {
  for (const auto& t : tuples) {
    if (!is_valid_solution(t, p)) return false;
  }
  return true;
}

bool nondecreasing(const std::vector<std::int64_t>& u, std::size_t count) {
  for (std::size_t i = 1; i < count; ++i) {
    if (u[i - 1] > u[i]) return false;
  }
  return true;
}

}  // namespace

std::optional<std::int64_t> IntervalSet::first() const {
  std::int64_t x = ceil_div(lower.num, lower.den);
  if (!matches(x, parity)) ++x;
  if (x * upper.den > upper.num) return std::nullopt;
  return x;
}

std::optional<std::int64_t> IntervalSet::last() const {
  std::int64_t x = floor_div(upper.num, upper.den);
  if (!matches(x, parity)) --x;
  if (x * lower.den < lower.num) return std::nullopt;
  return x;
}

bool IntervalSet::contains(std::int64_t x) const {
  return matches(x, parity) && x * lower.den >= lower.num && x * upper.den <= upper.num;
}

std::int64_t IntervalSet::size() const {
  const auto a = first();
  if (!a) return 0;
  const std::int64_t step = parity == IntegerParity::kAny ? 1 : 2;
  return (*last() - *a) / step + 1;
}

unsigned ordering_patterns(const SolutionTuple& t, const ArrayParams& p) {
  const auto m = static_cast<std::size_t>(p.m);
  const auto& u = t.u;
  if (u.size() != m + 1) return 0;
  if (!p.d_even()) {
    return (nondecreasing(u, m - 1) && u[m - 2] <= -abs64(u[m - 1]) && u[m] <= 0) ? 1U : 0U;
  }
  const std::int64_t gap = p.lambda_even() ? 1 : 2;
  unsigned bits = 0;
  if (nondecreasing(u, m) && u[m - 1] <= -abs64(u[m])) bits |= 1U;
  if (nondecreasing(u, m - 1) && u[m - 2] <= -abs64(u[m - 1]) && u[m] <= -abs64(u[m - 1]) - gap) {
    bits |= 2U;
  }
  return bits;
}

bool is_valid_solution(const SolutionTuple& t, const ArrayParams& p) {
  const auto m = static_cast<std::size_t>(p.m);
  if (t.u.size() != m + 1 || t.k < 0) return false;
  const std::int64_t sum = std::accumulate(t.u.begin(), t.u.end(), std::int64_t{0});

  if (p.lambda_even()) {
    const auto ls = p.lambda_star();
    if (ls + sum != 2 * t.k) return false;
    for (auto x : t.u) {
      if (abs64(x) > ls) return false;
    }
  } else {
    if (p.lambda + sum != 4 * t.k) return false;
    for (std::size_t j = 0; j < m; ++j) {
      if (t.u[j] % 2 == 0 || abs64(t.u[j]) > p.lambda - 2) return false;
    }
    const auto last = t.u[m];
    if (p.d_even()) {
      if (last % 2 == 0 || abs64(last) > p.lambda - 2) return false;
    } else {
      if (last % 2 != 0 || abs64(last) > p.lambda - 1) return false;
    }
  }
  const unsigned bits = ordering_patterns(t, p);
  return bits == 1U || bits == 2U;
}

std::vector<SolutionTuple> solutions(int d, std::int64_t lambda) {
  const auto params = ArrayParams::make(d, lambda);
  std::vector<SolutionTuple> out;
  for (const auto& family : families(params)) {
    const auto ks = k_values(family.k_range);
    const auto count = static_cast<std::int64_t>(ks.size());
    std::vector<std::vector<SolutionTuple>> parts(ks.size());
#pragma omp parallel for schedule(dynamic, 1) if (count > 1)
    for (std::int64_t i = 0; i < count; ++i) {
      family.generate(ks[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(i)]);
    }
    append(out, parts);
  }
  assert(all_valid(out, params));
  return out;
}

namespace serial {

std::vector<SolutionTuple> solutions(int d, std::int64_t lambda) {
  const auto params = ArrayParams::make(d, lambda);
  std::vector<SolutionTuple> out;
  for (const auto& family : families(params)) {
    for (auto k : k_values(family.k_range)) family.generate(k, out);
  }
  assert(all_valid(out, params));
  return out;
}

}  // namespace serial

JStar to_jstar(const SolutionTuple& tuple, const ArrayParams& params) {
  const std::int64_t scale = std::int64_t{1} << (params.lambda_even() ? params.d + 1 : params.d);
  JStar out{params.m, {}};
  out.entries.reserve(tuple.u.size());
  for (auto u : tuple.u) out.entries.push_back(u * scale);
  return out;
}

std::vector<JStar> jstars(int d, std::int64_t lambda) {
  const auto params = ArrayParams::make(d, lambda);
  const auto tuples = solutions(d, lambda);
  std::vector<JStar> out;
  out.reserve(tuples.size());
  for (const auto& t : tuples) out.push_back(to_jstar(t, params));
  return out;
}

std::int64_t count(int d, std::int64_t lambda) {
  return static_cast<std::int64_t>(solutions(d, lambda).size());
}

std::vector<DPlusOneSolution> solutions_d_plus_1(int d, std::int64_t lambda) {
  // Same parameter validation as the d+2 case, one column fewer.
  if (d < 2) throw ParameterError("strength d must be >= 2, got " + std::to_string(d));
  if (lambda < 1) throw ParameterError("index lambda must be >= 1");
  check_columns(d + 1);
  std::vector<DPlusOneSolution> out;
  for (std::int64_t u = -lambda; u <= 0; ++u) {
    if ((lambda + u) % 2 == 0) out.push_back({u, (lambda + u) / 2});
  }
  return out;
}

}  // namespace oa
