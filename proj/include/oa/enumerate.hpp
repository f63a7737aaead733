#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oa/canon.hpp"
#include "oa/subsets.hpp"

namespace oa {

// (u_1, ..., u_{m+1}; k). For odd lambda the u_j are J_{t_j} / 2^d; for even
// lambda they are J_{t_j} / 2^{d+1}. k is the number of embedded copies of
// the full 2^m factorial (N_empty of the built array).
struct SolutionTuple {
  std::vector<std::int64_t> u;
  std::int64_t k = 0;

  friend bool operator==(const SolutionTuple&, const SolutionTuple&) = default;
  friend auto operator<=>(const SolutionTuple&, const SolutionTuple&) = default;
};

// Exact rational p/q with q > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

enum class IntegerParity { kAny, kOdd, kEven };

// Integers of the given parity inside the closed interval [lower, upper].
struct IntervalSet {
  Rational lower;
  Rational upper;
  IntegerParity parity = IntegerParity::kAny;

  // Smallest / largest member, or nullopt when the set is empty.
  std::optional<std::int64_t> first() const;
  std::optional<std::int64_t> last() const;
  bool contains(std::int64_t x) const;
  std::int64_t size() const;
};

// Which ordering pattern(s) a tuple meets. For even d: bit 0 is the
// "last slot smallest" pattern, bit 1 the "last slot large" pattern. For odd
// d only bit 0 is used.
unsigned ordering_patterns(const SolutionTuple& tuple, const ArrayParams& params);

// True iff the tuple solves its parity case's linear equation with every
// side condition (parity, magnitude bound, k >= 0) and exactly one ordering
// pattern.
bool is_valid_solution(const SolutionTuple& tuple, const ArrayParams& params);

// All solution tuples for OA(lambda 2^d, d+2, 2, d), one per isomorphism
// class. Order: the first family (last slot smallest) before the second for
// even d; within a family k ascending, then each free variable ascending in
// the order it is chosen. k values are generated in parallel.
std::vector<SolutionTuple> solutions(int d, std::int64_t lambda);

// J*-vectors of the same classes, in the same order.
JStar to_jstar(const SolutionTuple& tuple, const ArrayParams& params);
std::vector<JStar> jstars(int d, std::int64_t lambda);

std::int64_t count(int d, std::int64_t lambda);

// OA(lambda 2^d, d+1, 2, d): lambda + u = 2k, k >= 0, -lambda <= u <= 0;
// ascending u.
struct DPlusOneSolution {
  std::int64_t u = 0;
  std::int64_t k = 0;

  friend bool operator==(const DPlusOneSolution&, const DPlusOneSolution&) = default;
};
std::vector<DPlusOneSolution> solutions_d_plus_1(int d, std::int64_t lambda);

namespace serial {
std::vector<SolutionTuple> solutions(int d, std::int64_t lambda);
}  // namespace serial

}  // namespace oa
