#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "oa/design.hpp"
#include "oa/subsets.hpp"

namespace oa {

// Run multiplicities N_s in Yates order.
struct NVector {
  int m = 0;
  std::vector<std::int64_t> counts;

  std::int64_t runs() const noexcept;
  friend bool operator==(const NVector&, const NVector&) = default;
};

// All 2^m J-characteristics J_t in Yates order; values[0] = n.
struct JFull {
  int m = 0;
  std::vector<std::int64_t> values;

  std::int64_t runs() const noexcept { return values.empty() ? 0 : values.front(); }
  std::int64_t operator[](SubsetMask t) const { return values.at(t); }
  friend bool operator==(const JFull&, const JFull&) = default;
};

struct ParityViolation {
  SubsetMask subset = 0;
  std::string expected;  // "divisible by 2^d", "even", "odd"
  std::int64_t actual = 0;  // J_t, or mu_t once divisibility holds
};

struct ParityReport {
  std::map<SubsetMask, std::int64_t> mu;  // mu_t = J_t / 2^d where exact
  std::vector<ParityViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

enum class BoundKind {
  kPairSum,       // |J_t1| + |J_t2| > n with 1 <= |t1 Δ t2| <= d
  kDefiningWord,  // d = 2, lambda odd, |J_t| > 4 lambda - 4 for t != Z_m
};

struct BoundViolation {
  SubsetMask first = 0;
  SubsetMask second = 0;  // equals `first` for kDefiningWord
  BoundKind kind = BoundKind::kPairSum;
};

NVector n_vector(const Design& design);

// J = H N via the butterfly; bit-identical to the naive double sum.
JFull j_full(const NVector& nvec);
inline JFull j_full(const Design& design) { return j_full(n_vector(design)); }

// N = 2^{-m} H J. Throws InfeasibleJError if any N_s is negative or
// non-integral.
NVector n_from_j(const JFull& jfull);

// Largest d' with J_t = 0 for all 1 <= |t| <= d'.
int strength(const JFull& jfull);
inline int strength(const Design& design) { return strength(j_full(design)); }

// Divisibility and parity clauses for an OA(lambda 2^d, m, 2, d) with
// m >= d+2. Throws ParameterError if jfull does not describe n = lambda 2^d
// runs on at least d+2 columns.
ParityReport check_parity(const JFull& jfull, const ArrayParams& params);

// Pairwise bound |J_t1| + |J_t2| <= n over pairs at symmetric-difference
// distance 1..d, plus the defining-word bound for d = 2 and odd lambda.
// Throws ShapeError if the underlying design has strength below d.
std::vector<BoundViolation> check_pair_bound(const JFull& jfull, int d);

}  // namespace oa
