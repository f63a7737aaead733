#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "oa/design.hpp"

namespace oa {

// Shortened J-vector (J_{t_1}, ..., J_{t_{m+1}}) of an OA(n, d+2, 2, d),
// with t_j = Z_m \ {m+1-j} and t_{m+1} = Z_m. Stored zero-based.
struct JShort {
  int m = 0;
  std::vector<std::int64_t> entries;

  friend bool operator==(const JShort&, const JShort&) = default;
  friend auto operator<=>(const JShort&, const JShort&) = default;
};

// Canonical representative of an isomorphism class. Only produced by
// canonicalize() or by scaling an enumerated solution tuple.
struct JStar {
  int m = 0;
  std::vector<std::int64_t> entries;

  JShort as_short() const { return JShort{m, entries}; }
  friend bool operator==(const JStar&, const JStar&) = default;
  friend auto operator<=>(const JStar&, const JStar&) = default;
};

// Column sign switches delta and the signs they induce on the m+1 slots:
// induced[j] = P * delta[m-1-j] for j < m and induced[m] = P, where P is the
// product of all delta (zero-based indices).
struct SignAssignment {
  std::vector<int> delta;
  std::vector<int> induced;
};

// Signs induced on the slots of a JShort by switching the columns in `delta`.
SignAssignment induced_signs(std::vector<int> delta);

// Shape and strength are verified: throws ShapeError unless the design has
// d+2 columns and strength >= d.
JShort short_j(const Design& design, int d);

// Finds delta with induced[j] = targets[j] for every j != free_slot
// (zero-based). The free slot receives the value forced by the defining word
// of the slot design. For odd m the last slot cannot be free
// (UnsupportedDropError).
SignAssignment solve_signs(const std::vector<int>& targets, int free_slot);

JStar canonicalize(const JShort& jshort);
inline JStar canonicalize(const JStar& jstar) { return canonicalize(jstar.as_short()); }

// True iff `entries` satisfies the ordering conditions of a canonical vector:
// for even m exactly one of the two admissible patterns, for odd m the single
// odd pattern.
bool is_canonical(const JShort& jshort);

bool isomorphic(const Design& a, const Design& b, int d);

}  // namespace oa
