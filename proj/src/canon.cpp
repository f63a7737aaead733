#include "oa/canon.hpp"

#include <algorithm>
#include <string>

#include "oa/error.hpp"
#include "oa/jchar.hpp"

namespace oa {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

int sign_to_make_nonpositive(std::int64_t v) { return v > 0 ? -1 : 1; }

// Index of the smallest |entry| among the first m slots; first one on ties.
std::size_t argmin_abs(const std::vector<std::int64_t>& e, int m) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < static_cast<std::size_t>(m); ++j) {
    if (abs64(e[j]) < abs64(e[best])) best = j;
  }
  return best;
}

// u_1 <= ... <= u_m <= -|u_{m+1}|
bool pattern_even_last_small(const std::vector<std::int64_t>& e, std::size_t m) {
  return std::is_sorted(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(m)) &&
         e[m - 1] <= -abs64(e[m]);
}

// u_1 <= ... <= u_{m-1} <= -|u_m|, u_{m+1} < -|u_m|
bool pattern_even_last_large(const std::vector<std::int64_t>& e, std::size_t m) {
  const auto limit = -abs64(e[m - 1]);
  return std::is_sorted(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(m - 1)) &&
         (m < 2 || e[m - 2] <= limit) && e[m] < limit;
}

// u_1 <= ... <= u_{m-1} <= -|u_m|, u_{m+1} <= 0
bool pattern_odd(const std::vector<std::int64_t>& e, std::size_t m) {
  return std::is_sorted(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(m - 1)) &&
         (m < 2 || e[m - 2] <= -abs64(e[m - 1])) && e[m] <= 0;
}

}  // namespace

SignAssignment induced_signs(std::vector<int> delta) {
  const std::size_t m = delta.size();
  int product = 1;
  for (int v : delta) product *= v;
  SignAssignment out{std::move(delta), std::vector<int>(m + 1)};
  for (std::size_t j = 0; j < m; ++j) out.induced[j] = product * out.delta[m - 1 - j];
  out.induced[m] = product;
  return out;
}

JShort short_j(const Design& design, int d) {
  const int m = design.columns();
  if (m != d + 2) {
    throw ShapeError("expected d+2=" + std::to_string(d + 2) + " columns, got " +
                     std::to_string(m));
  }
  const JFull jfull = j_full(design);
  const int s = strength(jfull);
  if (s < d) {
    throw ShapeError("design has strength " + std::to_string(s) + " < d=" +
                     std::to_string(d));
  }
  JShort out{m, std::vector<std::int64_t>(static_cast<std::size_t>(m) + 1)};
  for (int j = 1; j <= m + 1; ++j) {
    out.entries[static_cast<std::size_t>(j - 1)] = jfull[short_slot_subset(j, m)];
  }
  return out;
}

SignAssignment solve_signs(const std::vector<int>& targets, int free_slot) {
  const int slots = static_cast<int>(targets.size());
  const int m = slots - 1;
  if (m < 1) throw ParameterError("sign system needs at least two slots");
  if (free_slot < 0 || free_slot > m) throw ParameterError("free slot out of range");
  if (m % 2 == 1 && free_slot == m) {
    throw UnsupportedDropError(
        "for odd m the last slot lies on the defining word and cannot be left free");
  }
  for (int j = 0; j < slots; ++j) {
    if (j != free_slot && targets[static_cast<std::size_t>(j)] != 1 &&
        targets[static_cast<std::size_t>(j)] != -1) {
      throw ParameterError("sign targets must be +1 or -1");
    }
  }

  // induced[j] = P * delta[m-1-j], induced[m] = P.
  int product = 1;
  if (free_slot == m) {
    // Even m: P = P^m * prod(targets[0..m)) = prod(targets[0..m)).
    for (int j = 0; j < m; ++j) product *= targets[static_cast<std::size_t>(j)];
  } else {
    product = targets[static_cast<std::size_t>(m)];
  }

  std::vector<int> delta(static_cast<std::size_t>(m), 1);
  int others = 1;
  for (int j = 0; j < m; ++j) {
    if (j == free_slot) continue;
    const int value = product * targets[static_cast<std::size_t>(j)];
    delta[static_cast<std::size_t>(m - 1 - j)] = value;
    others *= value;
  }
  if (free_slot < m) delta[static_cast<std::size_t>(m - 1 - free_slot)] = product * others;
  return induced_signs(std::move(delta));
}

JStar canonicalize(const JShort& jshort) {
  const int m = jshort.m;
  const auto& e = jshort.entries;
  if (m < 2 || e.size() != static_cast<std::size_t>(m) + 1) {
    throw ShapeError("shortened J-vector must have m+1 entries");
  }
  const auto um = static_cast<std::size_t>(m);

  std::vector<int> targets(um + 1);
  for (std::size_t j = 0; j <= um; ++j) targets[j] = sign_to_make_nonpositive(e[j]);

  const std::size_t pivot = argmin_abs(e, m);
  const bool keep_last_free = m % 2 == 0 && abs64(e[um]) <= abs64(e[pivot]);
  const std::size_t free_slot = keep_last_free ? um : pivot;

  const auto signs = solve_signs(targets, static_cast<int>(free_slot));
  std::vector<std::int64_t> flipped(um + 1);
  for (std::size_t j = 0; j <= um; ++j) flipped[j] = signs.induced[j] * e[j];

  JStar out{m, {}};
  out.entries.reserve(um + 1);
  if (keep_last_free) {
    out.entries.assign(flipped.begin(), flipped.end() - 1);
    std::stable_sort(out.entries.begin(), out.entries.end());
  } else {
    for (std::size_t j = 0; j < um; ++j) {
      if (j != pivot) out.entries.push_back(flipped[j]);
    }
    std::stable_sort(out.entries.begin(), out.entries.end());
    out.entries.push_back(flipped[pivot]);
  }
  out.entries.push_back(flipped[um]);
  return out;
}

bool is_canonical(const JShort& jshort) {
  const auto m = static_cast<std::size_t>(jshort.m);
  const auto& e = jshort.entries;
  if (m < 2 || e.size() != m + 1) return false;
  if (m % 2 == 1) return pattern_odd(e, m);
  return pattern_even_last_small(e, m) != pattern_even_last_large(e, m);
}

bool isomorphic(const Design& a, const Design& b, int d) {
  if (a.runs() != b.runs() || a.columns() != b.columns()) {
    throw ShapeError("designs differ in shape: " + std::to_string(a.runs()) + "x" +
                     std::to_string(a.columns()) + " vs " + std::to_string(b.runs()) +
                     "x" + std::to_string(b.columns()));
  }
  return canonicalize(short_j(a, d)) == canonicalize(short_j(b, d));
}

}  // namespace oa
