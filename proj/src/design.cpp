#include "oa/design.hpp"

#include <string>

#include "oa/error.hpp"

namespace oa {

namespace {

void check_permutation(std::span<const int> order, int size, const char* what) {
  if (static_cast<int>(order.size()) != size) {
    throw ShapeError(std::string(what) + " permutation has wrong length");
  }
  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  for (int v : order) {
    if (v < 0 || v >= size || seen[static_cast<std::size_t>(v)]) {
      throw ShapeError(std::string(what) + " order is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

Design::Design(const std::vector<std::vector<int>>& rows) {
  n_ = static_cast<int>(rows.size());
  if (n_ == 0) throw MalformedDesignError("design has no rows");
  m_ = static_cast<int>(rows.front().size());
  check_columns(m_);
  entries_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(m_));
  for (int r = 0; r < n_; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != m_) {
      throw MalformedDesignError("row " + std::to_string(r + 1) + " has " +
                                 std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(m_));
    }
    for (int v : row) {
      if (v != 1 && v != -1) {
        throw MalformedDesignError("row " + std::to_string(r + 1) +
                                   " has entry " + std::to_string(v) +
                                   " outside {-1,+1}");
      }
      entries_.push_back(static_cast<std::int8_t>(v));
    }
  }
}

Design::Design(int n, int m, std::vector<std::int8_t> entries)
    : n_(n), m_(m), entries_(std::move(entries)) {
  check_columns(m_);
  if (n_ < 0 || entries_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(m_)) {
    throw MalformedDesignError("entry count does not match n x m");
  }
  for (auto v : entries_) {
    if (v != 1 && v != -1) {
      throw MalformedDesignError("entry " + std::to_string(v) + " outside {-1,+1}");
    }
  }
}

SubsetMask Design::row_mask(int r) const noexcept {
  SubsetMask mask = 0;
  const auto values = row(r);
  for (int j = 0; j < m_; ++j) {
    if (values[static_cast<std::size_t>(j)] < 0) mask |= SubsetMask{1} << j;
  }
  return mask;
}

Design Design::permute_rows(std::span<const int> order) const {
  check_permutation(order, n_, "row");
  std::vector<std::int8_t> out;
  out.reserve(entries_.size());
  for (int src : order) {
    const auto r = row(src);
    out.insert(out.end(), r.begin(), r.end());
  }
  return Design(n_, m_, std::move(out));
}

Design Design::permute_columns(std::span<const int> order) const {
  check_permutation(order, m_, "column");
  std::vector<std::int8_t> out(entries_.size());
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < m_; ++c) out[index(r, c)] = entries_[index(r, order[c])];
  }
  return Design(n_, m_, std::move(out));
}

Design Design::switch_signs(std::span<const int> signs) const {
  if (static_cast<int>(signs.size()) != m_) throw ShapeError("sign vector has wrong length");
  std::vector<std::int8_t> out(entries_);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < m_; ++c) {
      if (signs[static_cast<std::size_t>(c)] < 0) out[index(r, c)] = static_cast<std::int8_t>(-out[index(r, c)]);
    }
  }
  return Design(n_, m_, std::move(out));
}

}  // namespace oa
