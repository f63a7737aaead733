#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oa/subsets.hpp"

namespace oa {

// n x m matrix over {-1,+1}, one row per run, stored row-major.
class Design {
 public:
  Design() = default;

  // Throws MalformedDesignError on ragged rows or entries outside {-1,+1},
  // and ParameterError when the column count is unsupported.
  explicit Design(const std::vector<std::vector<int>>& rows);
  Design(int n, int m, std::vector<std::int8_t> entries);

  int runs() const noexcept { return n_; }
  int columns() const noexcept { return m_; }

  int at(int row, int col) const noexcept { return entries_[index(row, col)]; }
  std::span<const std::int8_t> row(int r) const noexcept {
    return {entries_.data() + index(r, 0), static_cast<std::size_t>(m_)};
  }
  std::span<const std::int8_t> entries() const noexcept { return entries_; }

  // Yates index of row r: bit (j-1) set iff entry j is -1.
  SubsetMask row_mask(int r) const noexcept;

  // The three isomorphism moves. `order[i]` names the source row/column
  // that lands in position i; `signs[j]` multiplies column j.
  Design permute_rows(std::span<const int> order) const;
  Design permute_columns(std::span<const int> order) const;
  Design switch_signs(std::span<const int> signs) const;

  friend bool operator==(const Design&, const Design&) = default;

 private:
  std::size_t index(int r, int c) const noexcept {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(c);
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::int8_t> entries_;
};

}  // namespace oa
