#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "oa/canon.hpp"
#include "oa/design.hpp"
#include "oa/enumerate.hpp"

namespace oa::io {

// Array file:
//   OA <n> <m> 2 <d>
//   <n lines of m tokens, each -1 or 1>
// Lines whose first non-blank character is '#' are comments; blank lines
// and trailing whitespace are ignored.
struct ArrayFile {
  int d = 0;
  Design design;
};

// Reads every array in the stream (a concatenated stream may hold several).
// Throws ParseError with the offending line number.
std::vector<ArrayFile> read_arrays(std::istream& in);
// Exactly one array; ParseError otherwise.
ArrayFile read_array(std::istream& in);
ArrayFile read_array_file(const std::string& path);

void write_array(std::ostream& out, const Design& design, int d);

// One tuple per line: u_1 ... u_{m+1} k
void write_solution(std::ostream& out, const SolutionTuple& tuple);

// Space-separated entries, no trailing newline.
std::string format_entries(const std::vector<std::int64_t>& entries);

}  // namespace oa::io
