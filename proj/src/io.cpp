#include "oa/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "oa/error.hpp"

namespace oa::io {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

long long parse_int(const std::string& tok, int line_no, const char* what) {
  long long value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
  return value;
}

}  // namespace

std::vector<ArrayFile> read_arrays(std::istream& in) {
  std::vector<ArrayFile> out;
  std::string line;
  int line_no = 0;
  while (true) {
    // Header.
    bool have_header = false;
    while (std::getline(in, line)) {
      ++line_no;
      if (!skippable(line)) {
        have_header = true;
        break;
      }
    }
    if (!have_header) break;
    const auto head = tokens(line);
    if (head.size() != 5 || head[0] != "OA") {
      throw ParseError(line_no, "expected header 'OA n m 2 d'");
    }
    const auto n = parse_int(head[1], line_no, "n");
    const auto m = parse_int(head[2], line_no, "m");
    const auto s = parse_int(head[3], line_no, "s");
    const auto d = parse_int(head[4], line_no, "d");
    if (s != 2) throw ParseError(line_no, "only two-level arrays (s = 2) are supported");
    if (n < 1 || n > (1LL << 31)) throw ParseError(line_no, "run count n out of range");
    if (m < kMinColumns || m > kMaxColumns) throw ParseError(line_no, "column count m out of range");
    if (d < 0 || d > m) throw ParseError(line_no, "strength d must satisfy 0 <= d <= m");

    std::vector<std::int8_t> entries;
    entries.reserve(static_cast<std::size_t>(n * m));
    long long rows = 0;
    while (rows < n && std::getline(in, line)) {
      ++line_no;
      if (skippable(line)) continue;
      const auto row = tokens(line);
      if (static_cast<long long>(row.size()) != m) {
        throw ParseError(line_no, "expected " + std::to_string(m) + " entries, got " +
                                      std::to_string(row.size()));
      }
      for (const auto& tok : row) {
        if (tok == "1" || tok == "+1") {
          entries.push_back(1);
        } else if (tok == "-1") {
          entries.push_back(-1);
        } else {
          throw ParseError(line_no, "entry '" + tok + "' is not -1 or 1");
        }
      }
      ++rows;
    }
    if (rows < n) {
      throw ParseError(line_no, "expected " + std::to_string(n) + " rows, found " +
                                    std::to_string(rows));
    }
    out.push_back(ArrayFile{static_cast<int>(d),
                            Design(static_cast<int>(n), static_cast<int>(m), std::move(entries))});
  }
  return out;
}

ArrayFile read_array(std::istream& in) {
  auto arrays = read_arrays(in);
  if (arrays.size() != 1) {
    throw ParseError(0, "expected exactly one array, found " + std::to_string(arrays.size()));
  }
  return std::move(arrays.front());
}

ArrayFile read_array_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_array(in);
}

void write_array(std::ostream& out, const Design& design, int d) {
  out << "OA " << design.runs() << ' ' << design.columns() << " 2 " << d << '\n';
  for (int r = 0; r < design.runs(); ++r) {
    const auto row = design.row(r);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << static_cast<int>(row[j]);
    }
    out << '\n';
  }
}

void write_solution(std::ostream& out, const SolutionTuple& tuple) {
  out << format_entries(tuple.u) << ' ' << tuple.k << '\n';
}

std::string format_entries(const std::vector<std::int64_t>& entries) {
  std::string s;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(entries[i]);
  }
  return s;
}

}  // namespace oa::io
