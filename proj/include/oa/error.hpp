#pragma once

#include <stdexcept>
#include <string>

namespace oa {

// Base for every error raised by the library. The CLI maps these to exit
// code 2 (usage/parse) except where a subcommand documents otherwise.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (d, lambda, m) outside the supported range or inconsistent.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Entry outside {-1,+1} or ragged rows.
class MalformedDesignError : public Error {
 public:
  using Error::Error;
};

// A J-vector whose inverse transform is negative or non-integral.
class InfeasibleJError : public Error {
 public:
  using Error::Error;
};

// Wrong column count, insufficient strength, or mismatched pair of designs.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Sign system asked to leave b_{m+1} free for odd m.
class UnsupportedDropError : public Error {
 public:
  using Error::Error;
};

// Brute-force search requested beyond its tractable range.
class SizeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace oa
