#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sts/triple_system.hpp"

namespace sts::io {

// Malformed input; what() carries "line L, column C: ..." diagnostics.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Text format: header "sts <n>" (or "pstss <n>" for partial systems), then
// one triple per line as three 0-based indices, ascending within the line
// and lexicographic across lines. Blank lines and '#' comments are skipped
// on input.
struct Parsed {
  bool partial = false;
  PartialTripleSystem system;
};

Parsed parse(std::istream& in);
Parsed parse_string(const std::string& text);
Parsed read_file(const std::string& path);

void write(std::ostream& out, const PartialTripleSystem& ts, bool partial);
std::string to_string(const PartialTripleSystem& ts, bool partial);
void write_file(const std::string& path, const PartialTripleSystem& ts, bool partial);

// Sidecar map: one "point <index> = <name>" line per point.
void write_names(std::ostream& out, const std::vector<std::string>& names);
std::vector<std::string> parse_names(std::istream& in);

}  // namespace sts::io
