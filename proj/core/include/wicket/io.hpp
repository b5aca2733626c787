#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "wicket/system.hpp"

namespace wicket {

// Malformed input: bad header, non-numeric token, wrong field count, trailing
// garbage. line is 1-based; 0 means the location is not line-addressable.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(format(line, what)), line_(line) {}
  int line() const { return line_; }

 private:
  static std::string format(int line, const std::string& what);
  int line_;
};

// Syntactically fine but not a linear triple system (repeated vertex,
// duplicate edge, two edges sharing two vertices, vertex >= n).
class FileValidationError : public std::runtime_error {
 public:
  FileValidationError(int line, AddError kind, const std::string& what)
      : std::runtime_error(format(line, kind, what)), line_(line), kind_(kind) {}
  int line() const { return line_; }
  AddError kind() const { return kind_; }

 private:
  static std::string format(int line, AddError kind, const std::string& what);
  int line_;
  AddError kind_;
};

// Text format: header "n m", then m lines "a b c", one edge per line.
// '#' starts a comment line; blank lines are skipped. The reader accepts
// vertices in any order within a line and any edge order. EdgeIds follow
// file order, so downstream embeddings can cite input lines.
LinearTripleSystem read_system_text(std::istream& in);
LinearTripleSystem read_system_text_file(const std::string& path);

// Writes edges lexicographically sorted with ascending vertices, LF endings.
void write_system_text(const LinearTripleSystem& sys, std::ostream& out);
void write_system_text_file(const LinearTripleSystem& sys, const std::string& path);

// JSON object {"n": <int>, "edges": [[a,b,c], ...]}; same liberal-read,
// sorted-write policy as the text format.
LinearTripleSystem read_system_json(const std::string& json_text);
std::string write_system_json(const LinearTripleSystem& sys);

}  // namespace wicket
