#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "signedhom/graph.hpp"

namespace signedhom {

// Parse failure with a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The .sg format:
//   # optional comment lines (anywhere)
//   sg <n> <m>
//   <u> <v> <s>        m lines, 0-indexed endpoints, s in {+,-}; u == v is a loop
SignedGraph parse_sg(std::string_view text);

// Edges in id order, one per line, LF endings, no comments.
std::string serialize_sg(const SignedGraph& g);

}  // namespace signedhom
