#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "rlmc/formula.hpp"

namespace rlmc {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Whitespace-insensitive. Throws ParseError on the first problem.
FormulaPtr parse_formula(const std::string& text);

// Standalone "[agent=(ints),...]" block, as used for endowments on the
// command line.
std::map<std::string, ResourceVector> parse_endowment(const std::string& text);

}  // namespace rlmc
