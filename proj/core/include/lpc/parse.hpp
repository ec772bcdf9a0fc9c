#pragma once

#include <optional>
#include <string_view>

#include "lpc/lparam.hpp"

namespace lpc {

// Parses the multisegment expression grammar
//
//   lparam   := segment ("+" segment)*
//   segment  := "[" INT ";" rho ";" RATIONAL "]"
//   rho      := NAME ("(" INT ")")?          (dimension defaults to 1)
//   RATIONAL := ("-")? INT ("/" INT)?
//   NAME     := [A-Za-z_][A-Za-z0-9_]*
//
// with insignificant whitespace between tokens.  Rejections carry a 1-based
// line/column position and the set of acceptable tokens (SyntaxError), or
// OverflowError for integer literals beyond the 64-bit range.
std::vector<Segment> parse_segments(std::string_view text);

// parse_segments plus parameter construction.  When n is absent it defaults
// to the total dimension of the parsed segments.
GLnLParameter parse_lparam(std::string_view text, std::optional<int> n = std::nullopt,
                           int d = 1);

// Renders a parameter back into the grammar, segments in canonical order.
std::string to_expression(const GLnLParameter& phi);

}  // namespace lpc
