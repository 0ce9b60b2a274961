#pragma once

// Level-file formats.
//
// Text: first significant line holds n, the next n significant lines hold n
// whitespace-separated integers each. '#' starts a comment; blank lines are
// skipped. JSON: {"n": int, "m": [[int, ...], ...]}.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "monomial/level.hpp"

namespace monomial {

/// Throws ParseError with 1-based line/column.
LevelMatrix parse_level_text(std::string_view text, const std::string& source = "<input>");
LevelMatrix parse_level_json(std::string_view text, const std::string& source = "<input>");

/// Dispatches on the first significant character ('{' means JSON).
LevelMatrix parse_level(std::string_view text, const std::string& source = "<input>");

/// Reads and parses a file; throws ParseError if it cannot be read.
LevelMatrix read_level_file(const std::string& path);

/// Comma- or whitespace-separated integers, e.g. "0,1,1".
std::vector<Entry> parse_integer_list(std::string_view text, const std::string& source = "<argument>");

std::string format_level_text(const LevelMatrix& m);
/// Single-line bracket form: [[0,0],[1,0]].
std::string format_level_inline(const LevelMatrix& m);
std::string format_level_json(const LevelMatrix& m);

std::ostream& operator<<(std::ostream& os, const LevelMatrix& m);
std::ostream& operator<<(std::ostream& os, const WeylElement& w);

}  // namespace monomial
