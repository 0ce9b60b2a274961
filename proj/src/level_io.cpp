#include "monomial/level_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "monomial/errors.hpp"

namespace monomial {

namespace {

struct Token {
  Entry value;
  std::size_t column;
};

// Splits one line into integer tokens, stopping at '#'.
std::vector<Token> tokenize_line(std::string_view line, const std::string& source,
                                 std::size_t line_no, bool allow_commas) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const char c = line[pos];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c)) || (allow_commas && c == ',')) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) &&
           line[end] != '#' && !(allow_commas && line[end] == ',')) {
      ++end;
    }
    const auto word = line.substr(pos, end - pos);
    Entry value = 0;
    const char* first = word.data();
    const char* last = word.data() + word.size();
    if (!word.empty() && word.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw ParseError(source, line_no, pos + 1,
                       "expected an integer, found '" + std::string(word) + "'");
    }
    out.push_back({value, pos + 1});
    pos = end;
  }
  return out;
}

std::size_t first_significant(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else {
      return pos;
    }
  }
  return text.size();
}

}  // namespace

LevelMatrix parse_level_text(std::string_view text, const std::string& source) {
  std::vector<std::vector<Entry>> rows;
  std::size_t n = 0;
  bool have_n = false;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    auto line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = eol + 1;
    const auto tokens = tokenize_line(line, source, line_no, false);
    if (tokens.empty()) continue;
    last_line = line_no;
    if (!have_n) {
      if (tokens.size() != 1) {
        throw ParseError(source, line_no, tokens[1].column,
                         "first line must hold the matrix size n alone");
      }
      if (tokens[0].value < 1) {
        throw ParseError(source, line_no, tokens[0].column, "matrix size must be >= 1");
      }
      n = static_cast<std::size_t>(tokens[0].value);
      have_n = true;
      continue;
    }
    if (rows.size() == n) {
      throw ParseError(source, line_no, tokens[0].column,
                       "unexpected data after " + std::to_string(n) + " rows");
    }
    if (tokens.size() != n) {
      const std::size_t col =
          tokens.size() > n ? tokens[n].column : line.size() + 1;
      throw ParseError(source, line_no, col,
                       "row " + std::to_string(rows.size() + 1) + " has " +
                           std::to_string(tokens.size()) + " entries, expected " +
                           std::to_string(n));
    }
    std::vector<Entry> row;
    row.reserve(n);
    for (const auto& t : tokens) row.push_back(t.value);
    rows.push_back(std::move(row));
  }
  if (!have_n) throw ParseError(source, line_no, 1, "empty level file");
  if (rows.size() != n) {
    throw ParseError(source, last_line + 1, 1,
                     "expected " + std::to_string(n) + " rows, found " +
                         std::to_string(rows.size()));
  }
  return LevelMatrix::from_rows(rows);
}

LevelMatrix parse_level_json(std::string_view text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset only; report it as a column on line 1 of the flattened text
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source, line, col, "invalid JSON");
  }
  try {
    const auto n = doc.at("n").get<std::int64_t>();
    const auto rows = doc.at("m").get<std::vector<std::vector<Entry>>>();
    if (n < 1 || rows.size() != static_cast<std::size_t>(n)) {
      throw ParseError(source, 1, 1, "\"n\" does not match the number of rows in \"m\"");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw ParseError(source, 1, 1, "row " + std::to_string(i + 1) + " of \"m\" is ragged");
      }
    }
    return LevelMatrix::from_rows(rows);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source, 1, 1, std::string("malformed level JSON: ") + e.what());
  }
}

LevelMatrix parse_level(std::string_view text, const std::string& source) {
  const auto pos = first_significant(text);
  if (pos < text.size() && text[pos] == '{') return parse_level_json(text, source);
  return parse_level_text(text, source);
}

LevelMatrix read_level_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_level(buf.str(), path);
}

std::vector<Entry> parse_integer_list(std::string_view text, const std::string& source) {
  std::vector<Entry> out;
  for (const auto& t : tokenize_line(text, source, 1, true)) out.push_back(t.value);
  if (out.empty()) throw ParseError(source, 1, 1, "expected at least one integer");
  return out;
}

std::string format_level_text(const LevelMatrix& m) {
  std::ostringstream os;
  os << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

std::string format_level_inline(const LevelMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::string format_level_json(const LevelMatrix& m) {
  nlohmann::json j{{"n", m.size()}, {"m", m.rows()}};
  return j.dump();
}

std::ostream& operator<<(std::ostream& os, const LevelMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const WeylElement& w) {
  os << "(shifts=[";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w.shifts()[i];
  os << "], perm=[";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w.perm()[i] + 1;
  return os << "])";
}

}  // namespace monomial
