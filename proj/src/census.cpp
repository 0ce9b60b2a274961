#include "monomial/census.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "monomial/errors.hpp"

namespace monomial {

std::string_view to_string(CensusFilter f) {
  switch (f) {
    case CensusFilter::gorenstein:
      return "gorenstein";
    case CensusFilter::eichler:
      return "eichler";
    case CensusFilter::hereditary:
      return "hereditary";
    case CensusFilter::bass:
      return "bass";
    case CensusFilter::upper_triangular:
      return "upper_triangular";
  }
  return "unknown";
}

CensusFilter parse_census_filter(std::string_view name) {
  for (auto f : {CensusFilter::gorenstein, CensusFilter::eichler, CensusFilter::hereditary,
                 CensusFilter::bass, CensusFilter::upper_triangular}) {
    if (name == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown census filter '" + std::string(name) + "'");
}

double census_raw_size(std::size_t n, Entry bound) {
  const double free = static_cast<double>((n - 1) * (n - 1));
  return std::pow(static_cast<double>(bound + 1), free);
}

bool passes(const CensusClass& c, CensusFilter f) {
  switch (f) {
    case CensusFilter::gorenstein:
      return c.report.is_gorenstein();
    case CensusFilter::eichler:
      return c.report.eichler.has_value();
    case CensusFilter::hereditary:
      return c.report.is_hereditary();
    case CensusFilter::bass:
      return c.report.is_bass();
    case CensusFilter::upper_triangular:
      return c.upper_triangular;
  }
  return false;
}

namespace {

struct Tally {
  std::map<LevelMatrix, std::size_t> classes;
  std::size_t orders = 0;
};

// Decodes candidate `index` as base-(bound+1) digits into the free cells.
LevelMatrix candidate(std::size_t n, Entry bound, std::size_t index) {
  LevelMatrix m(n);
  const auto radix = static_cast<std::size_t>(bound + 1);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      m(i, j) = static_cast<Entry>(index % radix);
      index /= radix;
    }
  }
  return m;
}

Tally tally_range(std::size_t n, Entry bound, std::size_t begin, std::size_t end,
                  std::size_t search_cap) {
  Tally t;
  for (std::size_t idx = begin; idx < end; ++idx) {
    const auto m = candidate(n, bound, idx);
    if (!is_order(m)) continue;
    ++t.orders;
    ++t.classes[canonical_form(m, search_cap).level];
  }
  return t;
}

}  // namespace

CensusResult census(const CensusQuery& q, const CensusOptions& options) {
  if (q.n == 0) throw std::invalid_argument("census: n must be >= 1");
  if (q.bound < 0) throw std::invalid_argument("census: bound must be >= 0");
  require_search_size(q.n, options.search_cap);
  const double raw = census_raw_size(q.n, q.bound);
  if (raw > options.budget) throw BudgetExceededError("census", raw, options.budget);
  const auto total = static_cast<std::size_t>(raw);

  const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, total));
  std::vector<Tally> parts(threads);
  auto work = [&](std::size_t t) {
    const std::size_t begin = total * t / threads;
    const std::size_t end = total * (t + 1) / threads;
    parts[t] = tally_range(q.n, q.bound, begin, end, options.search_cap);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  Tally merged;
  for (auto& part : parts) {
    merged.orders += part.orders;
    for (auto& [level, count] : part.classes) merged.classes[level] += count;
  }

  CensusResult out{q, total, merged.orders, {}, {}};
  for (const auto& [level, count] : merged.classes) {
    CensusClass c{level, classify(level, options.search_cap),
                  upper_triangular_conjugate(level, options.search_cap).has_value(), count};
    bool keep = true;
    for (auto f : q.filters) keep = keep && passes(c, f);
    if (!keep) continue;
    auto& t = out.totals;
    ++t.classes;
    t.gorenstein += passes(c, CensusFilter::gorenstein);
    t.eichler += passes(c, CensusFilter::eichler);
    t.hereditary += passes(c, CensusFilter::hereditary);
    t.bass += passes(c, CensusFilter::bass);
    t.upper_triangular += passes(c, CensusFilter::upper_triangular);
    out.classes.push_back(std::move(c));
  }
  return out;
}

bool LevelFamily::uses_a() const {
  for (const auto& e : entries) {
    if (e.coef_a != 0) return true;
  }
  return false;
}

bool LevelFamily::uses_b() const {
  for (const auto& e : entries) {
    if (e.coef_b != 0) return true;
  }
  return false;
}

LevelMatrix LevelFamily::instantiate(Entry a, Entry b) const {
  LevelMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entries[i * n + j].eval(a, b);
  }
  return m;
}

namespace {

AffineEntry parse_affine(std::string_view word, const std::string& source, std::size_t line,
                         std::size_t column) {
  AffineEntry e;
  auto fail = [&](const std::string& why) {
    throw ParseError(source, line, column, "bad entry '" + std::string(word) + "': " + why);
  };
  std::size_t pos = 0;
  if (word.empty()) fail("empty");
  while (pos < word.size()) {
    Entry sign = 1;
    if (word[pos] == '+' || word[pos] == '-') {
      if (word[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    Entry coef = 0;
    bool digits = false;
    while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) {
      coef = coef * 10 + (word[pos] - '0');
      digits = true;
      ++pos;
    }
    if (pos < word.size() && (word[pos] == 'a' || word[pos] == 'b')) {
      const Entry c = sign * (digits ? coef : 1);
      (word[pos] == 'a' ? e.coef_a : e.coef_b) += c;
      ++pos;
    } else if (digits) {
      e.constant += sign * coef;
    } else {
      fail("expected a number, 'a' or 'b'");
    }
  }
  return e;
}

}  // namespace

std::vector<LevelFamily> parse_families(std::string_view text, const std::string& source) {
  std::vector<LevelFamily> out;
  std::istringstream in{std::string(text)};
  std::string raw_line;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  std::size_t rows_seen = 0;
  auto finish = [&]() {
    if (out.empty()) return;
    auto& f = out.back();
    if (rows_seen != f.n || f.n == 0) {
      throw ParseError(source, header_line, 1,
                       "family '" + f.name + "' has " + std::to_string(rows_seen) + " rows of " +
                           std::to_string(f.n) + " entries");
    }
    auto isolated = [&](bool param_a) {
      for (const auto& e : f.entries) {
        const Entry mine = param_a ? e.coef_a : e.coef_b;
        const Entry other = param_a ? e.coef_b : e.coef_a;
        if (mine != 0 && other == 0) return true;
      }
      return false;
    };
    if ((f.uses_a() && !isolated(true)) || (f.uses_b() && !isolated(false))) {
      throw ParseError(source, header_line, 1,
                       "family '" + f.name + "' needs an entry holding each parameter alone");
    }
  };
  while (std::getline(in, raw_line)) {
    ++line_no;
    std::string_view line = raw_line;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::pair<std::string_view, std::size_t>> words;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[pos]))) {
        ++pos;
        continue;
      }
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      words.emplace_back(line.substr(pos, end - pos), pos + 1);
      pos = end;
    }
    if (words.empty()) continue;
    if (words[0].first == "family") {
      finish();
      if (words.size() != 2) throw ParseError(source, line_no, 1, "expected 'family <name>'");
      out.push_back(LevelFamily{std::string(words[1].first), 0, {}});
      header_line = line_no;
      rows_seen = 0;
      continue;
    }
    if (out.empty()) throw ParseError(source, line_no, 1, "row outside of a family block");
    auto& f = out.back();
    if (rows_seen == 0) f.n = words.size();
    if (words.size() != f.n) {
      throw ParseError(source, line_no, words.size() > f.n ? words[f.n].second : line.size() + 1,
                       "ragged family row");
    }
    if (rows_seen == f.n) throw ParseError(source, line_no, 1, "too many rows in family");
    for (const auto& [w, col] : words) f.entries.push_back(parse_affine(w, source, line_no, col));
    ++rows_seen;
  }
  finish();
  return out;
}

std::vector<LevelFamily> read_families_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_families(buf.str(), path);
}

namespace {

// Reads a parameter from the first entry holding it alone.
std::optional<Entry> solve_parameter(const LevelFamily& f, const LevelMatrix& p, bool param_a) {
  for (std::size_t idx = 0; idx < f.entries.size(); ++idx) {
    const auto& e = f.entries[idx];
    const Entry mine = param_a ? e.coef_a : e.coef_b;
    const Entry other = param_a ? e.coef_b : e.coef_a;
    if (mine == 0 || other != 0) continue;
    const Entry value = p.entries()[idx] - e.constant;
    if (value % mine != 0) return std::nullopt;
    return value / mine;
  }
  return std::nullopt;
}

}  // namespace

std::optional<FamilyMatch> match_family(const LevelMatrix& level, const LevelFamily& family,
                                        std::size_t search_cap) {
  if (level.size() != family.n) return std::nullopt;
  require_order(level, "match_family");
  require_search_size(level.size(), search_cap);
  std::optional<FamilyMatch> found;
  for_each_permutation(level.size(), [&](const std::vector<std::size_t>& perm) {
    const auto sigma = WeylElement::permutation(perm);
    const auto positive = normalize_positive(conjugate(level, sigma));
    std::optional<Entry> a, b;
    if (family.uses_a()) {
      a = solve_parameter(family, positive.level, true);
      if (!a || *a < 1) return true;
    }
    if (family.uses_b()) {
      b = solve_parameter(family, positive.level, false);
      if (!b || *b < 1) return true;
    }
    if (family.instantiate(a.value_or(0), b.value_or(0)) != positive.level) return true;
    found = FamilyMatch{a, b, compose(positive.applied, sigma)};
    return false;
  });
  return found;
}

}  // namespace monomial
