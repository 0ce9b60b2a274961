#pragma once

// Census of monomial orders up to conjugacy, and matching of census classes
// against parameterized level families.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monomial/classify.hpp"
#include "monomial/level.hpp"

namespace monomial {

enum class CensusFilter { gorenstein, eichler, hereditary, bass, upper_triangular };

std::string_view to_string(CensusFilter f);
/// Throws std::invalid_argument for unknown names.
CensusFilter parse_census_filter(std::string_view name);

struct CensusQuery {
  std::size_t n;
  Entry bound;
  std::set<CensusFilter> filters;  // all must hold
};

struct CensusOptions {
  double budget = 1e7;  // raw candidates
  std::size_t search_cap = kDefaultSearchCap;
  std::size_t threads = 1;
};

struct CensusClass {
  LevelMatrix canonical;
  ClassificationReport report;
  bool upper_triangular;  // admits an upper-triangular conjugate
  std::size_t raw_count;  // enumerated representatives; diagnostic only
};

struct CensusTotals {
  std::size_t classes = 0;
  std::size_t gorenstein = 0;
  std::size_t eichler = 0;
  std::size_t hereditary = 0;
  std::size_t bass = 0;
  std::size_t upper_triangular = 0;

  bool operator==(const CensusTotals&) const = default;
};

struct CensusResult {
  CensusQuery query;
  std::size_t raw_candidates;
  std::size_t raw_orders;
  /// Sorted by canonical level; only classes passing every filter.
  std::vector<CensusClass> classes;
  /// Over the returned classes.
  CensusTotals totals;
};

/// (bound+1)^((n-1)^2): zero diagonal and first row, free entries in [0, bound].
double census_raw_size(std::size_t n, Entry bound);

/// Enumerates every zero-first-row, zero-diagonal level with entries in
/// [0, bound], keeps the orders, groups them by canonical form and classifies
/// one representative per class. Output does not depend on options.threads.
/// Throws BudgetExceededError, SearchTooLargeError, std::invalid_argument.
CensusResult census(const CensusQuery& q, const CensusOptions& options = {});

bool passes(const CensusClass& c, CensusFilter f);

/// Level entry c_a * a + c_b * b + c_0.
struct AffineEntry {
  Entry coef_a = 0;
  Entry coef_b = 0;
  Entry constant = 0;

  Entry eval(Entry a, Entry b) const { return coef_a * a + coef_b * b + constant; }
  bool operator==(const AffineEntry&) const = default;
};

/// A level pattern in the positive parameters a and b.
struct LevelFamily {
  std::string name;
  std::size_t n;
  std::vector<AffineEntry> entries;  // row-major

  bool uses_a() const;
  bool uses_b() const;
  /// Unused parameters are ignored.
  LevelMatrix instantiate(Entry a, Entry b) const;
};

/// Family file: "family <name>" followed by n rows of entry expressions
/// such as 0, a, 2b, a+b. '#' comments and blank lines allowed.
/// Throws ParseError; each used parameter must appear without the other in some entry.
std::vector<LevelFamily> parse_families(std::string_view text, const std::string& source = "<families>");
std::vector<LevelFamily> read_families_file(const std::string& path);

struct FamilyMatch {
  std::optional<Entry> a;
  std::optional<Entry> b;
  /// conjugate(canonical, witness) == family.instantiate(a, b).
  WeylElement witness;
};

/// Parameters a, b >= 1 for which some normalized permutation conjugate of
/// the level equals the instantiated family. Absent on size mismatch.
std::optional<FamilyMatch> match_family(const LevelMatrix& level, const LevelFamily& family,
                                        std::size_t search_cap = kDefaultSearchCap);

}  // namespace monomial
