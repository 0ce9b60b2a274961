#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// search or criterion code it is used to check.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "monomial/classify.hpp"
#include "monomial/level.hpp"
#include "monomial/level_io.hpp"

namespace monomial {

// gtest printers, found by argument-dependent lookup.
inline void PrintTo(const LevelMatrix& m, std::ostream* os) { *os << m; }
inline void PrintTo(const WeylElement& w, std::ostream* os) { *os << w; }

}  // namespace monomial

namespace monomial::testing {

/// Shortest-path closure of a random matrix with entries in [0, bound]; the
/// result satisfies the order condition with entries in [0, bound].
inline LevelMatrix random_order(std::mt19937_64& rng, std::size_t n, Entry bound) {
  std::uniform_int_distribution<Entry> dist(0, bound);
  LevelMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? 0 : dist(rng);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = std::min(m(i, j), m(i, k) + m(k, j));
    }
  }
  return m;
}

inline WeylElement random_weyl(std::mt19937_64& rng, std::size_t n, Entry max_shift = 4) {
  std::uniform_int_distribution<Entry> dist(-max_shift, max_shift);
  std::vector<Entry> shifts(n);
  for (auto& a : shifts) a = dist(rng);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return WeylElement(std::move(shifts), std::move(perm));
}

/// A random order moved off positive type by a random Weyl element.
inline LevelMatrix random_general_order(std::mt19937_64& rng, std::size_t n, Entry bound) {
  return conjugate(random_order(rng, n, bound), random_weyl(rng, n));
}

/// Literal triple loop over the definition.
inline bool brute_is_order(const LevelMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 0) return false;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (m(i, k) > m(i, j) + m(j, k)) return false;
      }
    }
  }
  return true;
}

/// Whether b = conjugate(a, w) for some w: for some sigma the difference
/// d_ij = b_{sigma i, sigma j} - a_ij must have the form x_i - x_j.
inline bool brute_conjugate(const LevelMatrix& a, const LevelMatrix& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        const Entry d = b(sigma[i], sigma[j]) - a(i, j);
        const Entry x_i = b(sigma[i], sigma[0]) - a(i, 0);
        const Entry x_j = b(sigma[j], sigma[0]) - a(j, 0);
        ok = d == x_i - x_j;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

/// Gorenstein criterion searched exhaustively over columns j and shifts c
/// in a window wide enough to contain every possible c.
inline bool brute_is_gorenstein(const LevelMatrix& m) {
  const std::size_t n = m.size();
  const Entry span = 2 * (m.max_entry() - m.min_entry()) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      for (Entry c = -span; c <= span && !found; ++c) {
        bool all = true;
        for (std::size_t k = 0; k < n && all; ++k) all = -m(i, k) + c == m(k, j);
        found = all;
      }
    }
    if (!found) return false;
  }
  return true;
}

inline void for_each_composition(std::size_t n,
                                 const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> parts;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (left == 0) {
      visit(parts);
      return;
    }
    for (std::size_t k = 1; k <= left; ++k) {
      parts.push_back(k);
      rec(left - k);
      parts.pop_back();
    }
  };
  rec(n);
}

/// Eichler pattern by matching against every block level with a in [1, max].
inline bool brute_is_eichler_triangular(const LevelMatrix& m) {
  const Entry top = std::max<Entry>(m.max_entry(), 1);
  bool found = false;
  for_each_composition(m.size(), [&](const std::vector<std::size_t>& blocks) {
    for (Entry a = 1; a <= top && !found; ++a) found = eichler_level(blocks, a) == m;
  });
  return found;
}

/// Visits every level with zero diagonal and free cells in [0, bound].
/// `free_cell(i, j)` selects which off-diagonal cells vary; others stay 0.
inline void for_each_level(std::size_t n, Entry bound,
                           const std::function<bool(std::size_t, std::size_t)>& free_cell,
                           const std::function<void(const LevelMatrix&)>& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && free_cell(i, j)) cells.emplace_back(i, j);
    }
  }
  LevelMatrix m(n);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      visit(m);
      return;
    }
    const auto [i, j] = cells[idx];
    for (Entry v = 0; v <= bound; ++v) {
      m(i, j) = v;
      rec(idx + 1);
    }
    m(i, j) = 0;
  };
  rec(0);
}

/// Positive-type candidates: first row zero.
inline void for_each_positive_order(std::size_t n, Entry bound,
                                    const std::function<void(const LevelMatrix&)>& visit) {
  for_each_level(n, bound, [](std::size_t i, std::size_t) { return i != 0; },
                 [&](const LevelMatrix& m) {
                   if (brute_is_order(m)) visit(m);
                 });
}

/// Upper-triangular candidates: only strictly-lower cells vary.
inline void for_each_upper_triangular_order(std::size_t n, Entry bound,
                                            const std::function<void(const LevelMatrix&)>& visit) {
  for_each_level(n, bound, [](std::size_t i, std::size_t j) { return i > j; },
                 [&](const LevelMatrix& m) {
                   if (brute_is_order(m)) visit(m);
                 });
}

}  // namespace monomial::testing
