#pragma once

// Definition-level oracles. Overorders of a standard monomial order are
// themselves standard monomial orders, so they can be enumerated as levels:
// m' with zero diagonal, -m_ji <= m'_ij <= m_ij, satisfying the order
// condition. Nothing here consults the classification theorems.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "monomial/level.hpp"

namespace monomial {

inline constexpr double kDefaultOverorderBudget = 1e7;

struct OverorderSet {
  LevelMatrix base;
  /// Sorted row-major lexicographically; includes base and the zero level.
  std::vector<LevelMatrix> members;
};

/// Size of the enumeration box after pairing: the product over i < j of
/// (s+1)(s+2)/2 with s = m_ij + m_ji. Conjugation invariant.
double overorder_bound(const LevelMatrix& m);

/// Visits every overorder in a fixed depth-first order; stop by returning
/// false. Throws InvalidOrderError, BudgetExceededError.
void for_each_overorder(const LevelMatrix& m,
                        const std::function<bool(const LevelMatrix&)>& visit,
                        double budget = kDefaultOverorderBudget);

OverorderSet overorders(const LevelMatrix& m, double budget = kDefaultOverorderBudget);

struct BassOracleVerdict {
  bool is_bass;
  /// Among non-Gorenstein overorders: largest entry sum (closest to the
  /// base), then row-major lex smallest.
  std::optional<LevelMatrix> non_gorenstein_overorder;
  std::size_t overorders_examined;
};

/// Bass straight from the definition: every overorder is Gorenstein.
BassOracleVerdict bass_oracle(const LevelMatrix& m, double budget = kDefaultOverorderBudget);

}  // namespace monomial
