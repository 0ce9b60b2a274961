#pragma once

// Lattices M = [P^{l_1},...,P^{l_n}]^t in D^n, projectivity over a monomial
// order, the O-linear dual R^v, and the Gorenstein criterion.

#include <optional>
#include <utility>
#include <vector>

#include "monomial/level.hpp"

namespace monomial {

struct LatticeType {
  std::vector<Entry> l;

  std::size_t size() const { return l.size(); }
  bool operator==(const LatticeType&) const = default;
};

struct LatticeCheck {
  bool ok;
  /// First (i, j) in row-major order with m_ij + l_j < l_i.
  std::optional<std::pair<std::size_t, std::size_t>> violation;

  explicit operator bool() const { return ok; }
};

/// Whether M of type l is a left R-module: m_ij + l_j >= l_i for all i, j.
/// Throws DimensionError.
LatticeCheck is_lattice(const LevelMatrix& m, const LatticeType& l);

struct ProjectiveWitness {
  std::size_t column;
  Entry shift;  // l_i = m_{i,column} + shift

  bool operator==(const ProjectiveWitness&) const = default;
};

struct ProjectivityCheck {
  bool ok;
  std::optional<ProjectiveWitness> witness;

  explicit operator bool() const { return ok; }
};

/// M is projective iff it is a column of R up to a scalar shift. Requires m to
/// be an order with zero first row and l to be an m-lattice; each failure
/// throws its own error type (InvalidOrderError, NotNormalizedError,
/// NotLatticeError). The witness is the highest matching column.
ProjectivityCheck is_projective(const LevelMatrix& m, const LatticeType& l);

struct DualLevel {
  /// raw_ij = -m_ji. This is a left R-module, not an order.
  LevelMatrix raw;
  /// raw with each column shifted by a scalar so the first row is zero.
  LevelMatrix normalized;
};

/// Total; no order check.
LevelMatrix negated_transpose(const LevelMatrix& m);

/// Throws InvalidOrderError. Asserts every column of raw is an m-lattice.
DualLevel dual_level(const LevelMatrix& m);

struct GorensteinWitness {
  std::size_t row;
  std::size_t column;
  /// -m_{row,k} + shift == m_{k,column} for all k.
  Entry shift;

  bool operator==(const GorensteinWitness&) const = default;
};

struct GorensteinCheck {
  bool ok;
  /// One entry per row when ok; the rows passing before the failure otherwise.
  std::vector<GorensteinWitness> witnesses;
  std::optional<std::size_t> failing_row;

  explicit operator bool() const { return ok; }
};

/// For every row i some column j makes m_ik + m_kj constant in k.
/// Evaluated on the level as given. Throws InvalidOrderError.
GorensteinCheck is_gorenstein(const LevelMatrix& m);

/// The same verdict reached the long way: normalize m, carry each column of
/// the dual into the normalized frame and test it with is_projective.
bool is_gorenstein_via_duality(const LevelMatrix& m);

}  // namespace monomial
