#include "monomial/duality.hpp"

#include <stdexcept>
#include <string>

#include "monomial/errors.hpp"

namespace monomial {

namespace {

void require_same_size(const LevelMatrix& m, const LatticeType& l) {
  if (l.size() != m.size()) {
    throw DimensionError("lattice type of length " + std::to_string(l.size()) +
                         " does not fit a " + std::to_string(m.size()) + "x" +
                         std::to_string(m.size()) + " level");
  }
}

}  // namespace

LatticeCheck is_lattice(const LevelMatrix& m, const LatticeType& l) {
  require_same_size(m, l);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, j) + l.l[j] < l.l[i]) return {false, std::pair{i, j}};
    }
  }
  return {true, std::nullopt};
}

ProjectivityCheck is_projective(const LevelMatrix& m, const LatticeType& l) {
  require_same_size(m, l);
  require_order(m, "is_projective");
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m(0, j) != 0) {
      throw NotNormalizedError("is_projective: level must have a zero first row");
    }
  }
  if (const auto check = is_lattice(m, l); !check) {
    const auto [i, j] = *check.violation;
    throw NotLatticeError("is_projective: type is not a lattice (m_" +
                          std::to_string(i + 1) + std::to_string(j + 1) + " + l_" +
                          std::to_string(j + 1) + " < l_" + std::to_string(i + 1) + ")");
  }
  // The shift is forced by the first coordinate: l_1 = m_1j + c = c.
  for (std::size_t j = m.size(); j-- > 0;) {
    const Entry c = l.l[0] - m(0, j);
    bool match = true;
    for (std::size_t i = 1; i < m.size() && match; ++i) match = l.l[i] == m(i, j) + c;
    if (match) return {true, ProjectiveWitness{j, c}};
  }
  return {false, std::nullopt};
}

LevelMatrix negated_transpose(const LevelMatrix& m) {
  LevelMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = -m(j, i);
  }
  return out;
}

DualLevel dual_level(const LevelMatrix& m) {
  require_order(m, "dual_level");
  auto raw = negated_transpose(m);
  LevelMatrix normalized = raw;
  for (std::size_t j = 0; j < m.size(); ++j) {
    const Entry top = raw(0, j);
    for (std::size_t i = 0; i < m.size(); ++i) normalized(i, j) -= top;
  }
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (!is_lattice(m, LatticeType{raw.column(j)})) {
      throw std::logic_error("dual_level: dual column is not a lattice over an order");
    }
  }
  return {std::move(raw), std::move(normalized)};
}

GorensteinCheck is_gorenstein(const LevelMatrix& m) {
  require_order(m, "is_gorenstein");
  const std::size_t n = m.size();
  GorensteinCheck out{true, {}, std::nullopt};
  out.witnesses.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = n; j-- > 0 && !found;) {
      // c is forced by k = 0.
      const Entry c = m(i, 0) + m(0, j);
      bool match = true;
      for (std::size_t k = 1; k < n && match; ++k) match = m(i, k) + m(k, j) == c;
      if (match) {
        out.witnesses.push_back({i, j, c});
        found = true;
      }
    }
    if (!found) {
      out.ok = false;
      out.failing_row = i;
      return out;
    }
  }
  return out;
}

bool is_gorenstein_via_duality(const LevelMatrix& m) {
  const auto positive = normalize_positive(m);
  const auto dual = dual_level(m);
  for (std::size_t col = 0; col < m.size(); ++col) {
    auto l = act_on_lattice(dual.raw.column(col), positive.applied);
    const Entry top = l[0];
    for (auto& x : l) x -= top;
    const LatticeType type{std::move(l)};
    if (!is_lattice(positive.level, type)) {
      throw std::logic_error("is_gorenstein_via_duality: transported dual column is not a lattice");
    }
    if (!is_projective(positive.level, type)) return false;
  }
  return true;
}

}  // namespace monomial
