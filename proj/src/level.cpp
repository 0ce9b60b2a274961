#include "monomial/level.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "monomial/errors.hpp"

namespace monomial {

std::string BudgetExceededError::format(double v) {
  std::ostringstream os;
  if (v < 1e15 && v == std::floor(v)) {
    os << static_cast<long long>(v);
  } else {
    os << v;
  }
  return os.str();
}

LevelMatrix::LevelMatrix(std::size_t n) : n_(n), data_(n * n, 0) {
  if (n == 0) throw DimensionError("level matrix must have n >= 1");
}

LevelMatrix::LevelMatrix(std::initializer_list<std::initializer_list<Entry>> rows)
    : n_(rows.size()) {
  if (n_ == 0) throw DimensionError("level matrix must have n >= 1");
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw DimensionError("level matrix rows must be square");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

LevelMatrix LevelMatrix::from_rows(const std::vector<std::vector<Entry>>& rows) {
  LevelMatrix m(rows.empty() ? 0 : rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.n_) {
      throw DimensionError("row " + std::to_string(i + 1) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(m.n_));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * m.n_);
  }
  return m;
}

std::vector<Entry> LevelMatrix::column(std::size_t j) const {
  std::vector<Entry> c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<std::vector<Entry>> LevelMatrix::rows() const {
  std::vector<std::vector<Entry>> out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

Entry LevelMatrix::max_entry() const { return *std::max_element(data_.begin(), data_.end()); }
Entry LevelMatrix::min_entry() const { return *std::min_element(data_.begin(), data_.end()); }

WeylElement::WeylElement(std::vector<Entry> shifts, std::vector<std::size_t> perm)
    : shifts_(std::move(shifts)), perm_(std::move(perm)) {
  if (shifts_.size() != perm_.size()) {
    throw DimensionError("Weyl element shifts and permutation differ in length");
  }
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t p : perm_) {
    if (p >= perm_.size() || seen[p]) {
      throw std::invalid_argument("Weyl element permutation is not a bijection");
    }
    seen[p] = true;
  }
}

WeylElement WeylElement::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return WeylElement(std::vector<Entry>(n, 0), std::move(perm));
}

WeylElement WeylElement::translation(std::vector<Entry> shifts) {
  std::vector<std::size_t> perm(shifts.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return WeylElement(std::move(shifts), std::move(perm));
}

WeylElement WeylElement::permutation(std::vector<std::size_t> perm) {
  std::vector<Entry> shifts(perm.size(), 0);
  return WeylElement(std::move(shifts), std::move(perm));
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i || shifts_[i] != 0) return false;
  }
  return true;
}

WeylElement WeylElement::inverse() const {
  const std::size_t n = perm_.size();
  std::vector<Entry> shifts(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[perm_[i]] = i;
    shifts[perm_[i]] = -shifts_[i];
  }
  return WeylElement(std::move(shifts), std::move(perm));
}

WeylElement compose(const WeylElement& second, const WeylElement& first) {
  if (second.size() != first.size()) {
    throw DimensionError("cannot compose Weyl elements of different sizes");
  }
  const std::size_t n = first.size();
  std::vector<Entry> shifts(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t mid = first.perm()[i];
    perm[i] = second.perm()[mid];
    shifts[i] = first.shifts()[i] + second.shifts()[mid];
  }
  return WeylElement(std::move(shifts), std::move(perm));
}

OrderCheck is_order(const LevelMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 0) {
      return {false, OrderViolation{OrderViolation::Kind::diagonal, i, i, i}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (m(i, k) > m(i, j) + m(j, k)) {
          return {false, OrderViolation{OrderViolation::Kind::triangle, i, j, k}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

void require_order(const LevelMatrix& m, const char* context) {
  const auto check = is_order(m);
  if (check) return;
  const auto& v = *check.violation;
  std::string msg = std::string(context) + ": level is not an order (";
  if (v.kind == OrderViolation::Kind::diagonal) {
    msg += "m_" + std::to_string(v.i + 1) + std::to_string(v.i + 1) + " != 0)";
  } else {
    msg += "m_{" + std::to_string(v.i + 1) + "," + std::to_string(v.k + 1) +
           "} > m_{" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) +
           "} + m_{" + std::to_string(v.j + 1) + "," + std::to_string(v.k + 1) + "})";
  }
  throw InvalidOrderError(msg);
}

LevelMatrix conjugate(const LevelMatrix& m, const WeylElement& w) {
  const std::size_t n = m.size();
  if (w.size() != n) {
    throw DimensionError("Weyl element of size " + std::to_string(w.size()) +
                         " cannot act on a " + std::to_string(n) + "x" +
                         std::to_string(n) + " level");
  }
  const auto& a = w.shifts();
  const auto& sigma = w.perm();
  LevelMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(sigma[i], sigma[j]) = m(i, j) + a[i] - a[j];
    }
  }
  return out;
}

std::vector<Entry> act_on_lattice(std::span<const Entry> l, const WeylElement& w) {
  if (l.size() != w.size()) {
    throw DimensionError("lattice type length does not match Weyl element size");
  }
  std::vector<Entry> out(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    out[w.perm()[i]] = l[i] + w.shifts()[i];
  }
  return out;
}

namespace {

// Translation zeroing the first row under m'_ij = m_ij + a_i - a_j.
WeylElement first_row_translation(const LevelMatrix& m) {
  std::vector<Entry> a(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) a[j] = m(0, j);
  return WeylElement::translation(std::move(a));
}

}  // namespace

PositiveTypeForm normalize_positive(const LevelMatrix& m) {
  require_order(m, "normalize_positive");
  auto w = first_row_translation(m);
  auto level = conjugate(m, w);
  return {std::move(level), std::move(w)};
}

bool is_positive_type(const LevelMatrix& m) {
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m(0, j) != 0) return false;
  }
  return m.min_entry() >= 0;
}

void require_search_size(std::size_t n, std::size_t cap) {
  if (n > cap) throw SearchTooLargeError(n, cap);
}

CanonicalForm canonical_form(const LevelMatrix& m, std::size_t search_cap) {
  require_order(m, "canonical_form");
  const std::size_t n = m.size();
  require_search_size(n, search_cap);

  std::optional<CanonicalForm> best;
  for_each_permutation(n, [&](const std::vector<std::size_t>& perm) {
    const auto sigma = WeylElement::permutation(perm);
    const auto permuted = conjugate(m, sigma);
    auto shift = first_row_translation(permuted);
    auto level = conjugate(permuted, shift);
    if (!best || level < best->level) {
      best = CanonicalForm{std::move(level), compose(shift, sigma)};
    }
    return true;
  });
  return std::move(*best);
}

bool is_upper_triangular(const LevelMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      if (m(i, j) != 0) return false;
    }
  }
  return true;
}

}  // namespace monomial
