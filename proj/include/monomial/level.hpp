#pragma once

// Level matrices of standard monomial orders and the extended Weyl group
// Z^n x| S_n acting on them by conjugation.
//
// A level m = (m_ij) stands for the O_D-module (P^{m_ij}) inside Mat_n(D).
// All indices in this API are 0-based; renderings (text, JSON) are 1-based.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace monomial {

using Entry = std::int64_t;

/// Default cap on n for the n! permutation searches.
inline constexpr std::size_t kDefaultSearchCap = 8;

class LevelMatrix {
 public:
  /// The n x n zero level (the maximal order Mat_n(O_D)).
  explicit LevelMatrix(std::size_t n);
  LevelMatrix(std::initializer_list<std::initializer_list<Entry>> rows);

  /// Throws DimensionError unless rows is square and non-empty.
  static LevelMatrix from_rows(const std::vector<std::vector<Entry>>& rows);

  std::size_t size() const { return n_; }

  Entry operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Entry& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  std::span<const Entry> row(std::size_t i) const {
    return {data_.data() + i * n_, n_};
  }
  std::vector<Entry> column(std::size_t j) const;

  /// Row-major storage.
  const std::vector<Entry>& entries() const { return data_; }
  std::vector<std::vector<Entry>> rows() const;

  Entry max_entry() const;
  Entry min_entry() const;

  /// Size first, then row-major lexicographic order.
  auto operator<=>(const LevelMatrix&) const = default;
  bool operator==(const LevelMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<Entry> data_;
};

/// An element (a_1..a_n) . sigma of the extended Weyl group.
///
/// Acts on levels by m'_{sigma(i), sigma(j)} = m_ij + a_i - a_j.
class WeylElement {
 public:
  /// Throws DimensionError on length mismatch, std::invalid_argument if perm
  /// is not a bijection of {0..n-1}.
  WeylElement(std::vector<Entry> shifts, std::vector<std::size_t> perm);

  static WeylElement identity(std::size_t n);
  static WeylElement translation(std::vector<Entry> shifts);
  static WeylElement permutation(std::vector<std::size_t> perm);

  std::size_t size() const { return perm_.size(); }
  const std::vector<Entry>& shifts() const { return shifts_; }
  const std::vector<std::size_t>& perm() const { return perm_; }

  bool is_identity() const;
  WeylElement inverse() const;

  bool operator==(const WeylElement&) const = default;

 private:
  std::vector<Entry> shifts_;
  std::vector<std::size_t> perm_;
};

/// The element acting as `first` followed by `second`.
WeylElement compose(const WeylElement& second, const WeylElement& first);

struct OrderViolation {
  enum class Kind { diagonal, triangle };
  Kind kind;
  // diagonal: m_ii != 0 at i. triangle: m_ik > m_ij + m_jk.
  std::size_t i;
  std::size_t j;
  std::size_t k;

  bool operator==(const OrderViolation&) const = default;
};

struct OrderCheck {
  bool ok;
  std::optional<OrderViolation> violation;

  explicit operator bool() const { return ok; }
};

/// The order condition: m_ii = 0 and m_ik <= m_ij + m_jk for all i, j, k.
/// On failure reports the first violation: all diagonal entries are scanned
/// first, then triples (i, j, k) in row-major order.
OrderCheck is_order(const LevelMatrix& m);

/// Throws InvalidOrderError naming the violation unless m is an order.
void require_order(const LevelMatrix& m, const char* context);

LevelMatrix conjugate(const LevelMatrix& m, const WeylElement& w);

/// Action on lattice types [l_1..l_n]^t: l'_{sigma(i)} = l_i + a_i. Keeps
/// "l is an m-lattice" equivalent to "l' is a conjugate(m, w)-lattice".
std::vector<Entry> act_on_lattice(std::span<const Entry> l, const WeylElement& w);

struct PositiveTypeForm {
  LevelMatrix level;
  /// conjugate(input, applied) == level.
  WeylElement applied;
};

/// Conjugates by a pure translation so the first row becomes zero. For an
/// order the result has all entries >= 0. Throws InvalidOrderError.
PositiveTypeForm normalize_positive(const LevelMatrix& m);

/// True iff the first row is zero and no entry is negative.
bool is_positive_type(const LevelMatrix& m);

struct CanonicalForm {
  LevelMatrix level;
  /// conjugate(input, witness) == level.
  WeylElement witness;
};

/// Row-major lex-minimal positive-type form over all n! permutation
/// conjugates. Equal results iff the inputs are W~-conjugate.
/// Throws InvalidOrderError, SearchTooLargeError.
CanonicalForm canonical_form(const LevelMatrix& m,
                             std::size_t search_cap = kDefaultSearchCap);

/// m_ij = 0 whenever i <= j.
bool is_upper_triangular(const LevelMatrix& m);

void require_search_size(std::size_t n, std::size_t cap);

/// Calls visit(perm) for every permutation of {0..n-1} in lexicographic
/// order; stops early when visit returns false.
template <typename Visitor>
void for_each_permutation(std::size_t n, Visitor&& visit) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    if (!visit(static_cast<const std::vector<std::size_t>&>(perm))) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace monomial
