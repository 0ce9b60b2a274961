#pragma once

// Eichler normal forms, hereditary and Bass verdicts, and the full
// classification report for a monomial order.

#include <optional>
#include <string_view>
#include <vector>

#include "monomial/duality.hpp"
#include "monomial/level.hpp"

namespace monomial {

/// Period t, invariant (k_1..k_t) and parameter a of an Eichler order.
/// The invariant is only defined up to cyclic rotation and is stored as its
/// lexicographically smallest rotation; `a` is absent exactly when t == 1.
struct EichlerShape {
  std::size_t period;
  std::vector<std::size_t> invariant;
  std::optional<Entry> a;

  bool operator==(const EichlerShape&) const = default;
};

/// Smallest cyclic rotation of blocks, e.g. (1,2,1) -> (1,1,2).
std::vector<std::size_t> min_cyclic_rotation(std::vector<std::size_t> blocks);

/// Block structure read off a specific upper-triangular level, in index order.
struct TriangularEichler {
  std::vector<std::size_t> blocks;
  std::optional<Entry> a;

  EichlerShape shape() const;
};

/// The level with t x t blocks of the given sizes: a below the block
/// diagonal, 0 elsewhere.
LevelMatrix eichler_level(const std::vector<std::size_t>& blocks, Entry a);

/// Requires an upper-triangular order (throws InvalidOrderError,
/// NotUpperTriangularError). Present iff every entry below the diagonal is
/// 0 or a single common a > 0.
std::optional<TriangularEichler> eichler_shape_of_triangular(const LevelMatrix& m);

struct EichlerForm {
  EichlerShape shape;
  /// Upper-triangular conjugate realising the shape.
  LevelMatrix triangular;
  /// conjugate(input, witness) == triangular.
  WeylElement witness;
  std::vector<std::size_t> blocks;
};

/// Searches the n! permutation conjugates (each normalized to positive type,
/// in lexicographic permutation order) for an upper-triangular Eichler
/// pattern. Throws InvalidOrderError, SearchTooLargeError.
std::optional<EichlerForm> classify_eichler(const LevelMatrix& m,
                                            std::size_t search_cap = kDefaultSearchCap);

/// Some permutation conjugate, normalized, is upper triangular.
std::optional<CanonicalForm> upper_triangular_conjugate(
    const LevelMatrix& m, std::size_t search_cap = kDefaultSearchCap);

/// Eichler with t = 1 or a = 1.
bool is_hereditary(const LevelMatrix& m, std::size_t search_cap = kDefaultSearchCap);

enum class BassReason { hereditary, eichler_period_two, not_bass_witness };

std::string_view to_string(BassReason reason);

struct BassVerdict {
  bool is_bass;
  BassReason reason;
  /// For negative verdicts, a non-Gorenstein overorder when one can be
  /// written down directly (the order itself, or for an Eichler order with
  /// t >= 3 and a > 1 the block overorder with 1s and a single 2 corner).
  std::optional<LevelMatrix> overorder_witness;
};

/// Hereditary, or Eichler of period two.
BassVerdict is_bass(const LevelMatrix& m, std::size_t search_cap = kDefaultSearchCap);

/// Clamp every entry to {0, 1}. Requires an order with no negative entry
/// (throws InvalidOrderError, NegativeEntryError). The result is an order.
LevelMatrix truncate(const LevelMatrix& m);

struct ClassificationReport {
  LevelMatrix input;
  OrderCheck order;
  // Everything below is present iff order.ok.
  std::optional<CanonicalForm> canonical;
  std::optional<GorensteinCheck> gorenstein;
  std::optional<EichlerForm> eichler;
  std::optional<bool> hereditary;
  std::optional<BassVerdict> bass;

  bool is_order() const { return order.ok; }
  bool is_gorenstein() const { return gorenstein && gorenstein->ok; }
  bool is_hereditary() const { return hereditary.value_or(false); }
  bool is_bass() const { return bass && bass->is_bass; }
};

/// Throws SearchTooLargeError for orders with n above the cap.
ClassificationReport classify(const LevelMatrix& m,
                              std::size_t search_cap = kDefaultSearchCap);

}  // namespace monomial
