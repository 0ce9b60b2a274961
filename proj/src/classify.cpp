#include "monomial/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "monomial/errors.hpp"

namespace monomial {

std::vector<std::size_t> min_cyclic_rotation(std::vector<std::size_t> blocks) {
  auto best = blocks;
  for (std::size_t r = 1; r < blocks.size(); ++r) {
    std::rotate(blocks.begin(), blocks.begin() + 1, blocks.end());
    if (blocks < best) best = blocks;
  }
  return best;
}

EichlerShape TriangularEichler::shape() const {
  return {blocks.size(), min_cyclic_rotation(blocks), a};
}

LevelMatrix eichler_level(const std::vector<std::size_t>& blocks, Entry a) {
  std::size_t n = 0;
  for (auto k : blocks) n += k;
  std::vector<std::size_t> block_of;
  block_of.reserve(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) block_of.insert(block_of.end(), blocks[b], b);
  LevelMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = block_of[i] > block_of[j] ? a : 0;
  }
  return m;
}

std::optional<TriangularEichler> eichler_shape_of_triangular(const LevelMatrix& m) {
  require_order(m, "eichler_shape_of_triangular");
  if (!is_upper_triangular(m)) {
    throw NotUpperTriangularError("eichler_shape_of_triangular: level is not upper triangular");
  }
  const std::size_t n = m.size();
  std::optional<Entry> a;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Entry v = m(i, j);
      if (v == 0) continue;
      if (a && *a != v) return std::nullopt;
      a = v;
    }
  }
  if (!a) return TriangularEichler{{n}, std::nullopt};

  // Row i opens a new block iff its whole strictly-lower part equals a.
  std::vector<std::size_t> blocks;
  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i) {
    bool opens = true;
    for (std::size_t j = 0; j < i && opens; ++j) opens = m(i, j) == *a;
    if (opens) {
      blocks.push_back(i - start);
      start = i;
    }
  }
  blocks.push_back(n - start);
  if (eichler_level(blocks, *a) != m) {
    throw std::logic_error(
        "eichler_shape_of_triangular: 0/a pattern of an order is not a block staircase");
  }
  return TriangularEichler{std::move(blocks), a};
}

namespace {

template <typename OnTriangular>
void for_each_triangular_conjugate(const LevelMatrix& m, std::size_t search_cap,
                                   OnTriangular&& on_triangular) {
  const std::size_t n = m.size();
  require_search_size(n, search_cap);
  for_each_permutation(n, [&](const std::vector<std::size_t>& perm) {
    const auto sigma = WeylElement::permutation(perm);
    const auto positive = normalize_positive(conjugate(m, sigma));
    if (!is_upper_triangular(positive.level)) return true;
    return on_triangular(positive.level, compose(positive.applied, sigma));
  });
}

BassVerdict bass_from(const LevelMatrix& m, const std::optional<EichlerForm>& eichler,
                      bool gorenstein) {
  if (!eichler) {
    BassVerdict v{false, BassReason::not_bass_witness, std::nullopt};
    if (!gorenstein) v.overorder_witness = m;
    return v;
  }
  const auto& shape = eichler->shape;
  if (shape.period == 1 || shape.a == 1) return {true, BassReason::hereditary, std::nullopt};
  if (shape.period == 2) return {true, BassReason::eichler_period_two, std::nullopt};

  // t >= 3, a >= 2: 1 below the block diagonal, 2 in the last-by-first block.
  const auto& blocks = eichler->blocks;
  auto over = eichler_level(blocks, 1);
  const std::size_t last_start = m.size() - blocks.back();
  for (std::size_t i = last_start; i < m.size(); ++i) {
    for (std::size_t j = 0; j < blocks.front(); ++j) over(i, j) = 2;
  }
  return {false, BassReason::not_bass_witness,
          conjugate(over, eichler->witness.inverse())};
}

}  // namespace

std::optional<EichlerForm> classify_eichler(const LevelMatrix& m, std::size_t search_cap) {
  require_order(m, "classify_eichler");
  std::optional<EichlerForm> found;
  for_each_triangular_conjugate(m, search_cap, [&](const LevelMatrix& tri, WeylElement w) {
    auto pattern = eichler_shape_of_triangular(tri);
    if (!pattern) return true;
    found = EichlerForm{pattern->shape(), tri, std::move(w), pattern->blocks};
    return false;
  });
  return found;
}

std::optional<CanonicalForm> upper_triangular_conjugate(const LevelMatrix& m,
                                                        std::size_t search_cap) {
  require_order(m, "upper_triangular_conjugate");
  std::optional<CanonicalForm> found;
  for_each_triangular_conjugate(m, search_cap, [&](const LevelMatrix& tri, WeylElement w) {
    found = CanonicalForm{tri, std::move(w)};
    return false;
  });
  return found;
}

bool is_hereditary(const LevelMatrix& m, std::size_t search_cap) {
  const auto eichler = classify_eichler(m, search_cap);
  return eichler && (eichler->shape.period == 1 || eichler->shape.a == 1);
}

std::string_view to_string(BassReason reason) {
  switch (reason) {
    case BassReason::hereditary:
      return "hereditary";
    case BassReason::eichler_period_two:
      return "eichler_period_two";
    case BassReason::not_bass_witness:
      return "not_bass_witness";
  }
  return "unknown";
}

BassVerdict is_bass(const LevelMatrix& m, std::size_t search_cap) {
  const auto eichler = classify_eichler(m, search_cap);
  // Every Eichler order is Gorenstein, so the criterion only matters otherwise.
  const bool gorenstein = eichler || is_gorenstein(m).ok;
  return bass_from(m, eichler, gorenstein);
}

LevelMatrix truncate(const LevelMatrix& m) {
  require_order(m, "truncate");
  if (m.min_entry() < 0) {
    throw NegativeEntryError("truncate: level has a negative entry; normalize to positive type first");
  }
  LevelMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j) != 0 ? 1 : 0;
  }
  if (!is_order(out)) throw std::logic_error("truncate: 0/1 clamp of an order is not an order");
  return out;
}

ClassificationReport classify(const LevelMatrix& m, std::size_t search_cap) {
  ClassificationReport report{m, is_order(m), {}, {}, {}, {}, {}};
  if (!report.order) return report;
  report.canonical = canonical_form(m, search_cap);
  report.gorenstein = is_gorenstein(m);
  report.eichler = classify_eichler(m, search_cap);
  const auto& e = report.eichler;
  report.hereditary = e && (e->shape.period == 1 || e->shape.a == 1);
  report.bass = bass_from(m, e, report.gorenstein->ok);
  return report;
}

}  // namespace monomial
