#include "monomial/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "monomial/duality.hpp"
#include "monomial/errors.hpp"

namespace monomial {

double overorder_bound(const LevelMatrix& m) {
  double bound = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const double s = static_cast<double>(m(i, j) + m(j, i));
      bound *= (s + 1) * (s + 2) / 2;
    }
  }
  return bound;
}

namespace {

// A triangle m'_xz <= m'_xy + m'_yz, stored as flat indices.
struct Triangle {
  std::size_t xz, xy, yz;
};

class OverorderSearch {
 public:
  OverorderSearch(const LevelMatrix& base, const std::function<bool(const LevelMatrix&)>& visit)
      : base_(base), current_(base.size()), visit_(visit) {
    const std::size_t n = base.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) cells_.push_back(i * n + j);
      }
    }
    // Assign each triangle to the step at which its last cell gets fixed.
    std::vector<std::size_t> step_of(n * n, 0);
    for (std::size_t s = 0; s < cells_.size(); ++s) step_of[cells_[s]] = s;
    checks_.resize(cells_.size());
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          const Triangle t{x * n + z, x * n + y, y * n + z};
          std::size_t last = 0;
          bool trivial = true;
          for (std::size_t c : {t.xz, t.xy, t.yz}) {
            if (c / n == c % n) continue;
            trivial = false;
            last = std::max(last, step_of[c]);
          }
          if (!trivial) checks_[last].push_back(t);
        }
      }
    }
  }

  void run() { descend(0); }

 private:
  bool descend(std::size_t step) {
    if (step == cells_.size()) return visit_(current_);
    const std::size_t n = base_.size();
    const std::size_t cell = cells_[step];
    const std::size_t i = cell / n, j = cell % n;
    auto& value = entry(cell);
    for (Entry v = -base_(j, i); v <= base_(i, j); ++v) {
      value = v;
      bool ok = true;
      for (const auto& t : checks_[step]) {
        if (entry(t.xz) > entry(t.xy) + entry(t.yz)) {
          ok = false;
          break;
        }
      }
      if (ok && !descend(step + 1)) return false;
    }
    value = 0;
    return true;
  }

  Entry& entry(std::size_t flat) {
    const std::size_t n = base_.size();
    return current_(flat / n, flat % n);
  }

  const LevelMatrix& base_;
  LevelMatrix current_;
  const std::function<bool(const LevelMatrix&)>& visit_;
  std::vector<std::size_t> cells_;
  std::vector<std::vector<Triangle>> checks_;
};

}  // namespace

void for_each_overorder(const LevelMatrix& m,
                        const std::function<bool(const LevelMatrix&)>& visit, double budget) {
  require_order(m, "overorders");
  const double bound = overorder_bound(m);
  if (bound > budget) throw BudgetExceededError("overorder enumeration", bound, budget);
  OverorderSearch(m, visit).run();
}

OverorderSet overorders(const LevelMatrix& m, double budget) {
  OverorderSet out{m, {}};
  for_each_overorder(
      m,
      [&](const LevelMatrix& member) {
        out.members.push_back(member);
        return true;
      },
      budget);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

BassOracleVerdict bass_oracle(const LevelMatrix& m, double budget) {
  BassOracleVerdict out{true, std::nullopt, 0};
  Entry best_sum = 0;
  for_each_overorder(
      m,
      [&](const LevelMatrix& member) {
        ++out.overorders_examined;
        if (is_gorenstein(member)) return true;
        out.is_bass = false;
        const auto& e = member.entries();
        const Entry sum = std::accumulate(e.begin(), e.end(), Entry{0});
        if (!out.non_gorenstein_overorder || sum > best_sum ||
            (sum == best_sum && member < *out.non_gorenstein_overorder)) {
          out.non_gorenstein_overorder = member;
          best_sum = sum;
        }
        return true;
      },
      budget);
  return out;
}

}  // namespace monomial
