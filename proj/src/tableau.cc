#include "loopchain/tableau.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace loopchain {

DisplacementTableau::DisplacementTableau(GridShape shape)
    : shape_(shape), values_(shape.cells(), 0) {}

DisplacementTableau::DisplacementTableau(GridShape shape,
                                         std::vector<int> row_major)
    : shape_(shape), values_(std::move(row_major)) {
  if (static_cast<int>(values_.size()) != shape_.cells()) {
    throw std::invalid_argument(
        "tableau of shape [" + std::to_string(shape_.cols) + " x " +
        std::to_string(shape_.rows) + "] needs " +
        std::to_string(shape_.cells()) + " values, got " +
        std::to_string(values_.size()));
  }
}

std::vector<int> DisplacementTableau::row(int y) const {
  return {values_.begin() + index(1, y),
          values_.begin() + index(1, y) + shape_.cols};
}

std::vector<int> DisplacementTableau::column_major() const {
  std::vector<int> out;
  out.reserve(values_.size());
  for (int x = 1; x <= shape_.cols; ++x) {
    for (int y = 1; y <= shape_.rows; ++y) out.push_back(at(x, y));
  }
  return out;
}

int DisplacementTableau::occurrences(int value) const {
  return static_cast<int>(std::count(values_.begin(), values_.end(), value));
}

bool is_valid_tableau(const DisplacementTableau& t,
                      const TorsionProfile& profile) {
  const GridShape& s = t.shape();
  const int g = profile.genus();
  for (int x = 1; x <= s.cols; ++x) {
    for (int y = 1; y <= s.rows; ++y) {
      const int v = t.at(x, y);
      if (v < 1 || v > g) return false;
      if (x > 1 && t.at(x - 1, y) >= v) return false;
      if (y > 1 && t.at(x, y - 1) >= v) return false;
    }
  }
  for (int a = 0; a < s.cells(); ++a) {
    for (int b = a + 1; b < s.cells(); ++b) {
      const int xa = a % s.cols + 1, ya = a / s.cols + 1;
      const int xb = b % s.cols + 1, yb = b / s.cols + 1;
      const int v = t.at(xa, ya);
      if (v != t.at(xb, yb)) continue;
      if (!congruent(xa - ya, xb - yb, profile.torsion(v))) return false;
    }
  }
  return true;
}

bool is_compatible(const DisplacementTableau& t, const TorsionProfile& profile,
                   const RepresentingDivisor& divisor) {
  for (int x = 1; x <= t.shape().cols; ++x) {
    for (int y = 1; y <= t.shape().rows; ++y) {
      const int v = t.at(x, y);
      if (!divisor.positions[v - 1].matches(x - y, profile.torsion(v))) {
        return false;
      }
    }
  }
  return true;
}

DisplacementTableau hyperelliptic_tableau(int genus) {
  if (genus < 2) {
    throw std::invalid_argument("hyperelliptic tableau needs genus >= 2");
  }
  DisplacementTableau t(GridShape{genus - 1, 2});
  for (int x = 1; x <= genus - 1; ++x) {
    for (int y = 1; y <= 2; ++y) t.set(x, y, x + y - 1);
  }
  return t;
}

namespace {

// Column-major backtracking over fillings. Each value remembers the residue
// x - y of its first placement so a conflicting repeat is rejected at once.
class TableauSearch {
 public:
  TableauSearch(const TorsionProfile& profile, const GridShape& shape,
                const std::vector<PointPosition>* positions)
      : profile_(profile),
        shape_(shape),
        positions_(positions),
        tableau_(shape),
        uses_(profile.genus() + 1, 0),
        residue_(profile.genus() + 1, 0) {
    for (int v = 1; v <= profile.genus(); ++v) {
      torsion_.push_back(profile.torsion(v));
    }
  }

  // Returns false iff the visitor stopped the stream.
  bool run(const TableauVisitor& visit) {
    if (shape_.empty()) return visit(DisplacementTableau(GridShape{0, shape_.rows}));
    return fill(0, visit);
  }

 private:
  bool fill(int cell, const TableauVisitor& visit) {
    if (cell == shape_.cells()) return visit(tableau_);
    const int x = cell / shape_.rows + 1;
    const int y = cell % shape_.rows + 1;
    const int g = profile_.genus();
    int lo = x + y - 1;
    if (x > 1) lo = std::max(lo, tableau_.at(x - 1, y) + 1);
    if (y > 1) lo = std::max(lo, tableau_.at(x, y - 1) + 1);
    const int hi = g - (shape_.cols - x) - (shape_.rows - y);
    const long diagonal = x - y;
    for (int v = lo; v <= hi; ++v) {
      const int m = torsion_[v - 1];
      if (positions_ && !(*positions_)[v - 1].matches(diagonal, m)) continue;
      if (uses_[v] > 0 && !congruent(diagonal, residue_[v], m)) continue;
      tableau_.set(x, y, v);
      if (uses_[v]++ == 0) residue_[v] = diagonal;
      const bool go_on = fill(cell + 1, visit);
      --uses_[v];
      if (!go_on) return false;
    }
    tableau_.set(x, y, 0);
    return true;
  }

  const TorsionProfile& profile_;
  GridShape shape_;
  const std::vector<PointPosition>* positions_;
  DisplacementTableau tableau_;
  std::vector<int> torsion_;
  std::vector<int> uses_;
  std::vector<long> residue_;
};

void check_shape(const GridShape& shape) {
  if (shape.rows < 1) {
    throw std::invalid_argument("tableau shape needs rows >= 1");
  }
}

}  // namespace

void for_each_tableau(const TorsionProfile& profile, const GridShape& shape,
                      const TableauVisitor& visit) {
  check_shape(shape);
  TableauSearch(profile, shape, nullptr).run(visit);
}

std::vector<DisplacementTableau> enumerate_tableaux(
    const TorsionProfile& profile, const GridShape& shape) {
  std::vector<DisplacementTableau> out;
  for_each_tableau(profile, shape, [&](const DisplacementTableau& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

long count_tableaux(const TorsionProfile& profile, const GridShape& shape) {
  long n = 0;
  for_each_tableau(profile, shape, [&](const DisplacementTableau&) {
    ++n;
    return true;
  });
  return n;
}

bool tableau_exists(const TorsionProfile& profile, const GridShape& shape) {
  bool found = false;
  for_each_tableau(profile, shape, [&](const DisplacementTableau&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<DisplacementTableau> exists_compatible_tableau(
    const TorsionProfile& profile, const RepresentingDivisor& divisor,
    const GridShape& shape) {
  check_shape(shape);
  if (divisor.genus() != profile.genus()) {
    throw std::invalid_argument("divisor genus does not match profile genus");
  }
  std::optional<DisplacementTableau> witness;
  TableauSearch(profile, shape, &divisor.positions)
      .run([&](const DisplacementTableau& t) {
        witness = t;
        return false;
      });
  return witness;
}

namespace {

void for_each_subset(int first, int last, int size, std::vector<int>& chosen,
                     const std::function<void()>& visit) {
  if (static_cast<int>(chosen.size()) == size) {
    visit();
    return;
  }
  const int need = size - static_cast<int>(chosen.size());
  for (int v = first; v + need - 1 <= last; ++v) {
    chosen.push_back(v);
    for_each_subset(v + 1, last, size, chosen, visit);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<DisplacementTableau> two_row_by_deletion(
    const TorsionProfile& profile, int l) {
  const int g = profile.genus();
  if (l < 0 || l > g - 2) {
    throw std::invalid_argument("deletion count l = " + std::to_string(l) +
                                " outside 0..g-2 = " + std::to_string(g - 2));
  }
  const int cols = g - l - 1;
  const GridShape shape{cols, 2};
  std::vector<DisplacementTableau> out;
  std::vector<int> top, bottom;
  // Row 1 keeps a subset of {1..g-1}, row 2 a subset of {2..g}.
  for_each_subset(1, g - 1, cols, top, [&] {
    for_each_subset(2, g, cols, bottom, [&] {
      for (int x = 0; x < cols; ++x) {
        if (top[x] >= bottom[x]) return;
      }
      std::vector<int> values = top;
      values.insert(values.end(), bottom.begin(), bottom.end());
      DisplacementTableau t(shape, std::move(values));
      if (is_valid_tableau(t, profile)) out.push_back(std::move(t));
    });
  });
  std::sort(out.begin(), out.end(),
            [](const DisplacementTableau& a, const DisplacementTableau& b) {
              return a.column_major() < b.column_major();
            });
  return out;
}

}  // namespace loopchain
