#ifndef LOOPCHAIN_TABLEAU_H_
#define LOOPCHAIN_TABLEAU_H_

#include <functional>
#include <optional>
#include <vector>

#include "loopchain/chain_model.h"

namespace loopchain {

// The rectangle [cols x rows]: cells (x, y) with 1 <= x <= cols and
// 1 <= y <= rows. cols <= 0 is the empty shape.
struct GridShape {
  int cols = 0;
  int rows = 1;

  bool empty() const { return cols <= 0; }
  int cells() const { return empty() ? 0 : cols * rows; }
  bool operator==(const GridShape&) const = default;
};

// A filling t of a rectangle by values in {1..g}. Column x, row y.
class DisplacementTableau {
 public:
  DisplacementTableau() = default;
  explicit DisplacementTableau(GridShape shape);
  // `row_major` lists row 1 left to right, then row 2, ...
  DisplacementTableau(GridShape shape, std::vector<int> row_major);

  const GridShape& shape() const { return shape_; }
  int at(int x, int y) const { return values_[index(x, y)]; }
  void set(int x, int y, int value) { values_[index(x, y)] = value; }
  const std::vector<int>& row_major() const { return values_; }
  std::vector<int> row(int y) const;
  // Values in cell-filling order (column by column); the ordering key of
  // enumeration streams.
  std::vector<int> column_major() const;
  // Number of cells holding `value`.
  int occurrences(int value) const;

  bool operator==(const DisplacementTableau&) const = default;

 private:
  int index(int x, int y) const { return (y - 1) * shape_.cols + (x - 1); }

  GridShape shape_;
  std::vector<int> values_;
};

// Strictly increasing along rows and columns, and t(x,y) = t(x',y') forces
// x - y = x' - y' mod m_{t(x,y)}. Out-of-range values make it invalid.
bool is_valid_tableau(const DisplacementTableau& t,
                      const TorsionProfile& profile);

// Every cell (x, y) has position <xi> on cycle t(x, y) with
// xi = x - y mod m_{t(x,y)}. Generic positions never match.
bool is_compatible(const DisplacementTableau& t, const TorsionProfile& profile,
                   const RepresentingDivisor& divisor);

// t(i, j) = i + j - 1 on [(g-1) x 2].
DisplacementTableau hyperelliptic_tableau(int genus);

// Return false to stop a stream early.
using TableauVisitor = std::function<bool(const DisplacementTableau&)>;

// Streams every valid tableau on `shape`, each once, in lexicographic order
// of column_major(). The empty shape yields one empty tableau.
void for_each_tableau(const TorsionProfile& profile, const GridShape& shape,
                      const TableauVisitor& visit);

std::vector<DisplacementTableau> enumerate_tableaux(
    const TorsionProfile& profile, const GridShape& shape);

long count_tableaux(const TorsionProfile& profile, const GridShape& shape);

bool tableau_exists(const TorsionProfile& profile, const GridShape& shape);

// First valid tableau on `shape` compatible with `divisor`, in stream order.
std::optional<DisplacementTableau> exists_compatible_tableau(
    const TorsionProfile& profile, const RepresentingDivisor& divisor,
    const GridShape& shape);

// All valid tableaux on [(g-l-1) x 2] obtained by deleting l values from each
// row of the hyperelliptic tableau, sorted like for_each_tableau.
// Throws std::invalid_argument unless 0 <= l <= g - 2.
std::vector<DisplacementTableau> two_row_by_deletion(
    const TorsionProfile& profile, int l);

}  // namespace loopchain

#endif  // LOOPCHAIN_TABLEAU_H_
