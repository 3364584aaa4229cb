#ifndef LOOPCHAIN_RANK_H_
#define LOOPCHAIN_RANK_H_

#include <optional>
#include <vector>

#include "loopchain/chain_model.h"
#include "loopchain/graph_oracle.h"
#include "loopchain/tableau.h"

namespace loopchain {

// The rectangle [(g - d + r) x (r + 1)] whose compatible tableaux certify
// rank >= r for a degree d divisor.
inline GridShape rank_shape(int genus, int degree, int r) {
  return GridShape{genus - degree + r, r + 1};
}

struct RankResult {
  int rank = -1;
  // Tableau certifying `rank` (empty when its shape is empty); absent when
  // rank is -1.
  std::optional<DisplacementTableau> witness;
};

RankResult rank_metric(const TorsionProfile& profile,
                       const RepresentingDivisor& divisor);

// Normalizes through representing_divisor_discrete and ranks over the
// chain's torsion profile.
RankResult rank_discrete(const DiscreteChain& chain,
                         const VertexDivisor& divisor);

// Smallest degree carrying a divisor of rank >= r (r >= 1).
int gonality_entry(const TorsionProfile& profile, int r);

struct GonalityReport {
  std::vector<int> sequence;  // sequence[r - 1] = g_r
  int gonality = 0;
  int clifford = 0;  // gonality - 2, which holds on every chain of cycles

  int at(int r) const { return sequence.at(r - 1); }
};

// Throws std::invalid_argument unless r_max >= 1.
GonalityReport gonality_sequence(const TorsionProfile& profile, int r_max);

// A divisor of degree d and rank exactly r, if one exists.
std::optional<RepresentingDivisor> exists_rank_exactly(
    const TorsionProfile& profile, int d, int r);

// Minimum of d - 2r over divisors of degree d and exact rank r with r >= 1
// and g - d + r - 1 >= 1, cross-checked against gonality - 2. When that set
// is empty (g <= 3 apart from hyperelliptic genus 3) gonality - 2 is
// returned. Throws std::logic_error if the two computations disagree.
int clifford_index(const TorsionProfile& profile);

// The three clauses relating g_r to g_1: g + r for r >= g, g - 1 + r for
// g - g_1 + 1 <= r <= g - 1, and g_1 + 2r - 2 <= g_r <= g - 1 + r below.
bool sequence_within_bounds(const TorsionProfile& profile);

struct DivisorialCell {
  int degree = 0;
  int rank = 0;
  bool allowed = false;   // permitted by Riemann-Roch and the Clifford index
  bool realized = false;  // some divisor has exactly this degree and rank
  bool pass() const { return allowed == realized; }
};

struct DivisorialReport {
  int genus = 0;
  int clifford = 0;
  std::vector<DivisorialCell> cells;  // 0 <= d <= 2g - 2, 0 <= r <= d
  bool all_pass() const;
};

// Whether (d, r) falls in one of the regions a divisorial complete graph of
// the given genus and Clifford index must realize.
bool divisorial_region(int genus, int clifford, int d, int r);

DivisorialReport divisorial_complete_report(const TorsionProfile& profile,
                                            int threads = 1);

}  // namespace loopchain

#endif  // LOOPCHAIN_RANK_H_
