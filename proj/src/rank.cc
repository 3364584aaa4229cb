#include "loopchain/rank.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "loopchain/parallel.h"

namespace loopchain {

namespace {

RepresentingDivisor all_generic(int genus, int degree) {
  return RepresentingDivisor{
      degree, std::vector<PointPosition>(genus, PointPosition::generic())};
}

// The least special divisor compatible with t: the classes t demands on the
// cycles it uses, generic points elsewhere. Any divisor compatible with t has
// at least its rank.
RepresentingDivisor divisor_demanded_by(const DisplacementTableau& t,
                                        const TorsionProfile& profile,
                                        int degree) {
  std::vector<PointPosition> positions(profile.genus(),
                                       PointPosition::generic());
  for (int x = 1; x <= t.shape().cols; ++x) {
    for (int y = 1; y <= t.shape().rows; ++y) {
      positions[t.at(x, y) - 1] = PointPosition::integer_class(x - y);
    }
  }
  return make_representing_divisor(profile, degree, std::move(positions));
}

}  // namespace

RankResult rank_metric(const TorsionProfile& profile,
                       const RepresentingDivisor& divisor) {
  if (divisor.genus() != profile.genus()) {
    throw std::invalid_argument("divisor has " +
                                std::to_string(divisor.genus()) +
                                " positions, profile has genus " +
                                std::to_string(profile.genus()));
  }
  RankResult result;
  if (divisor.degree < 0) return result;
  for (int r = 0;; ++r) {
    const GridShape shape = rank_shape(profile.genus(), divisor.degree, r);
    if (shape.empty()) {
      result = {r, DisplacementTableau(GridShape{0, shape.rows})};
      continue;
    }
    auto witness = exists_compatible_tableau(profile, divisor, shape);
    if (!witness) break;
    result = {r, std::move(witness)};
  }
  return result;
}

RankResult rank_discrete(const DiscreteChain& chain,
                         const VertexDivisor& divisor) {
  return rank_metric(torsion_of_discrete(chain),
                     representing_divisor_discrete(chain, divisor));
}

int gonality_entry(const TorsionProfile& profile, int r) {
  if (r < 1) throw std::invalid_argument("gonality entries start at r = 1");
  const int g = profile.genus();
  for (int d = std::min(2 * r, g + r);; ++d) {
    if (tableau_exists(profile, rank_shape(g, d, r))) return d;
  }
}

GonalityReport gonality_sequence(const TorsionProfile& profile, int r_max) {
  if (r_max < 1) {
    throw std::invalid_argument("r_max must be >= 1, got " +
                                std::to_string(r_max));
  }
  GonalityReport report;
  for (int r = 1; r <= r_max; ++r) {
    report.sequence.push_back(gonality_entry(profile, r));
  }
  report.gonality = report.sequence.front();
  report.clifford = report.gonality - 2;
  return report;
}

std::optional<RepresentingDivisor> exists_rank_exactly(
    const TorsionProfile& profile, int d, int r) {
  const int g = profile.genus();
  if (r < -1) return std::nullopt;
  if (r == -1) {
    RepresentingDivisor generic = all_generic(g, d);
    if (rank_metric(profile, generic).rank == -1) return generic;
    return std::nullopt;
  }
  if (d < 0) return std::nullopt;

  const GridShape shape = rank_shape(g, d, r);
  const GridShape next = rank_shape(g, d, r + 1);
  if (shape.empty()) {
    if (next.empty()) return std::nullopt;
    return all_generic(g, d);
  }
  std::optional<RepresentingDivisor> found;
  for_each_tableau(profile, shape, [&](const DisplacementTableau& t) {
    RepresentingDivisor candidate = divisor_demanded_by(t, profile, d);
    if (!exists_compatible_tableau(profile, candidate, next)) {
      found = std::move(candidate);
      return false;
    }
    return true;
  });
  return found;
}

int clifford_index(const TorsionProfile& profile) {
  const int g = profile.genus();
  const int shortcut = gonality_entry(profile, 1) - 2;
  int best = std::numeric_limits<int>::max();
  for (int r = 1; r <= g - 2; ++r) {
    for (int d = r; d <= g + r - 2 && d - 2 * r < best; ++d) {
      if (exists_rank_exactly(profile, d, r)) {
        best = d - 2 * r;
        break;
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return shortcut;
  if (best != shortcut) {
    throw std::logic_error("Clifford index " + std::to_string(best) +
                           " disagrees with gonality - 2 = " +
                           std::to_string(shortcut));
  }
  return best;
}

bool sequence_within_bounds(const TorsionProfile& profile) {
  const int g = profile.genus();
  const GonalityReport report = gonality_sequence(profile, g + 1);
  const int g1 = report.gonality;
  for (int r = 1; r <= g + 1; ++r) {
    const int gr = report.at(r);
    if (r >= g) {
      if (gr != g + r) return false;
    } else if (r >= g - g1 + 1) {
      if (gr != g - 1 + r) return false;
    } else if (gr < g1 + 2 * r - 2 || gr > g - 1 + r) {
      return false;
    }
  }
  return true;
}

bool DivisorialReport::all_pass() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const DivisorialCell& c) { return c.pass(); });
}

bool divisorial_region(int genus, int clifford, int d, int r) {
  const int g = genus;
  return (d >= g && r == d - g) || (0 <= d && d <= g && r == 0) ||
         (g <= d && d <= 2 * g - 2 && r == d - g + 1) ||
         (r >= 1 && clifford + 2 * r <= d && d <= g + r - 2);
}

DivisorialReport divisorial_complete_report(const TorsionProfile& profile,
                                            int threads) {
  DivisorialReport report;
  report.genus = profile.genus();
  report.clifford = clifford_index(profile);
  for (int d = 0; d <= 2 * report.genus - 2; ++d) {
    for (int r = 0; r <= d; ++r) {
      report.cells.push_back(
          {d, r, divisorial_region(report.genus, report.clifford, d, r)});
    }
  }
  parallel_for(static_cast<int>(report.cells.size()), threads, [&](int i) {
    DivisorialCell& cell = report.cells[i];
    cell.realized =
        exists_rank_exactly(profile, cell.degree, cell.rank).has_value();
  });
  return report;
}

}  // namespace loopchain
