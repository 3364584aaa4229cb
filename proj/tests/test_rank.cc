#include <random>
#include <stdexcept>

#include "doctest.h"
#include "loopchain/graph_oracle.h"
#include "loopchain/json_io.h"
#include "loopchain/rank.h"
#include "loopchain/theorems.h"
#include "support.h"

using namespace loopchain;
using loopchain::testing::rank_exactly_by_window;
using loopchain::testing::small_chains;

namespace {

TorsionProfile all_two(int g) { return TorsionProfile(g, std::vector<int>(g - 1, 2)); }

RepresentingDivisor classes(const TorsionProfile& p, int d, std::vector<long> xi) {
  std::vector<PointPosition> pos;
  for (long x : xi) pos.push_back(PointPosition::integer_class(x));
  return make_representing_divisor(p, d, pos);
}

std::string json_string(const DiscreteChain& chain, const VertexDivisor& D) {
  return json{{"chain", chain}, {"divisor", chain_divisor_to_json(chain, D)}}.dump();
}

std::vector<int> sequence_of(const TorsionProfile& p, int r_max) {
  return gonality_sequence(p, r_max).sequence;
}

}  // namespace

TEST_CASE("rank examples") {
  const TorsionProfile g1(1, {});
  CHECK(rank_metric(g1, classes(g1, 2, {5})).rank == 1);
  CHECK(rank_metric(g1, make_representing_divisor(g1, 2, {PointPosition::generic()})).rank == 1);

  const TorsionProfile p = all_two(2);
  const RankResult one = rank_metric(p, classes(p, 2, {0, 1}));
  CHECK(one.rank == 1);
  REQUIRE(one.witness.has_value());
  CHECK(one.witness->row_major() == std::vector<int>{1, 2});
  CHECK(rank_metric(p, classes(p, 2, {0, 0})).rank == 0);
  CHECK(rank_metric(p, classes(p, -1, {0, 0})).rank == -1);
  CHECK_FALSE(rank_metric(p, classes(p, -1, {0, 0})).witness.has_value());
}

TEST_CASE("discrete rank examples") {
  for (const DiscreteChain& chain : small_chains(3, 3)) {
    const int g = chain.genus();
    const int n = chain.vertex_count();
    CHECK(rank_discrete(chain, canonical_divisor(chain)).rank == g - 1);
    CHECK(rank_discrete(chain, VertexDivisor::zero(n)).rank == 0);
    VertexDivisor single = VertexDivisor::zero(n);
    single[n - 1] = 1;
    CHECK(rank_discrete(chain, single).rank == 0);
    single[n - 1] = -1;
    CHECK(rank_discrete(chain, single).rank == -1);
  }
}

TEST_CASE("rank bounds") {
  for (int g = 1; g <= 5; ++g) {
    const TorsionProfile p = all_two(g);
    for (int d = -2; d <= 2 * g + 2; ++d) {
      for (long xi = 0; xi <= 1; ++xi) {
        const int r = rank_metric(p, classes(p, d, std::vector<long>(g, xi))).rank;
        if (d < 0) CHECK(r == -1);
        if (d >= 0) {
          CHECK(r >= -1);
          CHECK(r <= d);
          CHECK(r >= d - g);
        }
        if (d > 2 * g - 2) CHECK(r == d - g);
      }
    }
  }
}

TEST_CASE("gonality sequences") {
  CHECK(sequence_of(all_two(6), 7) == std::vector<int>{2, 4, 6, 8, 10, 12, 13});
  const auto p10 = martens_special_profile({10, {3, 5}}, MartensKind::kMetricGeneral);
  CHECK(sequence_of(p10, 12) == std::vector<int>{4, 6, 8, 10, 12, 14, 16, 17, 18, 20, 21, 22});
  const auto p5 = martens_special_profile({5, {3}}, MartensKind::kMetricGeneral);
  CHECK(sequence_of(p5, 6) == std::vector<int>{3, 5, 7, 8, 10, 11});
  CHECK_THROWS_AS(gonality_sequence(p5, 0), std::invalid_argument);

  const GonalityReport report = gonality_sequence(p10, 3);
  CHECK(report.gonality == 4);
  CHECK(report.clifford == 2);
}

TEST_CASE("gonality entries equal a search over divisors") {
  // g_r by definition: the least d where some divisor in the candidate
  // window has rank >= r. Exhaustive on small profiles.
  for (int g = 2; g <= 4; ++g) {
    for (int a : {0, 2, 3}) {
      for (int b : {0, 2, 4}) {
        std::vector<int> t(g - 1, 2);
        t[0] = a;
        t.back() = b;
        const TorsionProfile p(g, t);
        for (int r = 1; r <= g + 1; ++r) {
          int by_search = -1;
          for (int d = 0; by_search < 0; ++d) {
            for (int rr = r; rr <= d && by_search < 0; ++rr) {
              if (rank_exactly_by_window(p, d, rr)) by_search = d;
            }
          }
          CHECK(gonality_entry(p, r) == by_search);
        }
      }
    }
  }
}

TEST_CASE("sequence properties on random profiles") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 300; ++trial) {
    const int g = 2 + static_cast<int>(rng() % 7);
    std::vector<int> t(g - 1);
    for (int& m : t) m = std::uniform_int_distribution<int>(0, 9)(rng) < 3
                             ? 0
                             : std::uniform_int_distribution<int>(2, g + 2)(rng);
    const TorsionProfile p(g, t);
    const GonalityReport report = gonality_sequence(p, g + 2);
    for (int r = 1; r < g + 2; ++r) CHECK(report.at(r) < report.at(r + 1));
    for (int r = g; r <= g + 2; ++r) CHECK(report.at(r) == g + r);
    CHECK(sequence_within_bounds(p));
    CHECK(clifford_index(p) == report.gonality - 2);
  }
}

TEST_CASE("Clifford index") {
  CHECK(clifford_index(all_two(6)) == 0);
  CHECK(clifford_index(martens_special_profile({10, {3, 5}}, MartensKind::kMetricGeneral)) == 2);
  for (const MartensSpec& s : all_martens_specs(9, 2)) {
    CHECK(clifford_index(martens_special_profile(s, MartensKind::kMetricGeneral)) == s.type());
  }
}

TEST_CASE("exact rank agrees with the candidate-window brute force") {
  long cells = 0;
  for (int g = 1; g <= 5; ++g) {
    std::vector<TorsionProfile> profiles{all_two(g)};
    if (g >= 2) profiles.emplace_back(g, std::vector<int>(g - 1, 0));
    if (g >= 3) {
      std::vector<int> t(g - 1, 2);
      t[1] = 0;
      profiles.emplace_back(g, t);
      t[0] = 3;
      profiles.emplace_back(g, t);
    }
    if (g == 5) profiles.push_back(martens_special_profile({5, {3}}, MartensKind::kMetricGeneral));
    for (const TorsionProfile& p : profiles) {
      for (int d = 0; d <= 2 * g - 2; ++d) {
        for (int r = -1; r <= d; ++r) {
          const auto witness = exists_rank_exactly(p, d, r);
          INFO("profile g=" << g << " d=" << d << " r=" << r);
          CHECK(witness.has_value() == rank_exactly_by_window(p, d, r));
          if (witness) {
            CHECK(witness->degree == d);
            CHECK(rank_metric(p, *witness).rank == r);
          }
          ++cells;
        }
      }
    }
  }
  CHECK(cells > 200);
}

TEST_CASE("exact rank examples") {
  for (int g = 2; g <= 6; ++g) {
    const TorsionProfile p = all_two(g);
    CHECK(exists_rank_exactly(p, 2 * g - 2, g - 1).has_value());
  }
  const auto p10 = martens_special_profile({10, {3, 5}}, MartensKind::kMetricGeneral);
  for (int r = 1; r <= 10 - 2 - 1; ++r) {
    CHECK_FALSE(exists_rank_exactly(p10, 2 + 2 * r - 1, r).has_value());
    for (int d = 2 + 2 * r; d <= 10 + r - 2; ++d) CHECK(exists_rank_exactly(p10, d, r).has_value());
  }
}

TEST_CASE("divisorial regions") {
  // g = 6, c = 1: the bullet regions spelled out by hand.
  auto allowed = [](int d, int r) { return divisorial_region(6, 1, d, r); };
  CHECK(allowed(0, 0));
  CHECK(allowed(6, 0));
  CHECK_FALSE(allowed(7, 0));
  CHECK(allowed(7, 1));
  CHECK(allowed(10, 5));
  CHECK(allowed(3, 1));
  CHECK_FALSE(allowed(2, 1));
  CHECK(allowed(5, 2));
  CHECK_FALSE(allowed(4, 2));
  CHECK(allowed(10, 4));
  CHECK_FALSE(allowed(10, 3));
  CHECK_FALSE(allowed(8, 1));
}

TEST_CASE("divisorial completeness reports") {
  const auto p5 = martens_special_profile({5, {3}}, MartensKind::kMetricGeneral);
  const DivisorialReport r5 = divisorial_complete_report(p5, 2);
  CHECK(r5.all_pass());
  CHECK(r5.clifford == 1);
  CHECK(static_cast<int>(r5.cells.size()) == (2 * 5 - 2 + 1) * (2 * 5 - 2 + 2) / 2);

  const DivisorialReport hyper = divisorial_complete_report(all_two(4), 1);
  CHECK(hyper.all_pass());
  CHECK(hyper.clifford == 0);
  for (const auto& c : hyper.cells) {
    if (c.degree == 4 && (c.rank == 0 || c.rank == 1)) CHECK(c.realized);
  }
  // Thread count never changes the report.
  const auto p8 = martens_special_profile({8, {3, 6}}, MartensKind::kMetricGeneral);
  const DivisorialReport a = divisorial_complete_report(p8, 1);
  const DivisorialReport b = divisorial_complete_report(p8, 4);
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CHECK(a.cells[i].realized == b.cells[i].realized);
    CHECK(a.cells[i].allowed == b.cells[i].allowed);
  }
}

TEST_CASE("oracle spot check of exact-rank witnesses on discrete chains") {
  // Realize each witness as vertices of the minimal chain and let the
  // chip-firing oracle confirm its rank.
  for (const TorsionProfile& p :
       {all_two(3), TorsionProfile(3, {3, 2}), TorsionProfile(4, {2, 5, 2}),
        martens_special_profile({5, {3}}, MartensKind::kDiscrete)}) {
    const DiscreteChain chain = realize_discrete_chain(p);
    const FiniteGraph graph = chain.to_graph();
    BakerNorineRank oracle(graph);
    for (int d = 0; d <= 2 * p.genus() - 2; ++d) {
      for (int r = 0; r <= d; ++r) {
        const auto w = exists_rank_exactly(p, d, r);
        if (!w) continue;
        // Generic points have no vertex; skip witnesses that need one.
        bool integral = true;
        for (const auto& pos : w->positions) integral &= !pos.is_generic();
        if (!integral) continue;
        DiscreteNormalForm form{d, {}};
        for (int i = 1; i <= p.genus(); ++i) {
          form.vertices.push_back(vertex_of_class(chain, i, w->positions[i - 1].value()));
        }
        CHECK(oracle.rank(divisor_of_normal_form(chain, form)) == r);
      }
    }
  }
}

TEST_CASE("oracle equivalence on random divisors at genus 4 and 5") {
  std::mt19937 rng(424242);
  int checked = 0;
  for (int g : {4, 5}) {
    for (int trial = 0; trial < 200; ++trial) {
      DiscreteChain chain;
      for (int i = 0; i < g; ++i) {
        const int k = std::uniform_int_distribution<int>(2, 5)(rng);
        chain.cycles.push_back({k, std::uniform_int_distribution<int>(2, k)(rng)});
      }
      const FiniteGraph graph = chain.to_graph();
      VertexDivisor D = VertexDivisor::zero(chain.vertex_count());
      const int degree = std::uniform_int_distribution<int>(0, 2 * g - 2)(rng);
      for (int c = 0; c < degree; ++c) {
        D[std::uniform_int_distribution<int>(0, chain.vertex_count() - 1)(rng)] += 1;
      }
      // One chip moved off and back keeps the degree but exercises
      // negative coefficients.
      D[0] -= 1;
      D[chain.vertex_count() - 1] += 1;
      INFO(json_string(chain, D));
      CHECK(rank_discrete(chain, D).rank == rank_baker_norine(graph, D));
      ++checked;
    }
  }
  CHECK(checked == 400);
}
