#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "loopchain/chain_model.h"
#include "loopchain/graph_oracle.h"
#include "loopchain/json_io.h"
#include "loopchain/rank.h"
#include "loopchain/tableau.h"
#include "loopchain/theorems.h"

namespace py = pybind11;
using namespace loopchain;

namespace {

// Reports cross the boundary as JSON text; the Python side parses them.
std::string dump(const json& j) { return j.dump(); }

std::vector<std::vector<int>> rows_of(const DisplacementTableau& t) {
  std::vector<std::vector<int>> rows;
  if (t.shape().empty()) return rows;
  for (int y = 1; y <= t.shape().rows; ++y) rows.push_back(t.row(y));
  return rows;
}

RepresentingDivisor divisor_from(const TorsionProfile& p, int degree,
                                 const std::vector<std::optional<long>>& classes) {
  std::vector<PointPosition> pos;
  for (const auto& c : classes) {
    pos.push_back(c ? PointPosition::integer_class(*c) : PointPosition::generic());
  }
  return make_representing_divisor(p, degree, std::move(pos));
}

DiscreteChain chain_from(const std::vector<std::pair<int, int>>& cycles) {
  DiscreteChain chain;
  for (auto [size, attach] : cycles) chain.cycles.push_back({size, attach});
  chain.validate();
  return chain;
}

MartensSpec spec_from(int genus, std::vector<int> positions) {
  MartensSpec spec{genus, std::move(positions)};
  spec.validate();
  return spec;
}

}  // namespace

PYBIND11_MODULE(_loopchain, m) {
  m.doc() = "Divisor ranks and gonality sequences on chains of cycles";

  py::class_<TorsionProfile>(m, "TorsionProfile")
      .def(py::init<int, std::vector<int>>(), py::arg("genus"), py::arg("torsions"))
      .def_property_readonly("genus", &TorsionProfile::genus)
      .def_property_readonly("torsions", &TorsionProfile::torsions)
      .def("torsion", &TorsionProfile::torsion, py::arg("cycle"))
      .def(py::self == py::self)
      .def("__repr__", [](const TorsionProfile& p) {
        return "TorsionProfile(" + json(p).dump() + ")";
      });

  m.def(
      "martens_profile",
      [](int genus, std::vector<int> positions, bool discrete) {
        return martens_special_profile(
            spec_from(genus, std::move(positions)),
            discrete ? MartensKind::kDiscrete : MartensKind::kMetricGeneral);
      },
      py::arg("genus"), py::arg("positions"), py::arg("discrete") = false);

  m.def(
      "rank",
      [](const TorsionProfile& p, int degree, const std::vector<std::optional<long>>& classes) {
        const RankResult r = rank_metric(p, divisor_from(p, degree, classes));
        std::optional<std::vector<std::vector<int>>> witness;
        if (r.witness) witness = rows_of(*r.witness);
        return py::make_tuple(r.rank, witness);
      },
      py::arg("profile"), py::arg("degree"), py::arg("classes"),
      "Rank and witness rows; a class of None is a generic point.");

  m.def(
      "gonality_sequence",
      [](const TorsionProfile& p, int r_max) { return gonality_sequence(p, r_max).sequence; },
      py::arg("profile"), py::arg("r_max"));
  m.def("gonality", [](const TorsionProfile& p) { return gonality_entry(p, 1); },
        py::arg("profile"));
  m.def("clifford_index", &clifford_index, py::arg("profile"));
  m.def(
      "exists_rank_exactly",
      [](const TorsionProfile& p, int d, int r) {
        return exists_rank_exactly(p, d, r).has_value();
      },
      py::arg("profile"), py::arg("degree"), py::arg("rank"));
  m.def(
      "divisorial_complete_report",
      [](const TorsionProfile& p, int threads) {
        return dump(divisorial_complete_report(p, threads));
      },
      py::arg("profile"), py::arg("threads") = 1);

  m.def("count_tableaux",
        [](const TorsionProfile& p, int cols, int rows) {
          return count_tableaux(p, {cols, rows});
        },
        py::arg("profile"), py::arg("cols"), py::arg("rows"));
  m.def(
      "enumerate_tableaux",
      [](const TorsionProfile& p, int cols, int rows) {
        std::vector<std::vector<std::vector<int>>> out;
        for_each_tableau(p, {cols, rows}, [&](const DisplacementTableau& t) {
          out.push_back(rows_of(t));
          return true;
        });
        return out;
      },
      py::arg("profile"), py::arg("cols"), py::arg("rows"));

  m.def("realize_chain",
        [](const TorsionProfile& p) {
          std::vector<std::pair<int, int>> cycles;
          for (const auto& c : realize_discrete_chain(p).cycles) {
            cycles.emplace_back(c.size, c.attach);
          }
          return cycles;
        },
        py::arg("profile"), "Cycles as (size, attach) pairs.");
  m.def(
      "chain_profile",
      [](const std::vector<std::pair<int, int>>& cycles) {
        return torsion_of_discrete(chain_from(cycles));
      },
      py::arg("cycles"));
  m.def(
      "chain_rank",
      [](const std::vector<std::pair<int, int>>& cycles, std::vector<int> coefficients) {
        return rank_discrete(chain_from(cycles), VertexDivisor(std::move(coefficients))).rank;
      },
      py::arg("cycles"), py::arg("coefficients"),
      "Tableau rank of a vertex divisor on a discrete chain.");
  m.def(
      "chain_graph",
      [](const std::vector<std::pair<int, int>>& cycles) {
        const FiniteGraph g = chain_from(cycles).to_graph();
        return py::make_tuple(g.vertex_count(), g.edges());
      },
      py::arg("cycles"));

  m.def(
      "oracle_rank",
      [](int vertices, std::vector<std::pair<int, int>> edges, std::vector<int> coefficients,
         int base) {
        return rank_baker_norine(FiniteGraph(vertices, std::move(edges)),
                                 VertexDivisor(std::move(coefficients)), base);
      },
      py::arg("vertices"), py::arg("edges"), py::arg("coefficients"), py::arg("base") = 0);
  m.def(
      "dhar_reduce",
      [](int vertices, std::vector<std::pair<int, int>> edges, std::vector<int> coefficients,
         int base) {
        return dhar_reduce(FiniteGraph(vertices, std::move(edges)),
                           VertexDivisor(std::move(coefficients)), base)
            .coeffs;
      },
      py::arg("vertices"), py::arg("edges"), py::arg("coefficients"), py::arg("base") = 0);
  m.def(
      "wrd",
      [](int vertices, std::vector<std::pair<int, int>> edges, int r, int d) {
        return wrd_discrete(FiniteGraph(vertices, std::move(edges)), r, d);
      },
      py::arg("vertices"), py::arg("edges"), py::arg("r"), py::arg("d"));

  m.def(
      "verify_json",
      [](const std::string& claim, int genus, std::vector<int> positions, int r_max,
         int threads) {
        const MartensSpec spec = spec_from(genus, std::move(positions));
        const int rmax = r_max > 0 ? r_max : genus + 2;
        if (claim == "prop1") return dump(verify_prop1(spec));
        if (claim == "lemmas") return dump(verify_two_row_lemmas(spec));
        if (claim == "thm-b") return dump(verify_theorem_b(spec, rmax));
        if (claim == "thm-c") return dump(verify_theorem_c(spec, rmax));
        if (claim == "divcomplete") return dump(verify_divisorial_complete(spec, threads));
        if (claim == "thm-a-probe") return dump(probe_theorem_a_discrete(spec));
        throw std::invalid_argument("unknown claim " + claim);
      },
      py::arg("claim"), py::arg("genus"), py::arg("positions"), py::arg("r_max") = 0,
      py::arg("threads") = 1);
}
