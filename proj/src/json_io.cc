#include "loopchain/json_io.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace loopchain {

namespace {

int get_int(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) {
    throw std::invalid_argument(std::string("field \"") + key +
                                "\" must be an integer");
  }
  return v.get<int>();
}

}  // namespace

void to_json(json& j, const TorsionProfile& profile) {
  j = json{{"genus", profile.genus()}, {"torsions", profile.torsions()}};
}

void from_json(const json& j, TorsionProfile& profile) {
  profile = TorsionProfile(get_int(j, "genus"),
                           j.at("torsions").get<std::vector<int>>());
}

void to_json(json& j, const MartensSpec& spec) {
  j = json{{"genus", spec.genus}, {"positions", spec.positions}};
}

void from_json(const json& j, MartensSpec& spec) {
  spec.genus = get_int(j, "genus");
  spec.positions = j.at("positions").get<std::vector<int>>();
}

void to_json(json& j, const DiscreteChain& chain) {
  json cycles = json::array();
  for (const auto& c : chain.cycles) {
    cycles.push_back({{"size", c.size}, {"attach", c.attach}});
  }
  j = json{{"cycles", cycles}};
}

void from_json(const json& j, DiscreteChain& chain) {
  chain.cycles.clear();
  for (const json& c : j.at("cycles")) {
    chain.cycles.push_back({get_int(c, "size"), get_int(c, "attach")});
  }
  chain.validate();
}

void to_json(json& j, const PointPosition& position) {
  if (position.is_generic()) {
    j = "generic";
  } else {
    j = json{{"class", position.value()}};
  }
}

void from_json(const json& j, PointPosition& position) {
  if (j.is_string()) {
    if (j.get<std::string>() != "generic") {
      throw std::invalid_argument("position must be \"generic\" or "
                                  "{\"class\": xi}, got \"" +
                                  j.get<std::string>() + "\"");
    }
    position = PointPosition::generic();
    return;
  }
  const json& xi = j.at("class");
  if (!xi.is_number_integer()) {
    throw std::invalid_argument("position class must be an integer");
  }
  position = PointPosition::integer_class(xi.get<long>());
}

void to_json(json& j, const RepresentingDivisor& divisor) {
  j = json{{"degree", divisor.degree},
           {"positions", divisor.positions},
           {"tail", divisor.tail()}};
}

void from_json(const json& j, RepresentingDivisor& divisor) {
  divisor.degree = get_int(j, "degree");
  divisor.positions = j.at("positions").get<std::vector<PointPosition>>();
  if (j.contains("tail") && get_int(j, "tail") != divisor.tail()) {
    throw std::invalid_argument(
        "tail must equal degree - genus = " + std::to_string(divisor.tail()) +
        ", got " + std::to_string(get_int(j, "tail")));
  }
}

void to_json(json& j, const DisplacementTableau& tableau) {
  json rows = json::array();
  for (int y = 1; y <= tableau.shape().rows && !tableau.shape().empty(); ++y) {
    rows.push_back(tableau.row(y));
  }
  j = json{{"cols", std::max(0, tableau.shape().cols)},
           {"rows", tableau.shape().rows},
           {"values", rows}};
}

void from_json(const json& j, DisplacementTableau& tableau) {
  const GridShape shape{get_int(j, "cols"), get_int(j, "rows")};
  std::vector<int> values;
  for (const json& row : j.at("values")) {
    const auto r = row.get<std::vector<int>>();
    if (static_cast<int>(r.size()) != shape.cols) {
      throw std::invalid_argument("tableau row length " +
                                  std::to_string(r.size()) +
                                  " does not match cols " +
                                  std::to_string(shape.cols));
    }
    values.insert(values.end(), r.begin(), r.end());
  }
  tableau = DisplacementTableau(shape, std::move(values));
}

json graph_to_json(const FiniteGraph& graph) {
  json edges = json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
  return json{{"vertices", graph.vertex_count()}, {"edges", edges}};
}

FiniteGraph graph_from_json(const json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const json& e : j.at("edges")) {
    const auto pair = e.get<std::vector<int>>();
    if (pair.size() != 2) {
      throw std::invalid_argument("each edge must be a pair [u, v]");
    }
    edges.emplace_back(pair[0], pair[1]);
  }
  return FiniteGraph(get_int(j, "vertices"), std::move(edges));
}

void to_json(json& j, const VertexDivisor& divisor) {
  j = json{{"coefficients", divisor.coeffs}};
}

void from_json(const json& j, VertexDivisor& divisor) {
  divisor.coeffs = j.at("coefficients").get<std::vector<int>>();
}

json chain_divisor_to_json(const DiscreteChain& chain,
                           const VertexDivisor& divisor) {
  json entries = json::array();
  for (int i = 1; i <= chain.genus(); ++i) {
    for (int v = 1; v <= chain.cycles[i - 1].size; ++v) {
      const int mult = divisor[chain.vertex_id(i, v)];
      if (mult != 0) {
        entries.push_back({{"cycle", i}, {"vertex", v}, {"mult", mult}});
      }
    }
  }
  return json{{"entries", entries}};
}

VertexDivisor chain_divisor_from_json(const DiscreteChain& chain,
                                      const json& j) {
  VertexDivisor divisor = VertexDivisor::zero(chain.vertex_count());
  for (const json& e : j.at("entries")) {
    const int cycle = get_int(e, "cycle");
    const int vertex = get_int(e, "vertex");
    if (cycle < 1 || cycle > chain.genus()) {
      throw std::invalid_argument("entry cycle " + std::to_string(cycle) +
                                  " outside 1.." +
                                  std::to_string(chain.genus()));
    }
    if (vertex < 1 || vertex > chain.cycles[cycle - 1].size) {
      throw std::invalid_argument(
          "entry vertex " + std::to_string(vertex) + " outside 1.." +
          std::to_string(chain.cycles[cycle - 1].size) + " on cycle " +
          std::to_string(cycle));
    }
    divisor[chain.vertex_id(cycle, vertex)] += get_int(e, "mult");
  }
  return divisor;
}

void to_json(json& j, const RankResult& result) {
  j = json{{"rank", result.rank}};
  j["witness"] = result.witness ? json(*result.witness) : json(nullptr);
}

void to_json(json& j, const GonalityReport& report) {
  json sequence = json::array();
  for (int r = 1; r <= static_cast<int>(report.sequence.size()); ++r) {
    sequence.push_back({{"r", r}, {"g_r", report.at(r)}});
  }
  j = json{{"sequence", sequence},
           {"gonality", report.gonality},
           {"clifford", report.clifford}};
}

void to_json(json& j, const DivisorialReport& report) {
  json cells = json::array();
  for (const DivisorialCell& c : report.cells) {
    cells.push_back({{"degree", c.degree},
                     {"rank", c.rank},
                     {"allowed", c.allowed},
                     {"realized", c.realized},
                     {"pass", c.pass()}});
  }
  j = json{{"genus", report.genus},
           {"clifford", report.clifford},
           {"pass", report.all_pass()},
           {"cells", cells}};
}

}  // namespace loopchain
