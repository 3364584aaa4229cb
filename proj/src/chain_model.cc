#include "loopchain/chain_model.h"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "loopchain/graph_oracle.h"

namespace loopchain {

TorsionProfile::TorsionProfile(int genus, std::vector<int> torsions)
    : genus_(genus), torsions_(std::move(torsions)) {
  if (genus_ < 1) {
    throw std::invalid_argument("genus must be >= 1, got " +
                                std::to_string(genus_));
  }
  if (static_cast<int>(torsions_.size()) != genus_ - 1) {
    throw std::invalid_argument(
        "a genus " + std::to_string(genus_) + " profile needs " +
        std::to_string(genus_ - 1) + " torsions (m_2..m_g), got " +
        std::to_string(torsions_.size()));
  }
  for (std::size_t i = 0; i < torsions_.size(); ++i) {
    if (torsions_[i] < 0) {
      throw std::invalid_argument("torsion m_" + std::to_string(i + 2) +
                                  " must be >= 0");
    }
  }
}

int TorsionProfile::torsion(int cycle) const {
  if (cycle < 1 || cycle > genus_) {
    throw std::out_of_range("cycle " + std::to_string(cycle) +
                            " outside 1.." + std::to_string(genus_));
  }
  return cycle == 1 ? 0 : torsions_[cycle - 2];
}

RepresentingDivisor make_representing_divisor(
    const TorsionProfile& profile, int degree,
    std::vector<PointPosition> positions) {
  if (static_cast<int>(positions.size()) != profile.genus()) {
    throw std::invalid_argument(
        "representing divisor needs one position per cycle (" +
        std::to_string(profile.genus()) + "), got " +
        std::to_string(positions.size()));
  }
  for (int i = 1; i <= profile.genus(); ++i) {
    PointPosition& p = positions[i - 1];
    if (!p.is_generic()) {
      p = PointPosition::integer_class(
          reduce_mod(p.value(), profile.torsion(i)));
    }
  }
  return RepresentingDivisor{degree, std::move(positions)};
}

void MartensSpec::validate() const {
  const int k = type();
  if (k < 1) throw std::invalid_argument("type k must be >= 1");
  if (positions.front() < 3) {
    throw std::invalid_argument("j_1 = " + std::to_string(positions.front()) +
                                " violates 3 <= j_1");
  }
  for (int i = 0; i + 1 < k; ++i) {
    if (positions[i + 1] - positions[i] < 2) {
      throw std::invalid_argument(
          "j_" + std::to_string(i + 2) + " - j_" + std::to_string(i + 1) +
          " = " + std::to_string(positions[i + 1] - positions[i]) +
          " violates j_{i+1} - j_i >= 2");
    }
  }
  if (positions.back() > genus - 2) {
    throw std::invalid_argument(
        "j_k = " + std::to_string(positions.back()) +
        " violates j_k <= g - 2 = " + std::to_string(genus - 2));
  }
}

std::string MartensSpec::label() const {
  std::ostringstream out;
  out << "g=" << genus << " k=" << type() << " j=(";
  for (int i = 0; i < type(); ++i) out << (i ? "," : "") << positions[i];
  out << ")";
  return out.str();
}

TorsionProfile martens_special_profile(const MartensSpec& spec,
                                       MartensKind kind) {
  spec.validate();
  const int g = spec.genus;
  std::vector<int> torsions(g - 1, 2);
  for (int j : spec.positions) {
    torsions[j - 2] = kind == MartensKind::kMetricGeneral ? 0 : g + 1;
  }
  return TorsionProfile(g, std::move(torsions));
}

namespace {

void extend_specs(int genus, int type, std::vector<int>& prefix,
                  std::vector<MartensSpec>& out) {
  if (static_cast<int>(prefix.size()) == type) {
    out.push_back(MartensSpec{genus, prefix});
    return;
  }
  const int first = prefix.empty() ? 3 : prefix.back() + 2;
  const int remaining = type - static_cast<int>(prefix.size()) - 1;
  for (int j = first; j + 2 * remaining <= genus - 2; ++j) {
    prefix.push_back(j);
    extend_specs(genus, type, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MartensSpec> all_martens_specs(int max_genus, int max_type) {
  std::vector<MartensSpec> out;
  for (int g = 5; g <= max_genus; ++g) {
    for (int k = 1; k <= max_type; ++k) {
      std::vector<int> prefix;
      extend_specs(g, k, prefix, out);
    }
  }
  return out;
}

void DiscreteChain::validate() const {
  if (cycles.empty()) {
    throw std::invalid_argument("a discrete chain needs at least one cycle");
  }
  for (int i = 0; i < genus(); ++i) {
    const Cycle& c = cycles[i];
    if (c.size < 2) {
      throw std::invalid_argument("cycle " + std::to_string(i + 1) +
                                  " has size " + std::to_string(c.size) +
                                  ", need size >= 2");
    }
    if (c.attach < 2 || c.attach > c.size) {
      throw std::invalid_argument(
          "cycle " + std::to_string(i + 1) + " has attach " +
          std::to_string(c.attach) + ", need 2 <= attach <= size = " +
          std::to_string(c.size));
    }
  }
}

int DiscreteChain::vertex_count() const {
  int n = 0;
  for (const Cycle& c : cycles) n += c.size;
  return n;
}

int DiscreteChain::vertex_id(int cycle, int vertex) const {
  int offset = 0;
  for (int i = 0; i < cycle - 1; ++i) offset += cycles[i].size;
  return offset + vertex - 1;
}

int DiscreteChain::cycle_torsion(int cycle) const {
  const Cycle& c = cycles[cycle - 1];
  return c.size / std::gcd(c.size, c.attach - 1);
}

FiniteGraph DiscreteChain::to_graph() const {
  validate();
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= genus(); ++i) {
    const int k = cycles[i - 1].size;
    for (int j = 1; j <= k; ++j) {
      edges.emplace_back(vertex_id(i, j), vertex_id(i, j % k + 1));
    }
    if (i < genus()) {
      edges.emplace_back(vertex_id(i, cycles[i - 1].attach),
                         vertex_id(i + 1, 1));
    }
  }
  return FiniteGraph(vertex_count(), std::move(edges));
}

TorsionProfile torsion_of_discrete(const DiscreteChain& chain) {
  chain.validate();
  std::vector<int> torsions;
  for (int i = 2; i <= chain.genus(); ++i) {
    torsions.push_back(chain.cycle_torsion(i));
  }
  return TorsionProfile(chain.genus(), std::move(torsions));
}

DiscreteChain realize_discrete_chain(const TorsionProfile& profile) {
  DiscreteChain chain;
  chain.cycles.push_back({2, 2});
  for (int i = 2; i <= profile.genus(); ++i) {
    const int m = profile.torsion(i);
    if (m < 2) {
      throw std::invalid_argument(
          "m_" + std::to_string(i) + " = " + std::to_string(m) +
          " is not realizable by a discrete chain (need m_i >= 2)");
    }
    chain.cycles.push_back({m, 2});
  }
  return chain;
}

int vertex_of_class(const DiscreteChain& chain, int cycle, long xi) {
  const DiscreteChain::Cycle& c = chain.cycles.at(cycle - 1);
  const long j = reduce_mod(static_cast<long>(c.attach - 1) * xi + c.attach,
                            c.size);
  return j == 0 ? c.size : static_cast<int>(j);
}

std::optional<long> class_of_vertex(const DiscreteChain& chain, int cycle,
                                    int vertex) {
  const int m = chain.cycle_torsion(cycle);
  for (long xi = 0; xi < m; ++xi) {
    if (vertex_of_class(chain, cycle, xi) == vertex) return xi;
  }
  return std::nullopt;
}

DiscreteNormalForm normal_form_discrete(const DiscreteChain& chain,
                                        const VertexDivisor& divisor) {
  chain.validate();
  if (divisor.size() != chain.vertex_count()) {
    throw std::invalid_argument("divisor has " +
                                std::to_string(divisor.size()) +
                                " coefficients, chain has " +
                                std::to_string(chain.vertex_count()) +
                                " vertices");
  }
  const int g = chain.genus();
  const int d = divisor.degree();
  DiscreteNormalForm form{d, std::vector<int>(g)};
  // Chips pushed across the bridge into v_{i,1}; div(f_i) = v_{i+1,1} -
  // v_{i,j_i} lets any integer amount cross.
  long carry = 0;
  for (int i = 1; i <= g; ++i) {
    const DiscreteChain::Cycle& c = chain.cycles[i - 1];
    std::vector<long> local(c.size + 1, 0);
    for (int j = 1; j <= c.size; ++j) {
      local[j] = divisor[chain.vertex_id(i, j)];
    }
    local[1] += carry;
    long degree = 0;
    for (int j = 1; j <= c.size; ++j) degree += local[j];
    // Leave exactly one chip on every cycle (the tail stays on cycle g).
    const long excess = degree - 1;
    local[c.attach] -= excess;
    carry = excess;
    // On a cycle of size k a degree-1 divisor is equivalent to v_p with
    // p = sum_j D(v_j) j mod k.
    long weight = 0;
    for (int j = 1; j <= c.size; ++j) weight += local[j] * j;
    const long p = reduce_mod(weight, c.size);
    form.vertices[i - 1] = p == 0 ? c.size : static_cast<int>(p);
  }
  return form;
}

VertexDivisor divisor_of_normal_form(const DiscreteChain& chain,
                                     const DiscreteNormalForm& form) {
  VertexDivisor out = VertexDivisor::zero(chain.vertex_count());
  const int g = chain.genus();
  for (int i = 1; i <= g; ++i) {
    out[chain.vertex_id(i, form.vertices[i - 1])] += 1;
  }
  out[chain.vertex_id(g, chain.cycles[g - 1].attach)] += form.degree - g;
  return out;
}

RepresentingDivisor representing_divisor_discrete(
    const DiscreteChain& chain, const VertexDivisor& divisor) {
  const DiscreteNormalForm form = normal_form_discrete(chain, divisor);
  std::vector<PointPosition> positions;
  for (int i = 1; i <= chain.genus(); ++i) {
    const auto xi = class_of_vertex(chain, i, form.vertices[i - 1]);
    positions.push_back(xi ? PointPosition::integer_class(*xi)
                           : PointPosition::generic());
  }
  return make_representing_divisor(torsion_of_discrete(chain), form.degree,
                                   std::move(positions));
}

VertexDivisor canonical_divisor(const DiscreteChain& chain) {
  return canonical_divisor(chain.to_graph());
}

}  // namespace loopchain
