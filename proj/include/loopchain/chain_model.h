#ifndef LOOPCHAIN_CHAIN_MODEL_H_
#define LOOPCHAIN_CHAIN_MODEL_H_

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace loopchain {

class FiniteGraph;
struct VertexDivisor;

// Genus plus the torsion orders (m_2, ..., m_g) of a chain of cycles.
// A torsion of 0 stands for infinite order: congruence "mod 0" is integer
// equality. The profile carries everything rank computations need.
class TorsionProfile {
 public:
  TorsionProfile() = default;
  // Throws std::invalid_argument unless genus >= 1, torsions.size() ==
  // genus - 1 and every torsion is non-negative.
  TorsionProfile(int genus, std::vector<int> torsions);

  int genus() const { return genus_; }
  const std::vector<int>& torsions() const { return torsions_; }

  // Torsion of cycle `cycle` (1-based). Cycle 1 has no entry in the profile
  // and reports 0: the only class a tableau can ever demand of it is 0.
  int torsion(int cycle) const;

  auto operator<=>(const TorsionProfile&) const = default;

 private:
  int genus_ = 1;
  std::vector<int> torsions_;
};

// True when a and b agree modulo `modulus`; modulus 0 means equality.
inline bool congruent(long a, long b, int modulus) {
  if (modulus == 0) return a == b;
  long diff = (a - b) % modulus;
  return diff == 0;
}

// Non-negative representative of `value` modulo `modulus` (identity for 0).
inline long reduce_mod(long value, int modulus) {
  if (modulus == 0) return value;
  long r = value % modulus;
  return r < 0 ? r + modulus : r;
}

// Position of the single chip a representing divisor puts on one cycle.
// Either a generic point (matching no integer class) or the point <xi>.
class PointPosition {
 public:
  PointPosition() = default;  // generic
  static PointPosition generic() { return PointPosition(); }
  static PointPosition integer_class(long xi) { return PointPosition(xi); }

  bool is_generic() const { return !xi_.has_value(); }
  long value() const { return *xi_; }

  // Whether this point equals <demand> on a cycle of torsion `modulus`.
  bool matches(long demand, int modulus) const {
    return xi_.has_value() && congruent(*xi_, demand, modulus);
  }

  auto operator<=>(const PointPosition&) const = default;

 private:
  explicit PointPosition(long xi) : xi_(xi) {}
  std::optional<long> xi_;
};

// Normal form sum_i <xi_i>_i + (d - g) w_g of a divisor on a chain of
// cycles. Integer classes on cycles of positive torsion are kept reduced
// into {0, ..., m_i - 1}.
struct RepresentingDivisor {
  int degree = 0;
  std::vector<PointPosition> positions;

  int genus() const { return static_cast<int>(positions.size()); }
  int tail() const { return degree - genus(); }

  auto operator<=>(const RepresentingDivisor&) const = default;
};

// Builds a representing divisor, reducing classes modulo the profile.
// Throws std::invalid_argument if positions.size() != profile.genus().
RepresentingDivisor make_representing_divisor(
    const TorsionProfile& profile, int degree,
    std::vector<PointPosition> positions);

// Exceptional cycles j_1 < ... < j_k of a Martens-special chain.
struct MartensSpec {
  int genus = 0;
  std::vector<int> positions;

  int type() const { return static_cast<int>(positions.size()); }
  // Throws std::invalid_argument naming the violated inequality.
  void validate() const;
  std::string label() const;

  auto operator<=>(const MartensSpec&) const = default;
};

enum class MartensKind { kMetricGeneral, kDiscrete };

// Torsion 2 off the exceptional cycles; exceptional cycles get torsion 0
// (metric-general) or g + 1 (discrete).
TorsionProfile martens_special_profile(const MartensSpec& spec,
                                       MartensKind kind);

// Every valid spec with 1 <= type <= max_type and genus <= max_genus, ordered
// by genus, then type, then positions lexicographically.
std::vector<MartensSpec> all_martens_specs(int max_genus, int max_type);

// A chain of g finite cycles; cycle i has vertices v_{i,1..size} and the
// bridge to cycle i + 1 leaves from v_{i,attach} and lands on v_{i+1,1}.
struct DiscreteChain {
  struct Cycle {
    int size = 2;
    int attach = 2;
    auto operator<=>(const Cycle&) const = default;
  };
  std::vector<Cycle> cycles;

  // Throws std::invalid_argument unless every 2 <= attach <= size and the
  // chain has at least one cycle.
  void validate() const;

  int genus() const { return static_cast<int>(cycles.size()); }
  int vertex_count() const;
  // 0-based graph index of v_{cycle,vertex} (both 1-based).
  int vertex_id(int cycle, int vertex) const;
  // Torsion order of a single cycle: size / gcd(size, attach - 1).
  int cycle_torsion(int cycle) const;
  FiniteGraph to_graph() const;

  auto operator<=>(const DiscreteChain&) const = default;
};

TorsionProfile torsion_of_discrete(const DiscreteChain& chain);

// Minimal realization: size m_i, attach 2, and a first cycle of size 2.
// Throws std::invalid_argument if some m_i < 2.
DiscreteChain realize_discrete_chain(const TorsionProfile& profile);

// The vertex index j in {1..size} with (attach - 1) xi + attach = j mod size.
int vertex_of_class(const DiscreteChain& chain, int cycle, long xi);

// The class xi in {0..m_i - 1} of vertex `vertex` on `cycle`, or nullopt
// when the vertex is not <xi> for any integer xi.
std::optional<long> class_of_vertex(const DiscreteChain& chain, int cycle,
                                    int vertex);

// Vertex-level normal form: D ~ sum_i v_{i,vertices[i]} + (d - g) v_{g,j_g}.
struct DiscreteNormalForm {
  int degree = 0;
  std::vector<int> vertices;  // 1-based vertex index on each cycle

  auto operator<=>(const DiscreteNormalForm&) const = default;
};

DiscreteNormalForm normal_form_discrete(const DiscreteChain& chain,
                                        const VertexDivisor& divisor);

// The divisor a normal form denotes.
VertexDivisor divisor_of_normal_form(const DiscreteChain& chain,
                                     const DiscreteNormalForm& form);

// Representing divisor of `divisor` over torsion_of_discrete(chain). Vertices
// off the integer orbit of their cycle become generic points.
RepresentingDivisor representing_divisor_discrete(const DiscreteChain& chain,
                                                  const VertexDivisor& divisor);

// Coefficient deg(v) - 2 at every vertex.
VertexDivisor canonical_divisor(const DiscreteChain& chain);

}  // namespace loopchain

#endif  // LOOPCHAIN_CHAIN_MODEL_H_
