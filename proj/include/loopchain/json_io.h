#ifndef LOOPCHAIN_JSON_IO_H_
#define LOOPCHAIN_JSON_IO_H_

// JSON encodings of the public types. Integers only; parse errors surface as
// nlohmann::json exceptions or std::invalid_argument.
//
//   profile              {"genus": g, "torsions": [m_2, ..., m_g]}
//   chain                {"cycles": [{"size": k, "attach": j}, ...]}
//   divisor on a chain   {"entries": [{"cycle": i, "vertex": j, "mult": n}]}
//   representing divisor {"degree": d, "positions": ["generic" |
//                         {"class": xi}], "tail": d - g}
//   tableau              {"cols": m, "rows": n, "values": [[row 1], ...]}
//   graph                {"vertices": n, "edges": [[u, v], ...]}
//   divisor on a graph   {"coefficients": [c_0, ..., c_{n-1}]}

#include "json.hpp"

#include "loopchain/chain_model.h"
#include "loopchain/graph_oracle.h"
#include "loopchain/rank.h"
#include "loopchain/tableau.h"

namespace loopchain {

using nlohmann::json;

void to_json(json& j, const TorsionProfile& profile);
void from_json(const json& j, TorsionProfile& profile);

void to_json(json& j, const MartensSpec& spec);
void from_json(const json& j, MartensSpec& spec);

void to_json(json& j, const DiscreteChain& chain);
void from_json(const json& j, DiscreteChain& chain);

void to_json(json& j, const PointPosition& position);
void from_json(const json& j, PointPosition& position);

void to_json(json& j, const RepresentingDivisor& divisor);
// Checks "tail" against degree - genus when present. Classes are stored as
// given; use make_representing_divisor to reduce them against a profile.
void from_json(const json& j, RepresentingDivisor& divisor);

void to_json(json& j, const DisplacementTableau& tableau);
void from_json(const json& j, DisplacementTableau& tableau);

json graph_to_json(const FiniteGraph& graph);
FiniteGraph graph_from_json(const json& j);

void to_json(json& j, const VertexDivisor& divisor);
void from_json(const json& j, VertexDivisor& divisor);

// Entries list only the non-zero coefficients, ordered by cycle then vertex.
json chain_divisor_to_json(const DiscreteChain& chain,
                           const VertexDivisor& divisor);
// Repeated (cycle, vertex) entries add up.
VertexDivisor chain_divisor_from_json(const DiscreteChain& chain,
                                      const json& j);

void to_json(json& j, const RankResult& result);
void to_json(json& j, const GonalityReport& report);
void to_json(json& j, const DivisorialReport& report);

}  // namespace loopchain

#endif  // LOOPCHAIN_JSON_IO_H_
