#pragma once

#include <json.hpp>

#include "chevk1/congruence.hpp"
#include "chevk1/matsumoto.hpp"

namespace chevk1 {

using json = nlohmann::json;

/// Scalars serialize as strings ("3", "-5/2^3"); polynomial-family elements
/// as {"monomial": "coeff"} maps, e.g. {"xi^1*zeta^1": "1", "1": "1"}.
json element_to_json(const RingElement &e);
RingElement element_from_json(RingDescPtr ring, const json &j);

/// [{"kind":"x","root":[1,0,...],"scalar":...}, ...]; tags emitted only
/// when present.
json word_to_json(const GeneratorWord &w);
GeneratorWord word_from_json(RingDescPtr ring, const std::string &rep,
                             const json &j);

/// Row-major array of ring-element strings plus rep/ring headers.
json matrix_to_json(const GroupElement &g);
GroupElement matrix_from_json(const json &j);

/// {"rep": ..., "nodes": [[depth...]], "edges": [[from,to,label]]},
/// 1-based node indices.
json diagram_to_json(const WeightDiagram &d);

json vector_to_json(const std::vector<RingElement> &v);
std::vector<RingElement> vector_from_json(RingDescPtr ring, const json &j);

/// "E6:w1" -> the (system, fundamental) diagram; throws parse_error.
DiagramPtr parse_rep(const std::string &label);

json split_to_json(const ParabolicSplit &s);
json certificate_to_json(const MembershipCertificate &c);
json report_to_json(const std::vector<CheckReport> &reports);

} // namespace chevk1
