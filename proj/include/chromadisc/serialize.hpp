#pragma once

#include <vector>

#include "json.hpp"

#include "chromadisc/ball_coloring.hpp"
#include "chromadisc/certificates.hpp"
#include "chromadisc/coloring.hpp"
#include "chromadisc/constructions.hpp"
#include "chromadisc/discrepancy.hpp"

namespace chromadisc {

using Json = nlohmann::json;

Json to_json(VertexSet s);
Json to_json(const ProperColoring& sigma);
Json to_json(const std::vector<InvariantCheck>& checks);
// {"phi", "p", "f", "witness_classes", "witness_set"}
Json to_json(const DiscrepancyResult& result);
Json to_json(const RainbowNbhdCertificate& cert);
Json to_json(const BoundedCoverCertificate& cert);
Json to_json(const RainbowISCertificate& cert);
// {"center", "radius", "colors"}; colors[v] is 0 outside the ball.
Json to_json(const BallColoring& colouring);
// Colouring sidecar for a construction: labels and canonical classes.
Json to_json(const ColoredConstruction& construction);

}  // namespace chromadisc
