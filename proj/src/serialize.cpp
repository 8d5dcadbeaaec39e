#include "chromadisc/serialize.hpp"

namespace chromadisc {

Json to_json(VertexSet s) { return Json(s.to_vector()); }

Json to_json(const ProperColoring& sigma) { return Json(sigma.as_lists()); }

Json to_json(const std::vector<InvariantCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"passed", c.passed}});
  return out;
}

Json to_json(const DiscrepancyResult& result) {
  return {{"phi", result.phi},
          {"p", result.p},
          {"f", result.f},
          {"witness_classes", to_json(result.witness_coloring)},
          {"witness_set", to_json(result.witness_set)}};
}

Json to_json(const RainbowNbhdCertificate& cert) {
  return {{"X", to_json(cert.x)},
          {"p", cert.p},
          {"k", cert.k},
          {"covered", std::popcount(cert.covered)},
          {"touched_class", cert.touched_class},
          {"checks", to_json(cert.checks)},
          {"valid", cert.valid()}};
}

Json to_json(const BoundedCoverCertificate& cert) {
  return {{"X", to_json(cert.x)},
          {"cover", to_json(cert.cover)},
          {"cover_colouring", to_json(cert.cover_colouring)},
          {"k", cert.k},
          {"s", cert.s},
          {"bound", cert.bound},
          {"checks", to_json(cert.checks)},
          {"valid", cert.valid()}};
}

Json to_json(const RainbowISCertificate& cert) {
  Json rounds = Json::array();
  for (const auto& r : cert.rounds) {
    rounds.push_back({{"index", r.index},
                      {"p", r.p},
                      {"chi", r.chi},
                      {"k", r.k},
                      {"pivot", r.pivot},
                      {"pivot_palette", r.pivot_palette},
                      {"extracted", to_json(r.extracted)},
                      {"remaining", to_json(r.remaining)}});
  }
  return {{"I", to_json(cert.independent_set)},
          {"guarantee", cert.guarantee},
          {"vacuous_bound", cert.vacuous},
          {"rounds", rounds},
          {"checks", to_json(cert.checks)},
          {"valid", cert.valid()}};
}

Json to_json(const BallColoring& colouring) {
  return {{"center", colouring.center}, {"radius", colouring.radius}, {"colors", colouring.colours}};
}

Json to_json(const ColoredConstruction& construction) {
  Json out = {{"k", construction.k},
              {"labels", construction.labels},
              {"classes", to_json(construction.canonical)}};
  if (construction.s > 0) out["s"] = construction.s;
  return out;
}

}  // namespace chromadisc
