#include "triameter/serialize.hpp"

namespace triameter {

Json to_json(const TriametralCertificate& cert) {
  Json witnesses = Json::array();
  for (const auto& t : cert.triples) witnesses.push_back({t[0], t[1], t[2]});
  return {{"value", cert.value}, {"witnesses", std::move(witnesses)}, {"method", to_string(cert.method)}};
}

Json to_json(const DiametralCertificate& cert) {
  Json pairs = Json::array();
  for (auto [x, y] : cert.pairs) pairs.push_back({x, y});
  return {{"value", cert.value}, {"pairs", std::move(pairs)}, {"peripheral", cert.peripheral.members()}};
}

Json to_json(const ClassProfile& p) {
  Json j = {
      {"tree", p.tree},
      {"block", p.block},
      {"median", p.median},
      {"modular", p.modular},
      {"distance_hereditary", p.distance_hereditary},
      {"antipodal", p.antipodal},
  };
  j["antipode"] = p.antipode ? Json(*p.antipode) : Json(nullptr);
  return j;
}

Json to_json(const LawVerdict& v) {
  Json j = {
      {"law", to_string(v.law)},
      {"status", to_string(v.status)},
      {"holds", v.holds},
      {"lhs", v.lhs},
  };
  if (v.middle) j["middle"] = *v.middle;
  j["rhs"] = v.rhs;
  j["witness"] = v.witness;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

Json to_json(const CounterexampleReport& r) {
  return {
      {"graph6", r.graph6},
      {"n", r.n},
      {"m", r.m},
      {"class", to_json(r.profile)},
      {"hypothesis", to_string(r.hypothesis)},
      {"witness", r.witness},
      {"witness_distances", r.witness_distances},
      {"verified", r.verified},
      {"open_question", r.open_question},
  };
}

Json to_json(const ScanSummary& s) {
  Json violations = Json::object();
  for (const auto& [h, count] : s.violations) violations[std::string(to_string(h))] = count;
  return {
      {"summary", true},
      {"graphs_scanned", s.graphs_scanned},
      {"in_class", s.in_class},
      {"reports", s.reports},
      {"open_question_reports", s.open_question_reports},
      {"all_verified", s.all_verified},
      {"violations", std::move(violations)},
  };
}

Json labels_json(const Fixture& fixture) {
  Json j = Json::object();
  for (const auto& [label, v] : fixture.labels) j[label] = v;
  return j;
}

} // namespace triameter
