#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace rbcm::cli {

Json to_json(const Poly& f) { return Json(f.coeffs()); }

Json to_json(const LabeledFactor& f) {
  return Json{{"d", f.label.d},
              {"l", f.label.ell},
              {"level", f.label.level},
              {"multiplicity", f.multiplicity},
              {"coeffs", to_json(f.poly)},
              {"poly", f.poly.to_string()}};
}

Json to_json(const IdealPresentation& q) {
  return Json{{"modulus", q.modulus().N()},
              {"context", to_json(q.context())},
              {"rows", Json(q.rows())},
              {"quotient_order", q.quotient_order()},
              {"text", q.to_string()}};
}

Json to_json(const AbelianType& g) { return Json{{"invariants", Json(g.invariants)}, {"name", g.to_string()}}; }

Json to_json(const CayleyMapRecord& m) {
  const MapStats s = regular_map_stats(m);
  Json coords = Json::array();
  for (Int w : m.omega) coords.push_back(m.group.coords(w));
  Json faces = Json::array();
  for (auto [len, count] : s.face_lengths) faces.push_back(Json{{"length", len}, {"count", count}});
  return Json{{"group", to_json(m.group.type())},
              {"moduli", Json(m.group.moduli())},
              {"type", map_type_name(m.type)},
              {"valence", m.valence()},
              {"omega", Json(m.omega_repr)},
              {"coords", coords},
              {"rho", Json(m.omega)},
              {"vertices", s.vertices},
              {"edges", s.edges},
              {"faces", s.faces},
              {"genus", s.genus},
              {"face_lengths", faces}};
}

namespace {

Json labels(const std::vector<std::pair<FactorLabel, int>>& v) {
  Json out = Json::array();
  for (const auto& [l, x] : v) out.push_back(Json{{"d", l.d}, {"l", l.ell}, {"value", x}});
  return out;
}

}  // namespace

Json to_json(const FamilyParams& p) {
  Json j{{"variant", family_name(p.variant)}};
  if (p.case_tag) j["case_tag"] = std::string(1, p.case_tag);
  if (!p.K.empty()) j["K"] = labels(p.K);
  if (!p.J.empty()) j["J"] = labels(p.J);
  if (p.label) j["label"] = Json{{"d", p.label->d}, {"l", p.label->ell}};
  if (p.mu) j["mu"] = *p.mu;
  if (p.mu1) j["mu1"] = *p.mu1;
  if (p.mu2) j["mu2"] = *p.mu2;
  if (p.alpha) j["alpha"] = *p.alpha;
  if (p.nu) j["nu"] = *p.nu;
  if (!p.nu_residue.empty()) j["nu_residue"] = Json(p.nu_residue);
  return j;
}

Json to_json(const FamilyMember& m) {
  Json j{{"params", to_json(m.params)}, {"ideal", to_json(m.ideal)}, {"map", to_json(m.map)}};
  if (m.generators_match) j["generators_match"] = *m.generators_match;
  if (!m.overlapping_cases.empty()) j["overlapping_cases"] = m.overlapping_cases;
  return j;
}

Json to_json(const CrossCheckReport& r) {
  Json fams = Json::array();
  for (const auto& f : r.families) {
    fams.push_back(Json{{"family", family_name(f.family)},
                        {"count", f.family_count},
                        {"perfect", f.perfect},
                        {"matching", Json(f.matching)},
                        {"detail", f.detail}});
  }
  Json maps = Json::array();
  for (const auto& m : r.oracle_maps) maps.push_back(to_json(m));
  return Json{{"group", to_json(r.group)},
              {"valence", r.valence},
              {"type", map_type_name(r.type)},
              {"oracle_count", r.oracle_count},
              {"oracle_only", r.oracle_only},
              {"ok", r.ok()},
              {"families", fams},
              {"notes", Json(r.notes)},
              {"oracle_maps", maps}};
}

Json to_json(const DiscrepancyEntry& e) {
  return Json{{"topic", e.topic},
              {"instance", e.instance},
              {"printed", e.printed},
              {"implemented", e.implemented},
              {"oracle", e.oracle},
              {"implemented_agrees", e.implemented_agrees},
              {"printed_agrees", e.printed_agrees}};
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

}  // namespace rbcm::cli
