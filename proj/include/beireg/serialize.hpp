#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "beireg/characterize.hpp"
#include "beireg/graph_algorithms.hpp"
#include "beireg/graph_io.hpp"
#include "beireg/interval.hpp"
#include "beireg/regularity.hpp"

namespace beireg {

using nlohmann::json;

// Family JSON: {"ell": int, "I": [[[a, b], ...], ...]} in half-units. The J
// sets follow from ell and are not written.

inline json family_to_json(const CLFamily& f) {
  json I = json::array();
  for (const IntervalUnion& u : f.I) {
    json segs = json::array();
    for (const Segment& s : u.segments()) segs.push_back({s.lo, s.hi});
    I.push_back(std::move(segs));
  }
  return {{"ell", f.ell}, {"I", std::move(I)}};
}

inline CLFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ell") || !j.contains("I"))
    throw std::invalid_argument("family JSON needs \"ell\" and \"I\"");
  const int ell = j.at("ell").get<int>();
  if (ell < 0) throw std::invalid_argument("family JSON: ell must be non-negative");
  std::vector<IntervalUnion> I;
  for (const json& u : j.at("I")) {
    std::vector<Segment> segs;
    for (const json& s : u) {
      if (!s.is_array() || s.size() != 2) throw std::invalid_argument("family JSON: segment must be [lo, hi]");
      segs.push_back({s[0].get<int>(), s[1].get<int>()});
    }
    I.emplace_back(std::move(segs));
  }
  return CLFamily::make(ell, std::move(I));
}

inline json violation_to_json(const Violation& v) {
  json out{{"condition", to_string(v.condition)}, {"members", v.members}, {"message", v.message}};
  if (v.j) out["j"] = *v.j;
  return out;
}

inline json cl_component_to_json(const CLComponentCertificate& c) {
  json out = family_to_json(c.family);
  json bij = json::object();
  const int ell = c.family.ell;
  for (int j = 0; j <= ell; ++j) bij["J" + std::to_string(j)] = c.bijection.at(static_cast<std::size_t>(j));
  for (int i = 1; i <= c.family.r(); ++i)
    bij["I" + std::to_string(i)] = c.bijection.at(static_cast<std::size_t>(ell + i));
  out["bijection"] = std::move(bij);
  return out;
}

inline json cl_recognition_to_json(const CLRecognition& rec) {
  if (const auto* cert = std::get_if<CLCertificate>(&rec)) {
    json comps = json::array();
    for (const auto& c : cert->components) comps.push_back(cl_component_to_json(c));
    return {{"recognized", true}, {"components", std::move(comps)}};
  }
  const auto& no = std::get<NotCLReason>(rec);
  return {{"recognized", false}, {"component", no.component_index}, {"ell", no.ell}, {"cliqueCount", no.clique_count}};
}

inline json wl_to_json(const WLDecomposition& d) {
  json h = json::array();
  for (const Edge& e : d.h_edges) h.push_back({e.u, e.v});
  return {{"path", d.path}, {"clique", d.clique}, {"t", d.t}, {"hEdges", std::move(h)}};
}

inline json wl_recognition_to_json(const WLRecognition& rec) {
  if (const auto* d = std::get_if<WLDecomposition>(&rec)) {
    json out = wl_to_json(*d);
    out["recognized"] = true;
    return out;
  }
  const auto& no = std::get<NotWL>(rec);
  return {{"recognized", false}, {"ell", no.ell}, {"n", no.n}, {"omega", no.omega}};
}

inline json sig_recognition_to_json(const SIGRecognition& rec) {
  json out{{"recognized", rec.recognized}};
  if (rec.families) {
    json fams = json::array();
    for (const SIGFamily& f : *rec.families) fams.push_back(family_to_json(to_cl_family(f)));
    out["families"] = std::move(fams);
  }
  return out;
}

inline json invariants_to_json(const Graph& g) {
  const GraphInvariants inv = invariants(g);
  const Bounds b = bounds(g);
  return {{"n", g.order()},        {"edges", g.size()},      {"components", inv.component_count},
          {"ell", inv.ell},        {"cliqueCount", inv.clique_count}, {"omega", inv.omega},
          {"chordal", inv.is_chordal}, {"bounds", {{"lo", b.lo}, {"hi", b.hi}}}};
}

inline json report_to_json(const RegularityReport& r) {
  json trace = json::array();
  for (const TraceStep& s : r.trace) trace.push_back({{"rule", s.rule}, {"detail", s.detail}});
  json value = r.exact() ? json{{"exact", r.lo}} : json{{"interval", {r.lo, r.hi}}};
  return {{"value", std::move(value)}, {"inexact", r.inexact}, {"trace", std::move(trace)},
          {"method", to_string(r.method)}, {"characteristic", 0}};
}

}  // namespace beireg
