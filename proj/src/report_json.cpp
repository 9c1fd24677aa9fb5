#include "wgraph/report_json.hpp"

namespace wgraph {

using nlohmann::json;

namespace {

json triples(const std::vector<Triple>& ts) {
  json out = json::array();
  for (const auto& t : ts) out.push_back({t[0], t[1], t[2]});
  return out;
}

json edges(const std::vector<Edge>& es) {
  json out = json::array();
  for (const auto& e : es) out.push_back({e[0], e[1]});
  return out;
}

}  // namespace

json to_json(const ColoredGraph& g) { return {{"n", g.order()}, {"code", g.code()}}; }

json to_json(const Threshold& t) { return {{"num", t.num()}, {"den", t.den()}, {"text", t.str()}}; }

json to_json(const HomCertificate& c) {
  json j = {{"kind", to_string(c.kind)}, {"classes", c.classes}};
  if (c.kind == TargetKind::General) {
    j["target"] = to_json(c.target);
  } else {
    j["r"] = c.r;
  }
  return j;
}

json to_json(const HomResult& h) {
  json j = {{"exists", h.exists()}, {"status", to_string(h.status)}, {"nodes_explored", h.nodes}};
  if (h.certificate) j["certificate"] = to_json(*h.certificate);
  return j;
}

json to_json(const FreenessResult& f) {
  json j = {{"free", f.free}};
  if (!f.free && f.witness) j["witness"] = {{"member", f.member}, {"map", f.witness->map}};
  return j;
}

json to_json(const Decomposition& d) {
  json classes = json::array();
  for (const auto& c : d.classes) {
    json jc = {{"vertices", c.vertices}, {"has_blue", c.has_blue}};
    if (c.has_blue) {
      jc["side_b"] = c.side_b;
      jc["side_c"] = c.side_c;
    }
    classes.push_back(std::move(jc));
  }
  json j = {{"family_free", d.family_free},
            {"degree_ok", d.degree_ok},
            {"succeeded", d.succeeded},
            {"failed_step", to_string(d.failed_step)},
            {"diagnosis", d.diagnosis},
            {"witness", d.witness},
            {"classes", std::move(classes)},
            {"m", d.m},
            {"s", d.s}};
  if (d.matching_certificate) j["matching_certificate"] = to_json(*d.matching_certificate);
  if (d.certificate) j["certificate"] = to_json(*d.certificate);
  return j;
}

json to_json(const StructureReport& s) {
  json j = {{"r", s.r},
            {"wicked_triangles", triples(s.wicked_triangles)},
            {"blue_wicked_triangles", triples(s.blue_wicked)},
            {"insecure_blue", edges(s.audit.insecure_blue)},
            {"insecure_green", edges(s.audit.insecure_green)},
            {"j_embeds", s.j_embedding.has_value()},
            {"equivalence_ok", s.equivalence_ok},
            {"decomposition", to_json(s.decomposition)}};
  if (s.j_embedding) j["j_embedding"] = s.j_embedding->map;
  return j;
}

json parts_to_json(const PartitionedConstruction& pc) {
  json j = json::object();
  for (const auto& p : pc.parts) j[p.name] = {p.first, p.end()};
  return j;
}

json to_json(const SearchReport& r, bool timing) {
  json params = {{"n", r.n}};
  if (r.kind != ReportKind::ExValue) params["r"] = r.r;
  if (r.theorem) params["theorem"] = to_string(*r.theorem);
  if (!r.family.empty()) params["family"] = r.family;
  if (r.mode) params["mode"] = to_string(*r.mode);
  if (r.kind == ReportKind::ExValue) params["cap"] = r.cap;

  json stats = {{"graphs_enumerated", r.stats.enumerated}, {"graphs_passing_hypothesis", r.stats.hypothesis}};
  if (r.kind == ReportKind::ExValue) stats["nodes"] = r.stats.nodes;
  if (timing) stats["wall_seconds"] = r.stats.wall_seconds;

  json j = {{"kind", to_string(r.kind)},
            {"parameters", std::move(params)},
            {"outcome", to_string(r.outcome)},
            {"statistics", std::move(stats)}};
  if (r.threshold) {
    j["threshold"] = to_json(*r.threshold);
    j["cutoff"] = *r.cutoff;
  }
  if (r.value) j["value"] = *r.value;
  if (r.graph) j["graph"] = to_json(*r.graph);
  if (!r.diagnosis.empty()) j["diagnosis"] = r.diagnosis;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const std::vector<DensityRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json j = {{"name", row.name}, {"n", row.n}, {"e", row.e}, {"density", to_json(row.density)}};
    j["reference"] = row.reference ? to_json(*row.reference) : json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

json report_header(const std::string& command) { return {{"schema", kReportSchema}, {"command", command}}; }

}  // namespace wgraph
