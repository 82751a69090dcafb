#include "anum/json_io.hpp"

#include "anum/graph_io.hpp"

namespace anum {

Json to_json(const BigInt& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

Json to_json(const ASequence& seq) {
  Json out = Json::array();
  for (const auto& v : seq) out.push_back(to_json(v));
  return out;
}

Json to_json(VertexSet s) {
  Json out = Json::array();
  for (int v : s.members()) out.push_back(v + 1);
  return out;
}

Json to_json(EdgePair e) { return Json::array({e.a + 1, e.b + 1}); }

Json to_json(const SequenceShape& shape) {
  Json out;
  out["unimodal"] = shape.unimodal;
  out["tail_peaked"] = shape.tail_peaked;
  out["log_concave"] = shape.log_concave;
  out["peak_index"] = shape.peak_index;
  out["first_violation"] = shape.first_violation ? Json(*shape.first_violation) : Json(nullptr);
  return out;
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(to_json(e));
  Json out;
  out["n"] = g.order();
  out["edges"] = std::move(edges);
  out["graph6"] = emit_graph6(g);
  return out;
}

Json decomposition_json(const DecompositionReport& report) {
  Json terms = Json::array();
  for (const auto& t : report.terms) {
    Json term;
    term["J"] = to_json(t.j);
    term["weight"] = to_json(t.weight);
    term["tail"] = to_json(t.tail);
    terms.push_back(std::move(term));
  }
  Json out;
  out["format"] = kJsonFormat;
  out["graph"] = graph_json(report.base);
  out["edge"] = to_json(report.edge);
  out["a_sequence"] = to_json(report.base_sequence);
  out["terms"] = std::move(terms);
  out["lhs"] = to_json(report.lhs);
  out["rhs"] = to_json(report.rhs);
  out["rhs_check"] = report.rhs_check;
  return out;
}

}  // namespace anum
