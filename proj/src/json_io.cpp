#include "liecomb/json_io.hpp"

#include <sstream>

namespace liecomb::json {

ojson to_json(const Weight& w) {
  ojson a = ojson::array();
  for (int i = 0; i < w.size(); ++i) a.push_back(w[i]);
  return a;
}

ojson to_json(const GlPartition& p) { return ojson{p.parts[0], p.parts[1], p.parts[2]}; }

ojson to_json(const DecompositionTable& t) {
  ojson entries = ojson::array();
  for (const auto& e : t.entries) entries.push_back({{"nu", to_json(e.nu)}, {"mult", e.mult}});
  return {{"lambda", to_json(t.lambda)}, {"mu", to_json(t.mu)}, {"entries", entries}};
}

ojson to_json(const MultiplicityCensus& c) {
  ojson sigma = ojson::object();
  for (const auto& [s, n] : c.by_mult) sigma[std::to_string(s)] = n;
  return {{"sigma", sigma}, {"M", c.distinct}, {"max", c.mult_max}, {"total", c.total}};
}

ojson to_json(const Theorem1Report& r) {
  return {{"total", r.total},
          {"total_conj", r.total_conj},
          {"sum_of_squares", r.squares},
          {"sum_of_squares_conj", r.squares_conj},
          {"equal", r.equal}};
}

ojson to_json(const Theorem2Report& r) {
  return {{"multiset", r.multiset}, {"multiset_conj", r.multiset_conj}, {"equal", r.equal}};
}

ojson to_json(const honeycomb::AlphaInterval& iv) {
  if (iv.empty()) return {{"empty", true}, {"count", 0}};
  return {{"min", iv.lo}, {"max", iv.hi}, {"count", iv.count()}};
}

ojson to_json(const honeycomb::Honeycomb& h) {
  ojson inner = ojson::object();
  for (int i = 0; i < honeycomb::kInnerEdges; ++i)
    inner[honeycomb::kInnerEdgeNames[static_cast<size_t>(i)]] = h.inner[static_cast<size_t>(i)];
  ojson boundary = ojson::array();
  for (int b : h.boundary) boundary.push_back(b);
  return {{"lambda", to_json(h.lambda)},
          {"mu", to_json(h.mu)},
          {"nu", to_json(h.nu)},
          {"alpha", h.alpha},
          {"nu3", h.nu3},
          {"sigma", h.sigma},
          {"inner", inner},
          {"boundary_clockwise", boundary}};
}

ojson to_json(const honeycomb::Hive& h) {
  ojson rows = ojson::array();
  for (int r = 0; r < 4; ++r) {
    ojson row = ojson::array();
    for (int i = 0; i < 4 - r; ++i) row.push_back(h.value(r, i));
    rows.push_back(row);
  }
  ojson boundary = ojson::array();
  for (int b : h.boundary_clockwise()) boundary.push_back(b);
  return {{"rows_bottom_up", rows}, {"interior", h.value(1, 1)}, {"boundary_clockwise", boundary}};
}

ojson to_json(const polygon::TensorPolygon& p) {
  ojson vs = ojson::array();
  for (const auto& v : p.vertices) vs.push_back({v[0], v[1]});
  return {{"layer", p.layer}, {"vertices", vs}};
}

ojson to_json(const polygon::LayerDiagram& d) {
  ojson layers = ojson::array();
  for (const auto& p : d.layers) layers.push_back(to_json(p));
  return {{"lambda", to_json(d.lambda)}, {"mu", to_json(d.mu)}, {"layers", layers}};
}

ojson to_json(const conjmap::MappedPoint& p) {
  return {{"nu", to_json(p.nu)},
          {"alpha", p.alpha},
          {"index", p.index},
          {"nu_out", to_json(p.nu_out)},
          {"alpha_out", p.alpha_out},
          {"index_out", p.index_out},
          {"regime", p.regime == conjmap::Regime::reflection ? "reflection" : "translation"},
          {"case", p.case_tag},
          {"pipeline", p.pipeline}};
}

ojson to_json(const conjmap::BijectionReport& r) {
  return {{"lambda", to_json(r.lambda)},
          {"mu", to_json(r.mu)},
          {"case", r.case_tag},
          {"pipeline", r.pipeline},
          {"points", r.total_points},
          {"reflections", r.reflections},
          {"translations", r.translations},
          {"valid_images", r.valid_images},
          {"injective", r.injective},
          {"surjective", r.surjective},
          {"index_preserved", r.index_preserved},
          {"triality_ok", r.triality_ok},
          {"wesslen_ok", r.wesslen_ok},
          {"multiset_match", r.multiset_match},
          {"passed", r.passed()},
          {"failures", r.failures}};
}

ojson to_json(const pictograph::Pictograph& p) {
  const auto ext = external_weights(p);
  const char* kind = p.kind == pictograph::Kind::bz_triangle ? "bz"
                     : p.kind == pictograph::Kind::oblade    ? "oblade"
                                                             : "su3honey";
  const auto& q = p.labels;
  return {{"kind", kind},
          {"labels",
           {{"m12", q.m12},
            {"m23", q.m23},
            {"m13", q.m13},
            {"n12", q.n12},
            {"n23", q.n23},
            {"n13", q.n13},
            {"l12", q.l12},
            {"l23", q.l23},
            {"l13", q.l13}}},
          {"lambda", to_json(ext[0])},
          {"mu", to_json(ext[1])},
          {"nu", to_json(ext[2])}};
}

ojson to_json(const oracle::Su4PolytopeReport& r) {
  return {{"vertices_mult1_ok", r.vertices_mult1_ok},
          {"mult2_ok", r.mult2_ok},
          {"mult5_ok", r.mult5_ok},
          {"face_ok", r.face_ok},
          {"hull_ok", r.hull_ok},
          {"theorem1_ok", r.theorem1_ok},
          {"total", r.total},
          {"passed", r.passed()},
          {"failures", r.failures}};
}

Weight parse_weight(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '[' && c != ']' && c != '(' && c != ')' && c != ' ') s += c;
  std::vector<int> labels;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw Error("malformed weight '" + text + "'");
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(part, &pos);
    } catch (const std::exception&) {
      throw Error("malformed weight '" + text + "'");
    }
    if (pos != part.size()) throw Error("malformed weight '" + text + "'");
    labels.push_back(v);
  }
  if (labels.empty()) throw Error("malformed weight '" + text + "'");
  return Weight(std::span<const int>(labels.data(), labels.size()));
}

}  // namespace liecomb::json
