#include "gassoc/serialize.hpp"

#include <stdexcept>

namespace gassoc {

namespace {

Json word_json(const Word& w) {
  Json out = Json::array();
  for (Node i : w) out.push_back(i + 1);
  return out;
}

Json label_json(const ClusterModel& model, LabelId id) {
  const PiLabel& l = model.pi_labels()[static_cast<std::size_t>(id)];
  return Json{{"id", id}, {"i", l.i + 1}, {"m", l.m}};
}

}  // namespace

Json to_json(const IntVec& v) {
  Json out = Json::array();
  for (const Integer& x : v) {
    if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("coordinate does not fit in 64 bits");
    out.push_back(static_cast<long long>(x));
  }
  return out;
}

Json to_json(const RatVec& v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(to_string(q));
  return out;
}

IntVec int_vec_from_json(const Json& j) {
  IntVec out;
  for (const auto& x : j) out.emplace_back(x.get<long long>());
  return out;
}

RatVec rat_vec_from_json(const Json& j) {
  RatVec out;
  for (const auto& x : j) out.push_back(x.is_number_integer() ? Rational(x.get<long long>()) : parse_rational(x.get<std::string>()));
  return out;
}

Json model_to_json(const ClusterModel& model) {
  Json labels = Json::array();
  for (LabelId id = 0; id < static_cast<LabelId>(model.size()); ++id) {
    Json l = label_json(model, id);
    l["weight"] = to_json(model.weight(id));
    l["root"] = to_json(model.root(id));
    labels.push_back(std::move(l));
  }
  Json orbits = Json::array();
  for (const auto& orbit : model.orbits()) orbits.push_back(orbit);
  Json clusters = Json::array();
  for (const auto& c : model.clusters()) clusters.push_back(c);
  return Json{{"datum", model.datum().label()},
              {"coxeter", word_json(model.coxeter().order())},
              {"labels", std::move(labels)},
              {"orbits", std::move(orbits)},
              {"compat", model.compat_table()},
              {"clusters", std::move(clusters)}};
}

Json polytope_to_json(const ClusterModel& model, const AssocPolytope& poly) {
  Json facets = Json::array();
  for (const Facet& f : poly.hrep.facets) {
    Json entry{{"normal", to_json(f.normal)}, {"rhs", to_string(f.rhs)}};
    entry["label"] = f.label >= 0 ? label_json(model, f.label) : Json(nullptr);
    facets.push_back(std::move(entry));
  }
  Json vertices = Json::array();
  for (const Vertex& v : poly.vertices) vertices.push_back(Json{{"coords", to_json(v.coords)}, {"cluster", v.cluster}});
  Json edges = Json::array();
  for (const auto& [a, b] : poly.edges) edges.push_back(Json::array({a, b}));
  return Json{{"datum", poly.datum_label},
              {"coxeter", word_json(poly.coxeter)},
              {"f", to_json(poly.f)},
              {"facets", std::move(facets)},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)}};
}

AssocPolytope polytope_from_json(const Json& j) {
  AssocPolytope poly;
  poly.datum_label = j.at("datum").get<std::string>();
  for (const auto& i : j.at("coxeter")) {
    const int node = i.get<int>();
    if (node < 1) throw std::invalid_argument("coxeter nodes are 1-based");
    poly.coxeter.push_back(node - 1);
  }
  poly.f = rat_vec_from_json(j.at("f"));
  for (const auto& f : j.at("facets")) {
    const Json& label = f.at("label");
    poly.hrep.facets.push_back({int_vec_from_json(f.at("normal")), parse_rational(f.at("rhs").get<std::string>()),
                                label.is_null() ? -1 : label.at("id").get<LabelId>()});
  }
  for (const auto& v : j.at("vertices"))
    poly.vertices.push_back({rat_vec_from_json(v.at("coords")), v.at("cluster").get<Cluster>()});
  for (const auto& e : j.at("edges")) poly.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return poly;
}

bool operator==(const AssocPolytope& a, const AssocPolytope& b) {
  if (a.datum_label != b.datum_label || a.coxeter != b.coxeter || a.f != b.f || a.edges != b.edges) return false;
  if (a.hrep.facets.size() != b.hrep.facets.size() || a.vertices.size() != b.vertices.size()) return false;
  for (std::size_t k = 0; k < a.hrep.facets.size(); ++k) {
    const Facet &x = a.hrep.facets[k], &y = b.hrep.facets[k];
    if (x.normal != y.normal || x.rhs != y.rhs || x.label != y.label) return false;
  }
  for (std::size_t k = 0; k < a.vertices.size(); ++k)
    if (a.vertices[k].coords != b.vertices[k].coords || a.vertices[k].cluster != b.vertices[k].cluster) return false;
  return true;
}

Json exchange_graph_to_json(const ExchangeGraph& graph) {
  const std::size_t n = graph.b0.rows();
  Json b0 = Json::array();
  for (std::size_t r = 0; r < n; ++r) b0.push_back(to_json(graph.b0.row(r)));
  Json variables = Json::array();
  for (std::size_t v = 0; v < graph.variables.size(); ++v) {
    Json terms = Json::array();
    for (const auto& [e, c] : graph.variables[v].terms()) terms.push_back(Json{{"exponents", e}, {"coeff", to_string(c)}});
    variables.push_back(Json{{"id", v}, {"g", to_json(graph.g_vectors[v])}, {"terms", std::move(terms)}});
  }
  Json seeds = Json::array();
  for (std::size_t s = 0; s < graph.seeds.size(); ++s) {
    Json g = Json::array();
    for (const IntVec& col : graph.seeds[s].g) g.push_back(to_json(col));
    seeds.push_back(Json{{"id", s}, {"variables", graph.seed_variables[s]}, {"g_matrix", std::move(g)}});
  }
  Json edges = Json::array();
  for (const ExchangeEdge& e : graph.edges)
    edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"out", e.variable_out}, {"in", e.variable_in}});
  return Json{{"b", std::move(b0)}, {"variables", std::move(variables)}, {"seeds", std::move(seeds)}, {"edges", std::move(edges)}};
}

}  // namespace gassoc
