#include "gassoc/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gassoc {

namespace {

IntVec primitive(IntVec v) {
  Integer g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

std::string term(const Integer& coeff, Node i) {
  return (coeff == 1 ? std::string() : coeff.str()) + "f(" + node_name(i) + ")";
}

Rational dot_rat(const IntVec& normal, const RatVec& z) { return dot(z, normal); }

std::vector<std::pair<int, int>> adjacent_clusters(const std::vector<Cluster>& clusters) {
  std::map<Cluster, std::vector<int>> ridges;
  for (std::size_t v = 0; v < clusters.size(); ++v)
    for (std::size_t k = 0; k < clusters[v].size(); ++k) {
      Cluster ridge = clusters[v];
      ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(k));
      ridges[ridge].push_back(static_cast<int>(v));
    }
  std::vector<std::pair<int, int>> out;
  for (const auto& [ridge, members] : ridges) {
    if (members.size() != 2) throw std::logic_error("a ridge of the cluster complex is not shared by exactly two clusters");
    out.emplace_back(std::min(members[0], members[1]), std::max(members[0], members[1]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FConditions f_conditions(const CartanDatum& datum) {
  WeylGroup group(datum);
  FConditions out;
  for (Node i = 0; i < datum.rank(); ++i)
    if (i < group.star(i)) out.equalities.emplace_back(i, group.star(i));
  for (Node j = 0; j < datum.rank(); ++j) out.inequalities.push_back(primitive(datum.cartan().column(static_cast<std::size_t>(j))));
  return out;
}

std::vector<IntVec> reduced_inequalities(const CartanDatum& datum) {
  WeylGroup group(datum);
  std::vector<IntVec> out;
  for (IntVec c : f_conditions(datum).inequalities) {
    for (Node i = 0; i < datum.rank(); ++i) {
      Node s = group.star(i);
      if (s < i) {
        c[static_cast<std::size_t>(s)] += c[static_cast<std::size_t>(i)];
        c[static_cast<std::size_t>(i)] = 0;
      }
    }
    c = primitive(std::move(c));
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

std::string render_inequality(const IntVec& coeffs) {
  std::string lhs, rhs;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0) lhs += (lhs.empty() ? "" : "+") + term(-coeffs[i], static_cast<Node>(i));
    if (coeffs[i] > 0) rhs += (rhs.empty() ? "" : "+") + term(coeffs[i], static_cast<Node>(i));
  }
  return (lhs.empty() ? "0" : lhs) + "<" + (rhs.empty() ? "0" : rhs);
}

std::string render_linear(const IntVec& coeffs, std::string_view symbol) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Integer& c = coeffs[k];
    if (c.is_zero()) continue;
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (mag != 1) out += mag.str();
    out += std::string(symbol) + node_name(static_cast<Node>(k));
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> facet_groups(const ClusterModel& model) {
  std::vector<std::string> out;
  for (const auto& orbit : model.orbits()) {
    std::string line = "max{";
    for (std::size_t k = 0; k < orbit.size(); ++k) line += (k ? ", " : "") + render_linear(model.weight(orbit[k]), "z");
    line += "} <= f(" + node_name(model.pi_labels()[static_cast<std::size_t>(orbit.front())].i) + ")";
    out.push_back(std::move(line));
  }
  return out;
}

std::string render_equality(Node i, Node j) { return "f(" + node_name(i) + ")=f(" + node_name(j) + ")"; }

std::optional<std::string> violated_condition(const CartanDatum& datum, const RatVec& f) {
  if (f.size() != static_cast<std::size_t>(datum.rank()))
    return "f must have " + std::to_string(datum.rank()) + " entries";
  const FConditions cond = f_conditions(datum);
  for (const auto& [i, j] : cond.equalities)
    if (f[static_cast<std::size_t>(i)] != f[static_cast<std::size_t>(j)]) return render_equality(i, j);
  for (const auto& c : cond.inequalities)
    if (dot(f, c) <= 0) return render_inequality(c);
  return std::nullopt;
}

RatVec default_f(const CartanDatum& datum) {
  auto f = solve(datum.cartan().transpose(), RatVec(static_cast<std::size_t>(datum.rank()), Rational(1)));
  if (!f) throw std::logic_error("Cartan matrix is singular");
  return *f;
}

namespace {

RatVec f_from_orbit_values(const CartanDatum& datum, std::mt19937_64& rng, bool spoil) {
  WeylGroup group(datum);
  std::uniform_int_distribution<int> pick(1, 12);
  std::vector<Node> reps;
  for (Node i = 0; i < datum.rank(); ++i)
    if (i <= group.star(i)) reps.push_back(i);
  std::size_t bad = reps.size();
  if (spoil) bad = std::uniform_int_distribution<std::size_t>(0, reps.size() - 1)(rng);
  RatVec e(static_cast<std::size_t>(datum.rank()));
  for (std::size_t k = 0; k < reps.size(); ++k) {
    Integer value = pick(rng);
    if (k == bad) value = -value;
    e[static_cast<std::size_t>(reps[k])] = Rational(value);
    e[static_cast<std::size_t>(group.star(reps[k]))] = Rational(value);
  }
  return *solve(datum.cartan().transpose(), e);
}

}  // namespace

RatVec random_valid_f(const CartanDatum& datum, std::mt19937_64& rng) { return f_from_orbit_values(datum, rng, false); }

RatVec random_invalid_f(const CartanDatum& datum, std::mt19937_64& rng) { return f_from_orbit_values(datum, rng, true); }

RatVec parse_f(const CartanDatum& datum, std::string_view text) {
  if (text == "default") return default_f(datum);
  RatVec out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != static_cast<std::size_t>(datum.rank()))
    throw std::invalid_argument("f must have " + std::to_string(datum.rank()) + " entries");
  return out;
}

Rational support_value(const ClusterModel& model, const RatVec& f, const IntVec& lambda) {
  Rational out = 0;
  for (const auto& [id, coeff] : model.expand_weight(lambda))
    out += Rational(coeff) * f[static_cast<std::size_t>(model.pi_labels()[static_cast<std::size_t>(id)].i)];
  return out;
}

HRep build_hrep(const ClusterModel& model, const RatVec& f) {
  if (auto bad = violated_condition(model.datum(), f)) throw std::invalid_argument("invalid f: violates " + *bad);
  HRep out;
  for (LabelId id = 0; id < static_cast<LabelId>(model.size()); ++id) {
    const PiLabel& l = model.pi_labels()[static_cast<std::size_t>(id)];
    out.facets.push_back({l.weight, f[static_cast<std::size_t>(l.i)], id});
  }
  return out;
}

AssocPolytope build_polytope(const ClusterModel& model, const RatVec& f) {
  AssocPolytope poly;
  poly.datum_label = model.datum().label();
  poly.coxeter = model.coxeter().order();
  poly.f = f;
  poly.hrep = build_hrep(model, f);
  const auto n = static_cast<std::size_t>(model.rank());
  for (const Cluster& cl : model.clusters()) {
    IntMatrix m(n, n);
    RatVec rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
      const Facet& facet = poly.hrep.facets[static_cast<std::size_t>(cl[r])];
      for (std::size_t k = 0; k < n; ++k) m(r, k) = facet.normal[k];
      rhs[r] = facet.rhs;
    }
    auto z = solve(m, rhs);
    if (!z) throw std::logic_error("cluster weights are linearly dependent");
    for (const Facet& facet : poly.hrep.facets) {
      const bool on = std::binary_search(cl.begin(), cl.end(), facet.label);
      const Rational value = dot_rat(facet.normal, *z);
      if (on ? value != facet.rhs : value >= facet.rhs)
        throw std::logic_error("degenerate vertex for cluster at " + to_string(*z));
    }
    poly.vertices.push_back({std::move(*z), cl});
  }
  poly.edges = adjacent_clusters(model.clusters());
  return poly;
}

CheckReport check_simplicity(const ClusterModel& model, const AssocPolytope& poly) {
  CheckReport report;
  for (const Vertex& v : poly.vertices) {
    ++report.checked;
    Cluster tight;
    for (const Facet& facet : poly.hrep.facets) {
      const Rational value = dot_rat(facet.normal, v.coords);
      if (value > facet.rhs) report.failures.push_back("vertex " + to_string(v.coords) + " violates a facet");
      if (value == facet.rhs) tight.push_back(facet.label);
    }
    std::sort(tight.begin(), tight.end());
    if (tight.size() != static_cast<std::size_t>(model.rank()) || tight != v.cluster)
      report.failures.push_back("vertex " + to_string(v.coords) + " is not simple");
  }
  return report;
}

CheckReport check_support_function(const ClusterModel& model, const AssocPolytope& poly) {
  CheckReport report;
  for (const Facet& facet : poly.hrep.facets) {
    ++report.checked;
    std::optional<Rational> best;
    std::vector<int> argmax, expected;
    for (std::size_t v = 0; v < poly.vertices.size(); ++v) {
      const Rational value = dot_rat(facet.normal, poly.vertices[v].coords);
      if (!best || value > *best) {
        best = value;
        argmax.clear();
      }
      if (value == *best) argmax.push_back(static_cast<int>(v));
      const Cluster& cl = poly.vertices[v].cluster;
      if (std::binary_search(cl.begin(), cl.end(), facet.label)) expected.push_back(static_cast<int>(v));
    }
    if (!best || *best != facet.rhs)
      report.failures.push_back("support function differs from F_c at " + to_string(facet.normal));
    if (argmax != expected)
      report.failures.push_back("maximizers of " + to_string(facet.normal) + " are not the clusters containing it");
  }
  (void)model;
  return report;
}

CheckReport check_polytopality(const ClusterModel& model, const RatVec& f) {
  CheckReport report;
  auto value = [&](const Expansion& e) {
    Rational out = 0;
    for (const auto& [id, coeff] : e)
      out += Rational(coeff) * f[static_cast<std::size_t>(model.pi_labels()[static_cast<std::size_t>(id)].i)];
    return out;
  };
  const auto& clusters = model.clusters();
  for (const auto& [p, q] : adjacent_clusters(clusters)) {
    ++report.checked;
    const Cluster& c1 = clusters[static_cast<std::size_t>(p)];
    const Cluster& c2 = clusters[static_cast<std::size_t>(q)];
    Cluster common, only1, only2;
    std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(common));
    std::set_difference(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(only1));
    std::set_difference(c2.begin(), c2.end(), c1.begin(), c1.end(), std::back_inserter(only2));
    const LabelId a = only1.front(), g = only2.front();
    const std::string pair = to_string(model.weight(a)) + " and " + to_string(model.weight(g));
    if (model.compat(a, g) != 1 || model.compat(g, a) != 1) {
      report.failures.push_back("exchangeable pair " + pair + " does not have mutual degree 1");
      continue;
    }
    const Expansion sum = model.expand_root(model.root(a) + model.root(g));
    for (const auto& [id, coeff] : sum)
      if (!std::binary_search(common.begin(), common.end(), id))
        report.failures.push_back("expansion of the sum of " + pair + " leaves the common face");
    const Expansion other = model.expand_root(model.uplus_root(a, g));
    for (const auto& [id, coeff] : other) {
      bool ok = model.compatible(id, a) && model.compatible(id, g);
      for (LabelId k : common) ok = ok && model.compatible(id, k);
      if (!ok) report.failures.push_back("uplus of " + pair + " is not compatible with both clusters' common part");
    }
    const Rational lhs = f[static_cast<std::size_t>(model.pi_labels()[static_cast<std::size_t>(a)].i)] +
                         f[static_cast<std::size_t>(model.pi_labels()[static_cast<std::size_t>(g)].i)];
    const Rational rhs = std::max(value(sum), value(other));
    if (!(lhs > rhs))
      report.failures.push_back("F(a)+F(g) = " + to_string(lhs) + " is not larger than " + to_string(rhs) + " for " + pair);
  }
  return report;
}

std::vector<IntVec> cambrian_rays(const ClusterModel& model) {
  std::set<IntVec> rays;
  for (const Singleton& s : singletons(model.coxeter()))
    for (Node j = 0; j < model.rank(); ++j) rays.insert(s.element.matrix().column(static_cast<std::size_t>(j)));
  return {rays.begin(), rays.end()};
}

HRep cambrian_hrep(const ClusterModel& model, const RatVec& a) {
  const CartanDatum& datum = model.datum();
  if (a.size() != static_cast<std::size_t>(datum.rank())) throw std::invalid_argument("a must have one entry per node");
  for (Node j = 0; j < datum.rank(); ++j) {
    IntVec column = datum.cartan().column(static_cast<std::size_t>(j));
    if (dot(a, column) <= 0) throw std::invalid_argument("a is outside the open fundamental chamber: " + render_inequality(column));
  }
  std::map<IntVec, Rational> facets;
  for (const Singleton& s : singletons(model.coxeter()))
    for (Node j = 0; j < datum.rank(); ++j) {
      IntVec normal = s.element.matrix().column(static_cast<std::size_t>(j));
      auto [it, inserted] = facets.emplace(std::move(normal), a[static_cast<std::size_t>(j)]);
      if (!inserted && it->second != a[static_cast<std::size_t>(j)]) throw std::logic_error("one ray carries two right-hand sides");
    }
  HRep out;
  for (const auto& [normal, rhs] : facets) {
    auto id = model.id_of_weight(normal);
    out.facets.push_back({normal, rhs, id ? *id : -1});
  }
  return out;
}

std::vector<std::pair<IntVec, Rational>> canonical_hrep(const HRep& h) {
  std::vector<std::pair<IntVec, Rational>> out;
  for (const Facet& facet : h.facets) {
    Integer g = gcd_of(facet.normal);
    IntVec normal = facet.normal;
    Rational rhs = facet.rhs;
    if (g > 1) {
      for (auto& x : normal) x /= g;
      rhs /= Rational(g);
    }
    out.emplace_back(std::move(normal), rhs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EqualityReport polytopes_equal(const ClusterModel& model, const RatVec& f) {
  const auto lhs = canonical_hrep(build_hrep(model, f));
  const auto rhs = canonical_hrep(cambrian_hrep(model, f));
  EqualityReport out;
  for (std::size_t k = 0; k < std::max(lhs.size(), rhs.size()); ++k) {
    if (k >= lhs.size()) {
      out.witness = "Cambrian facet " + to_string(rhs[k].first) + " <= " + to_string(rhs[k].second) + " has no counterpart";
      return out;
    }
    if (k >= rhs.size() || lhs[k] != rhs[k]) {
      out.witness = "facet " + to_string(lhs[k].first) + " <= " + to_string(lhs[k].second) + " has no Cambrian counterpart";
      return out;
    }
  }
  out.equal = true;
  return out;
}

std::vector<std::vector<int>> facet_cycles(const AssocPolytope& poly) {
  const std::size_t rank = poly.f.size();
  if (rank != 2 && rank != 3) throw std::invalid_argument("facet cycles are only defined in rank 2 and 3");
  std::vector<std::vector<int>> out;
  for (const Facet& facet : poly.hrep.facets) {
    std::vector<int> on;
    for (std::size_t v = 0; v < poly.vertices.size(); ++v)
      if (dot_rat(facet.normal, poly.vertices[v].coords) == facet.rhs) on.push_back(static_cast<int>(v));
    if (rank == 2) {
      out.push_back(std::move(on));
      continue;
    }
    std::map<int, std::vector<int>> nbrs;
    for (const auto& [p, q] : poly.edges)
      if (std::binary_search(on.begin(), on.end(), p) && std::binary_search(on.begin(), on.end(), q)) {
        nbrs[p].push_back(q);
        nbrs[q].push_back(p);
      }
    std::vector<int> cycle{on.front()};
    int prev = -1;
    while (cycle.size() < on.size()) {
      const auto& next = nbrs.at(cycle.back());
      if (next.size() != 2) throw std::logic_error("facet boundary is not a cycle");
      int step = next[0] != prev ? next[0] : next[1];
      prev = cycle.back();
      cycle.push_back(step);
    }
    const RatVec& v0 = poly.vertices[static_cast<std::size_t>(cycle[0])].coords;
    const RatVec& v1 = poly.vertices[static_cast<std::size_t>(cycle[1])].coords;
    const RatVec& v2 = poly.vertices[static_cast<std::size_t>(cycle[2])].coords;
    RatVec d1(3), d2(3);
    for (std::size_t k = 0; k < 3; ++k) {
      d1[k] = v1[k] - v0[k];
      d2[k] = v2[k] - v0[k];
    }
    RatVec cross{d1[1] * d2[2] - d1[2] * d2[1], d1[2] * d2[0] - d1[0] * d2[2], d1[0] * d2[1] - d1[1] * d2[0]};
    if (dot(cross, facet.normal) < 0) std::reverse(cycle.begin() + 1, cycle.end());
    out.push_back(std::move(cycle));
  }
  return out;
}

namespace {

std::vector<int> polygon_cycle(const AssocPolytope& poly) {
  std::map<int, std::vector<int>> nbrs;
  for (const auto& [p, q] : poly.edges) {
    nbrs[p].push_back(q);
    nbrs[q].push_back(p);
  }
  std::vector<int> cycle{0};
  int prev = -1;
  while (cycle.size() < poly.vertices.size()) {
    const auto& next = nbrs.at(cycle.back());
    int step = next[0] != prev ? next[0] : next[1];
    prev = cycle.back();
    cycle.push_back(step);
  }
  const RatVec& v0 = poly.vertices[static_cast<std::size_t>(cycle[0])].coords;
  const RatVec& v1 = poly.vertices[static_cast<std::size_t>(cycle[1])].coords;
  const RatVec& v2 = poly.vertices[static_cast<std::size_t>(cycle[2])].coords;
  if ((v1[0] - v0[0]) * (v2[1] - v0[1]) - (v1[1] - v0[1]) * (v2[0] - v0[0]) < 0) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

RatVec padded(const RatVec& v) {
  RatVec out = v;
  while (out.size() < 3) out.emplace_back(0);
  return out;
}

}  // namespace

std::string to_off(const AssocPolytope& poly, int precision) {
  const std::size_t rank = poly.f.size();
  std::vector<std::vector<int>> faces;
  if (rank == 3) {
    faces = facet_cycles(poly);
  } else if (rank == 2) {
    faces.push_back(polygon_cycle(poly));
  } else {
    throw std::invalid_argument("OFF export needs rank 2 or 3");
  }
  std::string out = "OFF\n" + std::to_string(poly.vertices.size()) + " " + std::to_string(faces.size()) + " " +
                    std::to_string(poly.edges.size()) + "\n";
  for (const Vertex& v : poly.vertices) {
    RatVec p = padded(v.coords);
    out += to_decimal(p[0], precision) + " " + to_decimal(p[1], precision) + " " + to_decimal(p[2], precision) + "\n";
  }
  for (const auto& face : faces) {
    out += std::to_string(face.size());
    for (int v : face) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string to_exact_sidecar(const AssocPolytope& poly) {
  std::string out;
  for (const Vertex& v : poly.vertices) {
    RatVec p = padded(v.coords);
    out += to_string(p[0]) + " " + to_string(p[1]) + " " + to_string(p[2]) + "\n";
  }
  return out;
}

}  // namespace gassoc
