#include "gassoc/checks.hpp"

#include "gassoc/mutation.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace gassoc {

namespace {

IntMatrix cluster_matrix(const ClusterModel& model, const Cluster& c) {
  std::vector<IntVec> cols;
  for (LabelId id : c) cols.push_back(model.weight(id));
  return IntMatrix::from_columns(cols);
}

std::string cluster_name(const ClusterModel& model, const Cluster& c) {
  std::string out = "{";
  for (std::size_t k = 0; k < c.size(); ++k) out += (k ? " " : "") + to_string(model.weight(c[k]));
  return out + "}";
}

bool is_bijection(const LabelMap& map, std::size_t target_size) {
  std::vector<bool> hit(target_size, false);
  for (LabelId v : map) {
    if (v < 0 || static_cast<std::size_t>(v) >= target_size || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return map.size() == target_size;
}

void check_preserves(CheckReport& report, const std::string& name, const ClusterModel& from, const ClusterModel& to,
                     const LabelMap& map) {
  for (LabelId a = 0; a < static_cast<LabelId>(from.size()); ++a)
    for (LabelId b = 0; b < static_cast<LabelId>(from.size()); ++b) {
      ++report.checked;
      if (from.compat(a, b) != to.compat(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
        report.failures.push_back(name + " changes the degree of " + to_string(from.root(a)) + ", " + to_string(from.root(b)));
    }
}

}  // namespace

CheckReport check_z_basis(const ClusterModel& model) {
  CheckReport report;
  for (const Cluster& c : model.clusters()) {
    ++report.checked;
    if (c.size() != static_cast<std::size_t>(model.rank())) {
      report.failures.push_back("cluster " + cluster_name(model, c) + " has the wrong size");
      continue;
    }
    const Integer det = determinant(cluster_matrix(model, c));
    if (det != 1 && det != -1) report.failures.push_back("cluster " + cluster_name(model, c) + " has determinant " + to_string(det));
  }
  return report;
}

CheckReport check_expansions(const ClusterModel& model, std::uint64_t seed, int samples, int box) {
  CheckReport report;
  const auto& clusters = model.clusters();
  std::vector<IntMatrix> inverses;
  for (const Cluster& c : clusters) inverses.push_back(inverse_unimodular(cluster_matrix(model, c)));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-box, box);
  for (int s = 0; s < samples; ++s) {
    ++report.checked;
    IntVec lambda(static_cast<std::size_t>(model.rank()));
    for (auto& x : lambda) x = coord(rng);
    const std::string name = to_string(lambda);
    const Expansion e = model.expand_weight(lambda);
    if (model.combine_weights(e) != lambda) report.failures.push_back("expansion of " + name + " does not reproduce it");
    for (const auto& [a, ma] : e)
      for (const auto& [b, mb] : e)
        if (!model.compatible(a, b) || !model.compatible(b, a)) report.failures.push_back("expansion of " + name + " has incompatible support");
    int closed = 0, open = 0;
    for (std::size_t k = 0; k < clusters.size(); ++k) {
      const IntVec coords = inverses[k].apply(lambda);
      if (!all_nonnegative(coords)) continue;
      ++closed;
      if (std::none_of(coords.begin(), coords.end(), [](const Integer& x) { return x.is_zero(); })) ++open;
      Expansion here;
      for (std::size_t j = 0; j < coords.size(); ++j)
        if (!coords[j].is_zero()) here[clusters[k][j]] = coords[j];
      if (here != e) report.failures.push_back(name + " has a second expansion on " + cluster_name(model, clusters[k]));
    }
    if (closed < 1) report.failures.push_back(name + " lies in no closed cluster cone");
    if (open > 1) report.failures.push_back(name + " lies in " + std::to_string(open) + " open cluster cones");
  }
  return report;
}

CheckReport check_completeness(const ClusterModel& model) {
  CheckReport report;
  std::map<Cluster, int> faces;
  for (const Cluster& c : model.clusters())
    for (std::size_t k = 0; k < c.size(); ++k) {
      Cluster face = c;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      ++faces[face];
    }
  for (const auto& [face, count] : faces) {
    ++report.checked;
    if (count != 2) report.failures.push_back("face " + cluster_name(model, face) + " lies in " + std::to_string(count) + " clusters");
  }
  return report;
}

CheckReport check_tau_invariance(const ClusterModel& model) {
  CheckReport report;
  for (LabelId a = 0; a < static_cast<LabelId>(model.size()); ++a)
    for (LabelId b = 0; b < static_cast<LabelId>(model.size()); ++b) {
      ++report.checked;
      if (model.compat(model.tau(a), model.tau(b)) != model.compat(a, b))
        report.failures.push_back("tau changes the degree of " + to_string(model.weight(a)) + ", " + to_string(model.weight(b)));
      if ((model.compat(a, b) == 0) != (model.compat(b, a) == 0))
        report.failures.push_back("compatibility of " + to_string(model.weight(a)) + ", " + to_string(model.weight(b)) + " is not symmetric");
    }
  return report;
}

CheckReport check_polytope(const ClusterModel& model, const RatVec& f) {
  CheckReport report;
  if (auto bad = violated_condition(model.datum(), f)) {
    report.failures.push_back("invalid f " + to_string(f) + ": violates " + *bad);
    return report;
  }
  const AssocPolytope poly = build_polytope(model, f);
  const std::size_t n = static_cast<std::size_t>(model.rank());
  ++report.checked;
  if (poly.vertices.size() != model.clusters().size()) report.failures.push_back("vertex count differs from the cluster count");
  if (poly.hrep.facets.size() != model.size()) report.failures.push_back("facet count differs from |Pi(c)|");
  if (poly.edges.size() * 2 != n * poly.vertices.size()) report.failures.push_back("edge graph is not " + std::to_string(n) + "-regular");
  if (n == 3) {
    const long euler = static_cast<long>(poly.vertices.size()) - static_cast<long>(poly.edges.size()) + static_cast<long>(poly.hrep.facets.size());
    if (euler != 2) report.failures.push_back("Euler characteristic is " + std::to_string(euler));
  }
  report.merge(check_simplicity(model, poly));
  report.merge(check_support_function(model, poly));
  report.merge(check_polytopality(model, f));
  return report;
}

CheckReport check_cambrian(const ClusterModel& model, const RatVec& f) {
  CheckReport report;
  ++report.checked;
  std::vector<IntVec> weights;
  for (const PiLabel& l : model.pi_labels()) weights.push_back(l.weight);
  std::sort(weights.begin(), weights.end());
  if (cambrian_rays(model) != weights) report.failures.push_back("Cambrian rays differ from Pi(c)");
  ++report.checked;
  const EqualityReport eq = polytopes_equal(model, f);
  if (!eq.equal) report.failures.push_back("Cambrian polytope differs: " + eq.witness);
  return report;
}

CheckReport check_exchange(const ClusterModel& model) {
  const ExchangeGraph graph = exchange_graph(model.coxeter());
  CheckReport report = verify_exchange_relations(graph, model);
  ++report.checked;
  if (graph.seeds.size() != model.clusters().size())
    report.failures.push_back("seed count " + std::to_string(graph.seeds.size()) + " differs from the cluster count");
  std::set<Cluster> from_seeds;
  for (const auto& ids : graph.seed_variables) {
    Cluster c;
    for (int v : ids) {
      auto id = model.id_of_weight(graph.g_vectors[static_cast<std::size_t>(v)]);
      if (id) c.push_back(*id);
    }
    std::sort(c.begin(), c.end());
    from_seeds.insert(c);
  }
  if (from_seeds != std::set<Cluster>(model.clusters().begin(), model.clusters().end()))
    report.failures.push_back("seeds labelled by g-vectors are not the c-clusters");
  return report;
}

CheckReport check_sorting(const ClusterModel& model) {
  CheckReport report;
  const CoxeterElement& c = model.coxeter();
  const WeylGroup& group = c.group();
  const WeylElement w0 = group.longest();
  const Word wm = w_m_word(c, c.max_h());
  const CoxeterElement greedy = coxeter_from_order(c.group_ptr(), greedy_expression(c));
  ++report.checked;
  if (c_sorting_word(greedy, w0).word != wm) report.failures.push_back("c-sorting word of w0 differs from w_m");
  if (!group.is_reduced(wm) || group.from_word(wm) != w0) report.failures.push_back("w_m is not a reduced word for w0");
  std::set<IntMatrix> brute, listed;
  for (const WeylElement& w : enumerate_group(group)) {
    ++report.checked;
    if (is_sortable(c, w) && is_antisortable(c, w)) brute.insert(w.matrix());
  }
  for (const Singleton& s : singletons(c)) listed.insert(s.element.matrix());
  if (brute != listed)
    report.failures.push_back("singletons: " + std::to_string(listed.size()) + " listed, " + std::to_string(brute.size()) +
                              " sortable and antisortable");
  return report;
}

CheckReport check_maps(const ClusterModel& model) {
  CheckReport report;
  const CoxeterElement& c = model.coxeter();
  const CartanDatum& datum = model.datum();
  const int n = model.rank();

  const IntMatrix& cw = c.element().matrix();
  for (LabelId a = 0; a < static_cast<LabelId>(model.size()); ++a) {
    ++report.checked;
    const IntVec& gamma = model.root(a);
    if (model.phi(model.weight(a)) != gamma) report.failures.push_back("phi does not send " + to_string(model.weight(a)) + " to its root");
    IntVec next;
    bool beta = false;
    for (Node i = 0; i < n; ++i)
      if (gamma == model.beta(i)) {
        next = -gamma;
        beta = true;
      }
    if (!beta) next = weight_to_root(datum, cw.apply(root_to_weight(datum, gamma)));
    if (next != model.root(model.tau(a))) report.failures.push_back("root-side tau disagrees at " + to_string(gamma));
    for (Node i = 0; i < n; ++i) {
      const Integer& x = gamma[static_cast<std::size_t>(i)];
      if (model.compat(model.initial_id(i), a) != (x > 0 ? x : Integer(0)))
        report.failures.push_back("initial degree of -beta_" + node_name(i) + " on " + to_string(gamma) + " is wrong");
    }
  }

  for (Node i = 0; i < n; ++i) {
    if (!c.is_initial(i) && !c.is_final(i)) continue;
    const ClusterModel to(elementary_move(c, i));
    const LabelMap map = sigma_map(model, to, i);
    const std::string name = "sigma_" + node_name(i);
    ++report.checked;
    if (!is_bijection(map, to.size())) {
      report.failures.push_back(name + " is not a bijection");
      continue;
    }
    check_preserves(report, name, model, to, map);
    for (LabelId a = 0; a < static_cast<LabelId>(model.size()); ++a)
      if (to.tau(map[static_cast<std::size_t>(a)]) != map[static_cast<std::size_t>(model.tau(a))])
        report.failures.push_back(name + " does not intertwine tau at " + to_string(model.root(a)));
  }

  {
    const ClusterModel to(c.inverse());
    const LabelMap map = bar_map(model, to);
    ++report.checked;
    if (!is_bijection(map, to.size())) {
      report.failures.push_back("bar is not a bijection");
    } else {
      check_preserves(report, "bar", model, to, map);
      for (LabelId a = 0; a < static_cast<LabelId>(model.size()); ++a)
        if (to.tau(map[static_cast<std::size_t>(model.tau(a))]) != map[static_cast<std::size_t>(a)])
          report.failures.push_back("bar does not intertwine tau at " + to_string(model.root(a)));
    }
  }

  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    NodeSet J;
    for (Node i = 0; i < n; ++i)
      if (mask & (1u << i)) J.push_back(i);
    const ClusterModel sub = restricted_model(model, J);
    const LabelMap map = iota_map(sub, model, J);
    const std::string name = "iota on " + word_to_string(J);
    for (LabelId a = 0; a < static_cast<LabelId>(sub.size()); ++a)
      for (LabelId b = 0; b < static_cast<LabelId>(sub.size()); ++b) {
        ++report.checked;
        if (sub.compat(a, b) != model.compat(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
          report.failures.push_back(name + " changes the degree of " + to_string(sub.root(a)) + ", " + to_string(sub.root(b)));
      }
    if (J.size() + 1 != static_cast<std::size_t>(n)) continue;
    for (std::size_t jj = 0; jj < J.size(); ++jj) {
      const Node j = J[jj];
      if (!c.is_initial(j)) continue;
      const ClusterModel to(elementary_move(c, j));
      const ClusterModel sub_to = restricted_model(to, J);
      const LabelMap sigma = sigma_map(model, to, j);
      const LabelMap sigma_sub = sigma_map(sub, sub_to, static_cast<Node>(jj));
      const LabelMap iota_to = iota_map(sub_to, to, J);
      for (LabelId a = 0; a < static_cast<LabelId>(sub.size()); ++a) {
        ++report.checked;
        if (sigma[static_cast<std::size_t>(map[static_cast<std::size_t>(a)])] !=
            iota_to[static_cast<std::size_t>(sigma_sub[static_cast<std::size_t>(a)])])
          report.failures.push_back("sigma_" + node_name(j) + " and " + name + " do not commute at " + to_string(sub.root(a)));
      }
    }
  }
  return report;
}

CheckReport check_bipartite(std::shared_ptr<const WeylGroup> group) {
  CheckReport report;
  const BipartiteOracle oracle(group);
  const ClusterModel model(oracle.t());
  const LabelMap map = oracle.t_minus_map(model);
  ++report.checked;
  if (!is_bijection(map, model.size())) {
    report.failures.push_back("t_- is not a bijection onto Phi_ap(t)");
    return report;
  }
  for (int a = 0; a < static_cast<int>(oracle.size()); ++a) {
    ++report.checked;
    if (model.tau(map[static_cast<std::size_t>(a)]) != map[static_cast<std::size_t>(oracle.tau(-1, oracle.tau(1, a)))])
      report.failures.push_back("t_- does not intertwine tau at " + to_string(oracle.labels()[static_cast<std::size_t>(a)]));
    for (int b = 0; b < static_cast<int>(oracle.size()); ++b) {
      ++report.checked;
      if (oracle.compat(a, b) != model.compat(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
        report.failures.push_back("t_- changes the degree of " + to_string(oracle.labels()[static_cast<std::size_t>(a)]) + ", " +
                                  to_string(oracle.labels()[static_cast<std::size_t>(b)]));
    }
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fan", "polytope", "cambrian", "exchange", "sorting", "maps", "all"};
  return names;
}

CheckReport run_suite(const std::string& name, const ClusterModel& model, const SuiteOptions& options) {
  const RatVec f = options.f.empty() ? default_f(model.datum()) : options.f;
  CheckReport report;
  if (name == "fan") {
    report.merge(check_z_basis(model));
    report.merge(check_expansions(model, options.seed, options.samples, options.box));
    report.merge(check_completeness(model));
    report.merge(check_tau_invariance(model));
  } else if (name == "polytope") {
    report.merge(check_polytope(model, f));
    std::mt19937_64 rng(options.seed);
    for (int k = 0; k < options.random_f; ++k) report.merge(check_polytope(model, random_valid_f(model.datum(), rng)));
  } else if (name == "cambrian") {
    report.merge(check_cambrian(model, f));
  } else if (name == "exchange") {
    report.merge(check_exchange(model));
  } else if (name == "sorting") {
    report.merge(check_sorting(model));
  } else if (name == "maps") {
    report.merge(check_maps(model));
    report.merge(check_bipartite(model.coxeter().group_ptr()));
  } else if (name == "all") {
    for (const std::string& suite : suite_names()) {
      if (suite == "all") continue;
      try {
        report.merge(run_suite(suite, model, options));
      } catch (const std::length_error& e) {
        report.skipped.push_back(suite + ": " + e.what());
      }
    }
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return report;
}

}  // namespace gassoc
