#include "gassoc/mutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace gassoc {

namespace {

int positive_part(const Integer& x) { return x > 0 ? static_cast<int>(x) : 0; }

std::vector<IntVec> principal_degrees(const IntMatrix& b0) {
  const auto n = b0.rows();
  std::vector<IntVec> degrees;
  for (std::size_t i = 0; i < n; ++i) degrees.push_back(unit_vector(static_cast<int>(n), static_cast<Node>(i)));
  for (std::size_t j = 0; j < n; ++j) degrees.push_back(-b0.column(j));
  return degrees;
}

}  // namespace

IntMatrix b_of_coxeter(const CoxeterElement& c, bool flip) {
  const auto n = static_cast<std::size_t>(c.rank());
  IntMatrix b(n, n);
  for (Node i = 0; i < c.rank(); ++i)
    for (Node j = 0; j < c.rank(); ++j) {
      if (!c.datum().adjacent(i, j)) continue;
      Integer value = c.precedes(i, j) ? Integer(-c.datum().a(i, j)) : c.datum().a(i, j);
      b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = flip ? Integer(-value) : value;
    }
  return b;
}

IntMatrix mutate_matrix(const IntMatrix& b, int k) {
  const auto kk = static_cast<std::size_t>(k);
  IntMatrix out = b;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == kk || j == kk) {
        out(i, j) = -b(i, j);
        continue;
      }
      const Integer prod = b(i, kk) * b(kk, j);
      if (prod > 0) out(i, j) = b(i, j) + (b(i, kk) > 0 ? prod : Integer(-prod));
    }
  return out;
}

Seed initial_seed(const IntMatrix& b) {
  const auto n = b.rows();
  Seed s{b, IntMatrix::identity(n), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    s.x.push_back(Laurent::variable(2 * n, i));
    s.g.push_back(unit_vector(static_cast<int>(n), static_cast<Node>(i)));
  }
  return s;
}

Seed mutate(const Seed& seed, const IntMatrix& b0, int k) {
  const auto n = seed.b.rows();
  const auto kk = static_cast<std::size_t>(k);
  Laurent::Exponents plus(2 * n, 0), minus(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    plus[n + i] = positive_part(seed.c(i, kk));
    minus[n + i] = positive_part(-seed.c(i, kk));
  }
  Laurent m1 = Laurent::monomial(plus), m2 = Laurent::monomial(minus);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& bik = seed.b(i, kk);
    if (bik > 0) m1 = m1 * seed.x[i].pow(static_cast<unsigned>(bik));
    if (bik < 0) m2 = m2 * seed.x[i].pow(static_cast<unsigned>(-bik));
  }
  auto quotient = (m1 + m2).divide_exact(seed.x[kk]);
  if (!quotient) throw LaurentViolation("exchange quotient in direction " + std::to_string(k + 1) + " is not a Laurent polynomial");

  Seed out = seed;
  out.x[kk] = std::move(*quotient);
  IntVec g = -seed.g[kk];
  for (std::size_t i = 0; i < n; ++i) {
    g += Integer(positive_part(seed.b(i, kk))) * seed.g[i];
    g += Integer(-positive_part(seed.c(i, kk))) * b0.column(i);
  }
  out.g[kk] = std::move(g);

  IntMatrix extended(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      extended(i, j) = seed.b(i, j);
      extended(n + i, j) = seed.c(i, j);
    }
  extended = mutate_matrix(extended, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.b(i, j) = extended(i, j);
      out.c(i, j) = extended(n + i, j);
    }
  return out;
}

std::vector<Laurent> coefficient_free(const Seed& seed) {
  std::vector<Laurent> out;
  for (const auto& x : seed.x) out.push_back(x.specialize_tail(seed.b.rows()));
  return out;
}

std::vector<Laurent> mutate_coefficient_free(const IntMatrix& b, const std::vector<Laurent>& x, int k) {
  const auto n = b.rows();
  const auto kk = static_cast<std::size_t>(k);
  Laurent m1 = Laurent::constant(n, 1), m2 = Laurent::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& bik = b(i, kk);
    if (bik > 0) m1 = m1 * x[i].pow(static_cast<unsigned>(bik));
    if (bik < 0) m2 = m2 * x[i].pow(static_cast<unsigned>(-bik));
  }
  auto quotient = (m1 + m2).divide_exact(x[kk]);
  if (!quotient) throw LaurentViolation("coefficient-free exchange quotient is not a Laurent polynomial");
  std::vector<Laurent> out = x;
  out[kk] = std::move(*quotient);
  return out;
}

IntVec graded_g_vector(const Laurent& x, const IntMatrix& b0) {
  auto degree = x.homogeneous_degree(principal_degrees(b0));
  if (!degree) throw std::logic_error("cluster variable is not homogeneous for the principal grading");
  return *degree;
}

int exchange_rank_cap() {
  if (const char* env = std::getenv("GASSOC_EXCHANGE_RANK_CAP")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 4;
}

ExchangeGraph exchange_graph(const CoxeterElement& c, bool flip, int rank_cap) {
  const int n = c.rank();
  if (n > rank_cap)
    throw std::length_error("exchange graph rank " + std::to_string(n) + " exceeds the cap " + std::to_string(rank_cap));
  ExchangeGraph graph;
  graph.b0 = b_of_coxeter(c, flip);

  std::map<std::vector<Laurent>, int> seed_index;
  std::map<Laurent, int> variable_index;
  auto register_variable = [&](const Laurent& v, const IntVec& g) {
    auto [it, inserted] = variable_index.emplace(v, static_cast<int>(graph.variables.size()));
    if (inserted) {
      graph.variables.push_back(v);
      graph.g_vectors.push_back(g);
    } else if (graph.g_vectors[static_cast<std::size_t>(it->second)] != g) {
      throw std::logic_error("one cluster variable received two g-vectors");
    }
    return it->second;
  };
  auto add_seed = [&](Seed s) {
    std::vector<Laurent> free = coefficient_free(s);
    std::vector<int> ids;
    for (std::size_t k = 0; k < free.size(); ++k) ids.push_back(register_variable(free[k], s.g[k]));
    std::sort(free.begin(), free.end());
    auto [it, inserted] = seed_index.emplace(free, static_cast<int>(graph.seeds.size()));
    if (inserted) {
      std::sort(ids.begin(), ids.end());
      if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw std::logic_error("a seed repeats a cluster variable");
      graph.seeds.push_back(std::move(s));
      graph.seed_variables.push_back(std::move(ids));
    }
    return it->second;
  };

  add_seed(initial_seed(graph.b0));
  std::set<std::pair<int, int>> seen_edges;
  const std::size_t seed_cap = 1000000;
  for (std::size_t s = 0; s < graph.seeds.size(); ++s) {
    if (graph.seeds.size() > seed_cap) throw std::length_error("exchange graph is larger than the seed cap");
    std::set<int> neighbours;
    for (int k = 0; k < n; ++k) {
      const Seed cur = graph.seeds[s];
      Seed next = mutate(cur, graph.b0, k);
      const auto kk = static_cast<std::size_t>(k);
      if (graded_g_vector(next.x[kk], graph.b0) != next.g[kk])
        throw std::logic_error("g-vector recurrence disagrees with the principal grading");
      std::vector<Laurent> direct = mutate_coefficient_free(cur.b, coefficient_free(cur), k);
      if (direct != coefficient_free(next)) throw std::logic_error("coefficient-free mutation disagrees with y = 1");
      const int out_var = variable_index.at(coefficient_free(cur)[kk]);
      const int t = add_seed(next);
      const int in_var = variable_index.at(coefficient_free(next)[kk]);
      neighbours.insert(t);
      const int from = static_cast<int>(s);
      if (seen_edges.insert({std::min(from, t), std::max(from, t)}).second) graph.edges.push_back({from, t, out_var, in_var});
    }
    if (static_cast<int>(neighbours.size()) != n || neighbours.count(static_cast<int>(s)))
      throw std::logic_error("exchange graph is not " + std::to_string(n) + "-regular");
  }
  return graph;
}

Laurent cluster_monomial(const ExchangeGraph& graph, const ClusterModel& model, const IntVec& weight) {
  const auto n = static_cast<std::size_t>(model.rank());
  std::map<IntVec, std::size_t> by_g;
  for (std::size_t v = 0; v < graph.g_vectors.size(); ++v) by_g.emplace(graph.g_vectors[v], v);
  Laurent out = Laurent::constant(n, 1);
  for (const auto& [id, coeff] : model.expand_weight(weight)) {
    auto it = by_g.find(model.weight(id));
    if (it == by_g.end()) throw std::logic_error("no cluster variable has g-vector " + to_string(model.weight(id)));
    out = out * graph.variables[it->second].pow(static_cast<unsigned>(coeff));
  }
  return out;
}

CheckReport verify_exchange_relations(const ExchangeGraph& graph, const ClusterModel& model) {
  CheckReport report;
  std::vector<LabelId> label_of(graph.variables.size(), -1);
  for (std::size_t v = 0; v < graph.variables.size(); ++v) {
    auto id = model.id_of_weight(graph.g_vectors[v]);
    if (!id) {
      report.failures.push_back("g-vector " + to_string(graph.g_vectors[v]) + " is not in Pi(c)");
      continue;
    }
    label_of[v] = *id;
  }
  if (graph.variables.size() != model.size())
    report.failures.push_back("cluster variable count " + std::to_string(graph.variables.size()) + " differs from |Pi(c)|");
  if (!report.ok()) return report;
  for (const ExchangeEdge& e : graph.edges) {
    ++report.checked;
    const LabelId a = label_of[static_cast<std::size_t>(e.variable_out)];
    const LabelId b = label_of[static_cast<std::size_t>(e.variable_in)];
    const std::string pair = to_string(model.weight(a)) + ", " + to_string(model.weight(b));
    if (model.compat(a, b) != 1 || model.compat(b, a) != 1) {
      report.failures.push_back("exchanged labels " + pair + " do not have mutual degree 1");
      continue;
    }
    const Laurent lhs = graph.variables[static_cast<std::size_t>(e.variable_out)] * graph.variables[static_cast<std::size_t>(e.variable_in)];
    const Laurent rhs = cluster_monomial(graph, model, model.weight(a) + model.weight(b)) +
                        cluster_monomial(graph, model, model.uplus_weight(a, b));
    if (lhs != rhs) report.failures.push_back("exchange relation fails for " + pair);
  }
  return report;
}

}  // namespace gassoc
