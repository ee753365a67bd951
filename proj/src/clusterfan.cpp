#include "gassoc/clusterfan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gassoc {

namespace {

int clip(const Integer& x) { return x > 0 ? static_cast<int>(x) : 0; }

IntMatrix root_reflection(const CartanDatum& datum, Node i) {
  const auto n = static_cast<std::size_t>(datum.rank());
  IntMatrix r = IntMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) r(static_cast<std::size_t>(i), k) -= datum.a(i, static_cast<Node>(k));
  return r;
}

void bron_kerbosch(std::vector<int>& r, std::vector<int> p, std::vector<int> x, const std::vector<std::vector<bool>>& adj,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    std::vector<int> clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (int u : *set) {
      std::size_t count = 0;
      for (int v : p)
        if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) ++count;
      if (pivot < 0 || count > best) {
        pivot = u;
        best = count;
      }
    }
  std::vector<int> candidates;
  for (int v : p)
    if (!adj[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)]) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> p2, x2;
    for (int u : p)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) p2.push_back(u);
    for (int u : x)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) x2.push_back(u);
    r.push_back(v);
    bron_kerbosch(r, std::move(p2), std::move(x2), adj, out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adjacent) {
  std::vector<int> r, p(adjacent.size());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  bron_kerbosch(r, std::move(p), {}, adjacent, out);
  std::sort(out.begin(), out.end());
  return out;
}

ClusterModel::ClusterModel(CoxeterElement c) : c_(std::move(c)) {
  const int n = rank();
  const CartanDatum& d = datum();
  const WeylElement& cw = c_.element();

  std::vector<IntVec> phi_columns;
  for (Node j = 0; j < n; ++j) {
    IntVec e = unit_vector(n, j);
    phi_columns.push_back(weight_to_root(d, c_.inverse_element().apply(e) - e));
  }
  phi_matrix_ = IntMatrix::from_columns(phi_columns);
  phi_inverse_matrix_ = inverse_unimodular(phi_matrix_);

  initial_.assign(static_cast<std::size_t>(n), -1);
  for (Node i = 0; i < n; ++i) {
    IntVec v = unit_vector(n, i);
    for (int m = 0; m <= c_.h(i); ++m) {
      const auto id = static_cast<LabelId>(pi_.size());
      if (!by_weight_.emplace(v, id).second) throw std::logic_error("Pi(c) has a repeated weight");
      if (m == 0) initial_[static_cast<std::size_t>(i)] = id;
      IntVec r = phi(v);
      if (m == 0) {
        phi_.push_back({true, i, r});
      } else {
        if (!roots().is_positive_root(r)) throw std::logic_error("phi_c sends a weight of Pi(c) outside Phi_ap(c)");
        phi_.push_back({false, -1, r});
      }
      if (!by_root_.emplace(r, id).second) throw std::logic_error("Phi_ap(c) has a repeated root");
      pi_.push_back({i, m, std::move(v)});
      v = cw.apply(pi_.back().weight);
    }
  }
  if (pi_.size() != roots().size() + static_cast<std::size_t>(n)) throw std::logic_error("|Pi(c)| differs from |Phi_+| + n");

  build_subsystems();
  for (Node i = 0; i < n; ++i)
    if (root(initial_id(i)) != -beta(i)) throw std::logic_error("phi_c(omega_i) differs from -beta_i^c");

  const std::size_t size = pi_.size();
  tau_fwd_.assign(size, -1);
  tau_back_.assign(size, -1);
  for (std::size_t id = 0; id < size; ++id) {
    const IntVec& w = pi_[id].weight;
    LabelId next = -1;
    for (Node j = 0; j < n && next < 0; ++j)
      if (w == -unit_vector(n, j)) next = initial_id(j);
    if (next < 0) {
      auto found = id_of_weight(cw.apply(w));
      if (!found) throw std::logic_error("Pi(c) is not stable under tau");
      next = *found;
    }
    tau_fwd_[id] = next;
    if (tau_back_[static_cast<std::size_t>(next)] >= 0) throw std::logic_error("tau is not a permutation of Pi(c)");
    tau_back_[static_cast<std::size_t>(next)] = static_cast<LabelId>(id);
  }

  std::vector<bool> seen(size, false);
  for (std::size_t start = 0; start < size; ++start) {
    if (seen[start]) continue;
    std::vector<LabelId> orbit;
    for (auto id = static_cast<LabelId>(start); !seen[static_cast<std::size_t>(id)]; id = tau_fwd_[static_cast<std::size_t>(id)]) {
      seen[static_cast<std::size_t>(id)] = true;
      orbit.push_back(id);
    }
    tau_order_ = std::lcm(tau_order_, static_cast<int>(orbit.size()));
    orbits_.push_back(std::move(orbit));
  }

  compat_.assign(size, std::vector<int>(size, 0));
  for (std::size_t a = 0; a < size; ++a) {
    int steps = 0;
    auto cur = static_cast<LabelId>(a);
    while (!phi_[static_cast<std::size_t>(cur)].neg_beta) {
      cur = tau_fwd_[static_cast<std::size_t>(cur)];
      ++steps;
    }
    const auto i = static_cast<std::size_t>(phi_[static_cast<std::size_t>(cur)].i);
    for (std::size_t b = 0; b < size; ++b) compat_[a][b] = clip(root(tau(static_cast<LabelId>(b), steps))[i]);
  }

  build_clusters();
}

std::optional<LabelId> ClusterModel::id_of_weight(const IntVec& weight) const {
  auto it = by_weight_.find(weight);
  if (it == by_weight_.end()) return std::nullopt;
  return it->second;
}

std::optional<LabelId> ClusterModel::id_of_root(const IntVec& root) const {
  auto it = by_root_.find(root);
  if (it == by_root_.end()) return std::nullopt;
  return it->second;
}

const IntVec& ClusterModel::beta(Node i) const { return subsystems_.back().beta[static_cast<std::size_t>(i)]; }

LabelId ClusterModel::tau(LabelId id, int exponent) const {
  const auto order = tau_order_;
  int e = ((exponent % order) + order) % order;
  for (; e > 0; --e) id = tau_fwd_[static_cast<std::size_t>(id)];
  return id;
}

void ClusterModel::build_subsystems() {
  const int n = rank();
  std::vector<IntMatrix> refl;
  for (Node i = 0; i < n; ++i) refl.push_back(root_reflection(datum(), i));
  const auto masks = std::size_t{1} << n;
  subsystems_.resize(masks);
  for (std::size_t mask = 0; mask < masks; ++mask) {
    Subsystem& sub = subsystems_[mask];
    for (Node i : c_.order())
      if (mask >> i & 1) sub.order.push_back(i);
    sub.c = IntMatrix::identity(static_cast<std::size_t>(n));
    sub.c_inv = sub.c;
    for (Node i : sub.order) sub.c = sub.c * refl[static_cast<std::size_t>(i)];
    for (auto it = sub.order.rbegin(); it != sub.order.rend(); ++it) sub.c_inv = sub.c_inv * refl[static_cast<std::size_t>(*it)];
    sub.beta.assign(static_cast<std::size_t>(n), IntVec{});
    for (std::size_t p = 0; p < sub.order.size(); ++p) {
      IntVec v = unit_vector(n, sub.order[p]);
      for (std::size_t q = p + 1; q < sub.order.size(); ++q) v = refl[static_cast<std::size_t>(sub.order[q])].apply(v);
      sub.beta[static_cast<std::size_t>(sub.order[p])] = std::move(v);
    }
  }
}

void ClusterModel::build_clusters() {
  std::vector<std::vector<Cluster>> per_component;
  for (std::size_t k = 0; k < datum().components().size(); ++k) {
    std::vector<LabelId> ids;
    for (LabelId id = 0; id < static_cast<LabelId>(size()); ++id)
      if (component_of(id) == static_cast<int>(k)) ids.push_back(id);
    std::vector<std::vector<bool>> adj(ids.size(), std::vector<bool>(ids.size(), false));
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = 0; b < ids.size(); ++b)
        adj[a][b] = a != b && compatible(ids[a], ids[b]);
    std::vector<Cluster> local;
    for (const auto& clique : maximal_cliques(adj)) {
      if (clique.size() != datum().components()[k].size()) throw std::logic_error("c-cluster complex is not pure");
      Cluster cl;
      for (int v : clique) cl.push_back(ids[static_cast<std::size_t>(v)]);
      local.push_back(std::move(cl));
    }
    per_component.push_back(std::move(local));
  }
  std::vector<Cluster> acc{{}};
  for (const auto& local : per_component) {
    std::vector<Cluster> next;
    for (const auto& left : acc)
      for (const auto& right : local) {
        Cluster merged = left;
        merged.insert(merged.end(), right.begin(), right.end());
        std::sort(merged.begin(), merged.end());
        next.push_back(std::move(merged));
      }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  clusters_ = std::move(acc);
}

ClusterModel::Abstract ClusterModel::tau_in(unsigned mask, const Abstract& a) const {
  const Subsystem& sub = subsystems_[mask];
  if (a.neg) return {false, -1, -sub.c.apply(sub.beta[static_cast<std::size_t>(a.i)])};
  for (Node j : sub.order)
    if (a.root == sub.beta[static_cast<std::size_t>(j)]) return {true, j, {}};
  return {false, -1, sub.c.apply(a.root)};
}

ClusterModel::AbstractExpansion ClusterModel::expand_in(unsigned mask, const IntVec& gamma) const {
  AbstractExpansion out;
  if (is_zero(gamma)) return out;
  const Subsystem& sub = subsystems_[mask];
  IntVec positive = gamma;
  unsigned rest = mask;
  for (Node i : sub.order) {
    const Integer& coeff = positive[static_cast<std::size_t>(i)];
    if (coeff >= 0) continue;
    Integer m = -coeff;
    positive += m * sub.beta[static_cast<std::size_t>(i)];
    out.emplace(Abstract{true, i, {}}, std::move(m));
    rest &= ~(1u << i);
  }
  if (is_zero(positive)) return out;

  const Subsystem& inner = subsystems_[rest];
  const std::size_t bound = 2 * roots().size() + 4;
  int k = 0;
  while (all_nonnegative(positive)) {
    positive = inner.c_inv.apply(positive);
    if (static_cast<std::size_t>(++k) > bound) throw std::logic_error("c^{-1} never leaves the positive cone");
  }
  for (const auto& [inner_label, coeff] : expand_in(rest, positive)) {
    Abstract label = inner_label;
    for (int step = 0; step < k; ++step) label = tau_in(rest, label);
    auto [it, inserted] = out.emplace(std::move(label), coeff);
    if (!inserted) throw std::logic_error("cluster expansion produced a repeated label");
  }
  return out;
}

LabelId ClusterModel::id_of_abstract(const Abstract& a) const {
  if (a.neg) return initial_id(a.i);
  auto id = id_of_root(a.root);
  if (!id || phi_[static_cast<std::size_t>(*id)].neg_beta) throw std::logic_error("expansion label is not a positive root");
  return *id;
}

Expansion ClusterModel::expand_root(const IntVec& gamma) const {
  if (gamma.size() != static_cast<std::size_t>(rank())) throw std::invalid_argument("expand: dimension mismatch");
  Expansion out;
  for (const auto& [label, coeff] : expand_in(static_cast<unsigned>(subsystems_.size() - 1), gamma))
    out.emplace(id_of_abstract(label), coeff);
  if (combine_roots(out) != gamma) throw std::logic_error("cluster expansion does not reconstruct its input");
  for (const auto& [a, ca] : out)
    for (const auto& [b, cb] : out)
      if (!compatible(a, b)) throw std::logic_error("cluster expansion support is not compatible");
  return out;
}

IntVec ClusterModel::combine_roots(const Expansion& e) const {
  IntVec out(static_cast<std::size_t>(rank()));
  for (const auto& [id, coeff] : e) out += coeff * root(id);
  return out;
}

IntVec ClusterModel::combine_weights(const Expansion& e) const {
  IntVec out(static_cast<std::size_t>(rank()));
  for (const auto& [id, coeff] : e) out += coeff * weight(id);
  return out;
}

IntVec ClusterModel::tau_extend_root(int m, const IntVec& gamma) const {
  IntVec out(static_cast<std::size_t>(rank()));
  for (const auto& [id, coeff] : expand_root(gamma)) out += coeff * root(tau(id, m));
  return out;
}

IntVec ClusterModel::tau_extend_weight(int m, const IntVec& lambda) const {
  return phi_inverse(tau_extend_root(m, phi(lambda)));
}

IntVec ClusterModel::uplus_root(LabelId a, LabelId b) const {
  if (compat(a, b) != 1 || compat(b, a) != 1) throw std::invalid_argument("uplus requires mutual compatibility degree 1");
  std::set<IntVec> values;
  for (int m = 0; m < tau_order_; ++m)
    values.insert(tau_extend_root(m, root(tau(a, -m)) + root(tau(b, -m))));
  const IntVec sum = root(a) + root(b);
  const IntVec zero(static_cast<std::size_t>(rank()));
  if (values.size() == 1 && sum == zero && *values.begin() == zero) return zero;
  if (values.size() != 2 || !values.count(sum))
    throw std::logic_error("tau-orbit of an exchangeable sum does not have exactly two elements");
  values.erase(sum);
  return *values.begin();
}

}  // namespace gassoc
