#include "gassoc/clusterfan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gassoc {

namespace {

LabelId lookup_root(const ClusterModel& model, const IntVec& root) {
  auto id = model.id_of_root(root);
  if (!id) throw std::logic_error("image is not a c-almost positive root");
  return *id;
}

// sigma_i : Phi_ap(src) -> Phi_ap(dst) with i initial in src and dst = s_i src s_i.
LabelMap sigma_forward(const ClusterModel& src, const ClusterModel& dst, Node i) {
  LabelMap out(src.size());
  for (LabelId id = 0; id < static_cast<LabelId>(src.size()); ++id) {
    if (id == src.initial_id(i))
      out[static_cast<std::size_t>(id)] = lookup_root(dst, unit_vector(src.rank(), i));
    else
      out[static_cast<std::size_t>(id)] = lookup_root(dst, reflect_root(src.datum(), i, src.root(id)));
  }
  return out;
}

IntMatrix root_part_product(const CartanDatum& datum, const NodeSet& part) {
  const auto n = static_cast<std::size_t>(datum.rank());
  IntMatrix out = IntMatrix::identity(n);
  for (Node i : part) {
    IntMatrix r = IntMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) r(static_cast<std::size_t>(i), k) -= datum.a(i, static_cast<Node>(k));
    out = out * r;
  }
  return out;
}

}  // namespace

LabelMap sigma_map(const ClusterModel& from, const ClusterModel& to, Node i) {
  const CoxeterElement& c = from.coxeter();
  if (c.is_initial(i)) {
    if (to.coxeter() != elementary_move(c, i)) throw std::invalid_argument("sigma: target model is not s_i c s_i");
    return sigma_forward(from, to, i);
  }
  if (c.is_final(i)) {
    if (to.coxeter() != elementary_move(c, i)) throw std::invalid_argument("sigma: target model is not s_i c s_i");
    LabelMap back = sigma_forward(to, from, i);
    LabelMap out(from.size(), -1);
    for (std::size_t k = 0; k < back.size(); ++k) out[static_cast<std::size_t>(back[k])] = static_cast<LabelId>(k);
    return out;
  }
  throw std::invalid_argument("sigma: s" + node_name(i) + " is neither initial nor final in " + c.to_string());
}

LabelMap bar_map(const ClusterModel& from, const ClusterModel& to) {
  if (to.coxeter() != from.coxeter().inverse()) throw std::invalid_argument("bar: target model is not c^{-1}");
  LabelMap out(from.size());
  for (LabelId id = 0; id < static_cast<LabelId>(from.size()); ++id) {
    const RootLabel& l = from.phi_labels()[static_cast<std::size_t>(id)];
    out[static_cast<std::size_t>(id)] = l.neg_beta ? to.initial_id(l.i) : lookup_root(to, l.root);
  }
  return out;
}

LabelMap iota_map(const ClusterModel& sub, const ClusterModel& full, const NodeSet& J) {
  if (static_cast<int>(J.size()) != sub.rank()) throw std::invalid_argument("iota: subset size differs from the sub-model rank");
  LabelMap out(sub.size());
  for (LabelId id = 0; id < static_cast<LabelId>(sub.size()); ++id) {
    const RootLabel& l = sub.phi_labels()[static_cast<std::size_t>(id)];
    if (l.neg_beta) {
      out[static_cast<std::size_t>(id)] = full.initial_id(J[static_cast<std::size_t>(l.i)]);
      continue;
    }
    IntVec lifted(static_cast<std::size_t>(full.rank()));
    for (std::size_t k = 0; k < J.size(); ++k) lifted[static_cast<std::size_t>(J[k])] = l.root[k];
    out[static_cast<std::size_t>(id)] = lookup_root(full, lifted);
  }
  return out;
}

ClusterModel restricted_model(const ClusterModel& model, const NodeSet& J) {
  if (J.empty()) throw std::invalid_argument("restriction to the empty set");
  if (!std::is_sorted(J.begin(), J.end()) || std::adjacent_find(J.begin(), J.end()) != J.end())
    throw std::invalid_argument("restriction set must be sorted and duplicate free");
  Word order;
  for (Node i : model.coxeter().order()) {
    auto it = std::find(J.begin(), J.end(), i);
    if (it != J.end()) order.push_back(static_cast<Node>(it - J.begin()));
  }
  auto group = std::make_shared<const WeylGroup>(restrict_datum(model.datum(), J));
  return ClusterModel(CoxeterElement(group, std::move(order)));
}

BipartiteOracle::BipartiteOracle(std::shared_ptr<const WeylGroup> group)
    : group_(group), plus_(bipartition_plus(group->datum())), t_(bipartite_coxeter(group, 1)) {
  const CartanDatum& d = group_->datum();
  const int n = d.rank();
  NodeSet minus;
  for (Node i = 0; i < n; ++i)
    if (!in_plus(i)) minus.push_back(i);
  t_plus_ = root_part_product(d, plus_);
  t_minus_ = root_part_product(d, minus);

  labels_ = group_->roots().positive_roots();
  for (Node i = 0; i < n; ++i) labels_.push_back(-unit_vector(n, i));
  for (std::size_t k = 0; k < labels_.size(); ++k) index_.emplace(labels_[k], static_cast<int>(k));

  auto build = [&](int sign) {
    std::vector<int> out;
    for (const auto& v : labels_) {
      bool fixed = false;
      for (Node i = 0; i < n; ++i)
        if (v == -unit_vector(n, i) && in_plus(i) != (sign > 0)) fixed = true;
      if (fixed) {
        out.push_back(*index_of(v));
        continue;
      }
      auto image = index_of((sign > 0 ? t_plus_ : t_minus_).apply(v));
      if (!image) throw std::logic_error("tau_epsilon leaves the almost positive roots");
      out.push_back(*image);
    }
    return out;
  };
  tau_plus_ = build(1);
  tau_minus_ = build(-1);

  // The group generated by tau_+ and tau_- as permutations of the labels.
  std::vector<int> identity(labels_.size());
  for (std::size_t k = 0; k < identity.size(); ++k) identity[k] = static_cast<int>(k);
  std::set<std::vector<int>> seen{identity};
  std::vector<std::vector<int>> elements{identity};
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (const auto* gen : {&tau_plus_, &tau_minus_}) {
      std::vector<int> next(labels_.size());
      for (std::size_t x = 0; x < next.size(); ++x) next[x] = (*gen)[static_cast<std::size_t>(elements[k][x])];
      if (seen.insert(next).second) elements.push_back(std::move(next));
    }

  const std::size_t size = labels_.size();
  compat_.assign(size, std::vector<int>(size, -1));
  for (std::size_t a = 0; a < size; ++a)
    for (const auto& g : elements) {
      const IntVec& image = labels_[static_cast<std::size_t>(g[a])];
      Node i = -1;
      for (Node j = 0; j < n; ++j)
        if (image == -unit_vector(n, j)) i = j;
      if (i < 0) continue;
      for (std::size_t b = 0; b < size; ++b) {
        const Integer& coeff = labels_[static_cast<std::size_t>(g[b])][static_cast<std::size_t>(i)];
        int value = coeff > 0 ? static_cast<int>(coeff) : 0;
        if (compat_[a][b] >= 0 && compat_[a][b] != value)
          throw std::logic_error("almost positive compatibility degree is not tau-invariant");
        compat_[a][b] = value;
      }
    }
  for (const auto& row : compat_)
    if (std::find(row.begin(), row.end(), -1) != row.end())
      throw std::logic_error("a tau_+/tau_- orbit misses the negative simple roots");
}

bool BipartiteOracle::in_plus(Node i) const { return std::binary_search(plus_.begin(), plus_.end(), i); }

std::optional<int> BipartiteOracle::index_of(const IntVec& root) const {
  auto it = index_.find(root);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int BipartiteOracle::tau(int sign, int index) const {
  return (sign > 0 ? tau_plus_ : tau_minus_)[static_cast<std::size_t>(index)];
}

LabelMap BipartiteOracle::t_minus_map(const ClusterModel& model) const {
  if (model.coxeter() != t_) throw std::invalid_argument("t_minus_map: model is not built on t = t_+ t_-");
  LabelMap out;
  for (const auto& v : labels_) out.push_back(lookup_root(model, t_minus(v)));
  return out;
}

}  // namespace gassoc
