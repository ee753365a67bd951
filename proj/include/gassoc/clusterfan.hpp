// Pi(c), the c-almost positive roots, tau, compatibility degrees, clusters and
// cluster expansions.
//
// Every label has one integer id shared by both sides: id k is the weight
// c^m omega_i on the Pi side and phi_c(c^m omega_i) on the root side. Ids are
// ordered by (i, m), so the initial cluster {omega_i} = {-beta_i^c} consists of
// the ids with m = 0.
#pragma once

#include "gassoc/coxweyl.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace gassoc {

using LabelId = int;
using Cluster = std::vector<LabelId>;           // sorted
using Expansion = std::map<LabelId, Integer>;  // strictly positive coefficients

struct PiLabel {
  Node i;
  int m;
  IntVec weight;  // weight coordinates of c^m omega_i
};

struct RootLabel {
  bool neg_beta;  // true for -beta_i^c
  Node i;         // node of -beta_i^c, -1 for positive roots
  IntVec root;    // root coordinates (the actual vector, negative for -beta_i^c)
};

class ClusterModel {
 public:
  explicit ClusterModel(CoxeterElement c);

  const CoxeterElement& coxeter() const { return c_; }
  const CartanDatum& datum() const { return c_.datum(); }
  const RootSystem& roots() const { return c_.group().roots(); }
  int rank() const { return c_.rank(); }
  std::size_t size() const { return pi_.size(); }

  const std::vector<PiLabel>& pi_labels() const { return pi_; }
  const std::vector<RootLabel>& phi_labels() const { return phi_; }
  const IntVec& weight(LabelId id) const { return pi_[static_cast<std::size_t>(id)].weight; }
  const IntVec& root(LabelId id) const { return phi_[static_cast<std::size_t>(id)].root; }
  std::optional<LabelId> id_of_weight(const IntVec& weight) const;
  std::optional<LabelId> id_of_root(const IntVec& root) const;
  /// Id of omega_i, equivalently of -beta_i^c.
  LabelId initial_id(Node i) const { return initial_[static_cast<std::size_t>(i)]; }
  /// beta_i^c = s_n ... s_{i+1} alpha_i, root coordinates.
  const IntVec& beta(Node i) const;
  /// Component of the diagram a label lives on.
  int component_of(LabelId id) const { return datum().component_of(pi_[static_cast<std::size_t>(id)].i); }

  /// phi_c = c^{-1} - 1 from weight coordinates to root coordinates, and back.
  IntVec phi(const IntVec& weight) const { return phi_matrix_.apply(weight); }
  IntVec phi_inverse(const IntVec& root) const { return phi_inverse_matrix_.apply(root); }

  LabelId tau(LabelId id, int exponent = 1) const;
  /// Order of tau on labels (lcm of orbit lengths).
  int tau_order() const { return tau_order_; }
  /// tau-orbits; each starts at the smallest id it contains and follows tau.
  const std::vector<std::vector<LabelId>>& orbits() const { return orbits_; }

  int compat(LabelId a, LabelId b) const { return compat_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  const std::vector<std::vector<int>>& compat_table() const { return compat_; }
  bool compatible(LabelId a, LabelId b) const { return compat(a, b) == 0; }

  /// All c-clusters, sorted.
  const std::vector<Cluster>& clusters() const { return clusters_; }

  /// Unique c-cluster expansion of a point of Q (root coordinates).
  Expansion expand_root(const IntVec& gamma) const;
  /// Unique c-cluster expansion of a point of P (weight coordinates).
  Expansion expand_weight(const IntVec& lambda) const { return expand_root(phi(lambda)); }
  IntVec combine_roots(const Expansion& e) const;
  IntVec combine_weights(const Expansion& e) const;

  /// Piecewise-linear extension of tau^m.
  IntVec tau_extend_root(int m, const IntVec& gamma) const;
  IntVec tau_extend_weight(int m, const IntVec& lambda) const;

  /// The element of {tau^m(tau^{-m} a + tau^{-m} b)} other than a + b (0 on
  /// an A1 component). Requires (a||b) = 1 = (b||a).
  IntVec uplus_root(LabelId a, LabelId b) const;
  IntVec uplus_weight(LabelId a, LabelId b) const { return phi_inverse(uplus_root(a, b)); }

 private:
  struct Subsystem {
    IntMatrix c, c_inv;         // root coordinates, identity off J
    std::vector<IntVec> beta;   // beta_i^{c_J} for i in J, empty otherwise
    Word order;                 // c_J
  };
  struct Abstract {
    bool neg;
    Node i;
    IntVec root;  // positive roots only
    bool operator<(const Abstract& o) const { return std::tie(neg, i, root) < std::tie(o.neg, o.i, o.root); }
  };
  using AbstractExpansion = std::map<Abstract, Integer>;

  AbstractExpansion expand_in(unsigned mask, const IntVec& gamma) const;
  Abstract tau_in(unsigned mask, const Abstract& a) const;
  LabelId id_of_abstract(const Abstract& a) const;
  void build_subsystems();
  void build_clusters();

  CoxeterElement c_;
  std::vector<PiLabel> pi_;
  std::vector<RootLabel> phi_;
  std::map<IntVec, LabelId> by_weight_, by_root_;
  std::vector<LabelId> initial_;
  IntMatrix phi_matrix_, phi_inverse_matrix_;
  std::vector<LabelId> tau_fwd_, tau_back_;
  int tau_order_ = 1;
  std::vector<std::vector<LabelId>> orbits_;
  std::vector<std::vector<int>> compat_;
  std::vector<Cluster> clusters_;
  std::vector<Subsystem> subsystems_;
};

/// Maximal cliques of an undirected graph given by adjacency lists over
/// vertices 0..n-1 (Bron-Kerbosch with pivoting). Each clique is sorted.
std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adjacent);

/// Id maps between models: result[k] is the image of id k.
using LabelMap = std::vector<LabelId>;

/// sigma_i : Phi_ap(c) -> Phi_ap(s_i c s_i) for i initial in c; for i final
/// in c the inverse of sigma_i : Phi_ap(s_i c s_i) -> Phi_ap(c) is returned.
/// `to` must be the model of s_i c s_i.
LabelMap sigma_map(const ClusterModel& from, const ClusterModel& to, Node i);
/// Phi_ap(c) -> Phi_ap(c^{-1}). `to` must be the model of c^{-1}.
LabelMap bar_map(const ClusterModel& from, const ClusterModel& to);
/// Phi_ap^J(c_J) -> Phi_ap(c). `sub` is the model of c_J on restrict_datum(datum, J).
LabelMap iota_map(const ClusterModel& sub, const ClusterModel& full, const NodeSet& J);
/// Model of c_J on the principal sub-datum J.
ClusterModel restricted_model(const ClusterModel& model, const NodeSet& J);

/// The almost positive roots Phi_{>=-1} = Phi_+ and {-alpha_i}, with the
/// involutions tau_+, tau_- and the compatibility degree they define.
class BipartiteOracle {
 public:
  explicit BipartiteOracle(std::shared_ptr<const WeylGroup> group);

  const NodeSet& plus() const { return plus_; }
  bool in_plus(Node i) const;
  /// t = t_+ t_-.
  const CoxeterElement& t() const { return t_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<IntVec>& labels() const { return labels_; }
  std::optional<int> index_of(const IntVec& root) const;
  /// sign > 0: tau_+, sign < 0: tau_-.
  int tau(int sign, int index) const;
  int compat(int a, int b) const { return compat_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  /// The linear map t_- on root coordinates.
  IntVec t_minus(const IntVec& root) const { return t_minus_.apply(root); }
  /// Phi_{>=-1} -> Phi_ap(t) via t_-; `model` must be the model of t().
  LabelMap t_minus_map(const ClusterModel& model) const;

 private:
  std::shared_ptr<const WeylGroup> group_;
  NodeSet plus_;
  CoxeterElement t_;
  IntMatrix t_plus_, t_minus_;
  std::vector<IntVec> labels_;
  std::map<IntVec, int> index_;
  std::vector<int> tau_plus_, tau_minus_;
  std::vector<std::vector<int>> compat_;
};

}  // namespace gassoc
