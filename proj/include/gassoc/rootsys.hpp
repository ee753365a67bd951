// Finite-type Cartan data, the lattices P and Q, and positive roots.
//
// Conventions used throughout the library:
//   * nodes are 0-based internally and printed 1-based (Bourbaki numbering);
//   * the Cartan matrix satisfies alpha_j = sum_i a_ij omega_i, so a column
//     of A is a simple root written in the weight basis;
//   * roots are stored in root-basis coordinates, weights in weight-basis
//     coordinates, and conversions between the two are always explicit.
#pragma once

#include "gassoc/numeric.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gassoc {

using Node = int;
using NodeSet = std::vector<Node>;  // sorted, duplicate free

class CartanDatum {
 public:
  /// Validates finiteness (symmetrizable, positive-definite symmetrization).
  /// Throws std::invalid_argument when the matrix is not of finite type.
  CartanDatum(std::string label, IntMatrix cartan);

  const std::string& label() const { return label_; }
  int rank() const { return static_cast<int>(cartan_.rows()); }
  const IntMatrix& cartan() const { return cartan_; }
  const Integer& a(Node i, Node j) const { return cartan_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); }
  bool adjacent(Node i, Node j) const { return i != j && !a(i, j).is_zero(); }
  std::vector<Node> neighbours(Node i) const;

  /// Connected components of the diagram, each sorted, ordered by first node.
  const std::vector<NodeSet>& components() const { return components_; }
  int component_of(Node i) const { return component_of_[static_cast<std::size_t>(i)]; }
  /// Positive integers d_i with d_i a_ij = d_j a_ji.
  const IntVec& symmetrizer() const { return symmetrizer_; }

  /// det(A) and adj(A), so A^{-1} = adj / det.
  const Integer& cartan_det() const { return det_; }
  const IntMatrix& cartan_adjugate() const { return adj_; }

  bool operator==(const CartanDatum& other) const { return cartan_ == other.cartan_; }

 private:
  std::string label_;
  IntMatrix cartan_;
  std::vector<NodeSet> components_;
  std::vector<int> component_of_;
  IntVec symmetrizer_;
  Integer det_;
  IntMatrix adj_;
};

/// Parses products of irreducible finite types joined by 'x', e.g. "A3",
/// "B2xG2", "A1xA1". Node numbering follows the Bourbaki tables.
CartanDatum make_datum(std::string_view label);

/// Custom Cartan matrix behind the same validation gate as make_datum.
CartanDatum datum_from_matrix(const IntMatrix& cartan, std::string label = "custom");

/// Principal sub-datum on `nodes` (re-indexed 0..|nodes|-1 in the given order).
CartanDatum restrict_datum(const CartanDatum& datum, const NodeSet& nodes);

enum class Basis { Root, Weight };

/// Basis-tagged exact coordinate vector. Arithmetic mixing the two bases is
/// rejected with std::invalid_argument.
class LatticeVector {
 public:
  LatticeVector(Basis basis, RatVec coords) : basis_(basis), coords_(std::move(coords)) {}
  LatticeVector(Basis basis, const IntVec& coords) : basis_(basis), coords_(to_rational(coords)) {}

  static LatticeVector simple_root(const CartanDatum& datum, Node i);
  static LatticeVector fundamental_weight(const CartanDatum& datum, Node i);

  Basis basis() const { return basis_; }
  const RatVec& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  bool is_integral() const;
  /// Throws std::domain_error if some coordinate is not an integer.
  IntVec integer_coords() const;

  LatticeVector operator+(const LatticeVector& other) const;
  LatticeVector operator-(const LatticeVector& other) const;
  LatticeVector operator-() const;
  friend LatticeVector operator*(const Rational& s, const LatticeVector& v);
  bool operator==(const LatticeVector& other) const = default;

 private:
  Basis basis_;
  RatVec coords_;
};

LatticeVector convert(const CartanDatum& datum, const LatticeVector& v, Basis target);
LatticeVector reflect(const CartanDatum& datum, Node i, const LatticeVector& v);

// Integer fast paths used by the hot loops elsewhere.
IntVec root_to_weight(const CartanDatum& datum, const IntVec& root);
/// Throws std::domain_error if the weight is not in the root lattice.
IntVec weight_to_root(const CartanDatum& datum, const IntVec& weight);
IntVec reflect_root(const CartanDatum& datum, Node i, IntVec root);
IntVec reflect_weight(const CartanDatum& datum, Node i, IntVec weight);
IntVec unit_vector(int n, Node i);

class RootSystem {
 public:
  explicit RootSystem(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  /// Positive roots in root coordinates, sorted by height then coordinates.
  const std::vector<IntVec>& positive_roots() const { return positive_; }
  std::size_t size() const { return positive_.size(); }
  /// Index of a positive root, or -1.
  int index_of(const IntVec& root) const;
  bool is_positive_root(const IntVec& root) const { return index_of(root) >= 0; }
  bool is_root(const IntVec& v) const;

  /// Number of positive roots supported on the component.
  std::size_t component_size(int component) const;
  /// Coxeter number of a connected component: 2 |Phi_+| / rank.
  int coxeter_number(int component) const;

 private:
  CartanDatum datum_;
  std::vector<IntVec> positive_;
  std::map<IntVec, int> index_;
};

/// Support of a positive root: nodes with a nonzero coordinate. Throws
/// std::invalid_argument when `root` is not a positive root of `roots`.
NodeSet support(const RootSystem& roots, const IntVec& root);

/// Two node sets are spaced if no node of one is adjacent to (or equal to) a
/// node of the other.
bool spaced(const CartanDatum& datum, const NodeSet& a, const NodeSet& b);

/// "s1s2s3" style rendering helpers (1-based).
std::string node_name(Node i);

}  // namespace gassoc
