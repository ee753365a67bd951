// Weyl group elements, Coxeter elements and sorting words.
//
// A word s_{i1} s_{i2} ... s_{ik} is stored left to right and acts as the
// matrix product M_{i1} ... M_{ik}, i.e. the rightmost letter acts first.
#pragma once

#include "gassoc/rootsys.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gassoc {

using Word = std::vector<Node>;

/// "s1s2s3" (1-based), "e" for the empty word.
std::string word_to_string(const Word& w);
/// Accepts "s2s3s2", "2,3,2", "2 3 2" or "e". Letters are 1-based in the input.
Word parse_word(std::string_view text, int rank);
/// Cartier-Foata test: same letters and same relative order of every pair of
/// non-commuting letters.
bool commutation_equivalent(const CartanDatum& datum, const Word& a, const Word& b);

/// Element of W stored as its integer matrix on weight coordinates.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(IntMatrix matrix) : matrix_(std::move(matrix)) {}
  static WeylElement identity(int rank) { return WeylElement(IntMatrix::identity(static_cast<std::size_t>(rank))); }

  const IntMatrix& matrix() const { return matrix_; }
  int rank() const { return static_cast<int>(matrix_.rows()); }
  IntVec apply(const IntVec& weight) const { return matrix_.apply(weight); }
  WeylElement operator*(const WeylElement& other) const { return WeylElement(matrix_ * other.matrix_); }
  WeylElement inverse() const { return WeylElement(inverse_unimodular(matrix_)); }

  bool operator==(const WeylElement& other) const { return matrix_ == other.matrix_; }
  bool operator<(const WeylElement& other) const { return matrix_ < other.matrix_; }

 private:
  IntMatrix matrix_;
};

class WeylGroup {
 public:
  explicit WeylGroup(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  const RootSystem& roots() const { return roots_; }
  int rank() const { return datum_.rank(); }

  const WeylElement& reflection(Node i) const { return reflections_[static_cast<std::size_t>(i)]; }
  WeylElement from_word(const Word& w) const;
  const WeylElement& longest() const { return w0_; }
  /// The diagram involution with w0 omega_i = -omega_{i*}.
  Node star(Node i) const { return star_[static_cast<std::size_t>(i)]; }

  /// s_i is a left descent of w iff l(s_i w) < l(w).
  bool is_left_descent(const WeylElement& w, Node i) const;
  bool is_right_descent(const WeylElement& w, Node i) const;
  std::size_t length(const WeylElement& w) const;
  /// Reduced word obtained by peeling the smallest left descent each time.
  Word reduced_word(const WeylElement& w) const;
  bool is_reduced(const Word& w) const;

 private:
  CartanDatum datum_;
  RootSystem roots_;
  std::vector<WeylElement> reflections_;
  WeylElement w0_;
  std::vector<Node> star_;
};

/// Cap on brute-force group enumeration; GASSOC_GROUP_CAP overrides the default 1152.
std::size_t group_enumeration_cap();
/// All elements of W by breadth-first search. Throws std::length_error past `cap`.
std::vector<WeylElement> enumerate_group(const WeylGroup& group, std::size_t cap = group_enumeration_cap());

class CoxeterElement {
 public:
  /// `order` must be a permutation of the nodes; it is kept as the stored word.
  CoxeterElement(std::shared_ptr<const WeylGroup> group, Word order);

  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }
  const CartanDatum& datum() const { return group_->datum(); }
  int rank() const { return group_->rank(); }

  const Word& order() const { return order_; }
  std::size_t position(Node i) const { return position_[static_cast<std::size_t>(i)]; }
  /// i precedes j in the stored word. For adjacent nodes this is the
  /// orientation j -> i and does not depend on the representative.
  bool precedes(Node i, Node j) const { return position(i) < position(j); }
  bool is_initial(Node i) const;
  bool is_final(Node i) const;
  /// One bit per diagram edge (i < j): true iff i precedes j.
  const std::vector<bool>& orientation() const { return orientation_; }

  const WeylElement& element() const { return element_; }
  const WeylElement& inverse_element() const { return inverse_; }
  int h(Node i) const { return h_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& h_values() const { return h_; }
  int max_h() const;

  CoxeterElement inverse() const;
  std::string to_string() const { return word_to_string(order_); }

  bool operator==(const CoxeterElement& other) const { return orientation_ == other.orientation_ && datum() == other.datum(); }
  bool operator!=(const CoxeterElement& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const WeylGroup> group_;
  Word order_;
  std::vector<std::size_t> position_;
  std::vector<bool> orientation_;
  WeylElement element_;
  WeylElement inverse_;
  std::vector<int> h_;
};

CoxeterElement coxeter_from_order(const CartanDatum& datum, Word order);
CoxeterElement coxeter_from_order(std::shared_ptr<const WeylGroup> group, Word order);

int h_of(const CoxeterElement& c, Node i);

/// Nodes in the part of the bipartition containing the smallest node of each component.
NodeSet bipartition_plus(const CartanDatum& datum);
/// sign > 0: t = t_+ t_-; sign < 0: t = t_- t_+.
CoxeterElement bipartite_coxeter(std::shared_ptr<const WeylGroup> group, int sign);

/// Every Coxeter element once (one per acyclic orientation), sorted by word.
std::vector<CoxeterElement> all_coxeter_elements(std::shared_ptr<const WeylGroup> group);

/// s_i c s_i. Throws std::invalid_argument unless s_i is initial or final.
CoxeterElement elementary_move(const CoxeterElement& c, Node i);

/// Word w = s_{ik} ... s_{i1} for moves i1, ..., ik taking c to target, so
/// that w c w^{-1} = target. Moves never use nodes in `avoid`. Throws
/// std::domain_error when no such sequence exists.
Word connect_coxeter(const CoxeterElement& c, const CoxeterElement& target, const NodeSet& avoid = {});

/// For a leaf i with neighbour i#: the bipartite element in which s_i and
/// s_{i#} appear in the same order as in c.
CoxeterElement leaf_bipartite_target(const CoxeterElement& c, Node leaf);

/// Commutation-equivalent reordering of c by weakly decreasing h (stable).
Word greedy_expression(const CoxeterElement& c);
/// Subword of c^m keeping, in the l-th copy, the letters with h >= l.
Word w_m_word(const CoxeterElement& c, int m);

struct SortingWord {
  Word word;
  std::vector<NodeSet> factors;  // I_1, I_2, ..., one per copy of c, all non-empty
};

SortingWord c_sorting_word(const CoxeterElement& c, const WeylElement& w);
bool is_sortable(const CoxeterElement& c, const WeylElement& w);
bool is_antisortable(const CoxeterElement& c, const WeylElement& w);

struct Singleton {
  Word word;  // prefix (up to commutations) of the c-sorting word of w0
  WeylElement element;
};

/// All c-singletons, sorted by length then matrix.
std::vector<Singleton> singletons(const CoxeterElement& c);

}  // namespace gassoc
