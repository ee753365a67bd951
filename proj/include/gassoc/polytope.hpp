// The generalized associahedron in the coordinates z_i = phi(omega_i): one
// half-space <lambda, z> <= F_c(lambda) per lambda in Pi(c), one vertex per
// c-cluster, and the Cambrian description through c-singletons.
#pragma once

#include "gassoc/clusterfan.hpp"
#include "gassoc/report.hpp"

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gassoc {

/// Conditions on f: f(i) = f(i*) and, for every j, sum_i a_ij f(i) > 0.
struct FConditions {
  std::vector<std::pair<Node, Node>> equalities;  // (i, i*) with i < i*
  std::vector<IntVec> inequalities;               // primitive coefficient vectors c with sum_i c_i f(i) > 0
};

FConditions f_conditions(const CartanDatum& datum);
/// Inequalities after substituting f(i*) := f(i) for i < i*, deduplicated.
std::vector<IntVec> reduced_inequalities(const CartanDatum& datum);
/// "f(2)<2f(1)" style rendering of sum_i c_i f(i) > 0.
std::string render_inequality(const IntVec& coeffs);
std::string render_equality(Node i, Node j);
/// "-2z1+z3" style rendering of sum_i c_i symbol_i; "0" for the zero vector.
std::string render_linear(const IntVec& coeffs, std::string_view symbol);
/// One line per tau-orbit, in tau order from its omega_i: "max{z1, -z1+z2} <= f(1)".
std::vector<std::string> facet_groups(const ClusterModel& model);
/// First violated condition, rendered, or nullopt if f is valid.
std::optional<std::string> violated_condition(const CartanDatum& datum, const RatVec& f);

/// The solution of A^T f = (1, ..., 1).
RatVec default_f(const CartanDatum& datum);
/// A^{-T} e for a random *-symmetric e with entries in [1, 12].
RatVec random_valid_f(const CartanDatum& datum, std::mt19937_64& rng);
/// As random_valid_f, but e is negative on one *-orbit.
RatVec random_invalid_f(const CartanDatum& datum, std::mt19937_64& rng);
/// Parses "1,3/2,1" (one entry per node) or "default".
RatVec parse_f(const CartanDatum& datum, std::string_view text);

struct Facet {
  IntVec normal;  // weight coordinates of lambda
  Rational rhs;
  LabelId label;  // -1 when the normal is not a label of the model
};

struct HRep {
  std::vector<Facet> facets;
};

struct Vertex {
  RatVec coords;
  Cluster cluster;
};

struct AssocPolytope {
  std::string datum_label;
  Word coxeter;
  RatVec f;
  HRep hrep;
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  // vertex index pairs, first < second, sorted
};

/// F_c extended piecewise-linearly to a weight through its cluster expansion.
Rational support_value(const ClusterModel& model, const RatVec& f, const IntVec& lambda);

/// Facet k is the label with id k. Throws std::invalid_argument for invalid f.
HRep build_hrep(const ClusterModel& model, const RatVec& f);
/// Vertex per cluster; throws std::logic_error if some vertex is degenerate.
AssocPolytope build_polytope(const ClusterModel& model, const RatVec& f);

/// Every vertex lies on exactly the facets of its cluster.
CheckReport check_simplicity(const ClusterModel& model, const AssocPolytope& poly);
/// max_v <v, lambda> = F_c(lambda), attained exactly at the clusters containing lambda.
CheckReport check_support_function(const ClusterModel& model, const AssocPolytope& poly);
/// For every exchangeable pair: mutual degree 1, alpha + gamma expands on the
/// common part, and F(alpha) + F(gamma) > max(F(alpha + gamma), F(alpha uplus gamma)).
CheckReport check_polytopality(const ClusterModel& model, const RatVec& f);

/// Weights w omega_i over all c-singletons w, sorted and deduplicated.
std::vector<IntVec> cambrian_rays(const ClusterModel& model);
/// Half-spaces <w omega_j, z> <= a_j over c-singletons w. Throws
/// std::invalid_argument unless sum_i a_ij a_i > 0 for all j.
HRep cambrian_hrep(const ClusterModel& model, const RatVec& a);

/// Primitive integer normals with scaled right-hand sides, sorted.
std::vector<std::pair<IntVec, Rational>> canonical_hrep(const HRep& h);

struct EqualityReport {
  bool equal = false;
  std::string witness;
};
EqualityReport polytopes_equal(const ClusterModel& model, const RatVec& f);

/// Vertex indices of each facet, in cyclic order (rank 3) or as the two
/// endpoints (rank 2). Oriented counterclockwise seen from outside in rank 3.
std::vector<std::vector<int>> facet_cycles(const AssocPolytope& poly);
/// OFF text with decimal coordinates; rank 2 is padded with z = 0 and has one face.
std::string to_off(const AssocPolytope& poly, int precision);
/// Exact vertex coordinates, one "p/q" row per vertex, in OFF order.
std::string to_exact_sidecar(const AssocPolytope& poly);

}  // namespace gassoc
