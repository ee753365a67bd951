// Seed mutation with principal coefficients, g-vectors, and the exchange graph
// of the coefficient-free cluster algebra attached to B(c).
#pragma once

#include "gassoc/clusterfan.hpp"
#include "gassoc/laurent.hpp"
#include "gassoc/report.hpp"

#include <vector>

namespace gassoc {

/// b_ij = -a_ij if i precedes j, a_ij if j precedes i, 0 for non-adjacent nodes.
/// `flip` negates the whole matrix.
IntMatrix b_of_coxeter(const CoxeterElement& c, bool flip = false);

/// Matrix mutation in direction k; `b` may be an extended (m x n) matrix.
IntMatrix mutate_matrix(const IntMatrix& b, int k);

/// Seed over Z[x_1^{+-1}, ..., x_n^{+-1}, y_1, ..., y_n] with principal coefficients.
struct Seed {
  IntMatrix b;               // n x n exchange matrix
  IntMatrix c;               // n x n c-vectors (bottom half of the extended matrix)
  std::vector<Laurent> x;    // cluster variables in 2n variables
  std::vector<IntVec> g;     // g-vectors from the recurrence
};

Seed initial_seed(const IntMatrix& b);
/// Throws LaurentViolation if an exchange quotient is not Laurent.
Seed mutate(const Seed& seed, const IntMatrix& b0, int k);
/// Coefficient-free cluster variables (y = 1), in n variables.
std::vector<Laurent> coefficient_free(const Seed& seed);
/// Coefficient-free exchange computed directly: x_k x_k' = prod x^[b_ik]+ + prod x^[-b_ik]+.
std::vector<Laurent> mutate_coefficient_free(const IntMatrix& b, const std::vector<Laurent>& x, int k);
/// g-vector read off the principal grading deg x_i = e_i, deg y_j = -(column j of b0).
IntVec graded_g_vector(const Laurent& x, const IntMatrix& b0);

struct ExchangeEdge {
  int from, to;       // seed indices
  int variable_out;   // variable id leaving `from`
  int variable_in;    // variable id entering in `to`
};

struct ExchangeGraph {
  IntMatrix b0;
  std::vector<Seed> seeds;
  std::vector<std::vector<int>> seed_variables;  // variable ids per seed, sorted
  std::vector<Laurent> variables;                // coefficient-free, n variables
  std::vector<IntVec> g_vectors;                 // per variable id
  std::vector<ExchangeEdge> edges;               // each undirected edge once
};

/// Rank cap for exchange graph construction; GASSOC_EXCHANGE_RANK_CAP overrides 4.
int exchange_rank_cap();
/// BFS closure from the initial seed of B(c). Throws std::length_error past
/// the rank cap and std::logic_error if the graph is not n-regular.
ExchangeGraph exchange_graph(const CoxeterElement& c, bool flip = false, int rank_cap = exchange_rank_cap());

/// For each exchange edge with variables labelled lambda, mu via g-vectors:
/// mutual degree 1 and x_lambda x_mu = x_{lambda+mu} + x_{lambda uplus mu}.
CheckReport verify_exchange_relations(const ExchangeGraph& graph, const ClusterModel& model);

/// Cluster monomial prod x_lambda^m over the c-cluster expansion of a weight,
/// with x_lambda the variable whose g-vector is lambda.
Laurent cluster_monomial(const ExchangeGraph& graph, const ClusterModel& model, const IntVec& weight);

}  // namespace gassoc
