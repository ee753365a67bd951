// Verification suites run by `gassoc verify`.
#pragma once

#include "gassoc/polytope.hpp"
#include "gassoc/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gassoc {

struct SuiteOptions {
  RatVec f;                    // empty: default_f
  std::uint64_t seed = 1;
  int samples = 200;           // random lattice points per model
  int box = 20;                // coordinates drawn from [-box, box]
  int random_f = 5;            // extra random valid f per model
};

/// Every cluster's weight matrix has determinant +-1.
CheckReport check_z_basis(const ClusterModel& model);
/// Random points: the expansion is supported on a cluster and reproduces the
/// point; the point is in the closed cone of some cluster and in the open
/// cone of at most one.
CheckReport check_expansions(const ClusterModel& model, std::uint64_t seed, int samples, int box);
/// Every codimension-one face lies in exactly two clusters.
CheckReport check_completeness(const ClusterModel& model);
/// tau preserves the compatibility degree; compatibility is symmetric.
CheckReport check_tau_invariance(const ClusterModel& model);

CheckReport check_polytope(const ClusterModel& model, const RatVec& f);
/// Ray set equals Pi(c) and the Cambrian H-rep equals the support-function H-rep.
CheckReport check_cambrian(const ClusterModel& model, const RatVec& f);
/// Mutation-oracle exchange graph against Pi(c), clusters and exchange relations.
CheckReport check_exchange(const ClusterModel& model);
/// Singletons are exactly the sortable and antisortable elements; the
/// c-sorting word of w0 is reduced and agrees with the w_m construction.
CheckReport check_sorting(const ClusterModel& model);

/// phi, sigma_i, bar and iota for this c; t_- for the bipartite element of the group.
CheckReport check_maps(const ClusterModel& model);
CheckReport check_bipartite(std::shared_ptr<const WeylGroup> group);

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
CheckReport run_suite(const std::string& name, const ClusterModel& model, const SuiteOptions& options);

}  // namespace gassoc
