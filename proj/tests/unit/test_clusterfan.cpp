#include "gassoc/clusterfan.hpp"

#include "common.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace gassoc;
using fixture::iv;
using fixture::ov;

namespace {

std::set<oracle::Vec> weights(const ClusterModel& m) {
  std::set<oracle::Vec> out;
  for (const auto& l : m.pi_labels()) out.insert(ov(l.weight));
  return out;
}

}  // namespace

TEST_CASE("Pi(c) in type A2") {
  const ClusterModel m = fixture::model("A2", "1,2");
  CHECK(weights(m) == std::set<oracle::Vec>{{1, 0}, {-1, 1}, {0, -1}, {0, 1}, {-1, 0}});
  REQUIRE(m.orbits().size() == 1);
  CHECK(m.orbits()[0].size() == 5);
  CHECK(m.weight(m.orbits()[0][0]) == iv({1, 0}));
  CHECK(m.compat(*m.id_of_weight(iv({1, 0})), *m.id_of_weight(iv({-1, 1}))) == 1);
  CHECK(m.clusters().size() == 5);
}

TEST_CASE("labels, tau and degrees agree with the oracle") {
  for (const auto& label : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "A1xA1", "A1xA2", "B2xA1"})
    for (const CoxeterElement& c : fixture::all_coxeter(label)) {
      const ClusterModel m(c);
      const oracle::PiModel o = fixture::oracle_model(c);
      REQUIRE(m.size() == o.labels.size());
      const auto ids = fixture::match_labels(m, o);
      for (LabelId a = 0; a < static_cast<LabelId>(m.size()); ++a) {
        REQUIRE(ids[static_cast<std::size_t>(a)] >= 0);
        CHECK(ids[static_cast<std::size_t>(m.tau(a))] == o.tau[static_cast<std::size_t>(ids[static_cast<std::size_t>(a)])]);
        CHECK(m.tau(m.tau(a), -1) == a);
        CHECK(m.tau(a, 0) == a);
        CHECK(m.compat(a, a) == 0);
        for (LabelId b = 0; b < static_cast<LabelId>(m.size()); ++b)
          CHECK(m.compat(a, b) == o.compat[static_cast<std::size_t>(ids[static_cast<std::size_t>(a)])][static_cast<std::size_t>(ids[static_cast<std::size_t>(b)])]);
      }
      CHECK(m.clusters().size() == o.clusters.size());
    }
}

TEST_CASE("initial cluster and beta roots") {
  const ClusterModel m = fixture::model("A3", "1,2,3");
  for (Node i = 0; i < 3; ++i) {
    CHECK(m.weight(m.initial_id(i)) == unit_vector(3, i));
    CHECK(m.root(m.initial_id(i)) == -m.beta(i));
    for (Node j = 0; j < 3; ++j) CHECK(m.compat(m.initial_id(i), m.initial_id(j)) == 0);
  }
  CHECK(m.beta(2) == iv({0, 0, 1}));
  CHECK(m.beta(0) == iv({1, 1, 1}));
  CHECK(m.tau(*m.id_of_weight(iv({0, 0, -1}))) == *m.id_of_weight(iv({0, 0, 1})));
}

TEST_CASE("cluster expansions") {
  const ClusterModel a2 = fixture::model("A2", "1,2");
  CHECK(a2.expand_root(iv({0, 0})).empty());
  const Expansion e = a2.expand_root(iv({0, -1}));
  REQUIRE(e.size() == 1);
  CHECK(e.begin()->first == a2.initial_id(1));
  CHECK(e.begin()->second == 1);
  for (const auto& label : {"A3", "B3", "G2", "A1xA2"})
    for (const CoxeterElement& c : fixture::all_coxeter(label)) {
      const ClusterModel m(c);
      for (LabelId a = 0; a < static_cast<LabelId>(m.size()); ++a) {
        const Expansion x = m.expand_weight(m.weight(a));
        CHECK(x == Expansion{{a, 1}});
        for (int k = -3; k <= 3; ++k) CHECK(m.tau_extend_weight(k, m.weight(a)) == m.weight(m.tau(a, k)));
      }
      std::mt19937_64 rng(7);
      std::uniform_int_distribution<int> d(-9, 9);
      for (int s = 0; s < 50; ++s) {
        IntVec g(static_cast<std::size_t>(m.rank()));
        for (auto& x : g) x = d(rng);
        const Expansion x = m.expand_root(g);
        CHECK(m.combine_roots(x) == g);
        for (const auto& [p, mp] : x) {
          CHECK(mp > 0);
          for (const auto& [q, mq] : x) CHECK(m.compatible(p, q));
        }
        CHECK(m.tau_extend_root(-2, m.tau_extend_root(2, g)) == g);
        CHECK(m.tau_extend_root(1, IntVec(g.size())) == IntVec(g.size()));
      }
    }
}

TEST_CASE("uplus") {
  const ClusterModel a1 = fixture::model("A1", "1");
  CHECK(is_zero(a1.uplus_root(*a1.id_of_root(iv({-1})), *a1.id_of_root(iv({1})))));
  const ClusterModel a2 = fixture::model("A2", "1,2");
  const LabelId w1 = *a2.id_of_weight(iv({1, 0})), x = *a2.id_of_weight(iv({-1, 1}));
  CHECK(is_zero(a2.uplus_weight(w1, x)));
  for (const auto& label : {"A3", "C3", "G2"})
    for (const CoxeterElement& c : fixture::all_coxeter(label)) {
      const ClusterModel m(c);
      for (LabelId a = 0; a < static_cast<LabelId>(m.size()); ++a)
        for (LabelId b = 0; b < static_cast<LabelId>(m.size()); ++b) {
          if (m.compat(a, b) != 1 || m.compat(b, a) != 1) continue;
          const IntVec u = m.uplus_root(a, b);
          CHECK(u == m.uplus_root(b, a));
          CHECK(u != m.root(a) + m.root(b));
          for (const auto& [p, mp] : m.expand_root(u)) {
            CHECK(m.compatible(p, a));
            CHECK(m.compatible(p, b));
          }
        }
    }
}

TEST_CASE("maximal cliques") {
  std::vector<std::vector<bool>> adj(4, std::vector<bool>(4, false));
  auto link = [&](int a, int b) { adj[a][b] = adj[b][a] = true; };
  link(0, 1);
  link(1, 2);
  link(0, 2);
  link(2, 3);
  CHECK(maximal_cliques(adj) == std::vector<std::vector<int>>{{0, 1, 2}, {2, 3}});
}

TEST_CASE("spaced labels are compatible") {
  for (const CoxeterElement& c : fixture::all_coxeter("A4")) {
    const ClusterModel m(c);
    for (LabelId a = 0; a < static_cast<LabelId>(m.size()); ++a)
      for (LabelId b = 0; b < static_cast<LabelId>(m.size()); ++b) {
        const IntVec &x = m.root(a), &y = m.root(b);
        if (!m.roots().is_positive_root(x) || !m.roots().is_positive_root(y)) continue;
        if (spaced(m.datum(), support(m.roots(), x), support(m.roots(), y))) CHECK(m.compat(a, b) == 0);
      }
  }
}
