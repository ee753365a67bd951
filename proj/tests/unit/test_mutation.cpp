#include "gassoc/mutation.hpp"

#include "common.hpp"

#include <doctest.h>

using namespace gassoc;
using fixture::iv;

namespace {

const Laurent& with_g(const ExchangeGraph& g, const IntVec& w) {
  for (std::size_t k = 0; k < g.g_vectors.size(); ++k)
    if (g.g_vectors[k] == w) return g.variables[k];
  FAIL("missing g-vector ", to_string(w));
  return g.variables.front();
}

}  // namespace

TEST_CASE("exchange matrix of a Coxeter element") {
  const CoxeterElement c = fixture::coxeter("A3", "1,2,3");
  const IntMatrix b = b_of_coxeter(c);
  CHECK(b(0, 1) == 1);
  CHECK(b(1, 0) == -1);
  CHECK(b(0, 2) == 0);
  const IntMatrix bi = b_of_coxeter(c.inverse());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(bi(i, j) == -b(i, j));
  CHECK(b_of_coxeter(c, true)(0, 1) == -1);
}

TEST_CASE("matrix mutation is an involution") {
  for (const CoxeterElement& c : fixture::all_coxeter("B3")) {
    const IntMatrix b = b_of_coxeter(c);
    for (int k = 0; k < 3; ++k) CHECK(mutate_matrix(mutate_matrix(b, k), k) == b);
  }
}

TEST_CASE("seed mutation") {
  const CoxeterElement c = fixture::coxeter("A2", "1,2");
  const IntMatrix b = b_of_coxeter(c);
  const Seed s0 = initial_seed(b);
  const Seed s1 = mutate(s0, b, 0);
  CHECK(mutate(s1, b, 0).x == s0.x);
  CHECK(s1.g[0] == graded_g_vector(s1.x[0], b));
  CHECK(coefficient_free(s1) == mutate_coefficient_free(b, coefficient_free(s0), 0));
}

TEST_CASE("A2 pentagon") {
  const CoxeterElement c = fixture::coxeter("A2", "1,2");
  const ExchangeGraph g = exchange_graph(c);
  CHECK(g.seeds.size() == 5);
  CHECK(g.variables.size() == 5);
  CHECK(g.edges.size() == 5);
  CHECK(with_g(g, iv({1, 0})) * with_g(g, iv({-1, 1})) == with_g(g, iv({0, 1})) + Laurent::constant(2, 1));
  const ClusterModel m(c);
  CHECK(verify_exchange_relations(g, m).ok());
  CHECK(cluster_monomial(g, m, iv({0, 0})) == Laurent::constant(2, 1));
  CHECK(cluster_monomial(g, m, iv({2, 0})) == with_g(g, iv({1, 0})).pow(2));
}

TEST_CASE("A1 x A1") {
  const CoxeterElement c = fixture::coxeter("A1xA1", "1,2");
  const ExchangeGraph g = exchange_graph(c);
  CHECK(g.seeds.size() == 4);
  CHECK(with_g(g, iv({1, 0})) * with_g(g, iv({-1, 0})) == Laurent::constant(2, 2));
  CHECK(verify_exchange_relations(g, ClusterModel(c)).ok());
}

TEST_CASE("counts and relations") {
  struct Row {
    const char* label;
    std::size_t variables, seeds, edges;
  };
  for (const Row& r : {Row{"A3", 9, 14, 21}, Row{"B2", 6, 6, 6}, Row{"G2", 8, 8, 8}, Row{"C3", 12, 20, 30}})
    for (const CoxeterElement& c : fixture::all_coxeter(r.label)) {
      const ExchangeGraph g = exchange_graph(c);
      CHECK(g.variables.size() == r.variables);
      CHECK(g.seeds.size() == r.seeds);
      CHECK(g.edges.size() == r.edges);
      const CheckReport rep = verify_exchange_relations(g, ClusterModel(c));
      CHECK_MESSAGE(rep.ok(), r.label, " ", c.to_string());
    }
}

TEST_CASE("the opposite sign convention leaves Pi(c)") {
  const CoxeterElement c = fixture::coxeter("A2", "1,2");
  const ExchangeGraph g = exchange_graph(c, true);
  CHECK_FALSE(verify_exchange_relations(g, ClusterModel(c)).ok());
}

TEST_CASE("rank cap") {
  CHECK_THROWS_AS(exchange_graph(fixture::coxeter("A3", "1,2,3"), false, 2), std::length_error);
}
