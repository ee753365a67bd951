#include "gassoc/polytope.hpp"

#include "common.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace gassoc;
using fixture::iv;

TEST_CASE("f conditions") {
  const CartanDatum a3 = make_datum("A3");
  const FConditions fc = f_conditions(a3);
  CHECK(fc.equalities == std::vector<std::pair<Node, Node>>{{0, 2}});
  CHECK(render_equality(0, 2) == "f(1)=f(3)");
  CHECK(render_inequality(iv({2, -1, 0})) == "f(2)<2f(1)");
  CHECK(render_inequality(iv({1, -2, 1})) == "2f(2)<f(1)+f(3)");
  CHECK(default_f(a3) == RatVec{Rational(3, 2), 2, Rational(3, 2)});
  CHECK_FALSE(violated_condition(a3, default_f(a3)));
  CHECK(*violated_condition(a3, {1, 3, 1}) == "f(2)<2f(1)");
  CHECK(violated_condition(a3, {1, 2, 2}));
  CHECK_THROWS_AS(build_hrep(fixture::model("A3", "1,2,3"), {1, 3, 1}), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (const auto& label : {"A3", "B3", "G2", "D4", "A1xA2"}) {
    const CartanDatum d = make_datum(label);
    for (int k = 0; k < 10; ++k) {
      CHECK_FALSE(violated_condition(d, random_valid_f(d, rng)));
      CHECK(violated_condition(d, random_invalid_f(d, rng)));
    }
  }
}

TEST_CASE("parse_f") {
  const CartanDatum a3 = make_datum("A3");
  CHECK(parse_f(a3, "default") == default_f(a3));
  CHECK(parse_f(a3, "1,3/2,1") == RatVec{1, Rational(3, 2), 1});
  CHECK_THROWS_AS(parse_f(a3, "1,2"), std::invalid_argument);
}

TEST_CASE("rendering") {
  CHECK(render_linear(iv({-2, 0, 1}), "z") == "-2z1+z3");
  CHECK(render_linear(iv({0, 0}), "z") == "0");
  CHECK(facet_groups(fixture::model("A3", "1,2,3")) ==
        std::vector<std::string>{"max{z1, -z1+z2, -z2+z3, -z3, z3, -z1} <= f(1)", "max{z2, -z1+z3, -z2} <= f(2)"});
}

TEST_CASE("A3 polytope") {
  const ClusterModel m = fixture::model("A3", "1,2,3");
  const RatVec f = default_f(m.datum());
  const AssocPolytope p = build_polytope(m, f);
  CHECK(p.vertices.size() == 14);
  CHECK(p.hrep.facets.size() == 9);
  CHECK(p.edges.size() == 21);
  for (std::size_t k = 0; k < p.hrep.facets.size(); ++k) CHECK(p.hrep.facets[k].label == static_cast<LabelId>(k));
  CHECK(check_simplicity(m, p).ok());
  CHECK(check_support_function(m, p).ok());
  CHECK(check_polytopality(m, f).ok());
  // Vertex of the initial cluster sits at z = f.
  for (const Vertex& v : p.vertices)
    if (v.cluster == Cluster{m.initial_id(0), m.initial_id(1), m.initial_id(2)}) CHECK(v.coords == f);
  CHECK(support_value(m, f, iv({1, 1, 0})) == f[0] + f[1]);
}

TEST_CASE("facet rhs is constant on tau orbits") {
  std::mt19937_64 rng(11);
  for (const auto& label : {"B3", "C3", "G2"})
    for (const CoxeterElement& c : fixture::all_coxeter(label)) {
      const ClusterModel m(c);
      const RatVec f = random_valid_f(m.datum(), rng);
      const HRep h = build_hrep(m, f);
      for (const auto& orbit : m.orbits())
        for (LabelId id : orbit) CHECK(h.facets[static_cast<std::size_t>(id)].rhs == h.facets[static_cast<std::size_t>(orbit[0])].rhs);
    }
}

TEST_CASE("Cambrian description") {
  for (const CoxeterElement& c : fixture::all_coxeter("B3")) {
    const ClusterModel m(c);
    const EqualityReport r = polytopes_equal(m, default_f(m.datum()));
    CHECK_MESSAGE(r.equal, r.witness);
  }
  const ClusterModel m = fixture::model("A2", "1,2");
  CHECK_THROWS_AS(cambrian_hrep(m, {1, 3}), std::invalid_argument);
}

TEST_CASE("OFF export") {
  const ClusterModel m = fixture::model("A3", "1,2,3");
  const AssocPolytope p = build_polytope(m, default_f(m.datum()));
  const std::string off = to_off(p, 6);
  CHECK(off.rfind("OFF\n14 9 21\n", 0) == 0);
  const auto cycles = facet_cycles(p);
  CHECK(cycles.size() == 9);
  std::size_t incidences = 0;
  for (const auto& cyc : cycles) incidences += cyc.size();
  CHECK(incidences == 2 * 21);
  std::istringstream exact(to_exact_sidecar(p));
  std::string line;
  int rows = 0;
  while (std::getline(exact, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 14);

  const ClusterModel a2 = fixture::model("A2", "1,2");
  const std::string off2 = to_off(build_polytope(a2, default_f(a2.datum())), 3);
  CHECK(off2.rfind("OFF\n5 1 5\n", 0) == 0);
}
