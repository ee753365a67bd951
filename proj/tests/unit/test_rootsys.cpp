#include "gassoc/rootsys.hpp"

#include "common.hpp"

#include <doctest.h>

using namespace gassoc;
using fixture::iv;

TEST_CASE("Cartan matrices follow the Bourbaki tables") {
  const CartanDatum c3 = make_datum("C3");
  CHECK(c3.a(1, 2) == -2);
  CHECK(c3.a(2, 1) == -1);
  const CartanDatum b3 = make_datum("B3");
  CHECK(b3.a(2, 1) == -2);
  CHECK(b3.a(1, 2) == -1);
  const CartanDatum g2 = make_datum("G2");
  CHECK(g2.a(0, 1) == -3);
  CHECK(make_datum("A1xA2").components().size() == 2);
  CHECK_THROWS_AS(make_datum("Q3"), std::invalid_argument);
  CHECK_THROWS_AS(make_datum("D3"), std::invalid_argument);
  CHECK_THROWS_AS(make_datum("A"), std::invalid_argument);
}

TEST_CASE("custom matrices pass the finiteness gate") {
  IntMatrix affine(2, 2);
  affine(0, 0) = 2;
  affine(1, 1) = 2;
  affine(0, 1) = -2;
  affine(1, 0) = -2;
  CHECK_THROWS_AS(datum_from_matrix(affine), std::invalid_argument);
  affine(0, 1) = -1;
  affine(1, 0) = -1;
  CHECK(datum_from_matrix(affine) == make_datum("A2"));
}

TEST_CASE("fundamental weights in root coordinates") {
  const CartanDatum a2 = make_datum("A2");
  const auto w1 = convert(a2, LatticeVector::fundamental_weight(a2, 0), Basis::Root);
  CHECK(w1.coords() == RatVec{Rational(2, 3), Rational(1, 3)});
  CHECK_FALSE(w1.is_integral());
  CHECK_THROWS_AS(weight_to_root(a2, iv({1, 0})), std::domain_error);
  CHECK(root_to_weight(a2, iv({1, 0})) == iv({2, -1}));
  CHECK_THROWS_AS(LatticeVector::simple_root(a2, 0) + LatticeVector::fundamental_weight(a2, 0), std::invalid_argument);
}

TEST_CASE("positive root counts match an independent closure") {
  for (const auto& label : {"A1", "A3", "A4", "B3", "C4", "D4", "G2", "F4", "E6", "A1xA2"}) {
    const RootSystem rs{make_datum(label)};
    const auto brute = oracle::positive_roots(oracle::Cartan(rs.datum()));
    CHECK_MESSAGE(rs.size() == brute.size(), label);
    for (const auto& r : brute) CHECK(rs.is_positive_root(iv(r)));
  }
  CHECK(RootSystem(make_datum("E8")).size() == 120);
}

TEST_CASE("reflections agree in both bases") {
  const CartanDatum d = make_datum("B3");
  const IntVec gamma = iv({1, 2, 2});
  for (Node i = 0; i < 3; ++i)
    CHECK(root_to_weight(d, reflect_root(d, i, gamma)) == reflect_weight(d, i, root_to_weight(d, gamma)));
}

TEST_CASE("supports and spacing") {
  const RootSystem rs{make_datum("A4")};
  CHECK(support(rs, iv({0, 1, 1, 0})) == NodeSet{1, 2});
  CHECK_THROWS_AS(support(rs, iv({1, 0, 1, 0})), std::invalid_argument);
  CHECK(spaced(rs.datum(), {0}, {2, 3}));
  CHECK_FALSE(spaced(rs.datum(), {0, 1}, {2}));
  CHECK(rs.coxeter_number(0) == 5);
}
