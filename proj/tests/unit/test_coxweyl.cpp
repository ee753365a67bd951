#include "gassoc/coxweyl.hpp"

#include "common.hpp"

#include <doctest.h>

#include <set>

using namespace gassoc;
using fixture::coxeter;

TEST_CASE("words parse in every accepted form") {
  CHECK(parse_word("s2s3s2", 3) == Word{1, 2, 1});
  CHECK(parse_word("2,3,2", 3) == Word{1, 2, 1});
  CHECK(parse_word("2 3 2", 3) == Word{1, 2, 1});
  CHECK(parse_word("e", 3).empty());
  CHECK_THROWS_AS(parse_word("s4", 3), std::invalid_argument);
  CHECK(word_to_string({0, 2}) == "s1s3");
  CHECK(word_to_string({}) == "e");
}

TEST_CASE("h values") {
  CHECK(coxeter("A3", "1,2,3").h_values() == std::vector<int>{3, 2, 1});
  CHECK(coxeter("C3", "1,2,3").h_values() == std::vector<int>{3, 3, 3});
  CHECK(coxeter("A2", "1,2").h_values() == std::vector<int>{2, 1});
  for (const auto& label : fixture::irreducible_rank4())
    for (const CoxeterElement& c : fixture::all_coxeter(label)) {
      int sum = 0;
      for (Node i = 0; i < c.rank(); ++i) {
        sum += c.h(i);
        const int coxeter_number = c.group().roots().coxeter_number(0);
        CHECK(c.h(i) + c.h(c.group().star(i)) == coxeter_number);
        for (Node j : c.datum().neighbours(i)) CHECK(std::abs(c.h(i) - c.h(j)) <= 1);
      }
      CHECK(static_cast<std::size_t>(sum) == c.group().roots().size());
    }
}

TEST_CASE("length and the longest element") {
  for (const auto& label : {"A3", "B3", "G2", "D4"}) {
    const WeylGroup g{make_datum(label)};
    const oracle::Group og(g.datum());
    const WeylElement w0 = g.longest();
    CHECK(w0 * w0 == WeylElement::identity(g.rank()));
    CHECK(g.length(w0) == g.roots().size());
    for (const auto& [m, word] : og.elements()) {
      const WeylElement w = g.from_word(Word(word.begin(), word.end()));
      CHECK(g.length(w) == static_cast<std::size_t>(og.length(m)));
      CHECK(g.from_word(g.reduced_word(w)) == w);
      for (Node i = 0; i < g.rank(); ++i) {
        const auto a = g.length(w * g.reflection(i)), b = g.length(w);
        CHECK((a == b + 1 || a + 1 == b));
      }
    }
  }
  const WeylGroup a3{make_datum("A3")};
  CHECK(a3.star(0) == 2);
  CHECK(a3.star(1) == 1);
  CHECK(enumerate_group(a3).size() == 24);
  CHECK_THROWS_AS(enumerate_group(a3, 10), std::length_error);
}

TEST_CASE("Coxeter elements are identified by orientation") {
  CHECK(coxeter("A3", "1,3,2") == coxeter("A3", "3,1,2"));
  CHECK(coxeter("A3", "1,2,3") != coxeter("A3", "2,1,3"));
  CHECK(commutation_equivalent(make_datum("A3"), {0, 2, 1}, {2, 0, 1}));
  CHECK(fixture::all_coxeter("A3").size() == 4);
  CHECK(fixture::all_coxeter("D4").size() == 8);
  CHECK(fixture::all_coxeter("A1xA1").size() == 1);
}

TEST_CASE("bipartite elements") {
  auto g = fixture::group("A3");
  CHECK(bipartition_plus(g->datum()) == NodeSet{0, 2});
  const CoxeterElement t = bipartite_coxeter(g, 1);
  CHECK(t == coxeter("A3", "1,3,2"));
  CHECK(bipartite_coxeter(g, -1) == t.inverse());
  CHECK(bipartite_coxeter(fixture::group("A2"), 1) == coxeter("A2", "1,2"));
}

TEST_CASE("elementary moves and connectivity") {
  const CoxeterElement c = coxeter("A3", "1,2,3");
  CHECK(elementary_move(c, 0) == coxeter("A3", "2,3,1"));
  CHECK(elementary_move(elementary_move(c, 0), 0) == c);
  CHECK_THROWS_AS(elementary_move(c, 1), std::invalid_argument);
  CHECK(connect_coxeter(c, c).empty());
  CHECK(connect_coxeter(c, coxeter("A3", "2,3,1")) == Word{0});

  const CoxeterElement a4 = coxeter("A4", "1,2,3,4");
  const CoxeterElement target = coxeter("A4", "1,3,4,2");
  const Word w = connect_coxeter(a4, target);
  const WeylGroup& g = a4.group();
  CHECK(g.from_word(w) * a4.element() * g.from_word(w).inverse() == target.element());
  const WeylElement s2s1 = g.from_word({1, 0});
  CHECK(s2s1 * a4.element() * s2s1.inverse() == target.element());

  for (const auto& label : {"A4", "D4", "B3"})
    for (const CoxeterElement& from : fixture::all_coxeter(label))
      for (Node avoid = 0; avoid < from.rank(); ++avoid) {
          if (from.datum().neighbours(avoid).size() != 1) continue;
          const CoxeterElement t = leaf_bipartite_target(from, avoid);
          const Node partner = from.datum().neighbours(avoid).front();
          const Word m = connect_coxeter(from, t, {avoid, partner});
          for (Node x : m) CHECK((x != avoid && x != partner));
          const WeylGroup& wg = from.group();
          CHECK(wg.from_word(m) * from.element() * wg.from_word(m).inverse() == t.element());
        }
}

TEST_CASE("greedy expressions and w_m") {
  CHECK(greedy_expression(coxeter("A3", "1,2,3")) == Word{0, 1, 2});
  const Word g = greedy_expression(coxeter("A4", "2,4,1,3"));
  CHECK(commutation_equivalent(make_datum("A4"), g, {1, 3, 0, 2}));
  CHECK(coxeter("A4", "2,4,1,3") == coxeter("A4", "4,2,1,3"));
  const CoxeterElement c = coxeter("A3", "1,2,3");
  const Word w3 = w_m_word(c, 3);
  CHECK(w3 == Word{0, 1, 2, 0, 1, 0});
  CHECK(c.group().from_word(w3) == c.group().longest());
  CHECK_THROWS_AS(w_m_word(c, 4), std::out_of_range);
  for (const auto& label : fixture::irreducible_rank4())
    for (const CoxeterElement& cc : fixture::all_coxeter(label)) {
      const WeylGroup& wg = cc.group();
      for (int m = 0; m <= cc.max_h(); ++m) {
        const WeylElement wm = wg.from_word(w_m_word(cc, m));
        WeylElement cm = WeylElement::identity(cc.rank());
        for (int k = 0; k < m; ++k) cm = cm * cc.element();
        for (Node i = 0; i < cc.rank(); ++i)
          if (m <= cc.h(i)) CHECK(wm.apply(unit_vector(cc.rank(), i)) == cm.apply(unit_vector(cc.rank(), i)));
      }
    }
}

TEST_CASE("sorting words") {
  const CoxeterElement c = coxeter("A3", "1,2,3");
  const WeylGroup& g = c.group();
  const SortingWord s = c_sorting_word(c, g.from_word(parse_word("s2s3s2", 3)));
  CHECK(s.factors == std::vector<NodeSet>{{1, 2}, {1}});
  CHECK(c_sorting_word(c, WeylElement::identity(3)).word.empty());
  CHECK(is_sortable(c, g.longest()));
  CHECK(is_antisortable(c, g.longest()));
  CHECK(is_sortable(c, WeylElement::identity(3)));
  CHECK(is_antisortable(c, WeylElement::identity(3)));
  const CoxeterElement c1 = coxeter("A3", "1,3,2"), c2 = coxeter("A3", "3,1,2");
  for (const WeylElement& w : enumerate_group(g)) {
    CHECK(g.from_word(c_sorting_word(c1, w).word) == w);
    CHECK(is_sortable(c1, w) == is_sortable(c2, w));
  }
}

TEST_CASE("singletons") {
  const auto a2 = singletons(coxeter("A2", "1,2"));
  CHECK(a2.size() == 4);
  for (const auto& label : {"A3", "B3", "G2"})
    for (const CoxeterElement& c : fixture::all_coxeter(label)) {
      std::set<IntMatrix> listed;
      for (const Singleton& s : singletons(c)) {
        CHECK(is_sortable(c, s.element));
        CHECK(is_antisortable(c, s.element));
        CHECK(c.group().from_word(s.word) == s.element);
        listed.insert(s.element.matrix());
      }
      CHECK(listed.count(c.group().longest().matrix()));
      CHECK(listed.count(IntMatrix::identity(static_cast<std::size_t>(c.rank()))));
    }
}
