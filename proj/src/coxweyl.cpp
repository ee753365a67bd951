#include "gassoc/coxweyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace gassoc {

std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (Node i : w) out += "s" + node_name(i);
  return out;
}

Word parse_word(std::string_view text, int rank) {
  Word out;
  std::string trimmed;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
  if (trimmed.empty() || trimmed == "e") {
    if (trimmed.empty() && !text.empty()) throw std::invalid_argument("malformed word '" + std::string(text) + "'");
    return out;
  }
  std::size_t pos = 0;
  const bool s_form = trimmed[0] == 's' || trimmed[0] == 'S';
  auto fail = [&] { return std::invalid_argument("malformed word '" + std::string(text) + "'"); };
  // Re-scan the raw text so that "2 3 2" and "2,3,2" both work.
  std::string raw(text);
  if (!s_form) {
    for (char& ch : raw)
      if (ch == ',') ch = ' ';
    std::size_t p = 0;
    while (p < raw.size()) {
      while (p < raw.size() && std::isspace(static_cast<unsigned char>(raw[p]))) ++p;
      if (p == raw.size()) break;
      std::size_t start = p;
      while (p < raw.size() && std::isdigit(static_cast<unsigned char>(raw[p]))) ++p;
      if (start == p) throw fail();
      out.push_back(std::stoi(raw.substr(start, p - start)) - 1);
    }
  } else {
    while (pos < trimmed.size()) {
      if (trimmed[pos] != 's' && trimmed[pos] != 'S') throw fail();
      std::size_t start = ++pos;
      while (pos < trimmed.size() && std::isdigit(static_cast<unsigned char>(trimmed[pos]))) ++pos;
      if (start == pos) throw fail();
      out.push_back(std::stoi(trimmed.substr(start, pos - start)) - 1);
    }
  }
  for (Node i : out)
    if (i < 0 || i >= rank) throw std::invalid_argument("letter out of range in word '" + std::string(text) + "'");
  return out;
}

bool commutation_equivalent(const CartanDatum& datum, const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  for (Node i = 0; i < datum.rank(); ++i)
    for (Node j = i; j < datum.rank(); ++j) {
      if (i != j && !datum.adjacent(i, j)) continue;
      Word pa, pb;
      for (Node x : a)
        if (x == i || x == j) pa.push_back(x);
      for (Node x : b)
        if (x == i || x == j) pb.push_back(x);
      if (pa != pb) return false;
    }
  return true;
}

WeylGroup::WeylGroup(CartanDatum datum) : datum_(std::move(datum)), roots_(datum_) {
  const int n = datum_.rank();
  for (Node i = 0; i < n; ++i) {
    IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(n));
    for (Node k = 0; k < n; ++k) m(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) -= datum_.a(k, i);
    reflections_.emplace_back(std::move(m));
  }
  WeylElement w = WeylElement::identity(n);
  bool grew = true;
  while (grew) {
    grew = false;
    for (Node i = 0; i < n; ++i)
      if (!is_right_descent(w, i)) {
        w = w * reflection(i);
        grew = true;
        break;
      }
  }
  w0_ = w;
  star_.assign(static_cast<std::size_t>(n), -1);
  for (Node i = 0; i < n; ++i) {
    IntVec image = w0_.matrix().column(static_cast<std::size_t>(i));
    for (Node j = 0; j < n; ++j)
      if (image == -unit_vector(n, j)) star_[static_cast<std::size_t>(i)] = j;
    if (star_[static_cast<std::size_t>(i)] < 0) throw std::logic_error("w0 does not permute the negated fundamental weights");
  }
}

WeylElement WeylGroup::from_word(const Word& w) const {
  WeylElement out = WeylElement::identity(rank());
  for (Node i : w) {
    if (i < 0 || i >= rank()) throw std::invalid_argument("letter out of range");
    out = out * reflection(i);
  }
  return out;
}

bool WeylGroup::is_left_descent(const WeylElement& w, Node i) const {
  Integer row_sum = 0;
  for (int k = 0; k < rank(); ++k) row_sum += w.matrix()(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
  return row_sum < 0;
}

bool WeylGroup::is_right_descent(const WeylElement& w, Node i) const {
  IntVec image = weight_to_root(datum_, w.apply(datum_.cartan().column(static_cast<std::size_t>(i))));
  for (const auto& x : image)
    if (!x.is_zero()) return x < 0;
  throw std::logic_error("image of a simple root vanished");
}

Word WeylGroup::reduced_word(const WeylElement& w) const {
  const int n = rank();
  IntVec v(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(r)] += w.matrix()(static_cast<std::size_t>(r), static_cast<std::size_t>(k));
  Word out;
  while (true) {
    Node d = -1;
    for (Node i = 0; i < n && d < 0; ++i)
      if (v[static_cast<std::size_t>(i)] < 0) d = i;
    if (d < 0) break;
    out.push_back(d);
    v = reflect_weight(datum_, d, std::move(v));
  }
  return out;
}

std::size_t WeylGroup::length(const WeylElement& w) const { return reduced_word(w).size(); }

bool WeylGroup::is_reduced(const Word& w) const { return length(from_word(w)) == w.size(); }

std::size_t group_enumeration_cap() {
  if (const char* env = std::getenv("GASSOC_GROUP_CAP")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1152;
}

std::vector<WeylElement> enumerate_group(const WeylGroup& group, std::size_t cap) {
  std::vector<WeylElement> out{WeylElement::identity(group.rank())};
  std::set<WeylElement> seen(out.begin(), out.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (Node i = 0; i < group.rank(); ++i) {
      WeylElement next = out[k] * group.reflection(i);
      if (seen.insert(next).second) {
        if (out.size() >= cap) throw std::length_error("Weyl group exceeds enumeration cap " + std::to_string(cap));
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

CoxeterElement::CoxeterElement(std::shared_ptr<const WeylGroup> group, Word order)
    : group_(std::move(group)), order_(std::move(order)) {
  const int n = group_->rank();
  if (static_cast<int>(order_.size()) != n) throw std::invalid_argument("Coxeter order must list every node once");
  position_.assign(static_cast<std::size_t>(n), order_.size());
  for (std::size_t p = 0; p < order_.size(); ++p) {
    Node i = order_[p];
    if (i < 0 || i >= n || position_[static_cast<std::size_t>(i)] != order_.size())
      throw std::invalid_argument("Coxeter order must list every node once");
    position_[static_cast<std::size_t>(i)] = p;
  }
  for (Node i = 0; i < n; ++i)
    for (Node j = i + 1; j < n; ++j)
      if (datum().adjacent(i, j)) orientation_.push_back(precedes(i, j));
  element_ = group_->from_word(order_);
  Word reversed(order_.rbegin(), order_.rend());
  inverse_ = group_->from_word(reversed);
  const std::size_t bound = 2 * group_->roots().size() + 2;
  for (Node i = 0; i < n; ++i) {
    IntVec v = unit_vector(n, i);
    const IntVec target = -unit_vector(n, group_->star(i));
    int m = 0;
    do {
      v = element_.apply(v);
      ++m;
      if (static_cast<std::size_t>(m) > bound) throw std::logic_error("c-orbit of a fundamental weight never reached -omega_{i*}");
    } while (v != target);
    h_.push_back(m);
  }
}

bool CoxeterElement::is_initial(Node i) const {
  for (Node j : datum().neighbours(i))
    if (!precedes(i, j)) return false;
  return true;
}

bool CoxeterElement::is_final(Node i) const {
  for (Node j : datum().neighbours(i))
    if (!precedes(j, i)) return false;
  return true;
}

int CoxeterElement::max_h() const { return *std::max_element(h_.begin(), h_.end()); }

CoxeterElement CoxeterElement::inverse() const { return CoxeterElement(group_, Word(order_.rbegin(), order_.rend())); }

CoxeterElement coxeter_from_order(const CartanDatum& datum, Word order) {
  return CoxeterElement(std::make_shared<const WeylGroup>(datum), std::move(order));
}

CoxeterElement coxeter_from_order(std::shared_ptr<const WeylGroup> group, Word order) {
  return CoxeterElement(std::move(group), std::move(order));
}

int h_of(const CoxeterElement& c, Node i) { return c.h(i); }

NodeSet bipartition_plus(const CartanDatum& datum) {
  std::vector<int> colour(static_cast<std::size_t>(datum.rank()), -1);
  for (const auto& comp : datum.components()) {
    std::deque<Node> queue{comp.front()};
    colour[static_cast<std::size_t>(comp.front())] = 0;
    while (!queue.empty()) {
      Node i = queue.front();
      queue.pop_front();
      for (Node j : datum.neighbours(i)) {
        if (colour[static_cast<std::size_t>(j)] >= 0) continue;
        colour[static_cast<std::size_t>(j)] = 1 - colour[static_cast<std::size_t>(i)];
        queue.push_back(j);
      }
    }
  }
  NodeSet plus;
  for (Node i = 0; i < datum.rank(); ++i)
    if (colour[static_cast<std::size_t>(i)] == 0) plus.push_back(i);
  return plus;
}

CoxeterElement bipartite_coxeter(std::shared_ptr<const WeylGroup> group, int sign) {
  NodeSet plus = bipartition_plus(group->datum());
  Word first, second;
  for (Node i = 0; i < group->rank(); ++i)
    (std::binary_search(plus.begin(), plus.end(), i) ? first : second).push_back(i);
  if (sign < 0) std::swap(first, second);
  first.insert(first.end(), second.begin(), second.end());
  return CoxeterElement(std::move(group), std::move(first));
}

std::vector<CoxeterElement> all_coxeter_elements(std::shared_ptr<const WeylGroup> group) {
  const CartanDatum& datum = group->datum();
  const int n = datum.rank();
  std::vector<std::pair<Node, Node>> edges;
  for (Node i = 0; i < n; ++i)
    for (Node j = i + 1; j < n; ++j)
      if (datum.adjacent(i, j)) edges.emplace_back(i, j);
  std::vector<CoxeterElement> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
    std::vector<std::vector<Node>> after(static_cast<std::size_t>(n));
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [i, j] = edges[e];
      if (!(mask >> e & 1)) std::swap(i, j);
      after[static_cast<std::size_t>(i)].push_back(j);
      ++indegree[static_cast<std::size_t>(j)];
    }
    std::priority_queue<Node, std::vector<Node>, std::greater<>> ready;
    for (Node i = 0; i < n; ++i)
      if (indegree[static_cast<std::size_t>(i)] == 0) ready.push(i);
    Word order;
    while (!ready.empty()) {
      Node i = ready.top();
      ready.pop();
      order.push_back(i);
      for (Node j : after[static_cast<std::size_t>(i)])
        if (--indegree[static_cast<std::size_t>(j)] == 0) ready.push(j);
    }
    out.emplace_back(group, std::move(order));
  }
  std::sort(out.begin(), out.end(), [](const CoxeterElement& a, const CoxeterElement& b) { return a.order() < b.order(); });
  return out;
}

CoxeterElement elementary_move(const CoxeterElement& c, Node i) {
  Word rest;
  for (Node j : c.order())
    if (j != i) rest.push_back(j);
  if (c.is_initial(i)) {
    rest.push_back(i);
  } else if (c.is_final(i)) {
    rest.insert(rest.begin(), i);
  } else {
    throw std::invalid_argument("s" + node_name(i) + " is neither initial nor final in " + c.to_string());
  }
  return CoxeterElement(c.group_ptr(), std::move(rest));
}

Word connect_coxeter(const CoxeterElement& c, const CoxeterElement& target, const NodeSet& avoid) {
  if (!(c.datum() == target.datum())) throw std::invalid_argument("connect_coxeter: different Cartan data");
  struct Visit {
    std::vector<bool> parent;
    Node move;
  };
  std::map<std::vector<bool>, Visit> seen;
  std::deque<CoxeterElement> queue{c};
  seen.emplace(c.orientation(), Visit{{}, -1});
  while (!queue.empty()) {
    CoxeterElement cur = queue.front();
    queue.pop_front();
    if (cur == target) {
      Word moves;
      std::vector<bool> key = cur.orientation();
      while (seen.at(key).move >= 0) {
        moves.push_back(seen.at(key).move);
        key = seen.at(key).parent;
      }
      return moves;  // already in reverse order: last move is the leftmost letter
    }
    for (Node i = 0; i < cur.rank(); ++i) {
      if (std::find(avoid.begin(), avoid.end(), i) != avoid.end()) continue;
      if (cur.datum().neighbours(i).empty()) continue;
      if (!cur.is_initial(i) && !cur.is_final(i)) continue;
      CoxeterElement next = elementary_move(cur, i);
      if (seen.emplace(next.orientation(), Visit{cur.orientation(), i}).second) queue.push_back(std::move(next));
    }
  }
  throw std::domain_error("no sequence of elementary moves avoiding the given nodes connects " + c.to_string() + " to " +
                          target.to_string());
}

CoxeterElement leaf_bipartite_target(const CoxeterElement& c, Node leaf) {
  auto nbrs = c.datum().neighbours(leaf);
  if (nbrs.size() != 1) throw std::invalid_argument("s" + node_name(leaf) + " is not a leaf");
  const Node sharp = nbrs.front();
  for (int sign : {1, -1}) {
    CoxeterElement t = bipartite_coxeter(c.group_ptr(), sign);
    if (t.precedes(leaf, sharp) == c.precedes(leaf, sharp)) return t;
  }
  throw std::logic_error("no bipartite element matches the leaf orientation");
}

Word greedy_expression(const CoxeterElement& c) {
  Word out = c.order();
  std::stable_sort(out.begin(), out.end(), [&](Node a, Node b) { return c.h(a) > c.h(b); });
  if (!commutation_equivalent(c.datum(), out, c.order()))
    throw std::logic_error("sorting by h left the commutation class of " + c.to_string());
  return out;
}

Word w_m_word(const CoxeterElement& c, int m) {
  if (m < 0 || m > c.max_h()) throw std::out_of_range("w_m: m must lie in [0, " + std::to_string(c.max_h()) + "]");
  const Word greedy = greedy_expression(c);
  Word out;
  for (int l = 1; l <= m; ++l)
    for (Node i : greedy)
      if (c.h(i) >= l) out.push_back(i);
  return out;
}

SortingWord c_sorting_word(const CoxeterElement& c, const WeylElement& w) {
  const int n = c.rank();
  const CartanDatum& datum = c.datum();
  IntVec v(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(r)] += w.matrix()(static_cast<std::size_t>(r), static_cast<std::size_t>(k));
  SortingWord out;
  auto done = [&] { return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x > 0; }); };
  while (!done()) {
    NodeSet factor;
    for (Node i : c.order()) {
      if (v[static_cast<std::size_t>(i)] < 0) {
        out.word.push_back(i);
        factor.push_back(i);
        v = reflect_weight(datum, i, std::move(v));
      }
    }
    if (factor.empty()) throw std::logic_error("c-sorting pass made no progress");
    std::sort(factor.begin(), factor.end());
    out.factors.push_back(std::move(factor));
  }
  return out;
}

bool is_sortable(const CoxeterElement& c, const WeylElement& w) {
  const SortingWord sw = c_sorting_word(c, w);
  for (std::size_t k = 1; k < sw.factors.size(); ++k)
    if (!std::includes(sw.factors[k - 1].begin(), sw.factors[k - 1].end(), sw.factors[k].begin(), sw.factors[k].end()))
      return false;
  return true;
}

bool is_antisortable(const CoxeterElement& c, const WeylElement& w) {
  return is_sortable(c.inverse(), w * c.group().longest());
}

std::vector<Singleton> singletons(const CoxeterElement& c) {
  const CartanDatum& datum = c.datum();
  const Word w0 = c_sorting_word(c, c.group().longest()).word;
  const std::size_t len = w0.size();
  std::vector<std::vector<std::size_t>> preds(len);
  for (std::size_t p = 0; p < len; ++p)
    for (std::size_t q = 0; q < p; ++q)
      if (w0[q] == w0[p] || datum.adjacent(w0[q], w0[p])) preds[p].push_back(q);

  struct State {
    std::vector<bool> ideal;
    WeylElement element;
  };
  std::set<std::vector<bool>> seen;
  std::map<WeylElement, Word> found;
  std::deque<State> queue;
  queue.push_back({std::vector<bool>(len, false), WeylElement::identity(c.rank())});
  seen.insert(queue.front().ideal);
  while (!queue.empty()) {
    State cur = std::move(queue.front());
    queue.pop_front();
    Word word;
    for (std::size_t p = 0; p < len; ++p)
      if (cur.ideal[p]) word.push_back(w0[p]);
    found.emplace(cur.element, std::move(word));
    for (std::size_t p = 0; p < len; ++p) {
      if (cur.ideal[p]) continue;
      if (!std::all_of(preds[p].begin(), preds[p].end(), [&](std::size_t q) { return cur.ideal[q]; })) continue;
      std::vector<bool> next = cur.ideal;
      next[p] = true;
      if (!seen.insert(next).second) continue;
      queue.push_back({std::move(next), cur.element * c.group().reflection(w0[p])});
    }
  }
  std::vector<Singleton> out;
  for (auto& [element, word] : found) out.push_back({word, element});
  std::stable_sort(out.begin(), out.end(), [](const Singleton& a, const Singleton& b) { return a.word.size() < b.word.size(); });
  return out;
}

}  // namespace gassoc
