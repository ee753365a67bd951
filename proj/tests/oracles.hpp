// Slow, direct reimplementations used to cross-check the library. They only
// read the Cartan matrix from the library and recompute everything else with
// plain machine integers.
#pragma once

#include "gassoc/rootsys.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;  // square, acts on column vectors

struct Cartan {
  int n = 0;
  Mat a;  // a[i][j]

  explicit Cartan(const gassoc::CartanDatum& d) : n(d.rank()), a(static_cast<std::size_t>(d.rank()), Vec(static_cast<std::size_t>(d.rank()))) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = static_cast<long long>(d.a(i, j));
  }
};

inline Mat identity(int n) {
  Mat m(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat mul(const Mat& x, const Mat& y) {
  const std::size_t n = x.size();
  Mat out(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
  return out;
}

inline Vec apply(const Mat& m, const Vec& v) {
  Vec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

// s_i on root coordinates: gamma - <gamma, alpha_i^vee> alpha_i.
inline Mat reflection_root(const Cartan& c, int i) {
  Mat m = identity(c.n);
  for (int j = 0; j < c.n; ++j) m[i][j] -= c.a[i][j];
  return m;
}

// s_i on weight coordinates: lambda - lambda_i alpha_i, alpha_i = column i of A.
inline Mat reflection_weight(const Cartan& c, int i) {
  Mat m = identity(c.n);
  for (int r = 0; r < c.n; ++r) m[r][i] -= c.a[r][i];
  return m;
}

inline Mat word_root(const Cartan& c, const std::vector<int>& w) {
  Mat m = identity(c.n);
  for (int i : w) m = mul(m, reflection_root(c, i));
  return m;
}

inline Mat word_weight(const Cartan& c, const std::vector<int>& w) {
  Mat m = identity(c.n);
  for (int i : w) m = mul(m, reflection_weight(c, i));
  return m;
}

// Laplace expansion; fine for the ranks used here.
inline long long det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    out += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return out;
}

inline Mat adjugate(const Mat& m) {
  const std::size_t n = m.size();
  Mat out(n, Vec(n, 0));
  if (n == 1) {
    out[0][0] = 1;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        Vec row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != j) row.push_back(m[r][k]);
        minor.push_back(row);
      }
      out[j][i] = ((i + j) % 2 ? -1 : 1) * det(minor);
    }
  return out;
}

inline Mat from_columns(const std::vector<Vec>& cols) {
  Mat m(cols.size(), Vec(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols.size(); ++i) m[i][j] = cols[j][i];
  return m;
}

inline std::vector<Vec> positive_roots(const Cartan& c) {
  std::set<Vec> seen;
  std::vector<Vec> todo;
  for (int i = 0; i < c.n; ++i) {
    Vec e(static_cast<std::size_t>(c.n), 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    Vec v = todo.back();
    todo.pop_back();
    for (int i = 0; i < c.n; ++i) {
      Vec r = oracle::apply(reflection_root(c, i), v);
      if (std::all_of(r.begin(), r.end(), [](long long x) { return x >= 0; }) && seen.insert(r).second) todo.push_back(r);
    }
  }
  return {seen.begin(), seen.end()};
}

inline bool is_negative(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x <= 0; });
}

struct Group {
  Cartan cartan;
  std::vector<Vec> roots;

  explicit Group(const gassoc::CartanDatum& d) : cartan(d), roots(positive_roots(cartan)) {}

  int length(const Mat& w) const {
    int out = 0;
    for (const Vec& r : roots) out += is_negative(oracle::apply(w, r)) ? 1 : 0;
    return out;
  }

  // Every element with one word for it, by breadth-first search.
  std::map<Mat, std::vector<int>> elements() const {
    std::map<Mat, std::vector<int>> seen{{identity(cartan.n), {}}};
    std::vector<Mat> todo{identity(cartan.n)};
    for (std::size_t k = 0; k < todo.size(); ++k) {
      const Mat w = todo[k];
      for (int i = 0; i < cartan.n; ++i) {
        Mat x = mul(w, reflection_root(cartan, i));
        if (seen.count(x)) continue;
        std::vector<int> word = seen.at(w);
        word.push_back(i);
        seen.emplace(x, std::move(word));
        todo.push_back(std::move(x));
      }
    }
    return seen;
  }

  Mat longest() const {
    Mat best = identity(cartan.n);
    for (const auto& [w, word] : elements())
      if (length(w) > length(best)) best = w;
    return best;
  }

  // Lexicographically first subword of c^infinity that is a reduced word for w.
  // Scanning positions in increasing order, a letter is kept exactly when the
  // prefix p so far still satisfies l(p^{-1} w) = l(w) - l(p); any such prefix
  // extends to a full word, so the first admissible position is always right.
  std::vector<int> sorting_word(const std::vector<int>& c, const Mat& w) const {
    const int total = length(w);
    std::vector<int> word;
    Mat prefix_inverse = identity(cartan.n);
    std::size_t pos = 0;
    while (static_cast<int>(word.size()) < total) {
      const int i = c[pos % c.size()];
      Mat candidate = mul(reflection_root(cartan, i), prefix_inverse);
      if (length(mul(candidate, w)) == total - static_cast<int>(word.size()) - 1) {
        word.push_back(i);
        prefix_inverse = candidate;
      }
      ++pos;
      if (pos > c.size() * static_cast<std::size_t>(total + 1) * 2) return {};
    }
    return word;
  }

  // Same, but returns the subsets I_1, I_2, ... (one per copy of c, empty ones
  // dropped only at the end).
  std::vector<std::set<int>> factorization(const std::vector<int>& c, const Mat& w) const {
    const int total = length(w);
    std::vector<std::set<int>> out;
    Mat prefix_inverse = identity(cartan.n);
    int done = 0;
    for (std::size_t pos = 0; done < total; ++pos) {
      if (pos % c.size() == 0) out.emplace_back();
      const int i = c[pos % c.size()];
      Mat candidate = mul(reflection_root(cartan, i), prefix_inverse);
      if (length(mul(candidate, w)) == total - done - 1) {
        out.back().insert(i);
        prefix_inverse = candidate;
        ++done;
      }
    }
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
  }

  bool sortable(const std::vector<int>& c, const Mat& w) const {
    const auto f = factorization(c, w);
    for (std::size_t k = 1; k < f.size(); ++k)
      if (!std::includes(f[k - 1].begin(), f[k - 1].end(), f[k].begin(), f[k].end())) return false;
    return true;
  }

  bool antisortable(const std::vector<int>& c, const Mat& w) const {
    std::vector<int> reversed(c.rbegin(), c.rend());
    return sortable(reversed, mul(w, longest()));
  }
};

// Pi(c), tau and the compatibility degree computed on weights from their
// definitions, plus clusters by exhaustive search over n-subsets.
struct PiModel {
  Cartan cartan;
  std::vector<int> c;
  Mat c_weight, c_inverse_weight;
  std::vector<Vec> labels;
  std::map<Vec, int> index;
  std::vector<int> tau;
  std::vector<std::vector<int>> compat;
  std::vector<std::vector<int>> clusters;

  PiModel(const gassoc::CartanDatum& d, std::vector<int> order) : cartan(d), c(std::move(order)) {
    const int n = cartan.n;
    c_weight = word_weight(cartan, c);
    c_inverse_weight = word_weight(cartan, std::vector<int>(c.rbegin(), c.rend()));
    for (int i = 0; i < n; ++i) {
      Vec v(static_cast<std::size_t>(n), 0);
      v[i] = 1;
      for (int guard = 0; guard < 100; ++guard) {
        labels.push_back(v);
        if (negative_fundamental(v)) break;
        v = oracle::apply(c_weight, v);
      }
    }
    for (std::size_t k = 0; k < labels.size(); ++k) index[labels[k]] = static_cast<int>(k);
    for (const Vec& v : labels) {
      Vec next;
      if (negative_fundamental(v)) {
        next = v;
        for (auto& x : next) x = -x;
      } else {
        next = oracle::apply(c_weight, v);
      }
      tau.push_back(index.at(next));
    }
    compat.assign(labels.size(), std::vector<int>(labels.size(), 0));
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = 0; b < labels.size(); ++b) compat[a][b] = degree(static_cast<int>(a), static_cast<int>(b));
    std::vector<int> pick;
    search(0, pick);
  }

  static bool negative_fundamental(const Vec& v) {
    int nonzero = 0;
    bool neg = false;
    for (long long x : v) {
      if (x != 0) ++nonzero;
      if (x == -1) neg = true;
    }
    return nonzero == 1 && neg;
  }

  std::optional<int> fundamental(const Vec& v) const {
    int which = -1;
    for (int i = 0; i < cartan.n; ++i) {
      if (v[i] == 1 && which < 0)
        which = i;
      else if (v[i] != 0)
        return std::nullopt;
    }
    if (which < 0) return std::nullopt;
    return which;
  }

  // Coefficient of alpha_i in a weight that lies in Q, via A x = v solved by
  // the library's exact solver.
  long long root_coefficient(const Vec& weight, int i) const {
    gassoc::IntMatrix a(static_cast<std::size_t>(cartan.n), static_cast<std::size_t>(cartan.n));
    gassoc::RatVec rhs;
    for (int r = 0; r < cartan.n; ++r) {
      for (int s = 0; s < cartan.n; ++s) a(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) = cartan.a[r][s];
      rhs.emplace_back(weight[r]);
    }
    const gassoc::Rational x = (*gassoc::solve(a, rhs))[static_cast<std::size_t>(i)];
    return static_cast<long long>(boost::multiprecision::numerator(x));
  }

  int degree(int a, int b) const {
    for (std::size_t steps = 0; steps <= labels.size(); ++steps) {
      if (auto i = fundamental(labels[a])) {
        Vec phi = oracle::apply(c_inverse_weight, labels[b]);
        for (std::size_t k = 0; k < phi.size(); ++k) phi[k] -= labels[b][k];
        return static_cast<int>(std::max(0LL, root_coefficient(phi, *i)));
      }
      a = tau[a];
      b = tau[b];
    }
    return -1;
  }

  void search(std::size_t from, std::vector<int>& pick) {
    if (static_cast<int>(pick.size()) == cartan.n) {
      clusters.push_back(pick);
      return;
    }
    for (std::size_t k = from; k < labels.size(); ++k) {
      bool ok = true;
      for (int p : pick) ok = ok && compat[p][k] == 0 && compat[k][p] == 0;
      if (!ok) continue;
      pick.push_back(static_cast<int>(k));
      search(k + 1, pick);
      pick.pop_back();
    }
  }
};

}  // namespace oracle
