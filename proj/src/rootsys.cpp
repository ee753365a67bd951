#include "gassoc/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

namespace gassoc {

namespace {

IntMatrix irreducible_cartan(char type, int n) {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument(std::string("unsupported type ") + type + std::to_string(n) + ": " + why);
  };
  IntMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  auto at = [&](int i, int j) -> Integer& { return a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };
  auto link = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  switch (type) {
    case 'A':
      if (n < 1) throw bad("rank must be >= 1");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw bad("rank must be >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2) throw bad("rank must be >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case 'D':
      if (n < 4) throw bad("rank must be >= 4");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad("rank must be 6, 7 or 8");
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw bad("rank must be 4");
      link(0, 1);
      link(1, 2);
      link(2, 3);
      at(2, 1) = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      if (n != 2) throw bad("rank must be 2");
      at(0, 1) = -3;  // alpha_1 short
      at(1, 0) = -1;
      break;
    default:
      throw std::invalid_argument(std::string("unknown Cartan type '") + type + "'");
  }
  return a;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(off + r, off + c) = b(r, c);
    off += b.rows();
  }
  return out;
}

}  // namespace

CartanDatum::CartanDatum(std::string label, IntMatrix cartan) : label_(std::move(label)), cartan_(std::move(cartan)) {
  const int n = static_cast<int>(cartan_.rows());
  if (n == 0 || cartan_.cols() != cartan_.rows()) throw std::invalid_argument("Cartan matrix must be square and non-empty");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && a(i, j) != 2) throw std::invalid_argument("Cartan matrix must have 2 on the diagonal");
      if (i != j && a(i, j) > 0) throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
      if (i != j && (a(i, j).is_zero() != a(j, i).is_zero()))
        throw std::invalid_argument("Cartan matrix zero pattern must be symmetric");
    }

  component_of_.assign(static_cast<std::size_t>(n), -1);
  std::vector<Rational> d(static_cast<std::size_t>(n));
  for (int start = 0; start < n; ++start) {
    if (component_of_[static_cast<std::size_t>(start)] >= 0) continue;
    const int comp = static_cast<int>(components_.size());
    NodeSet members;
    std::deque<int> queue{start};
    component_of_[static_cast<std::size_t>(start)] = comp;
    d[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      members.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (!adjacent(i, j) || component_of_[static_cast<std::size_t>(j)] >= 0) continue;
        component_of_[static_cast<std::size_t>(j)] = comp;
        d[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(i)] * Rational(a(i, j)) / Rational(a(j, i));
        queue.push_back(j);
      }
    }
    std::sort(members.begin(), members.end());
    components_.push_back(std::move(members));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[static_cast<std::size_t>(i)] * Rational(a(i, j)) != d[static_cast<std::size_t>(j)] * Rational(a(j, i)))
        throw std::invalid_argument("Cartan matrix is not symmetrizable");
  Integer scale = lcm_of_denominators(d);
  symmetrizer_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    symmetrizer_[static_cast<std::size_t>(i)] = boost::multiprecision::numerator(d[static_cast<std::size_t>(i)] * scale);
  // Normalise each component separately so the smallest entry is as small as possible.
  for (const auto& comp : components_) {
    IntVec part;
    for (int i : comp) part.push_back(symmetrizer_[static_cast<std::size_t>(i)]);
    Integer g = gcd_of(part);
    for (int i : comp) symmetrizer_[static_cast<std::size_t>(i)] /= g;
  }

  // Sylvester's criterion on the symmetrized matrix DA.
  IntMatrix sym(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sym(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = symmetrizer_[static_cast<std::size_t>(i)] * a(i, j);
  for (int k = 1; k <= n; ++k) {
    IntMatrix lead(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = sym(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    if (determinant(lead) <= 0) throw std::invalid_argument("Cartan matrix is not of finite type");
  }
  det_ = determinant(cartan_);
  adj_ = adjugate(cartan_);
}

std::vector<Node> CartanDatum::neighbours(Node i) const {
  std::vector<Node> out;
  for (int j = 0; j < rank(); ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

CartanDatum make_datum(std::string_view label) {
  std::vector<IntMatrix> blocks;
  std::string canonical;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < label.size() && std::isspace(static_cast<unsigned char>(label[pos]))) ++pos;
  };
  skip_space();
  if (pos == label.size()) throw std::invalid_argument("empty Cartan type label");
  while (true) {
    skip_space();
    if (pos >= label.size()) throw std::invalid_argument("malformed Cartan type label '" + std::string(label) + "'");
    char type = static_cast<char>(std::toupper(static_cast<unsigned char>(label[pos++])));
    skip_space();
    std::size_t start = pos;
    while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("missing rank in Cartan type label '" + std::string(label) + "'");
    int n = std::stoi(std::string(label.substr(start, pos - start)));
    blocks.push_back(irreducible_cartan(type, n));
    if (!canonical.empty()) canonical += "x";
    canonical += type + std::to_string(n);
    skip_space();
    if (pos == label.size()) break;
    if (label[pos] != 'x' && label[pos] != 'X' && label[pos] != '*')
      throw std::invalid_argument("malformed Cartan type label '" + std::string(label) + "'");
    ++pos;
  }
  return CartanDatum(canonical, block_diagonal(blocks));
}

CartanDatum datum_from_matrix(const IntMatrix& cartan, std::string label) {
  return CartanDatum(std::move(label), cartan);
}

CartanDatum restrict_datum(const CartanDatum& datum, const NodeSet& nodes) {
  const std::size_t k = nodes.size();
  IntMatrix sub(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) sub(r, c) = datum.a(nodes[r], nodes[c]);
  std::string label = datum.label() + "|{";
  for (std::size_t r = 0; r < k; ++r) label += (r ? "," : "") + node_name(nodes[r]);
  label += "}";
  return CartanDatum(label, sub);
}

LatticeVector LatticeVector::simple_root(const CartanDatum& datum, Node i) {
  return LatticeVector(Basis::Root, unit_vector(datum.rank(), i));
}

LatticeVector LatticeVector::fundamental_weight(const CartanDatum& datum, Node i) {
  return LatticeVector(Basis::Weight, unit_vector(datum.rank(), i));
}

bool LatticeVector::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& q) { return boost::multiprecision::denominator(q) == 1; });
}

IntVec LatticeVector::integer_coords() const {
  if (!is_integral()) throw std::domain_error("lattice vector has non-integral coordinates");
  IntVec out;
  out.reserve(coords_.size());
  for (const auto& q : coords_) out.push_back(boost::multiprecision::numerator(q));
  return out;
}

LatticeVector LatticeVector::operator+(const LatticeVector& other) const {
  if (basis_ != other.basis_ || size() != other.size())
    throw std::invalid_argument("cannot add lattice vectors in different bases");
  RatVec out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coords_[i] + other.coords_[i];
  return LatticeVector(basis_, std::move(out));
}

LatticeVector LatticeVector::operator-(const LatticeVector& other) const { return *this + (-other); }

LatticeVector LatticeVector::operator-() const { return Rational(-1) * *this; }

LatticeVector operator*(const Rational& s, const LatticeVector& v) {
  RatVec out(v.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * v.coords_[i];
  return LatticeVector(v.basis_, std::move(out));
}

LatticeVector convert(const CartanDatum& datum, const LatticeVector& v, Basis target) {
  if (v.basis() == target) return v;
  const auto n = static_cast<std::size_t>(datum.rank());
  if (v.size() != n) throw std::invalid_argument("convert: dimension mismatch");
  RatVec out(n);
  if (target == Basis::Weight) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i] += Rational(datum.cartan()(i, j)) * v.coords()[j];
  } else {
    const IntMatrix& adj = datum.cartan_adjugate();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out[i] += Rational(adj(i, j)) * v.coords()[j];
      out[i] /= Rational(datum.cartan_det());
    }
  }
  return LatticeVector(target, std::move(out));
}

LatticeVector reflect(const CartanDatum& datum, Node i, const LatticeVector& v) {
  const auto n = static_cast<std::size_t>(datum.rank());
  const auto ii = static_cast<std::size_t>(i);
  RatVec out = v.coords();
  if (v.basis() == Basis::Weight) {
    Rational pairing = out[ii];
    for (std::size_t k = 0; k < n; ++k) out[k] -= pairing * Rational(datum.cartan()(k, ii));
  } else {
    Rational pairing = 0;
    for (std::size_t j = 0; j < n; ++j) pairing += Rational(datum.cartan()(ii, j)) * out[j];
    out[ii] -= pairing;
  }
  return LatticeVector(v.basis(), std::move(out));
}

IntVec root_to_weight(const CartanDatum& datum, const IntVec& root) { return datum.cartan().apply(root); }

IntVec weight_to_root(const CartanDatum& datum, const IntVec& weight) {
  IntVec scaled = datum.cartan_adjugate().apply(weight);
  for (auto& x : scaled) {
    if (x % datum.cartan_det() != 0) throw std::domain_error("weight is not in the root lattice");
    x /= datum.cartan_det();
  }
  return scaled;
}

IntVec reflect_root(const CartanDatum& datum, Node i, IntVec root) {
  Integer pairing = 0;
  for (int j = 0; j < datum.rank(); ++j)
    if (!root[static_cast<std::size_t>(j)].is_zero()) pairing += datum.a(i, j) * root[static_cast<std::size_t>(j)];
  root[static_cast<std::size_t>(i)] -= pairing;
  return root;
}

IntVec reflect_weight(const CartanDatum& datum, Node i, IntVec weight) {
  Integer pairing = weight[static_cast<std::size_t>(i)];
  if (pairing.is_zero()) return weight;
  for (int k = 0; k < datum.rank(); ++k) weight[static_cast<std::size_t>(k)] -= pairing * datum.a(k, i);
  return weight;
}

IntVec unit_vector(int n, Node i) {
  IntVec v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
  const int n = datum_.rank();
  std::set<IntVec> seen;
  std::deque<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    IntVec e = unit_vector(n, i);
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec r = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      IntVec s = reflect_root(datum_, i, r);
      if (!all_nonnegative(s) || is_zero(s)) continue;
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
  }
  positive_.assign(seen.begin(), seen.end());
  std::sort(positive_.begin(), positive_.end(), [](const IntVec& x, const IntVec& y) {
    Integer hx = 0, hy = 0;
    for (const auto& v : x) hx += v;
    for (const auto& v : y) hy += v;
    if (hx != hy) return hx < hy;
    return x > y;  // alpha_1 before alpha_2 at equal height
  });
  for (std::size_t k = 0; k < positive_.size(); ++k) index_.emplace(positive_[k], static_cast<int>(k));
}

int RootSystem::index_of(const IntVec& root) const {
  auto it = index_.find(root);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const IntVec& v) const { return is_positive_root(v) || is_positive_root(-v); }

std::size_t RootSystem::component_size(int component) const {
  const NodeSet& nodes = datum_.components()[static_cast<std::size_t>(component)];
  std::size_t count = 0;
  for (const auto& r : positive_)
    if (std::any_of(nodes.begin(), nodes.end(), [&](Node i) { return !r[static_cast<std::size_t>(i)].is_zero(); }))
      ++count;
  return count;
}

int RootSystem::coxeter_number(int component) const {
  const auto rank = datum_.components()[static_cast<std::size_t>(component)].size();
  return static_cast<int>(2 * component_size(component) / rank);
}

NodeSet support(const RootSystem& roots, const IntVec& root) {
  if (!roots.is_positive_root(root)) throw std::invalid_argument("support: not a positive root");
  NodeSet out;
  for (std::size_t i = 0; i < root.size(); ++i)
    if (!root[i].is_zero()) out.push_back(static_cast<Node>(i));
  return out;
}

bool spaced(const CartanDatum& datum, const NodeSet& a, const NodeSet& b) {
  for (Node i : a)
    for (Node j : b)
      if (!datum.a(i, j).is_zero()) return false;
  return true;
}

std::string node_name(Node i) { return std::to_string(i + 1); }

}  // namespace gassoc
