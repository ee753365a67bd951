#include "gassoc/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gassoc {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns) {
  if (columns.empty()) return {};
  IntMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows_) throw std::invalid_argument("from_columns: ragged columns");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVec IntMatrix::column(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVec IntMatrix::row(std::size_t r) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVec IntMatrix::apply(const IntVec& v) const {
  assert(v.size() == cols_);
  IntVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Integer& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) acc += a * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  assert(cols_ == other.rows_);
  IntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  IntMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= other.data_[k];
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

bool IntMatrix::operator<(const IntMatrix& other) const {
  if (rows_ != other.rows_) return rows_ < other.rows_;
  if (cols_ != other.cols_) return cols_ < other.cols_;
  return data_ < other.data_;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec operator-(const IntVec& a) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

IntVec operator*(const Integer& s, const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

IntVec& operator+=(IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x.is_zero(); });
}

bool all_nonnegative(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

Integer dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational dot(const RatVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<RatVec> solve(const IntMatrix& m, const RatVec& b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  // Clear denominators so the augmented system is integral, then run
  // fraction-free elimination on it.
  Integer scale = lcm_of_denominators(b);
  IntMatrix a(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = m(r, c);
    Rational scaled = b[r] * scale;
    a(r, n) = boost::multiprecision::numerator(scaled);
  }
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return std::nullopt;
      for (std::size_t c = 0; c <= n; ++c) std::swap(a(k, c), a(swap, c));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  RatVec x(n);
  for (std::size_t r = n; r-- > 0;) {
    Rational acc = Rational(a(r, n));
    for (std::size_t c = r + 1; c < n; ++c) acc -= Rational(a(r, c)) * x[c];
    x[r] = acc / Rational(a(r, r));
  }
  for (auto& v : x) v /= Rational(scale);
  return x;
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("adjugate of non-square matrix");
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj++) = m(i, j);
        }
        ++mi;
      }
      Integer cof = determinant(minor);
      if ((r + c) % 2 == 1) cof = -cof;
      adj(c, r) = cof;
    }
  return adj;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  Integer det = determinant(m);
  if (det != 1 && det != -1) throw std::domain_error("inverse_unimodular: determinant is " + to_string(det));
  IntMatrix adj = adjugate(m);
  if (det == -1)
    for (std::size_t r = 0; r < adj.rows(); ++r)
      for (std::size_t c = 0; c < adj.cols(); ++c) adj(r, c) = -adj(r, c);
  return adj;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out + ")";
}

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("to_decimal: negative precision");
  Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  const bool negative = num < 0;
  if (negative) num = -num;
  Integer pow10 = 1;
  for (int k = 0; k < digits; ++k) pow10 *= 10;
  Integer scaled = (num * pow10 * 2 + den) / (den * 2);
  std::string body = scaled.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && scaled != 0) body.insert(0, "-");
  return body;
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> Integer {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    if (pos == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer v = 0;
    for (; pos < s.size(); ++pos) {
      if (s[pos] < '0' || s[pos] > '9') throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
      v = v * 10 + (s[pos] - '0');
    }
    return neg ? Integer(-v) : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den.is_zero()) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

Integer gcd_of(const IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return g < 0 ? Integer(-g) : g;
}

Integer lcm_of_denominators(const RatVec& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
  return l;
}

}  // namespace gassoc
