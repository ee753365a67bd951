// Exact integer/rational arithmetic and the small dense linear algebra the
// rest of the library is built on. Nothing in here touches floating point.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gassoc {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

/// Dense row-major integer matrix. Sizes are tiny (rank of a root system),
/// so no attempt is made at blocking or sharing storage.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal length).
  static IntMatrix from_columns(const std::vector<IntVec>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec column(std::size_t c) const;
  IntVec row(std::size_t r) const;

  IntVec apply(const IntVec& v) const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix transpose() const;

  bool operator==(const IntMatrix& other) const = default;
  /// Lexicographic on (rows, cols, entries); gives a canonical total order.
  bool operator<(const IntMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Vector helpers. Lengths must agree; mismatches are programming errors.
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec operator*(const Integer& s, const IntVec& v);
IntVec& operator+=(IntVec& a, const IntVec& b);
RatVec to_rational(const IntVec& v);
bool is_zero(const IntVec& v);
bool all_nonnegative(const IntVec& v);
Integer dot(const IntVec& a, const IntVec& b);
Rational dot(const RatVec& a, const IntVec& b);

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Exact solution of m x = b, or nullopt if m is singular.
std::optional<RatVec> solve(const IntMatrix& m, const RatVec& b);

/// Inverse of a matrix with determinant ±1. Throws std::domain_error otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Adjugate, so that m * adjugate(m) = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
/// "(1,-1,0)".
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);
/// Decimal rendering rounded half away from zero to `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits);
/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

Integer gcd_of(const IntVec& v);
Integer lcm_of_denominators(const RatVec& v);

}  // namespace gassoc
