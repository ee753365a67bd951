// Laurent polynomials with integer coefficients in a fixed number of variables.
#pragma once

#include "gassoc/numeric.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gassoc {

/// Raised when an exchange quotient is not a Laurent polynomial.
class LaurentViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Laurent {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Integer>;  // no zero coefficients

  explicit Laurent(std::size_t nvars = 0) : nvars_(nvars) {}
  static Laurent constant(std::size_t nvars, const Integer& c);
  static Laurent monomial(Exponents e, const Integer& c = 1);
  static Laurent variable(std::size_t nvars, std::size_t k);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Laurent operator+(const Laurent& other) const;
  Laurent operator-(const Laurent& other) const;
  Laurent operator*(const Laurent& other) const;
  Laurent pow(unsigned k) const;
  bool operator==(const Laurent& other) const { return nvars_ == other.nvars_ && terms_ == other.terms_; }
  bool operator!=(const Laurent& other) const { return !(*this == other); }
  /// Total order (on the term maps) used to canonicalize seeds.
  bool operator<(const Laurent& other) const { return terms_ < other.terms_; }

  /// Exact quotient by leading-term elimination under the lexicographic
  /// group order, or nullopt if the division is not exact within `max_steps`.
  std::optional<Laurent> divide_exact(const Laurent& divisor, std::size_t max_steps = 100000) const;

  /// Sets variables keep..nvars-1 to 1 and drops them.
  Laurent specialize_tail(std::size_t keep) const;

  /// Degree of a homogeneous polynomial when variable k has degree degrees[k];
  /// nullopt if some two terms have different degrees (or the polynomial is zero).
  std::optional<IntVec> homogeneous_degree(const std::vector<IntVec>& degrees) const;

  /// "x1^2*x2^-1 + 2" with names x1.. for the first `nx` variables and y1.. after.
  std::string to_string(std::size_t nx) const;

 private:
  void add_term(const Exponents& e, const Integer& c);

  std::size_t nvars_;
  Terms terms_;
};

}  // namespace gassoc
