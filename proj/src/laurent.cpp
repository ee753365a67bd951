#include "gassoc/laurent.hpp"

namespace gassoc {

Laurent Laurent::constant(std::size_t nvars, const Integer& c) {
  Laurent out(nvars);
  out.add_term(Exponents(nvars, 0), c);
  return out;
}

Laurent Laurent::monomial(Exponents e, const Integer& c) {
  Laurent out(e.size());
  out.add_term(e, c);
  return out;
}

Laurent Laurent::variable(std::size_t nvars, std::size_t k) {
  Exponents e(nvars, 0);
  e[k] = 1;
  return monomial(std::move(e));
}

void Laurent::add_term(const Exponents& e, const Integer& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Laurent Laurent::operator+(const Laurent& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("Laurent: variable count mismatch");
  Laurent out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

Laurent Laurent::operator-(const Laurent& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("Laurent: variable count mismatch");
  Laurent out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
  return out;
}

Laurent Laurent::operator*(const Laurent& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("Laurent: variable count mismatch");
  Laurent out(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

Laurent Laurent::pow(unsigned k) const {
  Laurent out = constant(nvars_, 1);
  for (unsigned step = 0; step < k; ++step) out = out * *this;
  return out;
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& divisor, std::size_t max_steps) const {
  if (divisor.is_zero()) throw std::domain_error("Laurent division by zero");
  if (nvars_ != divisor.nvars_) throw std::invalid_argument("Laurent: variable count mismatch");
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  Laurent rest = *this;
  Laurent quotient(nvars_);
  for (std::size_t step = 0; !rest.is_zero(); ++step) {
    if (step >= max_steps) return std::nullopt;
    const auto& [e, c] = *rest.terms_.rbegin();
    if (c % lead_c != 0) return std::nullopt;
    Exponents shift(nvars_);
    for (std::size_t k = 0; k < nvars_; ++k) shift[k] = e[k] - lead_e[k];
    Laurent t = monomial(std::move(shift), c / lead_c);
    const auto& [te, tc] = *t.terms_.begin();
    quotient.add_term(te, tc);
    rest = rest - t * divisor;
  }
  return quotient;
}

Laurent Laurent::specialize_tail(std::size_t keep) const {
  Laurent out(keep);
  for (const auto& [e, c] : terms_) out.add_term(Exponents(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(keep)), c);
  return out;
}

std::optional<IntVec> Laurent::homogeneous_degree(const std::vector<IntVec>& degrees) const {
  if (degrees.size() != nvars_) throw std::invalid_argument("Laurent: one degree per variable required");
  std::optional<IntVec> out;
  for (const auto& [e, c] : terms_) {
    IntVec d(degrees.empty() ? 0 : degrees.front().size());
    for (std::size_t k = 0; k < nvars_; ++k)
      if (e[k] != 0) d += Integer(e[k]) * degrees[k];
    if (out && *out != d) return std::nullopt;
    out = std::move(d);
  }
  return out;
}

std::string Laurent::to_string(std::size_t nx) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (k < nx ? "x" + std::to_string(k + 1) : "y" + std::to_string(k - nx + 1));
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    Integer mag = c < 0 ? Integer(-c) : c;
    std::string piece = mono.empty() ? mag.str() : (mag == 1 ? mono : mag.str() + "*" + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + piece;
    else
      out += (c < 0 ? " - " : " + ") + piece;
  }
  return out;
}

}  // namespace gassoc
