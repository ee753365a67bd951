// Shared fixtures for the unit and acceptance tests.
#pragma once

#include "gassoc/clusterfan.hpp"
#include "gassoc/coxweyl.hpp"
#include "oracles.hpp"

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace fixture {

inline gassoc::IntVec iv(std::initializer_list<long long> xs) {
  gassoc::IntVec out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

inline gassoc::IntVec iv(const oracle::Vec& xs) {
  gassoc::IntVec out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

inline oracle::Vec ov(const gassoc::IntVec& xs) {
  oracle::Vec out;
  for (const auto& x : xs) out.push_back(static_cast<long long>(x));
  return out;
}

inline std::shared_ptr<const gassoc::WeylGroup> group(const std::string& label) {
  return std::make_shared<const gassoc::WeylGroup>(gassoc::make_datum(label));
}

/// `order` is 1-based, e.g. "1,2,3".
inline gassoc::CoxeterElement coxeter(const std::string& label, const std::string& order) {
  auto g = group(label);
  return gassoc::coxeter_from_order(g, gassoc::parse_word(order, g->rank()));
}

inline gassoc::ClusterModel model(const std::string& label, const std::string& order) {
  return gassoc::ClusterModel(coxeter(label, order));
}

inline std::vector<gassoc::CoxeterElement> all_coxeter(const std::string& label) {
  return gassoc::all_coxeter_elements(group(label));
}

inline std::vector<int> order_of(const gassoc::CoxeterElement& c) { return {c.order().begin(), c.order().end()}; }

inline oracle::PiModel oracle_model(const gassoc::CoxeterElement& c) { return oracle::PiModel(c.datum(), order_of(c)); }

/// Library label id -> oracle label index, matched on weights. -1 when missing.
inline std::vector<int> match_labels(const gassoc::ClusterModel& model, const oracle::PiModel& o) {
  std::vector<int> out;
  for (const auto& l : model.pi_labels()) {
    auto it = o.index.find(ov(l.weight));
    out.push_back(it == o.index.end() ? -1 : it->second);
  }
  return out;
}

inline const std::vector<std::string>& irreducible_rank4() {
  static const std::vector<std::string> t{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"};
  return t;
}

inline const std::vector<std::string>& irreducible_rank3() {
  static const std::vector<std::string> t{"A1", "A2", "A3", "B2", "B3", "C3", "G2"};
  return t;
}

}  // namespace fixture
