#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilzeta/algebra.hpp"
#include "nilzeta/ideal.hpp"

namespace nilzeta::cli {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;
};

struct VerifyReport {
  std::string spec;
  unsigned max_degree = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

/// Runs every exact identity of the toolkit on monomials up to max_degree
/// (bounded further per check where the cost grows fast). Throws
/// LimitError when max_degree exceeds the slice cap.
VerifyReport run_verify(const AlgebraPtr& alg, unsigned max_degree, unsigned cap = Ideal::kDefaultCap);

}  // namespace nilzeta::cli
