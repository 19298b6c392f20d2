#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lca/conformal.hpp"
#include "lca/diffops.hpp"

namespace lca {

struct RunConfig {
  int N = 12;
  std::uint64_t seed = 20240601;
  int samples = 20;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  /// The identity exercised, in words.
  std::string formula;
};

/// Random instances for the exact property checks. Deterministic per seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  int uniform(int lo, int hi);
  /// p/q with |p| ≤ 9, 1 ≤ q ≤ 6
  Rat rational();
  /// a few terms c ∂^i x^j with i + j ≤ max_degree
  GcElement gc_element(int max_degree);
  /// Σ_k t^k f_k(D), |k| ≤ max_k, deg f_k ≤ max_degree
  DiffOp diffop(int max_k, int max_degree);
  /// Σ_m p_m(t) (d/dt)^m with polynomial p_m, i.e. an element of D⁻
  DiffOp dminus_element(int max_order, int max_degree);

 private:
  std::mt19937_64 rng_;
};

/// Acceptance criteria 1..11. Each returns its sub-checks; the criterion
/// passes when all of them do.
std::vector<CheckResult> run_criterion(int n, const RunConfig& cfg);
std::string criterion_title(int n);
constexpr int criterion_count = 11;

/// Per-module invariant suites used by `selftest`.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace lca
