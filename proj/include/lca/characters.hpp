#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lca/rational.hpp"
#include "lca/series.hpp"

namespace lca {

/// λ1 ≥ λ2 ≥ ... ≥ λd > 0. Trailing zeros are dropped on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  /// λ_i for i ≥ 1, zero beyond the length
  long operator[](std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  int d() const { return static_cast<int>(parts_.size()); }
  long size() const;
  /// n(λ) = Σ (i−1) λ_i
  long n() const;
  Partition conjugate() const;
  /// hook lengths, row by row
  std::vector<std::vector<long>> hooks() const;
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<long> parts_;
};

Partition parse_partition(std::string_view text);

/// All partitions of n, largest first part first.
std::vector<Partition> partitions_of(int n);

/// Labels (λ1, λ2, ...) with finite support over Q.
struct GenWeight {
  std::map<int, Rat> labels;
  static GenWeight from_list(const std::vector<Rat>& values);
  Rat operator[](int i) const;
};

enum class BCFamily { B, C };

struct BCWeight {
  BCFamily family = BCFamily::B;
  std::vector<Rat> labels;  // λ1, λ2, ...
  Rat c;

  Rat label(int i) const;
  /// λ(α_i^∨): i = 0 is 2c−2λ1 (B) or c−λ1 (C); i ≥ 1 is λ_i − λ_{i+1}
  Rat coroot_label(int i) const;
  int n1() const;
  bool is_dominant_integral() const;
  std::string to_string() const;
};

/// "B c=1 l=1,0,0"; the label list may be omitted.
BCWeight parse_bcweight(std::string_view text);

/// Π_{1≤i<j≤d} (1−q^{λi−λj+j−i})/(1−q^{j−i})
QSeries ch_finite_gl(const Partition& lambda, int d, int N);

/// ch_finite_gl / Π_{j=1}^{d} (1−q^j)^{λ_{d−j+1}}_q
QSeries ch_Lplus(const Partition& lambda, int N);

/// Semistandard tableaux with entries in N, weight q^{Σ(entry−1)}, shifted down by q^{n(λ)}.
QSeries ch_ssyt_oracle(const Partition& lambda, int N);

/// Index conventions for the b∞ / c∞ product formulas. The middle product is
/// Π_{i=1}^{n1} 1/(1−q^{n1+i+second_exp_offset})^{2c−λ_{i+second_label_shift}}_q and the
/// tail is Π_{i ≥ n1+tail_start_shift} 1/(1−q^{2i+tail_exp_offset})^{2c}_q.
struct BCConvention {
  int second_exp_offset = 0;
  int second_label_shift = 0;
  int tail_start_shift = 0;
  int tail_exp_offset = 1;
  std::string describe() const;
  friend bool operator==(const BCConvention&, const BCConvention&) = default;
};

/// The conventions as typeset in the closed formulas.
BCConvention printed_convention(BCFamily family);
std::vector<BCConvention> candidate_conventions(BCFamily family);

/// The closed product formula under an explicit convention.
QSeries ch_bc_closed(const BCWeight& lambda, int N, const BCConvention& conv);

/// Π over positive coroots of (1−q^{⟨λ+ρ,α⟩})/(1−q^{⟨ρ,α⟩}), ⟨ρ, α_i^∨⟩ = 1.
QSeries ch_bc_coroot_oracle(const BCWeight& lambda, int N);

/// Finite part: the same product over the coroots of so(2n1+1) / sp(2n1).
QSeries ch_bc_finite(const BCWeight& lambda, int N);

/// The reference weights Λ0, Λ1, Λ2, Λ1+Λ0, 2Λ0 of a family.
std::vector<std::pair<std::string, BCWeight>> reference_bc_weights(BCFamily family);

struct ConventionSelection {
  BCConvention convention;
  bool printed_matches = false;
  bool found = false;
};

/// First candidate that agrees with the coroot oracle on every reference
/// weight at truncation 10. Computed once per family.
const ConventionSelection& selected_convention(BCFamily family);

/// Closed formula under the selected convention. Throws std::invalid_argument
/// for non-dominant weights and std::runtime_error if no convention matched.
QSeries ch_binf(const BCWeight& lambda, int N);
QSeries ch_cinf(const BCWeight& lambda, int N);

/// #{i ≥ 0 : λ(α_i^∨) ≠ 0}
int degree_one_count(const BCWeight& lambda);

/// |λ| for λ ∈ Par⁺, nullopt (infinite growth) otherwise.
std::optional<long> growth_exact(const GenWeight& lambda);

/// log(Σ_{i≤N} c_i) / log N at the truncation order N; 0 for a series that
/// vanishes beyond its constant term.
double growth_estimate(const QSeries& s);

}  // namespace lca
