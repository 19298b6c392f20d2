#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lca/characters.hpp"
#include "lca/diffops.hpp"

namespace lca {

/// Linear combination of w_{a1} ⊗ ... ⊗ w_{aM} ⊗ w*_{b1} ⊗ ... ⊗ w*_{bM'} with
/// w_a = t^{−a} (a ≥ 1, degree a−1) in V and w*_b = (t^b)^* (b ≥ 0, degree b)
/// in V'. Terms of total degree above `truncation` are dropped and flagged.
class TensorVector {
 public:
  using Key = std::vector<int>;

  TensorVector(int plus_factors, int minus_factors, int truncation);

  int plus_factors() const { return plus_; }
  int minus_factors() const { return minus_; }
  int truncation() const { return trunc_; }
  bool truncated() const { return truncated_; }
  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree(const Key& k) const;
  void add(const Key& k, const Rat& c);
  void mark_truncated() { truncated_ = true; }

  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator*=(const Rat& s);
  friend bool operator==(const TensorVector& a, const TensorVector& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  int plus_, minus_, trunc_;
  bool truncated_ = false;
  std::map<Key, Rat> terms_;
};

/// Leibniz action of a ∈ D⁻; t^k f(D) w_a = f(−a) w_{a−k} (zero if a−k ≤ 0),
/// t^k f(D) w*_b = −f(b−k) w*_{b−k} (zero if b−k < 0).
TensorVector act(const DiffOp& a, const TensorVector& v);

/// Young symmetrizer (row symmetrization, then column antisymmetrization)
/// applied to the filling with w_r in row r of λ⁺ and w*_{r−1} in row r of
/// the mirror μ of λ⁻. Normalized so the first coefficient is 1.
TensorVector hwv_construct(const Partition& plus, const Partition& minus_mirror, int window);

enum class GeneratorSet { Dminus, D0minus, Dsigma_minus, D0sigmabar_minus };
std::string_view to_string(GeneratorSet g);
GeneratorSet parse_generator_set(std::string_view name);

/// Basis of the degree-j part (elements t^{−j} f(D), deg f ≤ bound) of the
/// chosen subalgebra of D⁻, obtained as the kernel of its defining linear conditions.
std::vector<DiffOp> raising_generators(GeneratorSet set, int j, int bound);

/// Graded dimensions, relative to the highest weight vector, of the span of
/// hwv under the raising generators of the chosen subalgebra, degrees 0..N.
QSeries cyclic_span_dims(const Partition& plus, const Partition& minus_mirror, int N, GeneratorSet set);

/// c with a·v = c v, or nullopt when v is not an eigenvector.
std::optional<Rat> eigenvalue(const DiffOp& a, const TensorVector& v);

/// t^j D^p v = 0 for 1 ≤ j ≤ max_j, 0 ≤ p ≤ max_p.
bool annihilated_by_lowering(const TensorVector& v, int max_j, int max_p);

/// |λ|! / Π hooks
long dim_U(const Partition& lambda);

/// ch L⁻(λ⁻) through the mirror partition.
QSeries ch_Lminus(const Partition& minus_mirror, int N);

/// Σ_{|λ|=M} f^λ q^{n(λ)} ch L⁺(λ) = (1−q)^{−M} mod q^{N+1}
bool cauchy_check(int M, int N);

/// Σ f^{λ⁺} f^{μ} q^{n(λ⁺)+n(μ)} ch L⁺(λ⁺) ch L⁻(λ⁻) = (1−q)^{−(M+M')}
bool mixed_cauchy_check(int M, int M_prime, int N);

}  // namespace lca
