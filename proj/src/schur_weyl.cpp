#include "lca/schur_weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lca/linalg.hpp"

namespace lca {

TensorVector::TensorVector(int plus_factors, int minus_factors, int truncation)
    : plus_(plus_factors), minus_(minus_factors), trunc_(truncation) {}

int TensorVector::degree(const Key& k) const {
  int d = 0;
  for (int i = 0; i < plus_; ++i) d += k[static_cast<std::size_t>(i)] - 1;
  for (int i = plus_; i < plus_ + minus_; ++i) d += k[static_cast<std::size_t>(i)];
  return d;
}

void TensorVector::add(const Key& k, const Rat& c) {
  if (c == 0) return;
  if (degree(k) > trunc_) {
    truncated_ = true;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  truncated_ = truncated_ || o.truncated_;
  return *this;
}

TensorVector& TensorVector::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

std::string TensorVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.get_str() << ")";
    first = false;
    for (int i = 0; i < plus_ + minus_; ++i) {
      os << (i == 0 ? " " : "⊗");
      if (i < plus_) {
        os << "t^-" << k[static_cast<std::size_t>(i)];
      } else {
        os << "(t^" << k[static_cast<std::size_t>(i)] << ")*";
      }
    }
  }
  return os.str();
}

TensorVector act(const DiffOp& a, const TensorVector& v) {
  if (!in_Dminus(a)) throw std::invalid_argument("operator " + a.to_string() + " is not in D⁻");
  TensorVector r(v.plus_factors(), v.minus_factors(), v.truncation());
  if (v.truncated()) r.mark_truncated();
  for (const auto& [key, c] : v.terms()) {
    for (int pos = 0; pos < v.plus_factors() + v.minus_factors(); ++pos) {
      int idx = key[static_cast<std::size_t>(pos)];
      bool dual = pos >= v.plus_factors();
      for (const auto& [k, f] : a.parts()) {
        TensorVector::Key out = key;
        Rat coeff;
        if (!dual) {
          if (idx - k <= 0) continue;  // lands in C[t]
          coeff = f.eval(Rat(-idx));
          out[static_cast<std::size_t>(pos)] = idx - k;
        } else {
          if (idx - k < 0) continue;
          coeff = -f.eval(Rat(idx - k));
          out[static_cast<std::size_t>(pos)] = idx - k;
        }
        if (coeff != 0) r.add(out, c * coeff);
      }
    }
  }
  return r;
}

namespace {

// Positions of the cells of a shape laid out row by row from `offset`.
struct CellLayout {
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> cols;
};

CellLayout layout(const Partition& shape, int offset) {
  CellLayout l;
  int pos = offset;
  for (long len : shape.parts()) {
    std::vector<int> row;
    for (long c = 0; c < len; ++c) {
      row.push_back(pos++);
      if (static_cast<std::size_t>(c) >= l.cols.size()) l.cols.emplace_back();
      l.cols[static_cast<std::size_t>(c)].push_back(row.back());
    }
    l.rows.push_back(row);
  }
  return l;
}

// Σ over the product of the permutation groups of the blocks; each
// permutation rearranges the entries at the block's positions.
TensorVector symmetrize(const TensorVector& v, const std::vector<std::vector<int>>& blocks, bool alternating) {
  TensorVector cur = v;
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    TensorVector next(v.plus_factors(), v.minus_factors(), v.truncation());
    std::vector<int> perm(block.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      // sign via inversion count
      int inv = 0;
      for (std::size_t a = 0; a < perm.size(); ++a) {
        for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b] ? 1 : 0;
      }
      Rat sign = alternating && inv % 2 ? Rat(-1) : Rat(1);
      for (const auto& [key, c] : cur.terms()) {
        TensorVector::Key out = key;
        for (std::size_t a = 0; a < block.size(); ++a) {
          out[static_cast<std::size_t>(block[a])] = key[static_cast<std::size_t>(block[static_cast<std::size_t>(perm[a])])];
        }
        next.add(out, c * sign);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    cur = next;
  }
  return cur;
}

}  // namespace

TensorVector hwv_construct(const Partition& plus, const Partition& minus_mirror, int window) {
  int M = static_cast<int>(plus.size()), Mp = static_cast<int>(minus_mirror.size());
  int base = static_cast<int>(plus.n() + minus_mirror.n());
  TensorVector v(M, Mp, base + window);
  TensorVector::Key key(static_cast<std::size_t>(M + Mp));
  CellLayout lp = layout(plus, 0), lm = layout(minus_mirror, M);
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    for (int pos : lp.rows[r]) key[static_cast<std::size_t>(pos)] = static_cast<int>(r) + 1;
  }
  for (std::size_t r = 0; r < lm.rows.size(); ++r) {
    for (int pos : lm.rows[r]) key[static_cast<std::size_t>(pos)] = static_cast<int>(r);
  }
  v.add(key, Rat(1));
  std::vector<std::vector<int>> rows = lp.rows, cols = lp.cols;
  rows.insert(rows.end(), lm.rows.begin(), lm.rows.end());
  cols.insert(cols.end(), lm.cols.begin(), lm.cols.end());
  v = symmetrize(symmetrize(v, rows, false), cols, true);
  if (v.is_zero()) throw std::logic_error("Young symmetrizer produced zero");
  v *= 1 / v.terms().begin()->second;
  return v;
}

std::string_view to_string(GeneratorSet g) {
  switch (g) {
    case GeneratorSet::Dminus:
      return "Dminus";
    case GeneratorSet::D0minus:
      return "D0minus";
    case GeneratorSet::Dsigma_minus:
      return "Dsigma_minus";
    case GeneratorSet::D0sigmabar_minus:
      return "D0sigmabar_minus";
  }
  return "?";
}

GeneratorSet parse_generator_set(std::string_view name) {
  for (auto g : {GeneratorSet::Dminus, GeneratorSet::D0minus, GeneratorSet::Dsigma_minus,
                 GeneratorSet::D0sigmabar_minus}) {
    if (to_string(g) == name) return g;
  }
  throw std::invalid_argument("unknown generator set '" + std::string(name) + "'");
}

std::vector<DiffOp> raising_generators(GeneratorSet set, int j, int bound) {
  if (j < 1) throw std::invalid_argument("raising generators have degree j >= 1");
  // candidate basis t^{-j} D^n (or t^{-j} D^{n+1} inside D0)
  bool in_d0 = set == GeneratorSet::D0minus || set == GeneratorSet::D0sigmabar_minus;
  std::vector<DiffOp> basis;
  for (int n = 0; n <= bound; ++n) basis.push_back(DiffOp::term(-j, UnivarPoly::monomial(in_d0 ? n + 1 : n)));
  // linear conditions, one functional per row
  auto conditions = [&](const DiffOp& a) {
    std::vector<Rat> row;
    UnivarPoly f = a.part(-j);
    for (int i = 0; i < j; ++i) row.push_back(f.eval(Rat(i)));
    DiffOp image;
    if (set == GeneratorSet::Dsigma_minus) image = sigma_apply(a) + a;
    if (set == GeneratorSet::D0sigmabar_minus) image = sigma_bar_apply(a) + a;
    UnivarPoly g = image.part(-j);
    for (int e = 0; e <= bound + 2; ++e) row.push_back(g.coeff(e));
    return row;
  };
  std::vector<std::vector<Rat>> cols;
  for (const auto& a : basis) cols.push_back(conditions(a));
  DenseMatrix<Rat> mat(cols.front().size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (std::size_t r = 0; r < cols[c].size(); ++r) mat(r, c) = cols[c][r];
  }
  std::vector<DiffOp> out;
  for (const auto& v : mat.nullspace()) {
    DiffOp a;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] != 0) a += basis[c] * v[c];
    }
    out.push_back(a);
  }
  return out;
}

QSeries cyclic_span_dims(const Partition& plus, const Partition& minus_mirror, int N, GeneratorSet set) {
  TensorVector hwv = hwv_construct(plus, minus_mirror, N);
  int base = static_cast<int>(plus.n() + minus_mirror.n());
  // f only matters through its values at −a (a ≤ base+N+1) and at b ≤ base+N
  int points = 2 * (base + N + 2);
  std::map<int, std::vector<DiffOp>> gens;
  for (int j = 1; j <= N; ++j) gens[j] = raising_generators(set, j, points + j + 4);

  std::map<TensorVector::Key, int> index;
  auto to_sparse = [&](const TensorVector& v) {
    SparseVec s;
    for (const auto& [k, c] : v.terms()) {
      auto [it, inserted] = index.try_emplace(k, static_cast<int>(index.size()));
      s[it->second] = c;
    }
    return s;
  };

  QSeries dims(N);
  std::vector<std::vector<TensorVector>> basis(static_cast<std::size_t>(N) + 1);
  basis[0].push_back(hwv);
  dims[0] = 1;
  for (int d = 1; d <= N; ++d) {
    SparseEchelon ech;
    for (int j = 1; j <= d; ++j) {
      for (const auto& v : basis[static_cast<std::size_t>(d - j)]) {
        for (const auto& g : gens[j]) {
          TensorVector w = act(g, v);
          if (w.is_zero()) continue;
          if (ech.insert(to_sparse(w))) basis[static_cast<std::size_t>(d)].push_back(w);
        }
      }
    }
    dims[d] = Rat(static_cast<long>(ech.rank()));
  }
  return dims;
}

std::optional<Rat> eigenvalue(const DiffOp& a, const TensorVector& v) {
  if (v.is_zero()) return std::nullopt;
  TensorVector w = act(a, v);
  const auto& [key, c] = *v.terms().begin();
  auto it = w.terms().find(key);
  Rat lambda = it == w.terms().end() ? Rat(0) : it->second / c;
  TensorVector scaled = v;
  scaled *= lambda;
  if (!(scaled == w)) return std::nullopt;
  return lambda;
}

bool annihilated_by_lowering(const TensorVector& v, int max_j, int max_p) {
  for (int j = 1; j <= max_j; ++j) {
    for (int p = 0; p <= max_p; ++p) {
      if (!act(DiffOp::term(j, UnivarPoly::monomial(p)), v).is_zero()) return false;
    }
  }
  return true;
}

long dim_U(const Partition& lambda) {
  Rat r = factorial(static_cast<unsigned>(lambda.size()));
  for (const auto& row : lambda.hooks()) {
    for (long h : row) r /= Rat(h);
  }
  return to_long(r);
}

QSeries ch_Lminus(const Partition& minus_mirror, int N) { return ch_Lplus(minus_mirror, N); }

bool cauchy_check(int M, int N) { return mixed_cauchy_check(M, 0, N); }

bool mixed_cauchy_check(int M, int M_prime, int N) {
  QSeries total(N);
  for (const auto& lp : partitions_of(M)) {
    QSeries plus = ch_Lplus(lp, N).shifted(static_cast<int>(lp.n())) * Rat(dim_U(lp));
    for (const auto& lm : partitions_of(M_prime)) {
      total += plus * ch_Lminus(lm, N).shifted(static_cast<int>(lm.n())) * Rat(dim_U(lm));
    }
  }
  QSeries expected = QSeries::one(N);
  for (int i = 0; i < M + M_prime; ++i) expected = expected * q_pochhammer_inv(1, 1, N);
  return total == expected;
}

}  // namespace lca
