#include "lca/characters.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "lca/parse.hpp"

namespace lca {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition entries must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition must be non-increasing");
  }
}

long Partition::size() const {
  long s = 0;
  for (long p : parts_) s += p;
  return s;
}

long Partition::n() const {
  long s = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
  return s;
}

Partition Partition::conjugate() const {
  std::vector<long> c;
  if (parts_.empty()) return Partition();
  for (long col = 1; col <= parts_[0]; ++col) {
    long len = 0;
    for (long p : parts_) len += p >= col ? 1 : 0;
    c.push_back(len);
  }
  return Partition(c);
}

std::vector<std::vector<long>> Partition::hooks() const {
  Partition conj = conjugate();
  std::vector<std::vector<long>> h;
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    std::vector<long> row;
    for (long c = 0; c < parts_[r]; ++c) {
      long arm = parts_[r] - c - 1;
      long leg = conj.parts()[static_cast<std::size_t>(c)] - static_cast<long>(r) - 1;
      row.push_back(arm + leg + 1);
    }
    h.push_back(row);
  }
  return h;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition parse_partition(std::string_view text) { return Partition(parse_int_list(text)); }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long remaining, long max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

GenWeight GenWeight::from_list(const std::vector<Rat>& values) {
  GenWeight w;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) w.labels[static_cast<int>(i) + 1] = values[i];
  }
  return w;
}

Rat GenWeight::operator[](int i) const {
  auto it = labels.find(i);
  return it == labels.end() ? Rat(0) : it->second;
}

Rat BCWeight::label(int i) const {
  return i >= 1 && static_cast<std::size_t>(i) <= labels.size() ? labels[static_cast<std::size_t>(i) - 1] : Rat(0);
}

Rat BCWeight::coroot_label(int i) const {
  if (i == 0) return family == BCFamily::B ? Rat(2 * c - 2 * label(1)) : Rat(c - label(1));
  return label(i) - label(i + 1);
}

int BCWeight::n1() const {
  int n = 0;
  for (int i = 1; i <= static_cast<int>(labels.size()) + 1; ++i) {
    if (coroot_label(i) != 0) n = i;
  }
  return n;
}

bool BCWeight::is_dominant_integral() const {
  for (int i = 0; i <= static_cast<int>(labels.size()) + 1; ++i) {
    Rat v = coroot_label(i);
    if (!is_integer(v) || v < 0) return false;
  }
  return true;
}

std::string BCWeight::to_string() const {
  std::string s = family == BCFamily::B ? "B" : "C";
  s += " c=" + c.get_str() + " l=";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ",";
    s += labels[i].get_str();
  }
  return s;
}

BCWeight parse_bcweight(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  BCWeight w;
  if (!(in >> word) || (word != "B" && word != "C")) throw ParseError("expected family B or C", 0);
  w.family = word == "B" ? BCFamily::B : BCFamily::C;
  bool have_c = false;
  while (in >> word) {
    std::size_t pos = text.find(word);
    if (word.rfind("c=", 0) == 0) {
      try {
        w.c = parse_rat(word.substr(2));
      } catch (const std::invalid_argument&) {
        throw ParseError("bad central charge", pos);
      }
      have_c = true;
    } else if (word.rfind("l=", 0) == 0) {
      w.labels = parse_rat_list(word.substr(2));
    } else {
      throw ParseError("unexpected '" + word + "'", pos);
    }
  }
  if (!have_c) throw ParseError("missing c=", text.size());
  while (!w.labels.empty() && w.labels.back() == 0) w.labels.pop_back();
  return w;
}

QSeries ch_finite_gl(const Partition& lambda, int d, int N) {
  if (d < lambda.d()) throw std::invalid_argument("d is smaller than the length of the partition");
  QSeries num = QSeries::one(N), den = QSeries::one(N);
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      num = num * q_pochhammer(static_cast<int>(lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)]) + j - i, 1, N);
      den = den * q_pochhammer(j - i, 1, N);
    }
  }
  return num / den;
}

QSeries ch_Lplus(const Partition& lambda, int N) {
  int d = lambda.d();
  QSeries r = ch_finite_gl(lambda, d, N);
  for (int j = 1; j <= d; ++j) {
    r = r * q_pochhammer_inv(j, static_cast<int>(lambda[static_cast<std::size_t>(d - j + 1)]), N);
  }
  return r;
}

QSeries ch_ssyt_oracle(const Partition& lambda, int N) {
  QSeries r(N);
  const auto& rows = lambda.parts();
  long shift = lambda.n();
  long max_weight = N + shift;
  long max_entry = N + lambda.d();
  // grid[r][c] filled row by row
  std::vector<std::vector<long>> grid;
  for (long len : rows) grid.emplace_back(static_cast<std::size_t>(len), 0);
  std::function<void(std::size_t, std::size_t, long)> fill = [&](std::size_t row, std::size_t col, long weight) {
    if (weight > max_weight) return;
    if (row == rows.size()) {
      r[static_cast<int>(weight - shift)] += 1;
      return;
    }
    std::size_t next_row = row, next_col = col + 1;
    if (next_col == grid[row].size()) {
      next_row = row + 1;
      next_col = 0;
    }
    long lo = 1;
    if (col > 0) lo = std::max(lo, grid[row][col - 1]);
    if (row > 0) lo = std::max(lo, grid[row - 1][col] + 1);
    for (long v = lo; v <= max_entry && weight + v - 1 <= max_weight; ++v) {
      grid[row][col] = v;
      fill(next_row, next_col, weight + v - 1);
    }
  };
  if (rows.empty()) {
    r[0] = 1;
    return r;
  }
  fill(0, 0, 0);
  return r;
}

std::string BCConvention::describe() const {
  std::ostringstream os;
  os << "middle product 1/(1-q^{n1+i+" << second_exp_offset << "})^{2c-l_{i+" << second_label_shift
     << "}}, tail 1/(1-q^{2i+" << tail_exp_offset << "})^{2c} for i >= n1+" << tail_start_shift;
  return os.str();
}

BCConvention printed_convention(BCFamily family) {
  if (family == BCFamily::B) return BCConvention{0, 0, 0, 1};
  return BCConvention{3, 1, 0, 3};
}

std::vector<BCConvention> candidate_conventions(BCFamily family) {
  std::vector<BCConvention> out{printed_convention(family)};
  int tail = family == BCFamily::B ? 1 : 3;
  for (int off = 0; off <= 3; ++off) {
    for (int shift = 0; shift <= 1; ++shift) {
      for (int ts = 0; ts <= 1; ++ts) {
        BCConvention c{off, shift, ts, tail};
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
      }
    }
  }
  return out;
}

namespace {

int to_exponent(const Rat& r) {
  if (!is_integer(r) || r < 0) throw std::invalid_argument("q-Pochhammer exponent " + r.get_str() + " is not in Z+");
  return static_cast<int>(to_long(r));
}

// Coroots as (height, ⟨λ, α^∨⟩), each with the largest simple index used.
struct Coroot {
  int height;
  Rat label;
  int max_index;
};

std::vector<Coroot> positive_coroots(const BCWeight& lambda, int max_height) {
  std::vector<Coroot> out;
  int R = max_height + 2;
  auto L = [&](int i) { return lambda.coroot_label(i); };
  // α_i + ... + α_j, 0 ≤ i ≤ j
  for (int i = 0; i <= R; ++i) {
    Rat acc(0);
    for (int j = i; j <= R && j - i + 1 <= max_height; ++j) {
      acc += L(j);
      out.push_back({j - i + 1, acc, j});
    }
  }
  if (lambda.family == BCFamily::B) {
    // α_0 + 2(α_1 + ... + α_i) + α_{i+1} + ... + α_{j−1}, 1 ≤ i < j
    for (int i = 1; i <= R; ++i) {
      for (int j = i + 1; i + j <= max_height; ++j) {
        Rat acc = L(0);
        for (int k = 1; k <= i; ++k) acc += 2 * L(k);
        for (int k = i + 1; k <= j - 1; ++k) acc += L(k);
        out.push_back({i + j, acc, j - 1 > i ? j - 1 : i});
      }
    }
  } else {
    // 2α_0 + 2(α_1 + ... + α_i) + α_{i+1} + ... + α_j, 0 ≤ i < j
    for (int i = 0; i <= R; ++i) {
      for (int j = i + 1; 2 + i + j <= max_height; ++j) {
        Rat acc = 2 * L(0);
        for (int k = 1; k <= i; ++k) acc += 2 * L(k);
        for (int k = i + 1; k <= j; ++k) acc += L(k);
        out.push_back({2 + i + j, acc, j});
      }
    }
  }
  return out;
}

QSeries coroot_product(const BCWeight& lambda, int N, int max_index) {
  if (!lambda.is_dominant_integral()) throw std::invalid_argument("weight is not dominant integral");
  QSeries r = QSeries::one(N);
  for (const auto& cr : positive_coroots(lambda, N)) {
    if (cr.max_index > max_index) continue;
    int top = cr.height + to_exponent(cr.label);
    if (top == cr.height) continue;
    r = r * q_pochhammer(top, 1, N) * q_pochhammer_inv(cr.height, 1, N);
  }
  return r;
}

void require_dominant(const BCWeight& lambda) {
  if (!lambda.is_dominant_integral()) throw std::invalid_argument("weight " + lambda.to_string() + " is not dominant integral");
}

}  // namespace

QSeries ch_bc_coroot_oracle(const BCWeight& lambda, int N) {
  require_dominant(lambda);
  return coroot_product(lambda, N, 1 << 28);
}

QSeries ch_bc_finite(const BCWeight& lambda, int N) {
  require_dominant(lambda);
  int n1 = lambda.n1();
  if (n1 == 0) return QSeries::one(N);
  return coroot_product(lambda, N, n1 - 1);
}

QSeries ch_bc_closed(const BCWeight& lambda, int N, const BCConvention& conv) {
  require_dominant(lambda);
  int n1 = lambda.n1();
  QSeries r = ch_bc_finite(lambda, N);
  for (int j = 1; j <= n1; ++j) r = r * q_pochhammer_inv(j, to_exponent(lambda.label(n1 - j + 1)), N);
  for (int i = 1; i <= n1; ++i) {
    int a = n1 + i + conv.second_exp_offset;
    if (a > N) continue;
    r = r * q_pochhammer_inv(a, to_exponent(2 * lambda.c - lambda.label(i + conv.second_label_shift)), N);
  }
  if (lambda.family == BCFamily::C && n1 + 1 <= N) r = r * q_pochhammer_inv(n1 + 1, to_exponent(lambda.c), N);
  int two_c = to_exponent(2 * lambda.c);
  for (int i = n1 + conv.tail_start_shift; 2 * i + conv.tail_exp_offset <= N; ++i) {
    r = r * q_pochhammer_inv(2 * i + conv.tail_exp_offset, two_c, N);
  }
  return r;
}

std::vector<std::pair<std::string, BCWeight>> reference_bc_weights(BCFamily family) {
  auto w = [&](Rat c, std::vector<Rat> labels) { return BCWeight{family, std::move(labels), c}; };
  if (family == BCFamily::B) {
    return {{"Lambda0", w(make_rat(1, 2), {})},
            {"Lambda1", w(Rat(1), {Rat(1)})},
            {"Lambda2", w(Rat(1), {Rat(1), Rat(1)})},
            {"Lambda1+Lambda0", w(make_rat(3, 2), {Rat(1)})},
            {"2Lambda0", w(Rat(1), {})}};
  }
  return {{"Lambda0", w(Rat(1), {})},
          {"Lambda1", w(Rat(1), {Rat(1)})},
          {"Lambda2", w(Rat(1), {Rat(1), Rat(1)})},
          {"Lambda1+Lambda0", w(Rat(2), {Rat(1)})},
          {"2Lambda0", w(Rat(2), {})}};
}

const ConventionSelection& selected_convention(BCFamily family) {
  static const auto select = [](BCFamily fam) {
    ConventionSelection sel;
    const int N = 10;
    auto refs = reference_bc_weights(fam);
    std::vector<QSeries> oracle;
    for (const auto& [name, w] : refs) oracle.push_back(ch_bc_coroot_oracle(w, N));
    for (const auto& conv : candidate_conventions(fam)) {
      bool ok = true;
      for (std::size_t i = 0; i < refs.size() && ok; ++i) ok = ch_bc_closed(refs[i].second, N, conv) == oracle[i];
      if (!ok) continue;
      if (!sel.found) {
        sel.convention = conv;
        sel.found = true;
      }
      if (conv == printed_convention(fam)) sel.printed_matches = true;
    }
    return sel;
  };
  static const ConventionSelection b = select(BCFamily::B);
  static const ConventionSelection c = select(BCFamily::C);
  return family == BCFamily::B ? b : c;
}

namespace {

QSeries ch_family(const BCWeight& lambda, int N, BCFamily family) {
  if (lambda.family != family) throw std::invalid_argument("weight family does not match");
  const auto& sel = selected_convention(family);
  if (!sel.found) throw std::runtime_error("no index convention reproduces the coroot oracle");
  return ch_bc_closed(lambda, N, sel.convention);
}

}  // namespace

QSeries ch_binf(const BCWeight& lambda, int N) { return ch_family(lambda, N, BCFamily::B); }
QSeries ch_cinf(const BCWeight& lambda, int N) { return ch_family(lambda, N, BCFamily::C); }

int degree_one_count(const BCWeight& lambda) {
  int count = 0;
  for (int i = 0; i <= static_cast<int>(lambda.labels.size()) + 1; ++i) count += lambda.coroot_label(i) != 0 ? 1 : 0;
  return count;
}

std::optional<long> growth_exact(const GenWeight& lambda) {
  int top = lambda.labels.empty() ? 0 : lambda.labels.rbegin()->first;
  if (!lambda.labels.empty() && lambda.labels.begin()->first < 1) return std::nullopt;
  for (int k = 1; k <= top; ++k) {
    Rat diff = lambda[k] - lambda[k + 1];
    if (!is_integer(diff) || diff < 0) return std::nullopt;
  }
  long total = 0;
  for (int k = 1; k <= top; ++k) total += to_long(lambda[k]);
  return total;
}

double growth_estimate(const QSeries& s) {
  int N = s.order();
  bool trivial = true;
  for (int i = 1; i <= N; ++i) trivial = trivial && s[i] == 0;
  if (trivial || N < 2) return 0.0;
  Rat cumulative(0);
  for (int i = 0; i <= N; ++i) cumulative += s[i];
  return std::log(cumulative.get_d()) / std::log(static_cast<double>(N));
}

}  // namespace lca
