#include "lca/parse.hpp"

#include <cctype>

namespace lca {
namespace {

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/') unary)*
// unary  := '-' unary | power
// power  := atom ('^' '-'? integer)?
// atom   := number | identifier | '(' expr ')'
template <class Vars>
class Parser {
 public:
  using P = Poly<Vars>;

  Parser(std::string_view text, int laurent_var) : s_(text), laurent_var_(laurent_var) {}

  P parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    P r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  P expr() {
    P r = term();
    for (;;) {
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  P term() {
    P r = unary();
    for (;;) {
      if (eat('*')) {
        r *= unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        P d = unary();
        if (d.total_degree() > 0 || d.is_zero()) throw ParseError("division by a non-constant or zero", at);
        r *= Rat(1) / d.constant_term();
      } else {
        return r;
      }
    }
  }

  P unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  P power() {
    std::size_t atom_at = pos_;
    P base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", start);
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (!neg) return base.pow(static_cast<unsigned>(e));
    // negative exponents only for a bare Laurent variable
    if (laurent_var_ >= 0 && base == P::variable(static_cast<std::size_t>(laurent_var_))) {
      typename P::Exponents ex{};
      ex[static_cast<std::size_t>(laurent_var_)] = -e;
      return P::monomial(ex, Rat(1));
    }
    throw ParseError("negative exponent not allowed here", atom_at);
  }

  P atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      P r = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return P(parse_rat(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      try {
        return P::variable(name);
      } catch (const std::invalid_argument&) {
        throw ParseError("unknown variable '" + std::string(name) + "'", start);
      }
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int laurent_var_;
};

template <class T, class F>
std::vector<T> parse_list(std::string_view text, F convert) {
  std::vector<T> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty()) {
      if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
      throw ParseError("empty list entry", start);
    }
    try {
      out.push_back(convert(item));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad list entry '" + std::string(item) + "'", start);
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace

Poly<DX> parse_bivar(std::string_view text) { return Parser<DX>(text, -1).parse(); }

Poly<TD> parse_td(std::string_view text) { return Parser<TD>(text, 0).parse(); }

std::vector<long> parse_int_list(std::string_view text) {
  return parse_list<long>(text, [](std::string_view s) {
    Rat r = parse_rat(s);
    if (!is_integer(r)) throw std::invalid_argument("not an integer");
    return to_long(r);
  });
}

std::vector<Rat> parse_rat_list(std::string_view text) {
  return parse_list<Rat>(text, [](std::string_view s) { return parse_rat(s); });
}

}  // namespace lca
