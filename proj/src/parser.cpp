#include "milnorhp/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace milnorhp {

namespace {

class Parser {
public:
  Parser(const std::string& src, const std::vector<std::string>& vars)
      : src_(src), vars_(vars), nvars_(static_cast<int>(vars.size())),
        order_(MonomialOrder::degrevlex(nvars_)) {
    if (nvars_ < 1 || nvars_ > kMaxVars)
      throw domain_error("parse_poly: need between 1 and 8 variables");
  }

  MPoly run() {
    MPoly p = expr();
    skip_ws();
    if (pos_ < src_.size())
      throw parse_error("unexpected trailing input", pos_);
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    MPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '(' || starts_variable()) {
        acc = acc * factor();  // juxtaposition
      } else {
        break;
      }
    }
    return acc;
  }

  MPoly factor() {
    MPoly base = atom();
    while (peek() == '^') {
      ++pos_;
      unsigned long e = read_uint("exponent");
      base = power(base, e);
    }
    return base;
  }

  MPoly atom() {
    char c = peek();
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      MPoly inner = expr();
      if (!eat(')')) throw parse_error("unbalanced parenthesis", open);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q(read_uint("number"));
      if (peek() == '/') {
        ++pos_;
        unsigned long den = read_uint("denominator");
        if (den == 0) throw parse_error("zero denominator", pos_);
        q /= den;
      }
      return constant(q);
    }
    if (starts_variable()) return variable();
    throw parse_error("expected a number, variable or '('", pos_);
  }

  // Longest declared variable name starting at the cursor, if any.
  int match_variable() {
    skip_ws();
    int best = -1;
    std::size_t best_len = 0;
    for (int v = 0; v < nvars_; ++v) {
      const std::string& name = vars_[static_cast<std::size_t>(v)];
      if (name.size() > best_len &&
          src_.compare(pos_, name.size(), name) == 0) {
        best = v;
        best_len = name.size();
      }
    }
    return best;
  }

  bool starts_variable() { return match_variable() >= 0; }

  MPoly variable() {
    int v = match_variable();
    if (v < 0) {
      // An identifier that matches no declared name.
      if (std::isalpha(static_cast<unsigned char>(peek())))
        throw parse_error(std::string("unknown variable '") + peek() + "'",
                          pos_);
      throw parse_error("expected a variable", pos_);
    }
    pos_ += vars_[static_cast<std::size_t>(v)].size();
    Term t;
    t.c = 1;
    t.m.e[static_cast<std::size_t>(v)] = 1;
    t.m.deg = 1;
    return MPoly::from_terms(nvars_, order_, {t});
  }

  unsigned long read_uint(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      if (v > 100000000ul)
        throw parse_error(std::string(what) + " too large", start);
      v = v * 10 + static_cast<unsigned long>(src_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start)
      throw parse_error(std::string("expected ") + what, start);
    return v;
  }

  MPoly constant(const mpq_class& q) {
    if (q == 0) return MPoly(nvars_, order_);
    Term t;
    t.c = q;
    return MPoly::from_terms(nvars_, order_, {t});
  }

  MPoly power(const MPoly& base, unsigned long e) {
    MPoly r = constant(1);
    MPoly b = base;
    while (e > 0) {
      if (e & 1ul) r = r * b;
      e >>= 1ul;
      if (e > 0) b = b * b;
    }
    return r;
  }

  const std::string& src_;
  const std::vector<std::string>& vars_;
  int nvars_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(const std::string& expr,
                 const std::vector<std::string>& vars) {
  return Parser(expr, vars).run();
}

std::vector<std::string> infer_vars(const std::string& expr) {
  std::set<std::string> plain, indexed;
  for (std::size_t i = 0; i < expr.size(); ++i) {
    char c = expr[i];
    if (c == 'x' && i + 1 < expr.size() &&
        std::isdigit(static_cast<unsigned char>(expr[i + 1]))) {
      indexed.insert(expr.substr(i, 2));
      ++i;
    } else if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
      plain.insert(std::string(1, c));
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      throw parse_error(std::string("unknown variable '") + c + "'", i);
    }
  }
  if (!plain.empty() && !indexed.empty())
    throw domain_error("infer_vars: mixed x0-style and letter-style names");
  std::vector<std::string> out;
  if (!indexed.empty()) {
    out.assign(indexed.begin(), indexed.end());  // x0 < x1 < ... < x9
  } else {
    for (const char* n : {"x", "y", "z", "w"})
      if (plain.count(n)) out.push_back(n);
  }
  if (out.empty()) throw domain_error("infer_vars: no variables found");
  return out;
}

}  // namespace milnorhp
