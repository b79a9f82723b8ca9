#include "milnorhp/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "milnorhp/errors.hpp"

namespace milnorhp {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    auto s = static_cast<std::size_t>(i);
    r.e[s] = static_cast<std::uint16_t>(a.e[s] + b.e[s]);
  }
  r.deg = a.deg + b.deg;
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i) {
    auto s = static_cast<std::size_t>(i);
    if (a.e[s] > b.e[s]) return false;
  }
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    auto s = static_cast<std::size_t>(i);
    r.e[s] = static_cast<std::uint16_t>(b.e[s] - a.e[s]);
  }
  r.deg = b.deg - a.deg;
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::uint32_t deg = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    auto s = static_cast<std::size_t>(i);
    r.e[s] = std::max(a.e[s], b.e[s]);
    deg += r.e[s];
  }
  r.deg = deg;
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i) {
    auto s = static_cast<std::size_t>(i);
    if (a.e[s] > 0 && b.e[s] > 0) return false;
  }
  return true;
}

MonomialOrder::MonomialOrder(int nvars, std::vector<int> blocks,
                             std::vector<int> var_order)
    : nvars_(nvars), blocks_(std::move(blocks)),
      var_order_(std::move(var_order)) {
  if (nvars < 0 || nvars > kMaxVars)
    throw domain_error("MonomialOrder: variable count out of range");
  if (static_cast<int>(var_order_.size()) != nvars)
    throw domain_error("MonomialOrder: permutation size mismatch");
  int sum = 0;
  for (int b : blocks_) {
    if (b < 1) throw domain_error("MonomialOrder: empty block");
    sum += b;
  }
  if (sum != nvars)
    throw domain_error("MonomialOrder: blocks do not cover the variables");
  std::vector<char> seen(static_cast<std::size_t>(nvars), 0);
  for (int v : var_order_) {
    if (v < 0 || v >= nvars || seen[static_cast<std::size_t>(v)])
      throw domain_error("MonomialOrder: not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

namespace {

std::vector<int> identity_perm(int nvars) {
  std::vector<int> id(static_cast<std::size_t>(nvars));
  std::iota(id.begin(), id.end(), 0);
  return id;
}

}  // namespace

MonomialOrder MonomialOrder::degrevlex(int nvars) {
  std::vector<int> blocks;
  if (nvars > 0) blocks.push_back(nvars);
  return MonomialOrder(nvars, std::move(blocks), identity_perm(nvars));
}

MonomialOrder MonomialOrder::degrevlex_permuted(int nvars,
                                                std::vector<int> var_order) {
  std::vector<int> blocks;
  if (nvars > 0) blocks.push_back(nvars);
  return MonomialOrder(nvars, std::move(blocks), std::move(var_order));
}

MonomialOrder MonomialOrder::block_elim(int nvars, int front_size,
                                        std::vector<int> var_order) {
  if (front_size < 1 || front_size >= nvars)
    throw domain_error("block_elim: front block must be a proper prefix");
  return MonomialOrder(nvars, {front_size, nvars - front_size},
                       std::move(var_order));
}

MonomialOrder MonomialOrder::lex(int nvars) {
  if (nvars < 1) throw domain_error("lex: need at least one variable");
  std::vector<int> blocks(static_cast<std::size_t>(nvars), 1);
  return MonomialOrder(nvars, std::move(blocks), identity_perm(nvars));
}

int MonomialOrder::cmp_block(const Monomial& a, const Monomial& b,
                             std::size_t lo, std::size_t hi) const {
  long da = 0, db = 0;
  for (std::size_t j = lo; j < hi; ++j) {
    auto v = static_cast<std::size_t>(var_order_[j]);
    da += a.e[v];
    db += b.e[v];
  }
  if (da != db) return da < db ? -1 : 1;
  // Reverse lexicographic tie-break: scan from the least variable; the
  // monomial with the smaller exponent there is the larger one.
  for (std::size_t j = hi; j-- > lo;) {
    auto v = static_cast<std::size_t>(var_order_[j]);
    if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  auto all = static_cast<std::size_t>(nvars_);
  if (blocks_.size() == 1) {
    // Single block: use the cached total degree.
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (std::size_t j = all; j-- > 0;) {
      auto v = static_cast<std::size_t>(var_order_[j]);
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
    }
    return 0;
  }
  std::size_t off = 0;
  for (int bs : blocks_) {
    std::size_t hi = off + static_cast<std::size_t>(bs);
    int c = cmp_block(a, b, off, hi);
    if (c != 0) return c;
    off = hi;
  }
  return 0;
}

MPoly MPoly::from_terms(int nvars, const MonomialOrder& order,
                        std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [&order](const Term& s, const Term& t) {
              return order.cmp(s.m, t.m) > 0;
            });
  MPoly p(nvars, order);
  for (auto& t : terms) {
    if (t.c == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().m == t.m)
      p.terms_.back().c += t.c;
    else
      p.terms_.push_back(std::move(t));
    if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
  }
  return p;
}

long MPoly::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.m.deg));
  return d;
}

bool MPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.m.deg != terms_.front().m.deg) return false;
  return true;
}

MPoly MPoly::reordered(const MonomialOrder& order) const {
  return from_terms(nvars_, order, terms_);
}

MPoly MPoly::derivative(int var) const {
  auto v = static_cast<std::size_t>(var);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.m.e[v] == 0) continue;
    Term s = t;
    s.c *= t.m.e[v];
    s.m.e[v] -= 1;
    s.m.deg -= 1;
    out.push_back(std::move(s));
  }
  return from_terms(nvars_, order_, std::move(out));
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

MPoly operator+(const MPoly& p, const MPoly& q) {
  MPoly r(p.nvars_, p.order_);
  const auto& a = p.terms_;
  const auto& b = q.terms_;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i >= a.size()) c = -1;
    else if (j >= b.size()) c = 1;
    else c = p.order_.cmp(a[i].m, b[j].m);
    if (c > 0) {
      r.terms_.push_back(a[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b[j++]);
    } else {
      mpq_class s = a[i].c + b[j].c;
      if (s != 0) r.terms_.push_back({a[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly operator-(const MPoly& p, const MPoly& q) { return p + (-q); }

MPoly operator*(const MPoly& p, const MPoly& q) {
  std::unordered_map<Monomial, mpq_class, MonoHash> acc;
  for (const auto& s : p.terms_)
    for (const auto& t : q.terms_) acc[mono_mul(s.m, t.m)] += s.c * t.c;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.push_back({m, std::move(c)});
  return MPoly::from_terms(p.nvars_, p.order_, std::move(out));
}

MPoly MPoly::scaled(const mpq_class& c) const {
  if (c == 0) return MPoly(nvars_, order_);
  MPoly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / terms_.front().c);
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.c;
    if (!first)
      os << (c > 0 ? "+" : "-");
    else if (c < 0)
      os << "-";
    first = false;
    mpq_class a = abs(c);
    bool unit = a == 1 && t.m.deg > 0;
    if (!unit) os << a.get_str();
    bool any = false;
    for (int v = 0; v < nvars_; ++v) {
      auto s = static_cast<std::size_t>(v);
      if (t.m.e[s] == 0) continue;
      if (any || !unit) os << "*";
      os << names[s];
      if (t.m.e[s] > 1) os << "^" << t.m.e[s];
      any = true;
    }
  }
  return os.str();
}

}  // namespace milnorhp
