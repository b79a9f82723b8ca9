#include "milnorhp/intpoly.hpp"

#include <algorithm>
#include <sstream>

#include "milnorhp/errors.hpp"

namespace milnorhp {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.assign(coeffs.begin(), coeffs.end());
  trim();
}

IntPoly IntPoly::constant(const mpz_class& c) {
  return IntPoly(std::vector<mpz_class>{c});
}

IntPoly IntPoly::term(const mpz_class& c, std::size_t k) {
  if (c == 0) return IntPoly();
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const mpz_class& IntPoly::coeff(std::size_t k) const {
  if (k >= coeffs_.size()) return kZero;
  return coeffs_[k];
}

mpz_class IntPoly::eval_one() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
  std::vector<mpz_class> r(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeff(i) + q.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
  std::vector<mpz_class> r(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeff(i) - q.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return IntPoly();
  std::vector<mpz_class> r(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
      r[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(std::size_t a) const {
  if (is_zero() || a == 0) return a == 0 ? *this : IntPoly();
  std::vector<mpz_class> r(coeffs_.size() + a);
  std::copy(coeffs_.begin(), coeffs_.end(), r.begin() + a);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::truncated(std::size_t k_max) const {
  if (coeffs_.size() <= k_max + 1) return *this;
  return IntPoly(
      std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + k_max + 1));
}

bool IntPoly::is_symmetric() const {
  std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
  return true;
}

std::size_t IntPoly::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return 0;
}

IntPoly IntPoly::unshifted() const {
  std::size_t a = low_degree();
  if (a == 0) return *this;
  return IntPoly(std::vector<mpz_class>(coeffs_.begin() + a, coeffs_.end()));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    if (!first)
      os << (c > 0 ? "+" : "-");
    else if (c < 0)
      os << "-";
    mpz_class a = abs(c);
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str();
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

IntPoly pm(long m) {
  if (m < 1) throw domain_error("pm: m must be >= 1");
  return IntPoly(std::vector<mpz_class>(static_cast<std::size_t>(m), 1));
}

IntPoly one_minus_tm(long m) {
  if (m < 1) throw domain_error("one_minus_tm: m must be >= 1");
  std::vector<mpz_class> v(static_cast<std::size_t>(m) + 1);
  v[0] = 1;
  v[static_cast<std::size_t>(m)] = -1;
  return IntPoly(std::move(v));
}

IntPoly pow(const IntPoly& p, unsigned e) {
  IntPoly r = IntPoly::one();
  IntPoly base = p;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

IntPoly exact_div_one_minus_t(const IntPoly& p, unsigned e) {
  // p/(1-t) has coefficients equal to the prefix sums of p, and the
  // division is exact iff the total sum p(1) vanishes.
  IntPoly cur = p;
  for (unsigned round = 0; round < e; ++round) {
    if (cur.is_zero()) continue;
    const auto& c = cur.coeffs();
    std::vector<mpz_class> q(c.size() - 1);
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      acc += c[i];
      q[i] = acc;
    }
    acc += c.back();
    if (acc != 0)
      throw inexact_division_error(
          "exact_div_one_minus_t: remainder " + acc.get_str() +
          " after dividing by (1-t), round " + std::to_string(round + 1));
    cur = IntPoly(std::move(q));
  }
  return cur;
}

IntPoly series_expand(const IntPoly& numerator, unsigned e,
                      std::size_t k_max) {
  std::vector<mpz_class> c(k_max + 1);
  for (std::size_t i = 0; i <= k_max; ++i) c[i] = numerator.coeff(i);
  for (unsigned round = 0; round < e; ++round)
    for (std::size_t i = 1; i <= k_max; ++i) c[i] += c[i - 1];
  return IntPoly(std::move(c));
}

}  // namespace milnorhp
