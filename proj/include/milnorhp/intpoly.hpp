#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace milnorhp {

// Dense univariate polynomial in t with exact integer coefficients.
// coeffs()[k] is the coefficient of t^k; trailing zeros are never stored,
// so the zero polynomial has an empty coefficient vector and no degree.
// Values are immutable after construction; all operations return new values.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return IntPoly({1}); }
  static IntPoly constant(const mpz_class& c);
  // c * t^k
  static IntPoly term(const mpz_class& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  // Coefficient of t^k; zero beyond the degree.
  const mpz_class& coeff(std::size_t k) const;
  // Value at t = 1 (sum of coefficients).
  mpz_class eval_one() const;

  bool operator==(const IntPoly&) const = default;

  friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
  IntPoly operator-() const;

  // Multiplication by t^a.
  IntPoly shifted(std::size_t a) const;
  // Coefficients through degree k_max (inclusive); drops the rest.
  IntPoly truncated(std::size_t k_max) const;
  // True iff the stored coefficient vector is palindromic. The zero
  // polynomial is symmetric. Structural leading zeros count: t^2+t^4 is
  // not symmetric as stored but is after unshifting; callers unshift.
  bool is_symmetric() const;
  // Largest a with t^a dividing the polynomial (0 for the zero polynomial).
  std::size_t low_degree() const;
  // Divides by t^low_degree().
  IntPoly unshifted() const;

  // "2t^2+3t^3+2t^4" style; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// P_m(t) = (1 - t^m)/(1 - t) = 1 + t + ... + t^{m-1}. Requires m >= 1.
IntPoly pm(long m);

// 1 - t^m. Requires m >= 1.
IntPoly one_minus_tm(long m);

IntPoly pow(const IntPoly& p, unsigned e);

// p / (1 - t)^e, which must be exact; throws inexact_division_error if any
// of the e division rounds leaves a remainder.
IntPoly exact_div_one_minus_t(const IntPoly& p, unsigned e);

// Coefficients of the formal power series numerator/(1 - t)^e through
// degree k_max, by e iterated prefix sums of the truncated numerator.
IntPoly series_expand(const IntPoly& numerator, unsigned e, std::size_t k_max);

}  // namespace milnorhp
