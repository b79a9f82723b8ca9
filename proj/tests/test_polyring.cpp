#include <random>
#include <vector>

#include "doctest.h"
#include "milnorhp/errors.hpp"
#include "milnorhp/intpoly.hpp"

using milnorhp::IntPoly;
using milnorhp::exact_div_one_minus_t;
using milnorhp::one_minus_tm;
using milnorhp::pm;
using milnorhp::pow;
using milnorhp::series_expand;

namespace {

// Independent oracles: schoolbook convolution and repeated prefix sums,
// written against plain vectors so they share no code with IntPoly.
std::vector<mpz_class> conv(const std::vector<mpz_class>& p,
                            const std::vector<mpz_class>& q) {
  if (p.empty() || q.empty()) return {};
  std::vector<mpz_class> r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

std::vector<mpz_class> prefix_expand(std::vector<mpz_class> c, unsigned e,
                                     std::size_t k_max) {
  c.resize(k_max + 1);
  for (unsigned r = 0; r < e; ++r)
    for (std::size_t i = 1; i <= k_max; ++i) c[i] += c[i - 1];
  return c;
}

IntPoly random_poly(std::mt19937& rng, int max_deg, int max_abs) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coef(-max_abs, max_abs);
  std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("pm builds 1 + t + ... + t^{m-1}") {
  CHECK(pm(1) == IntPoly{1});
  CHECK(pm(4) == IntPoly{1, 1, 1, 1});
  CHECK(pm(7).eval_one() == 7);
  CHECK_THROWS_AS(pm(0), milnorhp::domain_error);
  CHECK_THROWS_AS(pm(-3), milnorhp::domain_error);
}

TEST_CASE("zero polynomial basics") {
  IntPoly z = IntPoly::zero();
  CHECK(z.is_zero());
  CHECK(!z.degree().has_value());
  CHECK(z.coeff(5) == 0);
  CHECK(z.is_symmetric());
  CHECK(z.to_string() == "0");
  CHECK(IntPoly{0, 0, 0} == z);  // trailing zeros trimmed away
}

TEST_CASE("product of standard blocks matches hand expansion") {
  // pm(2)^2 * pm(5) = 1+3t+4t^2+4t^3+4t^4+3t^5+t^6
  IntPoly p = pm(2) * pm(2) * pm(5);
  CHECK(p == IntPoly{1, 3, 4, 4, 4, 3, 1});
  CHECK(p.is_symmetric());
  CHECK(p.eval_one() == 20);

  // pm(4)^3: coefficients of the cube of 1+t+t^2+t^3
  CHECK(pow(pm(4), 3) == IntPoly{1, 3, 6, 10, 12, 12, 10, 6, 3, 1});
  // pm(6)^3
  CHECK(pow(pm(6), 3) ==
        IntPoly{1, 3, 6, 10, 15, 21, 25, 27, 27, 25, 21, 15, 10, 6, 3, 1});
}

TEST_CASE("ring identities on random inputs") {
  std::mt19937 rng(20240517);
  for (int iter = 0; iter < 200; ++iter) {
    IntPoly p = random_poly(rng, 12, 9);
    IntPoly q = random_poly(rng, 12, 9);
    IntPoly r = random_poly(rng, 12, 9);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == IntPoly::zero());
    CHECK(p * IntPoly::one() == p);
    CHECK((p * q).eval_one() == p.eval_one() * q.eval_one());
    CHECK(p * q == IntPoly(conv(p.coeffs(), q.coeffs())));
  }
}

TEST_CASE("shift, truncate, unshift") {
  IntPoly p{2, 3, 2};
  CHECK(p.shifted(2) == IntPoly{0, 0, 2, 3, 2});
  CHECK(p.shifted(2).low_degree() == 2);
  CHECK(p.shifted(2).unshifted() == p);
  CHECK(p.shifted(0) == p);
  CHECK(p.truncated(1) == IntPoly{2, 3});
  CHECK(p.truncated(10) == p);
  CHECK(IntPoly::zero().shifted(3) == IntPoly::zero());
}

TEST_CASE("symmetry checks stored window") {
  CHECK(IntPoly{2, 3, 2}.is_symmetric());
  CHECK(!IntPoly{2, 3, 1}.is_symmetric());
  // t^2+t^4 stores 0,0,1,0,1: not palindromic until unshifted.
  IntPoly p = IntPoly::term(1, 2) + IntPoly::term(1, 4);
  CHECK(!p.is_symmetric());
  CHECK(p.unshifted().is_symmetric());
}

TEST_CASE("exact division by (1-t)^e") {
  // (1-t^m) / (1-t) = pm(m)
  for (long m = 1; m <= 10; ++m)
    CHECK(exact_div_one_minus_t(one_minus_tm(m), 1) == pm(m));

  // Round trip p * (1-t)^e / (1-t)^e = p on random inputs.
  std::mt19937 rng(77);
  for (int iter = 0; iter < 100; ++iter) {
    IntPoly p = random_poly(rng, 10, 6);
    unsigned e = static_cast<unsigned>(iter % 5);
    IntPoly masked = p * pow(one_minus_tm(1), e);
    CHECK(exact_div_one_minus_t(masked, e) == p);
  }

  CHECK_THROWS_AS(exact_div_one_minus_t(pm(3), 1),
                  milnorhp::inexact_division_error);
  CHECK_THROWS_AS(exact_div_one_minus_t(one_minus_tm(4), 2),
                  milnorhp::inexact_division_error);
  CHECK(exact_div_one_minus_t(IntPoly::zero(), 4) == IntPoly::zero());
}

TEST_CASE("series expansion matches prefix-sum oracle") {
  // (1-t^3)(1-t^4) / (1-t)^3 through degree 6: 1,3,6,9,11,12,12
  IntPoly got = series_expand(one_minus_tm(3) * one_minus_tm(4), 3, 6);
  CHECK(got == IntPoly{1, 3, 6, 9, 11, 12, 12});

  std::mt19937 rng(4242);
  for (int iter = 0; iter < 100; ++iter) {
    IntPoly num = random_poly(rng, 9, 5);
    unsigned e = static_cast<unsigned>(iter % 4 + 1);
    std::size_t k_max = static_cast<std::size_t>(iter % 15 + 1);
    IntPoly got2 = series_expand(num, e, k_max);
    std::vector<mpz_class> want = prefix_expand(num.coeffs(), e, k_max);
    for (std::size_t k = 0; k <= k_max; ++k) CHECK(got2.coeff(k) == want[k]);
  }
}

TEST_CASE("series expansion agrees with exact division when divisible") {
  std::mt19937 rng(991);
  for (int iter = 0; iter < 60; ++iter) {
    IntPoly p = random_poly(rng, 8, 5);
    unsigned e = static_cast<unsigned>(iter % 4);
    IntPoly masked = p * pow(one_minus_tm(1), e);
    std::size_t k_max = 20;
    IntPoly via_series = series_expand(masked, e, k_max);
    IntPoly via_div = exact_div_one_minus_t(masked, e).truncated(k_max);
    CHECK(via_series == via_div);
  }
}

TEST_CASE("printing") {
  CHECK(IntPoly{0, 0, 2, 3, 2}.to_string() == "2t^2+3t^3+2t^4");
  CHECK(IntPoly{1, -1}.to_string() == "1-t");
  CHECK(IntPoly{0, 1, 0, -4}.to_string() == "t-4t^3");
  CHECK(IntPoly::constant(-7).to_string() == "-7");
}
