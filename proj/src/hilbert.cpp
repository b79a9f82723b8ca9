#include "milnorhp/hilbert.hpp"

#include <algorithm>
#include <numeric>

#include "milnorhp/errors.hpp"

namespace milnorhp {

mpz_class binom2(long m) {
  if (m <= 1) return 0;
  mpz_class z(m);
  return z * (m - 1) / 2;
}

CIData::CIData(long d_, int n_, std::vector<long> degs_)
    : d(d_), n(n_), degs(std::move(degs_)) {
  if (d < 2) throw domain_error("CIData: need d >= 2");
  if (n < 1) throw domain_error("CIData: need n >= 1");
  if (static_cast<int>(degs.size()) != n)
    throw domain_error("CIData: need exactly n member degrees");
  for (long di : degs)
    if (di < 1 || di >= d)
      throw domain_error("CIData: member degrees must satisfy 1 <= d_i < d");
}

IntPoly smooth_series(long d, int n) {
  if (d < 2) throw domain_error("smooth_series: need d >= 2");
  if (n < 1) throw domain_error("smooth_series: need n >= 1");
  return pow(pm(d - 1), static_cast<unsigned>(n + 1));
}

mpz_class smooth_coeff_n2(long d, long k) {
  if (d < 2) throw domain_error("smooth_coeff_n2: need d >= 2");
  if (k < 0) throw domain_error("smooth_coeff_n2: need k >= 0");
  const long T = 3 * (d - 2);
  if (k > T) return 0;
  if (2 * k > T) k = T - k;  // symmetry a_k = a_{T-k}
  if (k <= d - 2) return binom2(k + 2);
  return binom2(k + 2) - 3 * binom2(k + 3 - d);
}

mpz_class smooth_coeff_n2_sum(long d, long k) {
  if (d < 2) throw domain_error("smooth_coeff_n2_sum: need d >= 2");
  if (k < 0) throw domain_error("smooth_coeff_n2_sum: need k >= 0");
  const long T = 3 * (d - 2);
  if (k > T) return 0;
  if (2 * k > T) k = T - k;
  if (k <= d - 2) return binom2(k + 2);
  // d-1 <= k <= T/2 here, so the summation stays inside its validity range.
  mpz_class acc = binom2(d);
  for (long i = 1; i <= k - d + 2; ++i) acc += d - 1 - 2 * i;
  return acc;
}

namespace {

// (1-t^{d-1})^{n+1} - (1-t^e) prod (1-t^{d_i}),  e = (n+1)(d-1) - sum d_i.
// e >= d-1 >= 1 holds for every valid CIData because each d_i <= d-1.
IntPoly ci_difference_numerator(const CIData& ci) {
  const long sum = std::accumulate(ci.degs.begin(), ci.degs.end(), 0L);
  const long e = (ci.n + 1) * (ci.d - 1) - sum;
  if (e < 1)
    throw domain_error("CI numerator: exponent (n+1)(d-1) - sum d_i < 1");
  IntPoly member_part = one_minus_tm(e);
  for (long di : ci.degs) member_part = member_part * one_minus_tm(di);
  return pow(one_minus_tm(ci.d - 1), static_cast<unsigned>(ci.n + 1)) -
         member_part;
}

}  // namespace

IntPoly hp_M_ci(const CIData& ci, std::size_t k_max) {
  const long sum = std::accumulate(ci.degs.begin(), ci.degs.end(), 0L);
  const long shift = (ci.n + 1) * (ci.d - 1) - sum;
  if (shift < 0) throw domain_error("hp_M_ci: (n+1)(d-1) - sum d_i < 0");
  IntPoly prod = IntPoly::one();
  for (long di : ci.degs) prod = prod * one_minus_tm(di);
  IntPoly numer = pow(one_minus_tm(ci.d - 1), static_cast<unsigned>(ci.n + 1)) +
                  prod.shifted(static_cast<std::size_t>(shift));
  return series_expand(numer, static_cast<unsigned>(ci.n + 1), k_max);
}

IntPoly hp_N_ci(const CIData& ci) {
  // Exactness of this division is precisely the statement that the series
  // difference is a polynomial; a failure propagates as
  // inexact_division_error.
  return exact_div_one_minus_t(ci_difference_numerator(ci),
                               static_cast<unsigned>(ci.n + 1));
}

IntPoly hp_N_ci_n2(long a, long b, long d) {
  if (!(1 <= a && a <= b && b < d))
    throw domain_error("hp_N_ci_n2: need 1 <= a <= b < d");
  return hp_N_ci(CIData(d, 2, {a, b}));
}

CIInvariants ci_invariants(const CIData& ci) {
  CIInvariants out;
  out.T = (ci.n + 1) * (ci.d - 2);
  out.tau = 1;
  long sum = 0;
  for (long di : ci.degs) {
    out.tau *= di;
    sum += di;
  }
  out.ct = out.T - sum + ci.n;
  return out;
}

std::optional<std::pair<long, long>> infer_ab(const mpz_class& tau, long ct,
                                              long d) {
  if (d < 2) throw domain_error("infer_ab: need d >= 2");
  const long T = 3 * (d - 2);
  const long s = T + 2 - ct;  // candidate a + b
  if (s < 2 || tau < 1) return std::nullopt;
  mpz_class disc = mpz_class(s) * s - 4 * tau;
  if (disc < 0) return std::nullopt;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  if (root * root != disc) return std::nullopt;
  mpz_class two_a = s - root;
  if (two_a % 2 != 0) return std::nullopt;
  mpz_class az = two_a / 2;
  mpz_class bz = (s + root) / 2;
  if (az < 1 || bz >= d) return std::nullopt;
  return std::make_pair(az.get_si(), bz.get_si());
}

IntPoly diff_smooth_minus_N(long a, long b, long d) {
  if (!(1 <= a && a <= b && b < d))
    throw domain_error("diff_smooth_minus_N: need 1 <= a <= b < d");
  const long c = 3 * d - 3 - a - b;
  if (c < 1) throw domain_error("diff_smooth_minus_N: 3d-3-a-b < 1");
  return pm(a) * pm(b) * pm(c);
}

}  // namespace milnorhp
