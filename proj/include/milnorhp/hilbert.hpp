#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "milnorhp/intpoly.hpp"

namespace milnorhp {

// C(m, 2) = m(m-1)/2 for m >= 2, and 0 for m <= 1 (including negative m).
// All piecewise coefficient formulas use this convention.
mpz_class binom2(long m);

// A hypersurface of degree d in P^n whose saturated Jacobian ideal is a
// complete intersection of multidegree degs = (d_1, ..., d_n).
struct CIData {
  long d;
  int n;
  std::vector<long> degs;

  // Validates d >= 2, n >= 1, degs.size() == n, 1 <= d_i < d.
  CIData(long d, int n, std::vector<long> degs);
};

struct CIInvariants {
  long T;         // (n+1)(d-2)
  mpz_class tau;  // d_1 ... d_n
  long ct;        // T - sum d_i + n
};

// Hilbert-Poincare series of the Milnor algebra of a smooth degree-d
// hypersurface in P^n: (1 + t + ... + t^{d-2})^{n+1}.
IntPoly smooth_series(long d, int n);

// Coefficient a_k of smooth_series(d, 2), evaluated from the piecewise
// binomial form. Zero for k > T = 3(d-2); symmetric about T/2.
mpz_class smooth_coeff_n2(long d, long k);

// Same coefficient from the incremental-sum form
// a_k = C(d,2) + sum_{i=1}^{k-d+2} (d-1-2i) on d-1 <= k <= T/2.
// The two forms must agree everywhere.
mpz_class smooth_coeff_n2_sum(long d, long k);

// Truncation through degree k_max of
// [(1-t^{d-1})^{n+1} + t^{(n+1)(d-1)-sum d_i} prod (1-t^{d_i})] / (1-t)^{n+1}.
// Coefficients are eventually constant, equal to tau.
IntPoly hp_M_ci(const CIData& ci, std::size_t k_max);

// The exact polynomial HP(S/J_f) - HP(S/J^_f) for the CI case, computed as
// a numerator difference divided exactly by (1-t)^{n+1}.
IntPoly hp_N_ci(const CIData& ci);

// n = 2 specialization: P_{d-1}^3 - P_a P_b P_{3d-3-a-b}, 1 <= a <= b < d.
IntPoly hp_N_ci_n2(long a, long b, long d);

CIInvariants ci_invariants(const CIData& ci);

// Recovers (a, b) with a + b = T + 2 - ct and a*b = tau, 1 <= a <= b < d,
// in the n = 2 setting; nullopt when no integer solution exists.
std::optional<std::pair<long, long>> infer_ab(const mpz_class& tau, long ct,
                                              long d);

// P_a P_b P_{3d-3-a-b}; equals smooth_series(d,2) - hp_N_ci_n2(a,b,d).
IntPoly diff_smooth_minus_N(long a, long b, long d);

}  // namespace milnorhp
