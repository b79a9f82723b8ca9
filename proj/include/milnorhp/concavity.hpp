#pragma once

#include <optional>
#include <vector>

#include "milnorhp/closedform.hpp"
#include "milnorhp/intpoly.hpp"

namespace milnorhp {

// Exact verdicts for a finite coefficient sequence. Empty, singleton and
// two-element sequences are vacuously log-concave and unimodal.
struct SeqReport {
  bool nonnegative = true;
  bool internal_zeros = false;
  bool log_concave = true;
  bool strictly_log_concave = true;
  bool unimodal = true;
  std::optional<std::size_t> first_lc_violation;   // a_k^2 < a_{k-1} a_{k+1}
  std::optional<std::size_t> first_internal_zero;  // zero inside the support

  // The combined property asserted for HP(N): nonnegative, log-concave,
  // no internal zeros (unimodality then follows, and is double-checked).
  bool conjecture_pass() const {
    return nonnegative && log_concave && !internal_zeros && unimodal;
  }
};

SeqReport analyze(const std::vector<mpz_class>& seq);
SeqReport analyze(const std::vector<mpq_class>& seq);

// analyze() applied to the coefficients of p between its lowest and highest
// nonzero degree (HP(N) = t^a Q, so structural leading zeros don't count).
// Zero polynomial: vacuous pass. Negative coefficient: domain error.
SeqReport conjecture_predicate(const IntPoly& p);

// Generator families asserted strictly log-concave:
//   2: a_k = C(m+k,2)                          params {m},       m >= 1
//   3: a_k = C(m+k,2) - n                      params {m, n},    m >= 0, n >= 1
//   4: a_k = x C(m+k,2) - y C(n+k,2)           params {x, y, m, n},
//        x, y >= 1, x/y < 24, m >= 0, n >= 2, and not (x == y and m == n)
//   5: a_k = C(m+k,2) + C(n+k,2), k >= 1       params {m, n},    m, n >= 2
//   1: (p/q) times the family-f sequence       params {p, q, f, <f's params>},
//        p, q >= 1
// Family 5 starts at k = 1; the others at k = 0.
// Hypothesis violations raise domain_error.
std::vector<mpq_class> lemma1_seq(int family, const std::vector<long>& params,
                                  std::size_t length);

// One truncated-formula family: the branch formula of `item` evaluated on
// [k_lo, k_hi] = [stated lower bound, T/2 - a], checked for strict
// log-concavity at all interior k.
struct Lemma2Report {
  int item;  // 1..6
  long a, b, d;
  long k_lo, k_hi;
  bool vacuous;  // fewer than three points
  bool pass;
  std::optional<long> first_violation;
};

// All truncated-family checks applicable to the given subcase:
//   1.1.1 -> item 1, 1.1.2 -> 2, 1.2.1 -> 3, 1.2.2 -> 4 and 5, 1.2.3 -> 6,
//   2.2.2 -> 4; the remaining subcases have none (constant tails).
// Throws domain_error when sc differs from classify(a, b, d).
std::vector<Lemma2Report> lemma2_region_check(Subcase sc, long a, long b,
                                              long d);

// One boundary index between two piecewise regions, with
// lhs = q_k^2 - q_{k-1} q_{k+1} computed from the assembled Q.
struct NodeCheck {
  long k;
  mpz_class lhs;
  bool constant_tail_exempt;  // q_{k-1} = q_k = q_{k+1}
  bool pass;                  // lhs > 0, or exempt
};

// Checks q_k^2 > q_{k-1} q_{k+1} at every region-change index of (a, b, d),
// allowing equality inside constant tails. Degenerate configs: empty list.
std::vector<NodeCheck> lemma3_node_check(long a, long b, long d);

}  // namespace milnorhp
