#pragma once

#include <string>
#include <vector>

#include "milnorhp/intpoly.hpp"

namespace milnorhp {

// Parameter regions of the piecewise description of Q(t), where
// HP(N) = t^a Q(t) for a plane-curve CI configuration (a, b, d).
// Degenerate is a = b = d-1 (Q = 0); Unclassified flags a gap or overlap
// in the region inequalities and should never occur.
enum class Subcase {
  S111,
  S112,
  S121,
  S122,
  S123,
  S211,
  S221,
  S222,
  Degenerate,
  Unclassified,
};

// Dotted display name: "1.1.1", ..., "2.2.2", "degenerate", "unclassified".
std::string subcase_name(Subcase sc);

struct CIConfig {
  long a, b, d;  // 1 <= a <= b < d
};

// The unique matching subcase, or Degenerate/Unclassified.
Subcase classify(long a, long b, long d);

// Every non-degenerate subcase whose inequality system accepts (a, b, d);
// used by the coverage audit (expected size: exactly 1).
std::vector<Subcase> matching_subcases(long a, long b, long d);

// One k-interval [lo, hi] of a piecewise formula; empty when lo > hi.
// branch indexes the printed formula rows of the subcase from 0.
struct Region {
  long lo, hi;
  int branch;
};

// All printed regions of the subcase for this configuration, in row order,
// including empty ones. Throws domain_error if sc has no piecewise form.
std::vector<Region> subcase_regions(const CIConfig& cfg, Subcase sc);

// q_k straight from the printed branch formula covering k.
// Requires 0 <= k <= T/2 - a (T = 3d - 6); exactly one branch applies.
mpz_class qk(const CIConfig& cfg, Subcase sc, long k);

// A disagreement between a printed branch formula and the generating
// function oracle P_{d-1}^3 - P_a P_b P_{3d-3-a-b}.
struct ErratumEntry {
  Subcase subcase;
  int branch;
  long a, b, d, k;
  mpz_class printed;
  mpz_class oracle;
};

struct QProfile {
  CIConfig cfg;
  Subcase subcase;
  // q_0 .. q_{T/2 - a} from the printed formulas.
  std::vector<mpz_class> half_coeffs;
  // Q(t) itself, symmetric of degree T - 2a, taken from the oracle (so the
  // invariant t^a Q(t) = HP(N) always holds; formula slips land in errata).
  IntPoly full;
  // Non-empty regions actually used.
  std::vector<Region> regions;
  std::vector<ErratumEntry> errata;
};

// Full evaluation for (a, b, d): classification, half coefficients,
// symmetric completion, oracle comparison.
// Degenerate configs give Q = 0 with no regions.
// Throws classification_gap_error when classify() returns Unclassified.
QProfile q_polynomial(const CIConfig& cfg);

}  // namespace milnorhp
