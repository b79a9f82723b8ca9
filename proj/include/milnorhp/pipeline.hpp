#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "milnorhp/concavity.hpp"
#include "milnorhp/intpoly.hpp"
#include "milnorhp/mpoly.hpp"

namespace milnorhp {

// Ideal of all first partial derivatives of a homogeneous f of degree >= 2;
// zero partials dropped.
Ideal jacobian_ideal(const MPoly& f);

// Everything the curve pipeline extracts from one hypersurface.
struct CurveReport {
  long d = 0;          // degree of f
  int nvars = 0;       // n + 1
  std::size_t k_max = 0;
  bool smooth = false;

  IntPoly hp_M_trunc;     // Hilbert series of S/J_f through k_max
  IntPoly hp_Shat_trunc;  // Hilbert series of S/(J_f : m^infinity)
  IntPoly hp_N;           // their stabilized difference, exact polynomial

  mpz_class tau;  // eventual constant of hp_M (0 for smooth inputs)
  long ct = 0;    // largest q with dim(S/J_f)_k = smooth dim for all k <= q

  std::optional<std::pair<long, long>> ci_detect;  // from (tau, ct), n = 2
  bool certified_ci = false;  // saturation has exactly the inferred degrees

  int sat_gens_count = 0;            // minimal generators of the saturation
  std::vector<long> sat_gens_degrees;

  SeqReport seq_report;  // log-concavity report on hp_N
};

// Full pipeline: Jacobian ideal, its saturation, both Hilbert series, the
// local cohomology series hp_N, tau, the coincidence threshold, complete
// intersection detection, and the log-concavity report. k_max = 0 selects
// the default 3*deg(f).
CurveReport curve_pipeline(const MPoly& f, std::size_t k_max = 0);

}  // namespace milnorhp
