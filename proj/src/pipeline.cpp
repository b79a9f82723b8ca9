#include "milnorhp/pipeline.hpp"

#include <algorithm>

#include "milnorhp/errors.hpp"
#include "milnorhp/groebner.hpp"
#include "milnorhp/hilbert.hpp"
#include "milnorhp/hilbert_series.hpp"

namespace milnorhp {

Ideal jacobian_ideal(const MPoly& f) {
  if (f.is_zero() || !f.is_homogeneous())
    throw domain_error("jacobian_ideal: need a nonzero homogeneous input");
  if (f.total_degree() < 2)
    throw domain_error("jacobian_ideal: degree must be at least 2");
  Ideal J;
  J.nvars = f.nvars();
  J.order = f.order();
  for (int v = 0; v < f.nvars(); ++v) {
    MPoly p = f.derivative(v);
    if (!p.is_zero()) J.gens.push_back(std::move(p));
  }
  return J;
}

namespace {

bool is_unit_ideal(const Ideal& G) {
  return G.gens.size() == 1 && G.gens.front().total_degree() == 0;
}

}  // namespace

CurveReport curve_pipeline(const MPoly& f, std::size_t k_max) {
  CurveReport rep;
  rep.d = f.is_zero() ? -1 : f.total_degree();
  rep.nvars = f.nvars();
  if (k_max == 0) k_max = static_cast<std::size_t>(3 * std::max(rep.d, 1L));
  rep.k_max = k_max;

  Ideal J = jacobian_ideal(f);  // validates homogeneity and degree
  const int nv = rep.nvars;
  const long T = static_cast<long>(nv) * (rep.d - 2);

  Ideal GJ = groebner(J);
  auto [numJ, hpJ] = hilbert_series_quotient(GJ, k_max);
  rep.hp_M_trunc = hpJ;

  Ideal Jhat = saturate_irrelevant(GJ);
  auto [numS, hpS] = hilbert_series_quotient(Jhat, k_max);
  rep.hp_Shat_trunc = hpS;

  std::vector<MPoly> mingens = minimal_generators(Jhat);
  rep.sat_gens_count = static_cast<int>(mingens.size());
  for (const auto& g : mingens) rep.sat_gens_degrees.push_back(g.total_degree());

  rep.smooth = is_unit_ideal(Jhat);
  if (rep.smooth) {
    // Empty singular locus: N(f) would be all of S/J_f; by convention the
    // report shows the zero module instead, with tau = 0 and ct = T.
    rep.hp_N = IntPoly::zero();
    rep.tau = 0;
    rep.ct = T;
    rep.seq_report = conjecture_predicate(rep.hp_N);
    return rep;
  }

  // hp_N as the exact stabilized difference: (numJ - numS) / (1-t)^nv
  // must be a polynomial; otherwise the singular locus is not
  // zero-dimensional and no truncation bound makes the difference vanish.
  IntPoly hpN;
  try {
    hpN = exact_div_one_minus_t(numJ - numS, static_cast<unsigned>(nv));
  } catch (const inexact_division_error&) {
    throw truncation_error(
        "curve_pipeline: hp_M - hp_Shat does not stabilize to a polynomial "
        "(the singular locus is not zero-dimensional?)");
  }
  long degN = hpN.degree() ? static_cast<long>(*hpN.degree()) : -1;
  if (degN >= 0 && static_cast<std::size_t>(degN) > k_max)
    throw truncation_error(
        "curve_pipeline: difference of series still nonzero beyond k_max; "
        "rerun with k_max >= " +
        std::to_string(degN));
  rep.hp_N = hpN;

  // tau: the eventual constant of hp_M, accepted only when the last
  // max(3, d) computed coefficients agree.
  std::size_t window = static_cast<std::size_t>(std::max(3L, rep.d));
  if (k_max + 1 < window + static_cast<std::size_t>(std::max(degN, 0L)))
    throw truncation_error(
        "curve_pipeline: k_max too small to certify the eventual constant; "
        "rerun with k_max >= " +
        std::to_string(static_cast<long>(window) + std::max(degN, 0L)));
  const mpz_class& last = hpJ.coeff(k_max);
  for (std::size_t k = k_max + 1 - window; k <= k_max; ++k)
    if (hpJ.coeff(k) != last)
      throw truncation_error(
          "curve_pipeline: hp_M not constant over the last " +
          std::to_string(window) + " coefficients; rerun with larger k_max");
  rep.tau = last;

  // Coincidence threshold: the series of S/J_f agrees with the smooth
  // reference through ct and differs at ct + 1 (guaranteed by T + 1).
  IntPoly smooth = smooth_series(rep.d, nv - 1);
  long ct = -1;
  bool found = false;
  for (std::size_t k = 0; k <= k_max; ++k) {
    if (hpJ.coeff(k) != smooth.coeff(k)) {
      ct = static_cast<long>(k) - 1;
      found = true;
      break;
    }
  }
  if (!found)
    throw truncation_error(
        "curve_pipeline: no deviation from the smooth series through k_max; "
        "rerun with k_max > " +
        std::to_string(T));
  rep.ct = ct;

  if (nv == 3) {
    rep.ci_detect = infer_ab(rep.tau, rep.ct, rep.d);
    if (rep.ci_detect) {
      std::vector<long> want = {rep.ci_detect->first, rep.ci_detect->second};
      std::vector<long> got = rep.sat_gens_degrees;
      std::sort(got.begin(), got.end());
      rep.certified_ci = got == want;
    }
  }

  rep.seq_report = conjecture_predicate(rep.hp_N);
  return rep;
}

}  // namespace milnorhp
