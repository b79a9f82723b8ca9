#include "milnorhp/closedform.hpp"

#include <cassert>

#include "milnorhp/errors.hpp"
#include "milnorhp/hilbert.hpp"

namespace milnorhp {

std::string subcase_name(Subcase sc) {
  switch (sc) {
    case Subcase::S111: return "1.1.1";
    case Subcase::S112: return "1.1.2";
    case Subcase::S121: return "1.2.1";
    case Subcase::S122: return "1.2.2";
    case Subcase::S123: return "1.2.3";
    case Subcase::S211: return "2.1.1";
    case Subcase::S221: return "2.2.1";
    case Subcase::S222: return "2.2.2";
    case Subcase::Degenerate: return "degenerate";
    case Subcase::Unclassified: return "unclassified";
  }
  return "unclassified";
}

namespace {

void check_config(long a, long b, long d) {
  if (!(1 <= a && a <= b && b < d))
    throw domain_error("subcase config: need 1 <= a <= b < d");
}

}  // namespace

std::vector<Subcase> matching_subcases(long a, long b, long d) {
  check_config(a, b, d);
  std::vector<Subcase> out;
  const bool case1 = 2 * a + 2 * b + 1 < 3 * d;
  const bool case2 = !case1;
  const bool eq = a == b;
  if (case1 && eq && 2 <= a && a <= d - 2 && d - 2 <= 2 * a - 2)
    out.push_back(Subcase::S111);
  if (case1 && eq && 1 <= a && d - 2 >= 2 * a - 1) out.push_back(Subcase::S112);
  if (case1 && !eq && 1 <= a && a <= d - 2 && d - 2 <= b - 1)
    out.push_back(Subcase::S121);
  if (case1 && !eq && 2 <= a && b <= d - 2 && d - 2 <= a + b - 2)
    out.push_back(Subcase::S122);
  if (case1 && !eq && 1 <= a && d - 2 >= a + b - 1) out.push_back(Subcase::S123);
  if (case2 && eq && 2 <= a && a <= d - 2) out.push_back(Subcase::S211);
  if (case2 && !eq && 2 <= a && a <= d - 2 && d - 2 <= b - 1)
    out.push_back(Subcase::S221);
  if (case2 && !eq && 2 <= a && b <= d - 2) out.push_back(Subcase::S222);
  return out;
}

Subcase classify(long a, long b, long d) {
  check_config(a, b, d);
  if (a == b && b == d - 1) return Subcase::Degenerate;
  auto hits = matching_subcases(a, b, d);
  if (hits.size() == 1) return hits.front();
  return Subcase::Unclassified;
}

namespace {

// The printed range bounds overlap in exactly one situation: the constant
// tail of subcase 2.2.1 starts at 2b-2a-2, which equals 0 when b = a+1 and
// collides with the first range [0, b-a-1]. Both formulas give (b-a)^2 = 1
// there, so pushing each range to start after its predecessor is
// value-neutral; the oracle comparison in q_polynomial double-checks that.
std::vector<Region> clip_to_tiling(std::vector<Region> rs) {
  long floor_lo = 0;
  for (auto& r : rs) {
    if (r.lo < floor_lo) r.lo = floor_lo;
    if (r.lo <= r.hi) floor_lo = r.hi + 1;
  }
  return rs;
}

}  // namespace

std::vector<Region> subcase_regions(const CIConfig& cfg, Subcase sc) {
  check_config(cfg.a, cfg.b, cfg.d);
  const long a = cfg.a, b = cfg.b, d = cfg.d;
  const long H = (3 * d - 6) / 2 - a;  // top of the half window
  std::vector<Region> rs;
  switch (sc) {
    case Subcase::S111:
      rs = {{0, d - a - 2, 0}, {d - a - 1, a - 2, 1}, {a - 1, H, 2}};
      break;
    case Subcase::S112:
      rs = {{0, a - 2, 0}, {a - 1, d - a - 2, 1}, {d - a - 1, H, 2}};
      break;
    case Subcase::S121:
      rs = {{0, b - a - 1, 0}, {b - a, b - 2, 1}, {b - 1, H, 2}};
      break;
    case Subcase::S122:
      rs = {{0, b - a - 1, 0},
            {b - a, d - a - 2, 1},
            {d - a - 1, b - 2, 2},
            {b - 1, H, 3}};
      break;
    case Subcase::S123:
      rs = {{0, b - a - 1, 0},
            {b - a, b - 2, 1},
            {b - 1, d - a - 2, 2},
            {d - a - 1, H, 3}};
      break;
    case Subcase::S211:
      rs = {{0, d - a - 2, 0},
            {d - a - 1, 3 * d - 3 * a - 6, 1},
            {3 * d - 3 * a - 5, H, 2}};
      break;
    case Subcase::S221:
      rs = {{0, b - a - 1, 0},
            {b - a, 2 * b - 2 * a - 3, 1},
            {2 * b - 2 * a - 2, H, 2}};
      break;
    case Subcase::S222:
      rs = {{0, b - a - 1, 0},
            {b - a, d - a - 2, 1},
            {d - a - 1, 3 * d - 2 * a - b - 6, 2},
            {3 * d - 2 * a - b - 5, H, 3}};
      break;
    default:
      throw domain_error("subcase_regions: no piecewise form for " +
                         subcase_name(sc));
  }
  return clip_to_tiling(rs);
}

namespace {

mpz_class branch_value(const CIConfig& cfg, Subcase sc, int branch, long k) {
  const long a = cfg.a, b = cfg.b, d = cfg.d;
  switch (sc) {
    case Subcase::S111:
      switch (branch) {
        case 0: return 2 * binom2(k + 2);
        case 1: return 2 * binom2(k + 2) - 3 * binom2(k + a + 3 - d);
        case 2:
          return binom2(k + a + 2) - 3 * binom2(k + a + 3 - d) -
                 mpz_class(a) * a;
      }
      break;
    case Subcase::S112:
      switch (branch) {
        case 0: return 2 * binom2(k + 2);
        case 1: return binom2(k + a + 2) - mpz_class(a) * a;
        case 2:
          return binom2(k + a + 2) - 3 * binom2(k + a + 3 - d) -
                 mpz_class(a) * a;
      }
      break;
    case Subcase::S121:
      switch (branch) {
        case 0: return binom2(k + 2);
        case 1: return binom2(k + 2) - 2 * binom2(k + 2 - (b - a));
        case 2:
          return binom2(k + a + 2) - 3 * binom2(k + 2 - (b - a)) -
                 mpz_class(a) * b;
      }
      break;
    case Subcase::S122:
      switch (branch) {
        case 0: return binom2(k + 2);
        case 1: return binom2(k + 2) + binom2(k + 2 - (b - a));
        case 2:
          return binom2(k + 2) + binom2(k + 2 - (b - a)) -
                 3 * binom2(k + a + 3 - d);
        case 3:
          return binom2(k + a + 2) - 3 * binom2(k + a + 3 - d) -
                 mpz_class(a) * b;
      }
      break;
    case Subcase::S123:
      switch (branch) {
        case 0: return binom2(k + 2);
        case 1: return binom2(k + 2) + binom2(k + 2 - (b - a));
        case 2: return binom2(k + a + 2) - mpz_class(a) * b;
        case 3:
          return binom2(k + a + 2) - 3 * binom2(k + a + 3 - d) -
                 mpz_class(a) * b;
      }
      break;
    case Subcase::S211:
      switch (branch) {
        case 0: return 2 * binom2(k + 2);
        case 1: return 2 * binom2(k + 2) - 3 * binom2(k + a + 3 - d);
        case 2: return 3 * mpz_class(d - a - 1) * (d - a - 1);
      }
      break;
    case Subcase::S221:
      switch (branch) {
        case 0: return binom2(k + 2);
        case 1: return binom2(k + 2) - 2 * binom2(k + 2 - (b - a));
        case 2: return mpz_class(b - a) * (b - a);
      }
      break;
    case Subcase::S222:
      switch (branch) {
        case 0: return binom2(k + 2);
        case 1: return binom2(k + 2) + binom2(k + 2 - (b - a));
        case 2:
          return binom2(k + 2) + binom2(k + 2 - (b - a)) -
                 3 * binom2(k + a + 3 - d);
        case 3:
          return mpz_class(b - a) * (b - a) +
                 3 * mpz_class(d - a - 1) * (d - b - 1);
      }
      break;
    default:
      break;
  }
  throw domain_error("branch_value: no branch " + std::to_string(branch) +
                     " in subcase " + subcase_name(sc));
}

}  // namespace

mpz_class qk(const CIConfig& cfg, Subcase sc, long k) {
  const long H = (3 * cfg.d - 6) / 2 - cfg.a;
  if (k < 0 || k > H)
    throw domain_error("qk: k outside half window [0, T/2 - a]");
  const auto regions = subcase_regions(cfg, sc);
  int hits = 0;
  mpz_class value;
  for (const auto& r : regions) {
    if (r.lo <= k && k <= r.hi) {
      ++hits;
      value = branch_value(cfg, sc, r.branch, k);
    }
  }
  if (hits != 1)
    throw domain_error("qk: " + std::to_string(hits) +
                       " branches cover k = " + std::to_string(k) +
                       " in subcase " + subcase_name(sc));
  return value;
}

QProfile q_polynomial(const CIConfig& cfg) {
  check_config(cfg.a, cfg.b, cfg.d);
  QProfile out;
  out.cfg = cfg;
  out.subcase = classify(cfg.a, cfg.b, cfg.d);
  if (out.subcase == Subcase::Unclassified)
    throw classification_gap_error(cfg.a, cfg.b, cfg.d);

  const long a = cfg.a, b = cfg.b, d = cfg.d;
  const long T = 3 * d - 6;
  IntPoly hpn = hp_N_ci_n2(a, b, d);

  if (out.subcase == Subcase::Degenerate) {
    assert(hpn.is_zero());
    out.full = IntPoly::zero();
    return out;
  }

  assert(!hpn.is_zero());
  assert(hpn.low_degree() == static_cast<std::size_t>(a));
  out.full = hpn.unshifted();  // oracle Q(t), degree T - 2a
  assert(out.full.degree() && *out.full.degree() ==
                                  static_cast<std::size_t>(T - 2 * a));

  for (const auto& r : subcase_regions(cfg, out.subcase))
    if (r.lo <= r.hi) out.regions.push_back(r);

  const long H = T / 2 - a;
  out.half_coeffs.reserve(static_cast<std::size_t>(H + 1));
  for (long k = 0; k <= H; ++k) {
    mpz_class printed = qk(cfg, out.subcase, k);
    out.half_coeffs.push_back(printed);
    mpz_class oracle = out.full.coeff(static_cast<std::size_t>(k));
    if (printed != oracle) {
      int branch = -1;
      for (const auto& r : out.regions)
        if (r.lo <= k && k <= r.hi) branch = r.branch;
      out.errata.push_back({out.subcase, branch, a, b, d, k, printed, oracle});
    }
  }
  return out;
}

}  // namespace milnorhp
