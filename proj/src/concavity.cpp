#include "milnorhp/concavity.hpp"

#include <algorithm>
#include <cassert>

#include "milnorhp/errors.hpp"
#include "milnorhp/hilbert.hpp"

namespace milnorhp {

SeqReport analyze(const std::vector<mpq_class>& seq) {
  SeqReport r;
  const std::size_t n = seq.size();
  for (const auto& x : seq)
    if (x < 0) {
      r.nonnegative = false;
      break;
    }

  // Internal zeros: a zero strictly between two nonzero entries.
  std::size_t first_nz = n, last_nz = n;
  for (std::size_t i = 0; i < n; ++i)
    if (seq[i] != 0) {
      if (first_nz == n) first_nz = i;
      last_nz = i;
    }
  if (first_nz != n) {
    for (std::size_t i = first_nz; i <= last_nz; ++i)
      if (seq[i] == 0) {
        r.internal_zeros = true;
        r.first_internal_zero = i;
        break;
      }
  }

  for (std::size_t k = 1; k + 1 < n; ++k) {
    mpq_class lhs = seq[k] * seq[k];
    mpq_class rhs = seq[k - 1] * seq[k + 1];
    if (lhs < rhs) {
      if (r.log_concave) r.first_lc_violation = k;
      r.log_concave = false;
      r.strictly_log_concave = false;
    } else if (lhs == rhs) {
      r.strictly_log_concave = false;
    }
  }

  // Unimodal: never strictly increases after having strictly decreased.
  bool dropped = false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (seq[i + 1] < seq[i]) dropped = true;
    else if (seq[i + 1] > seq[i] && dropped) {
      r.unimodal = false;
      break;
    }
  }
  return r;
}

SeqReport analyze(const std::vector<mpz_class>& seq) {
  std::vector<mpq_class> q(seq.begin(), seq.end());
  return analyze(q);
}

SeqReport conjecture_predicate(const IntPoly& p) {
  for (const auto& c : p.coeffs())
    if (c < 0)
      throw domain_error("conjecture_predicate: negative coefficient");
  if (p.is_zero()) return SeqReport{};  // vacuous pass
  return analyze(p.unshifted().coeffs());
}

namespace {

void need(bool ok, const char* msg) {
  if (!ok) throw domain_error(msg);
}

}  // namespace

std::vector<mpq_class> lemma1_seq(int family, const std::vector<long>& params,
                                  std::size_t length) {
  std::vector<mpq_class> out;
  out.reserve(length);
  switch (family) {
    case 1: {
      need(params.size() >= 3, "lemma1_seq(1): need {num, den, family, ...}");
      need(params[0] >= 1 && params[1] >= 1,
           "lemma1_seq(1): scalar must be positive");
      mpq_class c(params[0], params[1]);
      c.canonicalize();
      std::vector<long> rest(params.begin() + 3, params.end());
      out = lemma1_seq(static_cast<int>(params[2]), rest, length);
      for (auto& x : out) x *= c;
      return out;
    }
    case 2: {
      need(params.size() == 1, "lemma1_seq(2): need {m}");
      need(params[0] >= 1, "lemma1_seq(2): need m >= 1");
      for (std::size_t k = 0; k < length; ++k)
        out.emplace_back(binom2(params[0] + static_cast<long>(k)));
      return out;
    }
    case 3: {
      need(params.size() == 2, "lemma1_seq(3): need {m, n}");
      need(params[0] >= 0, "lemma1_seq(3): need m >= 0");
      need(params[1] >= 1, "lemma1_seq(3): need n > 0");
      for (std::size_t k = 0; k < length; ++k)
        out.emplace_back(binom2(params[0] + static_cast<long>(k)) - params[1]);
      return out;
    }
    case 4: {
      need(params.size() == 4, "lemma1_seq(4): need {x, y, m, n}");
      const long x = params[0], y = params[1], m = params[2], n = params[3];
      need(x >= 1 && y >= 1, "lemma1_seq(4): need x, y > 0");
      need(x < 24 * y, "lemma1_seq(4): need x/y < 24");
      need(m >= 0, "lemma1_seq(4): need m >= 0");
      need(n >= 2, "lemma1_seq(4): need n >= 2");
      need(!(x == y && m == n), "lemma1_seq(4): zero sequence");
      for (std::size_t k = 0; k < length; ++k) {
        long kk = static_cast<long>(k);
        out.emplace_back(x * binom2(m + kk) - y * binom2(n + kk));
      }
      return out;
    }
    case 5: {
      need(params.size() == 2, "lemma1_seq(5): need {m, n}");
      need(params[0] >= 2 && params[1] >= 2, "lemma1_seq(5): need m, n >= 2");
      for (std::size_t k = 1; k <= length; ++k) {
        long kk = static_cast<long>(k);
        out.emplace_back(binom2(params[0] + kk) + binom2(params[1] + kk));
      }
      return out;
    }
    default:
      throw domain_error("lemma1_seq: family must be 1..5");
  }
}

namespace {

// Raw branch formulas referenced by the six truncated families.
mpz_class lemma2_formula(int item, long a, long b, long d, long k) {
  switch (item) {
    case 1:
    case 2:
      return binom2(k + a + 2) - 3 * binom2(k + a + 3 - d) - mpz_class(a) * a;
    case 3:
      return binom2(k + a + 2) - 3 * binom2(k + 2 - (b - a)) -
             mpz_class(a) * b;
    case 4:
      return binom2(k + 2) + binom2(k + 2 - (b - a)) -
             3 * binom2(k + a + 3 - d);
    case 5:
    case 6:
      return binom2(k + a + 2) - 3 * binom2(k + a + 3 - d) - mpz_class(a) * b;
    default:
      throw domain_error("lemma2_formula: item must be 1..6");
  }
}

long lemma2_lower(int item, long a, long b, long d) {
  switch (item) {
    case 1: return a - 1;
    case 2: return d - a - 1;
    case 3: return b - 1;
    case 4: return d - a - 1;
    case 5: return b - 1;
    case 6: return d - a - 1;
    default: throw domain_error("lemma2_lower: item must be 1..6");
  }
}

Lemma2Report run_lemma2_item(int item, long a, long b, long d) {
  Lemma2Report rep;
  rep.item = item;
  rep.a = a;
  rep.b = b;
  rep.d = d;
  rep.k_lo = lemma2_lower(item, a, b, d);
  rep.k_hi = (3 * d - 6) / 2 - a;
  rep.vacuous = rep.k_hi - rep.k_lo < 2;
  rep.pass = true;
  for (long k = rep.k_lo + 1; k <= rep.k_hi - 1; ++k) {
    mpz_class qm = lemma2_formula(item, a, b, d, k - 1);
    mpz_class q0 = lemma2_formula(item, a, b, d, k);
    mpz_class qp = lemma2_formula(item, a, b, d, k + 1);
    if (q0 * q0 <= qm * qp) {
      rep.pass = false;
      rep.first_violation = k;
      break;
    }
  }
  return rep;
}

}  // namespace

std::vector<Lemma2Report> lemma2_region_check(Subcase sc, long a, long b,
                                              long d) {
  if (classify(a, b, d) != sc)
    throw domain_error("lemma2_region_check: (a,b,d) is not in subcase " +
                       subcase_name(sc));
  std::vector<int> items;
  switch (sc) {
    case Subcase::S111: items = {1}; break;
    case Subcase::S112: items = {2}; break;
    case Subcase::S121: items = {3}; break;
    case Subcase::S122: items = {4, 5}; break;
    case Subcase::S123: items = {6}; break;
    case Subcase::S222: items = {4}; break;
    default: break;  // 2.1.1 / 2.2.1 / degenerate end in constant tails
  }
  std::vector<Lemma2Report> out;
  for (int item : items) out.push_back(run_lemma2_item(item, a, b, d));
  return out;
}

std::vector<NodeCheck> lemma3_node_check(long a, long b, long d) {
  QProfile qp = q_polynomial({a, b, d});
  std::vector<NodeCheck> out;
  if (qp.subcase == Subcase::Degenerate) return out;

  std::vector<long> nodes;
  for (std::size_t i = 0; i + 1 < qp.regions.size(); ++i) {
    nodes.push_back(qp.regions[i].hi);
    nodes.push_back(qp.regions[i + 1].lo);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  assert(qp.full.degree());
  const long deg = static_cast<long>(*qp.full.degree());
  auto q = [&](long k) -> mpz_class {
    if (k < 0 || k > deg) return 0;
    return qp.full.coeff(static_cast<std::size_t>(k));
  };
  for (long k : nodes) {
    if (k < 1 || k > deg) continue;  // no interior triple around k
    NodeCheck nc;
    nc.k = k;
    nc.lhs = q(k) * q(k) - q(k - 1) * q(k + 1);
    nc.constant_tail_exempt = (q(k - 1) == q(k) && q(k) == q(k + 1));
    nc.pass = nc.lhs > 0 || nc.constant_tail_exempt;
    out.push_back(nc);
  }
  return out;
}

}  // namespace milnorhp
