#include "milnorhp/groebner.hpp"

#include <algorithm>
#include <cassert>

#include "milnorhp/errors.hpp"

namespace milnorhp {

namespace {

// Integer-coefficient working form: content-free, positive leading
// coefficient, terms strictly descending. Scalar factors are irrelevant to
// the generated ideal, so reductions cross-multiply instead of dividing.
struct ZTerm {
  Monomial m;
  mpz_class c;
};

struct ZPoly {
  std::vector<ZTerm> t;
  long sugar = 0;  // upper bound for the degree a homogeneous ancestor had

  bool empty() const { return t.empty(); }
  const Monomial& lm() const { return t.front().m; }
  const mpz_class& lc() const { return t.front().c; }
};

void normalize(ZPoly& p) {
  if (p.t.empty()) return;
  mpz_class g = 0;
  for (const auto& t : p.t) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& t : p.t) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(),
                                     g.get_mpz_t());
  if (p.t.front().c < 0)
    for (auto& t : p.t) t.c = -t.c;
}

ZPoly zpoly_from(const MPoly& p) {
  ZPoly out;
  if (p.is_zero()) return out;
  mpz_class den = 1;
  for (const auto& t : p.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
            t.c.get_den().get_mpz_t());
  out.t.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    mpz_class c = t.c.get_num() * (den / t.c.get_den());
    out.t.push_back({t.m, std::move(c)});
  }
  out.sugar = p.total_degree();
  normalize(out);
  return out;
}

MPoly mpoly_from(const ZPoly& p, int nvars, const MonomialOrder& order) {
  std::vector<Term> ts;
  ts.reserve(p.t.size());
  for (const auto& t : p.t) ts.push_back({t.m, mpq_class(t.c)});
  return MPoly::from_terms(nvars, order, std::move(ts));
}

// a*p - b*(u*g), merged in one pass. Both inputs descending; result
// descending. Used with u = lm(p)/lm(g) and a, b chosen so the leading
// terms cancel.
ZPoly lin_comb(const ZPoly& p, const mpz_class& a, const ZPoly& g,
               const mpz_class& b, const Monomial& u,
               const MonomialOrder& order) {
  ZPoly r;
  r.t.reserve(p.t.size() + g.t.size());
  r.sugar = std::max(p.sugar, g.sugar + static_cast<long>(u.deg));
  std::size_t i = 0, j = 0;
  while (i < p.t.size() || j < g.t.size()) {
    if (j >= g.t.size()) {
      r.t.push_back({p.t[i].m, a * p.t[i].c});
      ++i;
      continue;
    }
    Monomial gm = mono_mul(g.t[j].m, u);
    if (i >= p.t.size()) {
      r.t.push_back({gm, -b * g.t[j].c});
      ++j;
      continue;
    }
    int c = order.cmp(p.t[i].m, gm);
    if (c > 0) {
      r.t.push_back({p.t[i].m, a * p.t[i].c});
      ++i;
    } else if (c < 0) {
      r.t.push_back({gm, -b * g.t[j].c});
      ++j;
    } else {
      mpz_class s = a * p.t[i].c - b * g.t[j].c;
      if (s != 0) r.t.push_back({p.t[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

// Full reduction of p modulo the basis: every term of the result is
// irreducible. Result is content-free with positive leading coefficient,
// i.e. canonical up to the sign convention.
ZPoly reduce_full(ZPoly p, const std::vector<ZPoly>& basis,
                  const MonomialOrder& order) {
  ZPoly out;
  out.sugar = p.sugar;
  int steps = 0;
  while (!p.empty()) {
    // Pick a reducer for the leading term: fewest terms, then first.
    const ZPoly* red = nullptr;
    for (const auto& g : basis) {
      if (g.empty() || !mono_divides(g.lm(), p.lm())) continue;
      if (!red || g.t.size() < red->t.size()) red = &g;
    }
    if (!red) {
      out.t.push_back(std::move(p.t.front()));
      p.t.erase(p.t.begin());
      continue;
    }
    Monomial u = mono_div(p.lm(), red->lm());
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), p.lc().get_mpz_t(), red->lc().get_mpz_t());
    mpz_class a = red->lc() / d;
    mpz_class b = p.lc() / d;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    long sug = std::max(p.sugar, red->sugar + static_cast<long>(u.deg));
    // Scaling p by a scales the emitted irreducible prefix too.
    if (a != 1)
      for (auto& t : out.t) t.c *= a;
    p = lin_comb(p, a, *red, b, u, order);
    p.sugar = sug;
    if (++steps % 16 == 0 && !p.empty()) {
      // Periodic content stripping keeps coefficients small; the emitted
      // prefix must stay on the same scale as the rest.
      mpz_class g = 0;
      for (const auto& t : out.t) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
      }
      if (g != 1)
        for (const auto& t : p.t) {
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
          if (g == 1) break;
        }
      if (g > 1) {
        for (auto& t : out.t)
          mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
        for (auto& t : p.t)
          mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
      }
    }
  }
  normalize(out);
  return out;
}

struct Pair {
  int i, j;
  Monomial lcm;
  long sugar;
};

// Selection key: sugar degree first, then lcm degree, then the ordering of
// the lcm itself, then indices — deterministic.
bool pair_less(const Pair& a, const Pair& b, const MonomialOrder& order) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
  int c = order.cmp(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

Pair make_pair_for(const std::vector<ZPoly>& G, int i, int j) {
  Pair p;
  p.i = i;
  p.j = j;
  p.lcm = mono_lcm(G[static_cast<std::size_t>(i)].lm(),
                   G[static_cast<std::size_t>(j)].lm());
  long di = G[static_cast<std::size_t>(i)].sugar +
            static_cast<long>(p.lcm.deg - G[static_cast<std::size_t>(i)].lm().deg);
  long dj = G[static_cast<std::size_t>(j)].sugar +
            static_cast<long>(p.lcm.deg - G[static_cast<std::size_t>(j)].lm().deg);
  p.sugar = std::max(di, dj);
  return p;
}

// Pair-set maintenance when h = G[t] joins the basis (Gebauer-Moeller).
void update_pairs(const std::vector<ZPoly>& G, std::vector<Pair>& B, int t) {
  const ZPoly& h = G[static_cast<std::size_t>(t)];
  std::vector<Pair> C, D;
  for (int i = 0; i < t; ++i)
    if (!G[static_cast<std::size_t>(i)].empty())
      C.push_back(make_pair_for(G, i, t));

  auto lcm_divides_some = [](const Monomial& m, const std::vector<Pair>& S) {
    for (const auto& q : S)
      if (mono_divides(q.lcm, m)) return true;
    return false;
  };
  while (!C.empty()) {
    Pair p = C.back();
    C.pop_back();
    bool coprime =
        mono_coprime(G[static_cast<std::size_t>(p.i)].lm(), h.lm());
    if (coprime || (!lcm_divides_some(p.lcm, C) &&
                    !lcm_divides_some(p.lcm, D)))
      D.push_back(p);
  }
  std::vector<Pair> E;
  for (auto& p : D)
    if (!mono_coprime(G[static_cast<std::size_t>(p.i)].lm(), h.lm()))
      E.push_back(p);

  std::vector<Pair> keep;
  keep.reserve(B.size() + E.size());
  for (auto& p : B) {
    const Monomial& li = G[static_cast<std::size_t>(p.i)].lm();
    const Monomial& lj = G[static_cast<std::size_t>(p.j)].lm();
    if (!mono_divides(h.lm(), p.lcm) || mono_lcm(li, h.lm()) == p.lcm ||
        mono_lcm(lj, h.lm()) == p.lcm)
      keep.push_back(p);
  }
  for (auto& p : E) keep.push_back(p);
  B = std::move(keep);
}

ZPoly spoly(const ZPoly& f, const ZPoly& g, const Monomial& lcm,
            const MonomialOrder& order) {
  Monomial uf = mono_div(lcm, f.lm());
  Monomial ug = mono_div(lcm, g.lm());
  mpz_class d;
  mpz_gcd(d.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
  mpz_class cf = g.lc() / d;
  mpz_class cg = f.lc() / d;
  // s = cf*(uf*f) - cg*(ug*g): shift f by uf first, then combine.
  ZPoly fs;
  fs.t.reserve(f.t.size());
  for (const auto& t : f.t) fs.t.push_back({mono_mul(t.m, uf), t.c});
  fs.sugar = f.sugar + static_cast<long>(uf.deg);
  ZPoly s = lin_comb(fs, cf, g, cg, ug, order);
  s.sugar = std::max(fs.sugar, g.sugar + static_cast<long>(ug.deg));
  return s;
}

std::vector<ZPoly> buchberger(std::vector<ZPoly> inputs,
                              const MonomialOrder& order) {
  // Deterministic input order: ascending leading monomial, then size.
  std::sort(inputs.begin(), inputs.end(),
            [&order](const ZPoly& a, const ZPoly& b) {
              int c = order.cmp(a.lm(), b.lm());
              if (c != 0) return c < 0;
              return a.t.size() < b.t.size();
            });

  std::vector<ZPoly> G;
  std::vector<Pair> B;
  for (auto& f : inputs) {
    ZPoly h = reduce_full(std::move(f), G, order);
    if (h.empty()) continue;
    G.push_back(std::move(h));
    update_pairs(G, B, static_cast<int>(G.size()) - 1);
  }

  while (!B.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < B.size(); ++k)
      if (pair_less(B[k], B[best], order)) best = k;
    Pair p = B[best];
    B.erase(B.begin() + static_cast<std::ptrdiff_t>(best));

    ZPoly s = spoly(G[static_cast<std::size_t>(p.i)],
                    G[static_cast<std::size_t>(p.j)], p.lcm, order);
    ZPoly h = reduce_full(std::move(s), G, order);
    if (h.empty()) continue;
    G.push_back(std::move(h));
    update_pairs(G, B, static_cast<int>(G.size()) - 1);
  }
  return G;
}

// Minimal basis (no leading monomial divides another), then tail-reduce
// each survivor against the others; with fixed leading monomials one pass
// yields the reduced basis.
std::vector<ZPoly> interreduce(std::vector<ZPoly> G,
                               const MonomialOrder& order) {
  std::vector<char> keep(G.size(), 1);
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j || !keep[i] || !keep[j]) continue;
      if (mono_divides(G[j].lm(), G[i].lm()) &&
          (G[j].lm() != G[i].lm() || j < i))
        keep[i] = 0;
    }
  std::vector<ZPoly> M;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (keep[i]) M.push_back(std::move(G[i]));

  std::vector<ZPoly> R;
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<ZPoly> others;
    others.reserve(M.size() - 1);
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    ZPoly r = reduce_full(M[i], others, order);
    assert(!r.empty());
    R.push_back(std::move(r));
  }
  return R;
}

Ideal finalize(std::vector<ZPoly> G, int nvars, const MonomialOrder& order) {
  G = interreduce(std::move(G), order);
  std::sort(G.begin(), G.end(), [&order](const ZPoly& a, const ZPoly& b) {
    return order.cmp(a.lm(), b.lm()) < 0;
  });
  Ideal out;
  out.nvars = nvars;
  out.order = order;
  out.is_gb = true;
  for (const auto& g : G)
    out.gens.push_back(mpoly_from(g, nvars, order).monic());
  return out;
}

}  // namespace

Ideal groebner(const Ideal& I) {
  if (I.is_gb) return I;
  std::vector<ZPoly> in;
  for (const auto& g : I.gens) {
    ZPoly z = zpoly_from(g.order() == I.order ? g : g.reordered(I.order));
    if (!z.empty()) in.push_back(std::move(z));
  }
  if (in.empty()) {
    Ideal out;
    out.nvars = I.nvars;
    out.order = I.order;
    out.is_gb = true;
    return out;
  }
  return finalize(buchberger(std::move(in), I.order), I.nvars, I.order);
}

MPoly normal_form(const MPoly& f, const Ideal& G) {
  if (!G.is_gb)
    throw domain_error("normal_form: basis argument is not a reduced basis");
  MPoly work = f.order() == G.order ? f : f.reordered(G.order);
  std::vector<Term> out;
  while (!work.is_zero()) {
    const MPoly* red = nullptr;
    for (const auto& g : G.gens)
      if (mono_divides(g.leading().m, work.leading().m)) {
        red = &g;
        break;
      }
    if (!red) {
      out.push_back(work.leading());
      std::vector<Term> rest(work.terms().begin() + 1, work.terms().end());
      work = MPoly::from_terms(G.nvars, G.order, std::move(rest));
      continue;
    }
    MPoly shifted = MPoly::from_terms(
        G.nvars, G.order,
        [&] {
          std::vector<Term> ts;
          Monomial u = mono_div(work.leading().m, red->leading().m);
          mpq_class c = work.leading().c;  // reducers are monic
          ts.reserve(red->terms().size());
          for (const auto& t : red->terms())
            ts.push_back({mono_mul(t.m, u), t.c * c});
          return ts;
        }());
    work = work - shifted;
  }
  return MPoly::from_terms(G.nvars, G.order, std::move(out));
}

bool ideal_contains(const Ideal& G, const MPoly& f) {
  return normal_form(f, G.is_gb ? G : groebner(G)).is_zero();
}

bool ideal_equal(const Ideal& A, const Ideal& B) {
  Ideal GA = A.is_gb ? A : groebner(A);
  Ideal GB = B.is_gb ? B : groebner(B);
  if (GA.order == GB.order) return GA.gens == GB.gens;
  for (const auto& g : GA.gens)
    if (!normal_form(g, GB).is_zero()) return false;
  for (const auto& g : GB.gens)
    if (!normal_form(g, GA).is_zero()) return false;
  return true;
}

namespace {

// Helper-first elimination order; original variables keep their ranking.
MonomialOrder tag_elim_order(int nv) {
  std::vector<int> vo(static_cast<std::size_t>(nv) + 1);
  vo[0] = nv;
  for (int v = 0; v < nv; ++v) vo[static_cast<std::size_t>(v) + 1] = v;
  return MonomialOrder::block_elim(nv + 1, 1, std::move(vo));
}

}  // namespace

Ideal ideal_intersect(const Ideal& A, const Ideal& B) {
  if (A.nvars != B.nvars)
    throw domain_error("ideal_intersect: rings differ");
  if (A.nvars + 1 > kMaxVars)
    throw domain_error("ideal_intersect: no helper variable slot left");
  Ideal GA = A.is_gb ? A : groebner(A);
  Ideal GB = B.is_gb && B.order == A.order ? B : [&] {
    Ideal plan;
    plan.nvars = B.nvars;
    plan.order = A.order;
    plan.gens = B.gens;
    return groebner(plan);
  }();
  if (GA.gens.empty()) return GA;
  if (GB.gens.empty()) return GB;

  const int nv = A.nvars;
  const int tag = nv;
  MonomialOrder elim = tag_elim_order(nv);
  Term wt;
  wt.c = 1;
  wt.m.e[static_cast<std::size_t>(tag)] = 1;
  wt.m.deg = 1;
  MPoly w = MPoly::from_terms(nv + 1, elim, {wt});

  // t*A + (1-t)*B; the t-free part of its basis is A ∩ B.
  std::vector<MPoly> gens;
  for (const auto& a : GA.gens) {
    std::vector<Term> ts(a.terms().begin(), a.terms().end());
    gens.push_back(w * MPoly::from_terms(nv + 1, elim, std::move(ts)));
  }
  for (const auto& b : GB.gens) {
    std::vector<Term> ts(b.terms().begin(), b.terms().end());
    MPoly lifted = MPoly::from_terms(nv + 1, elim, std::move(ts));
    gens.push_back(lifted - w * lifted);
  }
  Ideal ext;
  ext.nvars = nv + 1;
  ext.order = elim;
  ext.gens = std::move(gens);
  Ideal G = groebner(ext);

  std::vector<MPoly> kept;
  for (const auto& g : G.gens) {
    if (g.leading().m.e[static_cast<std::size_t>(tag)] != 0) continue;
    std::vector<Term> ts(g.terms().begin(), g.terms().end());
    kept.push_back(MPoly::from_terms(nv, A.order, std::move(ts)));
  }
  Ideal out;
  out.nvars = nv;
  out.order = A.order;
  out.gens = std::move(kept);
  return groebner(out);
}

Ideal colon_by_variable(const Ideal& I, int var) {
  if (var < 0 || var >= I.nvars)
    throw domain_error("colon_by_variable: no such variable");
  if (I.nvars + 1 > kMaxVars)
    throw domain_error("colon_by_variable: no helper variable slot left");
  const int nv = I.nvars;
  const int tag = nv;
  MonomialOrder elim = tag_elim_order(nv);

  // (w*I + (x_var - w*x_var)) intersected with k[x] is I ∩ (x_var).
  std::vector<MPoly> gens;
  Term wt;
  wt.c = 1;
  wt.m.e[static_cast<std::size_t>(tag)] = 1;
  wt.m.deg = 1;
  MPoly w = MPoly::from_terms(nv + 1, elim, {wt});
  for (const auto& g : I.gens) {
    std::vector<Term> ts;
    for (const auto& t : g.terms()) ts.push_back(t);
    MPoly lifted = MPoly::from_terms(nv + 1, elim, std::move(ts));
    gens.push_back(w * lifted);
  }
  Term xt;
  xt.c = 1;
  xt.m.e[static_cast<std::size_t>(var)] = 1;
  xt.m.deg = 1;
  MPoly x = MPoly::from_terms(nv + 1, elim, {xt});
  gens.push_back(x - w * x);

  Ideal ext;
  ext.nvars = nv + 1;
  ext.order = elim;
  ext.gens = std::move(gens);
  Ideal G = groebner(ext);

  // Elements free of the helper variable, divided exactly by x_var.
  std::vector<MPoly> colon_gens;
  for (const auto& g : G.gens) {
    if (g.leading().m.e[static_cast<std::size_t>(tag)] != 0) continue;
    std::vector<Term> ts;
    ts.reserve(g.terms().size());
    for (const auto& t : g.terms()) {
      assert(t.m.e[static_cast<std::size_t>(tag)] == 0);
      assert(t.m.e[static_cast<std::size_t>(var)] > 0);
      Term s = t;
      s.m.e[static_cast<std::size_t>(var)] -= 1;
      s.m.deg -= 1;
      ts.push_back(std::move(s));
    }
    colon_gens.push_back(MPoly::from_terms(nv, I.order, std::move(ts)));
  }
  Ideal out;
  out.nvars = nv;
  out.order = I.order;
  out.gens = std::move(colon_gens);
  return groebner(out);
}

namespace {

bool same_reduced_basis(const Ideal& A, const Ideal& B) {
  assert(A.is_gb && B.is_gb && A.order == B.order);
  return A.gens == B.gens;
}

}  // namespace

Ideal saturate_irrelevant(const Ideal& I, int* rounds_out) {
  Ideal cur = I.is_gb ? I : groebner(I);
  // Ascending chain I ⊆ I:m ⊆ I:m^2 ⊆ ... stabilizes at I:m^∞;
  // Noetherianity bounds the strict steps, the cap is a safety valve.
  for (int round = 0; round < 256; ++round) {
    Ideal nxt = colon_by_variable(cur, 0);
    for (int v = 1; v < I.nvars; ++v)
      nxt = ideal_intersect(nxt, colon_by_variable(cur, v));
    if (same_reduced_basis(nxt, cur)) {
      if (rounds_out) *rounds_out = round;
      return cur;
    }
    cur = std::move(nxt);
  }
  throw truncation_error("saturate_irrelevant: no fixed point in 256 rounds");
}

namespace {

// I : x_v^infinity for homogeneous I: under degrevlex with x_v ranked
// last, divide every reduced-basis element by its highest power of x_v.
Ideal divide_out_variable(const Ideal& cur, int v) {
  std::vector<int> vo;
  for (int u = 0; u < cur.nvars; ++u)
    if (u != v) vo.push_back(u);
  vo.push_back(v);
  Ideal plan;
  plan.nvars = cur.nvars;
  plan.order = MonomialOrder::degrevlex_permuted(cur.nvars, std::move(vo));
  plan.gens = cur.gens;
  Ideal G = groebner(plan);
  std::vector<MPoly> divided;
  for (const auto& g : G.gens) {
    std::uint16_t low = 0xffff;
    for (const auto& t : g.terms())
      low = std::min(low, t.m.e[static_cast<std::size_t>(v)]);
    std::vector<Term> ts;
    ts.reserve(g.terms().size());
    for (const auto& t : g.terms()) {
      Term s = t;
      s.m.e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(
          s.m.e[static_cast<std::size_t>(v)] - low);
      s.m.deg -= low;
      ts.push_back(std::move(s));
    }
    divided.push_back(MPoly::from_terms(cur.nvars, cur.order, std::move(ts)));
  }
  Ideal cand;
  cand.nvars = cur.nvars;
  cand.order = cur.order;
  cand.gens = std::move(divided);
  return groebner(cand);
}

}  // namespace

Ideal saturate_irrelevant_divide_out(const Ideal& I) {
  for (const auto& g : I.gens)
    if (!g.is_homogeneous())
      throw domain_error(
          "saturate_irrelevant_divide_out: ideal is not homogeneous");
  Ideal cur = I.is_gb ? I : groebner(I);
  // I:m^∞ = ∩_v (I : x_v^infinity); one round lands on the saturation,
  // the second confirms the fixed point.
  for (int round = 0; round < 8; ++round) {
    Ideal nxt = divide_out_variable(cur, 0);
    for (int v = 1; v < I.nvars; ++v)
      nxt = ideal_intersect(nxt, divide_out_variable(cur, v));
    if (same_reduced_basis(nxt, cur)) return cur;
    cur = std::move(nxt);
  }
  throw truncation_error(
      "saturate_irrelevant_divide_out: no fixed point in 8 rounds");
}

std::vector<MPoly> minimal_generators(const Ideal& I) {
  Ideal G = I.is_gb ? I : groebner(I);
  for (const auto& g : G.gens)
    if (!g.is_homogeneous())
      throw domain_error("minimal_generators: ideal is not homogeneous");
  // Ascending degree; a reduced degrevlex basis is already degree-sorted,
  // but don't rely on it.
  std::vector<MPoly> cands = G.gens;
  std::stable_sort(cands.begin(), cands.end(),
                   [](const MPoly& a, const MPoly& b) {
                     return a.total_degree() < b.total_degree();
                   });
  std::vector<MPoly> kept;
  Ideal span;
  span.nvars = G.nvars;
  span.order = G.order;
  for (const auto& g : cands) {
    if (!kept.empty()) {
      if (normal_form(g, span).is_zero()) continue;
    }
    kept.push_back(g);
    Ideal raw;
    raw.nvars = G.nvars;
    raw.order = G.order;
    raw.gens = kept;
    span = groebner(raw);
  }
  return kept;
}

bool spolys_reduce_to_zero(const Ideal& G) {
  if (!G.is_gb) throw domain_error("spolys_reduce_to_zero: needs a basis");
  std::vector<ZPoly> basis;
  for (const auto& g : G.gens) basis.push_back(zpoly_from(g));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Monomial l = mono_lcm(basis[i].lm(), basis[j].lm());
      ZPoly s = spoly(basis[i], basis[j], l, G.order);
      if (!reduce_full(std::move(s), basis, G.order).empty()) return false;
    }
  return true;
}

}  // namespace milnorhp
