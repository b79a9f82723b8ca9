#include "milnorhp/hilbert_series.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "milnorhp/errors.hpp"
#include "milnorhp/groebner.hpp"

namespace milnorhp {

std::vector<Monomial> monomials_of_degree(int nvars, long k) {
  if (k < 0) return {};
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, int var, long left) -> void {
    if (var == nvars - 1) {
      cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(left);
      cur.deg = static_cast<std::uint32_t>(k);
      out.push_back(cur);
      cur.e[static_cast<std::size_t>(var)] = 0;
      return;
    }
    for (long e = left; e >= 0; --e) {
      cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e);
      self(self, var + 1, left - e);
    }
    cur.e[static_cast<std::size_t>(var)] = 0;
  };
  if (nvars < 1) {
    if (k == 0) out.push_back(Monomial{});
    return out;
  }
  rec(rec, 0, k);
  return out;
}

namespace {

// Drop generators divisible by another generator; sort for canonical form.
std::vector<Monomial> minimalize(std::vector<Monomial> gens, int nvars) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) {
              if (a.deg != b.deg) return a.deg < b.deg;
              return a.e < b.e;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& kept : out)
      if (mono_divides(kept, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  (void)nvars;
  return out;
}

using MemoKey = std::vector<std::uint16_t>;

MemoKey memo_key(const std::vector<Monomial>& gens, int nvars) {
  MemoKey key;
  key.reserve(gens.size() * static_cast<std::size_t>(nvars));
  for (const auto& m : gens)
    for (int v = 0; v < nvars; ++v)
      key.push_back(m.e[static_cast<std::size_t>(v)]);
  return key;
}

IntPoly numerator_rec(std::vector<Monomial> gens, int nvars,
                      std::map<MemoKey, IntPoly>& memo) {
  gens = minimalize(std::move(gens), nvars);
  if (gens.empty()) return IntPoly::one();
  if (gens.front().deg == 0) return IntPoly::zero();

  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!mono_coprime(gens[i], gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    IntPoly num = IntPoly::one();
    for (const auto& m : gens)
      num = num * one_minus_tm(static_cast<long>(m.deg));
    return num;
  }

  MemoKey key = memo_key(gens, nvars);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Pivot: variable occurring in the most generators (ties to the lowest
  // index), guaranteed to appear in at least one non-coprime pair.
  int pivot = 0, best = -1;
  for (int v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& m : gens)
      if (m.e[static_cast<std::size_t>(v)] > 0) ++count;
    if (count > best) {
      best = count;
      pivot = v;
    }
  }

  // N(I) = N(I + (x_pivot)) + t * N(I : x_pivot).
  std::vector<Monomial> plus, colon;
  Monomial xv;
  xv.e[static_cast<std::size_t>(pivot)] = 1;
  xv.deg = 1;
  plus.push_back(xv);
  for (const auto& m : gens) {
    if (m.e[static_cast<std::size_t>(pivot)] == 0) plus.push_back(m);
    Monomial q = m;
    if (q.e[static_cast<std::size_t>(pivot)] > 0) {
      q.e[static_cast<std::size_t>(pivot)] -= 1;
      q.deg -= 1;
    }
    colon.push_back(q);
  }
  IntPoly result = numerator_rec(std::move(plus), nvars, memo) +
                   numerator_rec(std::move(colon), nvars, memo).shifted(1);
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

IntPoly hilbert_numerator(const Ideal& I) {
  Ideal G = I.is_gb ? I : groebner(I);
  std::vector<Monomial> lts;
  lts.reserve(G.gens.size());
  for (const auto& g : G.gens) lts.push_back(g.leading().m);
  std::map<MemoKey, IntPoly> memo;
  return numerator_rec(std::move(lts), G.nvars, memo);
}

std::pair<IntPoly, IntPoly> hilbert_series_quotient(const Ideal& I,
                                                    std::size_t k_max) {
  Ideal G = I.is_gb ? I : groebner(I);
  for (const auto& g : G.gens)
    if (!g.is_homogeneous())
      throw domain_error("hilbert_series_quotient: ideal is not homogeneous");
  IntPoly num = hilbert_numerator(G);
  IntPoly trunc = series_expand(num, G.nvars, k_max);
  return {std::move(num), std::move(trunc)};
}

long quotient_dim_oracle(const Ideal& I, long k) {
  if (k < 0) throw domain_error("quotient_dim_oracle: negative degree");
  Ideal G = I.is_gb ? I : groebner(I);
  for (const auto& g : G.gens)
    if (!g.is_homogeneous())
      throw domain_error("quotient_dim_oracle: ideal is not homogeneous");
  const int nv = G.nvars;
  std::vector<Monomial> cols = monomials_of_degree(nv, k);
  std::map<MemoKey, std::size_t> col_index;
  for (std::size_t c = 0; c < cols.size(); ++c)
    col_index.emplace(memo_key({cols[c]}, nv), c);

  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : G.gens) {
    long dg = g.total_degree();
    if (dg < 0 || dg > k) continue;
    for (const Monomial& u : monomials_of_degree(nv, k - dg)) {
      std::vector<mpq_class> row(cols.size(), 0);
      for (const auto& t : g.terms()) {
        auto it = col_index.find(memo_key({mono_mul(u, t.m)}, nv));
        row[it->second] += t.c;
      }
      rows.push_back(std::move(row));
    }
  }

  // Exact Gaussian elimination; rank = number of pivots.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols.size() && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      mpq_class factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols.size(); ++c)
        rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return static_cast<long>(cols.size()) - static_cast<long>(rank);
}

}  // namespace milnorhp
