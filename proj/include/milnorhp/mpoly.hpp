#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace milnorhp {

// Hard cap on ring size: up to 4 input variables plus helper variables
// introduced by elimination steps.
inline constexpr int kMaxVars = 8;

// Exponent vector with cached total degree. Slots at or beyond the ring's
// variable count stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
// Does a divide b?
bool mono_divides(const Monomial& a, const Monomial& b);
// b / a; requires divisibility.
Monomial mono_div(const Monomial& b, const Monomial& a);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

struct MonoHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < kMaxVars; ++i)
      h = h * 1099511628211ull + m.e[static_cast<std::size_t>(i)];
    return h;
  }
};

// Total order on monomials: a partition of the variables into blocks,
// compared by graded reverse lexicographic order block by block. One block
// is plain degrevlex; a small front block eliminates its variables; blocks
// of size one give lexicographic order.
class MonomialOrder {
public:
  static MonomialOrder degrevlex(int nvars);
  // Degrevlex with explicit variable ranking: var_order[0] is the largest
  // variable, ties broken reverse-lexicographically from var_order.back().
  static MonomialOrder degrevlex_permuted(int nvars,
                                          std::vector<int> var_order);
  // Eliminate the first front_size entries of var_order: compare their
  // degrevlex block first, then the remaining block.
  static MonomialOrder block_elim(int nvars, int front_size,
                                  std::vector<int> var_order);
  // Pure lexicographic order with the natural variable ranking.
  static MonomialOrder lex(int nvars);

  int nvars() const { return nvars_; }
  const std::vector<int>& blocks() const { return blocks_; }
  const std::vector<int>& var_order() const { return var_order_; }

  // -1 if a < b, 0 if equal, +1 if a > b.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return cmp(a, b) < 0;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  MonomialOrder(int nvars, std::vector<int> blocks,
                std::vector<int> var_order);
  int cmp_block(const Monomial& a, const Monomial& b, std::size_t lo,
                std::size_t hi) const;

  int nvars_ = 0;
  std::vector<int> blocks_;      // block sizes, summing to nvars_
  std::vector<int> var_order_;   // permutation of 0..nvars-1
};

struct Term {
  Monomial m;
  mpq_class c;

  friend bool operator==(const Term& a, const Term& b) {
    return a.m == b.m && a.c == b.c;
  }
};

// Multivariate polynomial over Q with terms kept strictly descending under
// the attached monomial order; zero coefficients never stored.
class MPoly {
public:
  MPoly(int nvars, MonomialOrder order)
      : nvars_(nvars), order_(std::move(order)) {}

  // Normalizes: sorts, merges equal monomials, drops zeros.
  static MPoly from_terms(int nvars, const MonomialOrder& order,
                          std::vector<Term> terms);

  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }

  // Max total degree among terms; -1 for the zero polynomial.
  long total_degree() const;
  bool is_homogeneous() const;

  MPoly reordered(const MonomialOrder& order) const;
  MPoly derivative(int var) const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& p, const MPoly& q);
  friend MPoly operator-(const MPoly& p, const MPoly& q);
  friend MPoly operator*(const MPoly& p, const MPoly& q);
  MPoly scaled(const mpq_class& c) const;
  // Leading coefficient 1 (zero polynomial unchanged).
  MPoly monic() const;

  bool operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  std::string to_string(const std::vector<std::string>& names) const;

private:
  int nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

// Homogeneous generators in a common ring. is_gb marks a reduced monic
// Groebner basis under `order`, sorted by ascending leading monomial.
struct Ideal {
  int nvars = 0;
  MonomialOrder order = MonomialOrder::degrevlex(0);
  std::vector<MPoly> gens;
  bool is_gb = false;
};

}  // namespace milnorhp
