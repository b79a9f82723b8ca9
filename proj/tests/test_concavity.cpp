#include <random>
#include <vector>

#include "doctest.h"
#include "milnorhp/concavity.hpp"
#include "milnorhp/errors.hpp"
#include "milnorhp/hilbert.hpp"

using namespace milnorhp;

namespace {

std::vector<mpz_class> zseq(std::initializer_list<long> v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}

bool strict_lc(const std::vector<mpq_class>& s) {
  return analyze(s).strictly_log_concave;
}

}  // namespace

TEST_CASE("analyzer on the known counterexample sequences") {
  // Support window of t^8+2t^9+3t^10+5t^11+6t^12+5t^13+3t^14+2t^15+t^16.
  SeqReport r = analyze(zseq({1, 2, 3, 5, 6, 5, 3, 2, 1}));
  CHECK(!r.log_concave);
  REQUIRE(r.first_lc_violation.has_value());
  CHECK(*r.first_lc_violation == 2);  // 3^2 < 2*5
  CHECK(r.unimodal);
  CHECK(!r.internal_zeros);
  CHECK(!r.conjecture_pass());

  SeqReport z = analyze(zseq({1, 0, 1}));
  CHECK(z.internal_zeros);
  REQUIRE(z.first_internal_zero.has_value());
  CHECK(*z.first_internal_zero == 1);
  CHECK(!z.unimodal);
  CHECK(!z.conjecture_pass());
}

TEST_CASE("analyzer on well-behaved sequences") {
  SeqReport r = analyze(zseq({2, 3, 2}));
  CHECK(r.log_concave);  // 9 >= 4
  CHECK(r.strictly_log_concave);
  CHECK(r.unimodal);
  CHECK(r.conjecture_pass());

  SeqReport c = analyze(zseq({5, 5, 5, 5}));
  CHECK(c.log_concave);
  CHECK(!c.strictly_log_concave);
  CHECK(c.unimodal);

  CHECK(analyze(std::vector<mpz_class>{}).conjecture_pass());
  CHECK(analyze(zseq({7})).conjecture_pass());
  CHECK(analyze(zseq({1, 9})).conjecture_pass());
  CHECK(analyze(zseq({0, 3, 0})).conjecture_pass());  // no internal zero

  SeqReport n = analyze(zseq({1, -2, 1}));
  CHECK(!n.nonnegative);
}

TEST_CASE("polynomial predicate works on the support span") {
  CHECK(conjecture_predicate(IntPoly{0, 0, 2, 3, 2}).conjecture_pass());
  SeqReport gap = conjecture_predicate(IntPoly::term(1, 5) + IntPoly::term(1, 7));
  CHECK(gap.internal_zeros);
  CHECK(!gap.conjecture_pass());
  CHECK(conjecture_predicate(IntPoly::zero()).conjecture_pass());
  CHECK_THROWS_AS(conjecture_predicate(IntPoly{1, -1}), domain_error);
}

TEST_CASE("implication: nonnegative + log-concave + no internal zeros => unimodal") {
  std::mt19937 rng(123456);
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<int> val(0, 9);
  for (int iter = 0; iter < 10000; ++iter) {
    std::vector<mpz_class> s(static_cast<std::size_t>(len(rng)));
    for (auto& x : s) x = val(rng);
    SeqReport r = analyze(s);
    if (r.nonnegative && r.log_concave && !r.internal_zeros) CHECK(r.unimodal);
  }
}

TEST_CASE("generator family 2: binomial tails") {
  auto s = lemma1_seq(2, {2}, 5);
  CHECK(s == std::vector<mpq_class>({1, 3, 6, 10, 15}));
  CHECK(strict_lc(s));
  for (long m = 1; m <= 30; ++m) CHECK(strict_lc(lemma1_seq(2, {m}, 50)));
  CHECK_THROWS_AS(lemma1_seq(2, {0}, 5), domain_error);
}

TEST_CASE("generator family 3: binomial tail minus a constant") {
  for (long m = 0; m <= 30; ++m)
    for (long n : {1L, 2L, 5L, 17L, 100L})
      CHECK(strict_lc(lemma1_seq(3, {m, n}, 50)));
  CHECK_THROWS_AS(lemma1_seq(3, {3, 0}, 5), domain_error);
}

TEST_CASE("generator family 4: weighted difference of binomial tails") {
  // x = 23, y = 1, m = n + 1 over the sampled grid.
  for (long n = 2; n <= 30; ++n)
    CHECK(strict_lc(lemma1_seq(4, {23, 1, n + 1, n}, 50)));
  // Mixed slopes, both orders of m vs n.
  for (long m = 0; m <= 20; m += 3)
    for (long n = 2; n <= 20; n += 3)
      for (long x : {1L, 2L, 7L, 23L})
        if (!(x == 1 && m == n))
          CHECK(strict_lc(lemma1_seq(4, {x, 1, m, n}, 40)));
  // Rational ratio x/y < 24 with y > 1.
  CHECK(strict_lc(lemma1_seq(4, {47, 2, 6, 4}, 40)));
  CHECK_THROWS_AS(lemma1_seq(4, {200, 1, 5, 4}, 10), domain_error);
  CHECK_THROWS_AS(lemma1_seq(4, {24, 1, 5, 4}, 10), domain_error);
  CHECK_THROWS_AS(lemma1_seq(4, {5, 5, 4, 4}, 10), domain_error);
}

TEST_CASE("generator family 5: sum of two binomial tails from k = 1") {
  for (long m = 2; m <= 30; m += 2)
    for (long n = 2; n <= 30; n += 2)
      CHECK(strict_lc(lemma1_seq(5, {m, n}, 50)));
  CHECK_THROWS_AS(lemma1_seq(5, {1, 4}, 10), domain_error);
}

TEST_CASE("generator family 1: positive scalar multiples") {
  auto base = lemma1_seq(2, {3}, 20);
  auto scaled = lemma1_seq(1, {7, 2, 2, 3}, 20);
  for (std::size_t i = 0; i < base.size(); ++i)
    CHECK(scaled[i] == base[i] * mpq_class(7, 2));
  CHECK(strict_lc(scaled));
  CHECK_THROWS_AS(lemma1_seq(1, {0, 1, 2, 3}, 5), domain_error);
}

TEST_CASE("truncated-family checks per subcase") {
  // (2,2,4): window [1,1] has no interior triple.
  auto reps = lemma2_region_check(Subcase::S111, 2, 2, 4);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].item == 1);
  CHECK(reps[0].k_lo == 1);
  CHECK(reps[0].k_hi == 1);
  CHECK(reps[0].vacuous);
  CHECK(reps[0].pass);

  // (2,3,6) is in subcase 1.2.3, item 6.
  auto r123 = lemma2_region_check(Subcase::S123, 2, 3, 6);
  REQUIRE(r123.size() == 1);
  CHECK(r123[0].item == 6);
  CHECK(r123[0].pass);

  // 1.2.2 carries two items.
  auto r122 = lemma2_region_check(Subcase::S122, 3, 4, 6);
  REQUIRE(r122.size() == 2);
  CHECK(r122[0].item == 4);
  CHECK(r122[1].item == 5);
  CHECK(r122[0].pass);
  CHECK(r122[1].pass);

  CHECK_THROWS_AS(lemma2_region_check(Subcase::S111, 1, 1, 4), domain_error);
}

TEST_CASE("truncated families hold across a parameter grid") {
  for (long d = 2; d <= 30; ++d)
    for (long a = 1; a < d; ++a)
      for (long b = a; b < d; ++b) {
        Subcase sc = classify(a, b, d);
        if (sc == Subcase::Degenerate) continue;
        for (const auto& rep : lemma2_region_check(sc, a, b, d)) {
          CHECK(rep.pass);
          if (!rep.pass)
            MESSAGE("violation: item ", rep.item, " at (", a, ",", b, ",", d,
                    ") k=", *rep.first_violation);
        }
      }
}

TEST_CASE("node inequalities at region changes") {
  auto n224 = lemma3_node_check(2, 2, 4);
  REQUIRE(n224.size() == 1);
  CHECK(n224[0].k == 1);
  CHECK(n224[0].lhs == 5);  // 3^2 - 2*2
  CHECK(n224[0].pass);

  auto n557 = lemma3_node_check(5, 5, 7);
  REQUIRE(!n557.empty());
  for (const auto& nc : n557) CHECK(nc.pass);

  CHECK(lemma3_node_check(3, 3, 4).empty());  // degenerate

  for (long d = 2; d <= 25; ++d)
    for (long a = 1; a < d; ++a)
      for (long b = a; b < d; ++b)
        for (const auto& nc : lemma3_node_check(a, b, d)) {
          CHECK(nc.pass);
          if (!nc.pass)
            MESSAGE("node failure at (", a, ",", b, ",", d, ") k=", nc.k);
        }
}

TEST_CASE("series predicates on a small grid") {
  for (long d = 2; d <= 25; ++d)
    for (long a = 1; a < d; ++a)
      for (long b = a; b < d; ++b) {
        if (a == b && b == d - 1) continue;
        CHECK(conjecture_predicate(hp_N_ci_n2(a, b, d)).conjecture_pass());
        SeqReport diff = analyze(diff_smooth_minus_N(a, b, d).coeffs());
        CHECK(diff.log_concave);
        CHECK(diff.unimodal);
      }
}
