#include "doctest.h"
#include "milnorhp/closedform.hpp"
#include "milnorhp/errors.hpp"
#include "milnorhp/hilbert.hpp"

using namespace milnorhp;

TEST_CASE("classification of the reference configurations") {
  CHECK(classify(2, 2, 4) == Subcase::S111);
  CHECK(classify(1, 1, 4) == Subcase::S112);
  CHECK(classify(4, 7, 8) == Subcase::S121);
  CHECK(classify(3, 4, 6) == Subcase::S122);
  CHECK(classify(2, 3, 6) == Subcase::S123);
  CHECK(classify(5, 5, 7) == Subcase::S211);
  CHECK(classify(5, 6, 7) == Subcase::S221);
  CHECK(classify(8, 10, 12) == Subcase::S222);
  CHECK(classify(3, 3, 4) == Subcase::Degenerate);
  CHECK(classify(1, 1, 2) == Subcase::Degenerate);
  CHECK_THROWS_AS(classify(2, 1, 4), domain_error);
  CHECK_THROWS_AS(classify(1, 4, 4), domain_error);
}

TEST_CASE("display names") {
  CHECK(subcase_name(Subcase::S111) == "1.1.1");
  CHECK(subcase_name(Subcase::S222) == "2.2.2");
  CHECK(subcase_name(Subcase::Degenerate) == "degenerate");
}

TEST_CASE("the eight regions tile the parameter space") {
  // Exactly one inequality system accepts each non-degenerate (a, b, d);
  // none accepts a degenerate configuration.
  for (long d = 2; d <= 30; ++d)
    for (long a = 1; a < d; ++a)
      for (long b = a; b < d; ++b) {
        auto hits = matching_subcases(a, b, d);
        if (a == b && b == d - 1) {
          CHECK(hits.empty());
        } else {
          REQUIRE(hits.size() == 1);
          CHECK(classify(a, b, d) == hits.front());
        }
      }
}

TEST_CASE("printed branch values at small configurations") {
  CIConfig c{2, 2, 4};
  CHECK(qk(c, Subcase::S111, 0) == 2);
  CHECK(qk(c, Subcase::S111, 1) == 3);
  CHECK_THROWS_AS(qk(c, Subcase::S111, 2), domain_error);  // beyond T/2 - a
  CHECK_THROWS_AS(qk(c, Subcase::S111, -1), domain_error);
}

TEST_CASE("assembled Q for the (2,2,4) configuration") {
  QProfile qp = q_polynomial({2, 2, 4});
  CHECK(qp.subcase == Subcase::S111);
  CHECK(qp.full == IntPoly{2, 3, 2});
  CHECK(qp.half_coeffs == std::vector<mpz_class>{2, 3});
  REQUIRE(qp.regions.size() == 2);  // middle region is empty here
  CHECK(qp.regions[0].branch == 0);
  CHECK(qp.regions[1].branch == 2);
  CHECK(qp.errata.empty());
}

TEST_CASE("assembled Q for a constant-tail configuration") {
  QProfile qp = q_polynomial({5, 5, 7});
  CHECK(qp.subcase == Subcase::S211);
  CHECK(qp.full == IntPoly{2, 3, 3, 3, 3, 2});
  CHECK(qp.half_coeffs == std::vector<mpz_class>{2, 3, 3});
  CHECK(qp.errata.empty());
}

TEST_CASE("tail range collision in 2.2.1 when b = a + 1") {
  // The printed tail bound 2b-2a-2 = 0 would collide with the first range;
  // the effective ranges start after their predecessors, and the values
  // agree with the oracle either way (Q is the constant sequence of 1s).
  QProfile qp = q_polynomial({5, 6, 7});
  CHECK(qp.subcase == Subcase::S221);
  CHECK(qp.full == IntPoly{1, 1, 1, 1, 1, 1});
  REQUIRE(qp.regions.size() == 2);
  CHECK(qp.regions[0].branch == 0);
  CHECK(qp.regions[0].lo == 0);
  CHECK(qp.regions[0].hi == 0);
  CHECK(qp.regions[1].branch == 2);
  CHECK(qp.regions[1].lo == 1);
  CHECK(qp.errata.empty());
  CHECK(qk({5, 6, 7}, Subcase::S221, 0) == 1);
}

TEST_CASE("degenerate configurations have Q = 0") {
  QProfile qp = q_polynomial({3, 3, 4});
  CHECK(qp.subcase == Subcase::Degenerate);
  CHECK(qp.full.is_zero());
  CHECK(qp.half_coeffs.empty());
  CHECK(qp.regions.empty());
}

TEST_CASE("piecewise formulas match the generating function on a grid") {
  // Sweeps every configuration with d <= 30. q_polynomial throws if any k
  // is covered by zero or two branches, so this is simultaneously the
  // gap/overlap audit and the printed-formula audit.
  long checked = 0;
  for (long d = 2; d <= 30; ++d)
    for (long a = 1; a < d; ++a)
      for (long b = a; b < d; ++b) {
        QProfile qp = q_polynomial({a, b, d});
        CHECK(qp.errata.empty());
        if (!qp.errata.empty()) {
          const auto& e = qp.errata.front();
          MESSAGE("mismatch at (", e.a, ",", e.b, ",", e.d, ") k=", e.k,
                  " branch=", e.branch, " printed=", e.printed.get_str(),
                  " oracle=", e.oracle.get_str());
        }
        ++checked;
      }
  CHECK(checked > 2000);
}

TEST_CASE("constant tails equal their closed values") {
  // 2.1.1: 3(d-a-1)^2; 2.2.1: (b-a)^2; 2.2.2: (b-a)^2 + 3(d-a-1)(d-b-1).
  for (long d = 2; d <= 30; ++d)
    for (long a = 1; a < d; ++a)
      for (long b = a; b < d; ++b) {
        Subcase sc = classify(a, b, d);
        mpz_class want;
        if (sc == Subcase::S211)
          want = 3 * mpz_class(d - a - 1) * (d - a - 1);
        else if (sc == Subcase::S221)
          want = mpz_class(b - a) * (b - a);
        else if (sc == Subcase::S222)
          want = mpz_class(b - a) * (b - a) +
                 3 * mpz_class(d - a - 1) * (d - b - 1);
        else
          continue;
        QProfile qp = q_polynomial({a, b, d});
        REQUIRE(!qp.regions.empty());
        const Region& tail = qp.regions.back();
        for (long k = tail.lo; k <= tail.hi; ++k)
          CHECK(qp.full.coeff(static_cast<std::size_t>(k)) == want);
      }
  // Spot value: (8,10,12) has tail 4 + 3*3*1 = 13.
  QProfile qp = q_polynomial({8, 10, 12});
  CHECK(qp.full.coeff(static_cast<std::size_t>(qp.regions.back().lo)) == 13);
}

TEST_CASE("half coefficients mirror onto the symmetric completion") {
  for (long d = 3; d <= 20; ++d)
    for (long a = 1; a < d; ++a)
      for (long b = a; b < d; ++b) {
        if (a == b && b == d - 1) continue;
        QProfile qp = q_polynomial({a, b, d});
        long T = 3 * d - 6;
        long degQ = T - 2 * a;
        REQUIRE(qp.full.degree());
        CHECK(*qp.full.degree() == static_cast<std::size_t>(degQ));
        CHECK(qp.full.is_symmetric());
        CHECK(qp.full.shifted(static_cast<std::size_t>(a)) ==
              hp_N_ci_n2(a, b, d));
      }
}
