#include <doctest.h>

#include <string>
#include <vector>

#include "milnorhp/errors.hpp"
#include "milnorhp/mpoly.hpp"
#include "milnorhp/parser.hpp"

using namespace milnorhp;

namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};

Monomial mono(std::initializer_list<int> exps) {
  Monomial m;
  std::size_t i = 0;
  for (int e : exps) {
    m.e[i++] = static_cast<std::uint16_t>(e);
    m.deg += static_cast<std::uint32_t>(e);
  }
  return m;
}

MPoly P(const std::string& s) { return parse_poly(s, kXYZ); }

}  // namespace

TEST_CASE("monomial arithmetic") {
  Monomial a = mono({2, 1, 0});
  Monomial b = mono({1, 0, 3});
  CHECK(mono_mul(a, b) == mono({3, 1, 3}));
  CHECK(mono_mul(a, b).deg == 7);
  CHECK(mono_divides(a, mono_mul(a, b)));
  CHECK_FALSE(mono_divides(b, a));
  CHECK(mono_div(mono_mul(a, b), b) == a);
  CHECK(mono_lcm(a, b) == mono({2, 1, 3}));
  CHECK(mono_lcm(a, b).deg == 6);
  CHECK_FALSE(mono_coprime(a, b));
  CHECK(mono_coprime(mono({2, 0, 0}), mono({0, 1, 3})));
}

TEST_CASE("graded reverse lexicographic order") {
  MonomialOrder o = MonomialOrder::degrevlex(3);
  // Degree dominates.
  CHECK(o.cmp(mono({3, 0, 0}), mono({1, 1, 0})) > 0);
  // Within degree 2: x^2 > xy > y^2 > xz > yz > z^2.
  std::vector<Monomial> desc = {mono({2, 0, 0}), mono({1, 1, 0}),
                                mono({0, 2, 0}), mono({1, 0, 1}),
                                mono({0, 1, 1}), mono({0, 0, 2})};
  for (std::size_t i = 0; i + 1 < desc.size(); ++i) {
    CHECK(o.cmp(desc[i], desc[i + 1]) > 0);
    CHECK(o.cmp(desc[i + 1], desc[i]) < 0);
  }
  CHECK(o.cmp(desc[2], desc[2]) == 0);

  SUBCASE("permuted ranking reverses the picture") {
    // z > y > x: now z^2 is the largest degree-2 monomial.
    MonomialOrder p = MonomialOrder::degrevlex_permuted(3, {2, 1, 0});
    CHECK(p.cmp(mono({0, 0, 2}), mono({2, 0, 0})) > 0);
    CHECK(p.cmp(mono({0, 1, 1}), mono({1, 1, 0})) > 0);
  }

  SUBCASE("elimination block beats total degree") {
    // Front block {z}: any positive power of z beats any z-free monomial.
    MonomialOrder e = MonomialOrder::block_elim(3, 1, {2, 0, 1});
    CHECK(e.cmp(mono({0, 0, 1}), mono({5, 5, 0})) > 0);
    CHECK(e.cmp(mono({1, 0, 1}), mono({0, 0, 1})) > 0);  // ties on z, then x
    CHECK_THROWS_AS(MonomialOrder::block_elim(3, 3, {0, 1, 2}), domain_error);
    CHECK_THROWS_AS(MonomialOrder::degrevlex_permuted(3, {0, 1, 1}),
                    domain_error);
  }
}

TEST_CASE("polynomial construction and arithmetic") {
  MPoly x = P("x"), y = P("y");
  CHECK((x + y) * (x - y) == P("x^2-y^2"));
  CHECK((x + y) * (x + y) == P("x^2+2*x*y+y^2"));
  CHECK((x - x).is_zero());
  CHECK(P("0").is_zero());
  CHECK(P("x^3+x*y^2").derivative(0) == P("3*x^2+y^2"));
  CHECK(P("x^3+x*y^2").derivative(2).is_zero());
  CHECK(P("x^2+y^2").is_homogeneous());
  CHECK_FALSE(P("x^2+y").is_homogeneous());
  CHECK(P("x^2*z+y").total_degree() == 3);
  CHECK(MPoly(3, MonomialOrder::degrevlex(3)).total_degree() == -1);
  CHECK(P("2*x+4*y").monic() == P("x+2*y"));
  CHECK(P("x+y").scaled(mpq_class(3, 2)) == P("3/2*x+3/2*y"));

  SUBCASE("reordering preserves the term set") {
    MPoly q = P("x^2+3*y*z-z^2");
    MPoly r = q.reordered(MonomialOrder::degrevlex_permuted(3, {2, 1, 0}));
    CHECK(r.reordered(q.order()) == q);
    CHECK(r.leading().m == mono({0, 0, 2}));  // -z^2 leads under z > y > x
  }

  SUBCASE("printing") {
    CHECK(P("x^2-2*x*y+y^2").to_string(kXYZ) == "x^2-2*x*y+y^2");
    CHECK(P("-x").to_string(kXYZ) == "-x");
    CHECK(P("2*x*y^3").to_string(kXYZ) == "2*x*y^3");
    CHECK(P("x-x").to_string(kXYZ) == "0");
    CHECK(P("1/2*x").to_string(kXYZ) == "1/2*x");
  }
}

TEST_CASE("parser grammar") {
  SUBCASE("juxtaposition multiplies") {
    CHECK(P("3x^2y") == P("3*x^2*y"));
    CHECK(P("2 x y") == P("2*x*y"));
    CHECK(P("x y^2 z") == P("x*y^2*z"));
    CHECK(P("(x+y)(x-y)") == P("x^2-y^2"));
    CHECK(P("2(x+y)") == P("2*x+2*y"));
    CHECK(P("1/2x^2") == P("x^2").scaled(mpq_class(1, 2)));
  }
  SUBCASE("signs and precedence") {
    CHECK(P("-x+y") == P("y") - P("x"));
    CHECK(P("+x") == P("x"));
    CHECK(P("x-2*y+3*z") == P("x") - P("2y") + P("3z"));
    CHECK(P("x^2^3") == P("x^6"));  // repeated ^ applies left to right
    CHECK(P("(x^2+y^2)^2+(y^2+z^2)^2") ==
          P("x^4+2x^2y^2+2y^4+2y^2z^2+z^4"));
  }
  SUBCASE("rejects malformed input") {
    CHECK_THROWS_AS(P("x+"), parse_error);
    CHECK_THROWS_AS(P("(x"), parse_error);
    CHECK_THROWS_AS(P("x)"), parse_error);
    CHECK_THROWS_AS(P("q+x"), parse_error);
    CHECK_THROWS_AS(P("x^"), parse_error);
    CHECK_THROWS_AS(P("1/0"), parse_error);
    CHECK_THROWS_AS(P("x^999999999999"), parse_error);
    try {
      P("x*)");
    } catch (const parse_error& e) {
      CHECK(e.pos == 2);
    }
  }
  SUBCASE("indexed variable names") {
    std::vector<std::string> vars = {"x0", "x1", "x2"};
    MPoly p = parse_poly("x0^2+x1 x2", vars);
    CHECK(p.terms().size() == 2);
    CHECK(p.leading().m == mono({2, 0, 0}));
  }
}

TEST_CASE("variable inference from the expression") {
  CHECK(infer_vars("y^2*z - x^3") == std::vector<std::string>{"x", "y", "z"});
  CHECK(infer_vars("z^2") == std::vector<std::string>{"z"});
  CHECK(infer_vars("x^5+y^5+y*z*(x^3+z^2*w)") ==
        std::vector<std::string>{"x", "y", "z", "w"});
  CHECK(infer_vars("x2^2+x0 x1") ==
        std::vector<std::string>{"x0", "x1", "x2"});
  CHECK_THROWS_AS(infer_vars("x0+y"), domain_error);
  CHECK_THROWS_AS(infer_vars("3+4"), domain_error);
  CHECK_THROWS_AS(infer_vars("a+b"), parse_error);
}
