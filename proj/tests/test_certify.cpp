#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chevweil/certify.hpp"
#include "chevweil/mpoly.hpp"

using namespace chevweil;
using certify::Certificate;
using certify::find_certificate;

TEST_CASE("ideal construction validates generators") {
  auto r = make_ring({"t", "s"});
  CHECK_NOTHROW(certify::Ideal(r, {parse_poly(r, "t*s - 1")}));
  CHECK_THROWS_AS(certify::Ideal(r, {MPoly::zero(r)}), std::invalid_argument);
  auto other = make_ring({"x"});
  CHECK_THROWS_AS(certify::Ideal(r, {parse_poly(other, "x")}), std::invalid_argument);
}

TEST_CASE("unit certificate on the punctured hyperbola") {
  // 1 in (ts - 1, -2t, -2s): s * (-2t)/(-2) = ts = 1 + (ts - 1)
  auto r = make_ring({"t", "s"});
  std::vector<MPoly> targets{MPoly::constant(r, Rat(1))};
  std::vector<MPoly> gens{parse_poly(r, "t*s - 1"), parse_poly(r, "-2*t"),
                          parse_poly(r, "-2*s")};
  auto c = find_certificate(targets, gens);
  REQUIRE(c.has_value());
  CHECK(c->N == 1);
  CHECK(certify::check_certificate(*c));

  PrimeSet s = certify::denominator_primes(*c);
  CHECK(s.includes_infinity());
  CHECK(s.primes() == std::set<Int>{Int(2)});
}

TEST_CASE("redundant generators never add denominators") {
  auto r = make_ring({"t", "s"});
  std::vector<MPoly> targets{MPoly::constant(r, Rat(1))};
  std::vector<MPoly> gens{parse_poly(r, "t*s - 1"), parse_poly(r, "-2*t"),
                          parse_poly(r, "-2*s"), parse_poly(r, "t*(t*s - 1)")};
  auto c = find_certificate(targets, gens);
  REQUIRE(c.has_value());
  CHECK(certify::check_certificate(*c));
  CHECK(certify::denominator_primes(*c).subset_of(PrimeSet({Int(2)})));
}

TEST_CASE("radical membership needs a power") {
  auto r = make_ring({"x"});
  auto c = find_certificate({parse_poly(r, "x")}, {parse_poly(r, "x^2")});
  REQUIRE(c.has_value());
  CHECK(c->N == 2);
  CHECK(certify::check_certificate(*c));
  CHECK(certify::denominator_primes(*c).empty_finite());
}

TEST_CASE("no certificate when the locus is nonempty") {
  // V(x) is a point of A^1, so 1 has no power in (x)
  auto r = make_ring({"x"});
  CHECK(!find_certificate({MPoly::constant(r, Rat(1))}, {parse_poly(r, "x")}));
  // x not in rad(y) either
  auto r2 = make_ring({"x", "y"});
  CHECK(!find_certificate({parse_poly(r2, "x")}, {parse_poly(r2, "y")}));
}

TEST_CASE("homogeneous membership at degree one") {
  auto r = make_ring({"x", "y"});
  auto c = find_certificate({parse_poly(r, "x")}, {parse_poly(r, "x + y"), parse_poly(r, "y")});
  REQUIRE(c.has_value());
  CHECK(c->N == 1);
  CHECK(certify::check_certificate(*c));
  for (const auto& row : c->coeffs)
    for (const auto& a : row) CHECK(a.total_degree() <= 0);
}

TEST_CASE("check_certificate rejects tampering") {
  auto r = make_ring({"t", "s"});
  auto c = find_certificate({MPoly::constant(r, Rat(1))},
                            {parse_poly(r, "t*s - 1"), parse_poly(r, "-2*t")});
  REQUIRE(c.has_value());
  Certificate bad = *c;
  bad.coeffs[0][0] += MPoly::constant(r, Rat(1));
  CHECK(!certify::check_certificate(bad));

  // a power bump changes h^N whenever h is not idempotent
  auto rx = make_ring({"x"});
  auto cx = find_certificate({parse_poly(rx, "x")}, {parse_poly(rx, "x^2")});
  REQUIRE(cx.has_value());
  REQUIRE(cx->N == 2);
  Certificate badx = *cx;
  badx.N += 1;
  CHECK(!certify::check_certificate(badx));
}

TEST_CASE("certificates reduce mod good primes and refuse bad ones") {
  auto r = make_ring({"t", "s"});
  auto c = find_certificate({MPoly::constant(r, Rat(1))},
                            {parse_poly(r, "t*s - 1"), parse_poly(r, "-2*t"),
                             parse_poly(r, "-2*s")});
  REQUIRE(c.has_value());
  for (long p : {3, 5, 7, 11, 97}) CHECK(certify::reduce_certificate_mod_p(*c, Int(p)));
  CHECK_THROWS_AS(certify::reduce_certificate_mod_p(*c, Int(2)), std::domain_error);
}

TEST_CASE("deeper powers within bounds") {
  // x^2 is not in (x^3), but (x^2)^2 = x * x^3 is
  auto r = make_ring({"x"});
  auto c = find_certificate({parse_poly(r, "x^2")}, {parse_poly(r, "x^3")});
  REQUIRE(c.has_value());
  CHECK(c->N == 2);
  CHECK(certify::check_certificate(*c));
}

TEST_CASE("bounds genuinely cut the search off") {
  auto r = make_ring({"x"});
  // x^N in (x^5) needs N >= 5; max_N 3 cannot reach it
  CHECK(!find_certificate({parse_poly(r, "x")}, {parse_poly(r, "x^5")}, {3, 6}));
  CHECK(find_certificate({parse_poly(r, "x")}, {parse_poly(r, "x^5")}, {5, 6}).has_value());
}
