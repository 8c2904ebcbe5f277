#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chevweil/cover.hpp"
#include "chevweil/lift.hpp"

using namespace chevweil;
using namespace chevweil::lift;

static UPolyQ up(std::vector<Rat> asc) { return upoly_q(std::move(asc)); }

static cover::CoverSpec cusp_spec() {
  auto rt = make_ring({"x", "y"});
  auto rs = make_ring({"t"});
  return cover::make_parametrized({"x", "y"}, {parse_poly(rt, "y^2 - x^3")},
                                  {parse_poly(rs, "t^2"), parse_poly(rs, "t^3")}, 1);
}

static cover::CoverSpec sqrt_spec() {
  auto r = make_ring({"u", "v"});
  cover::VarietyPresentation target(r, {parse_poly(r, "u*v - 1")}, {});
  UPoly f(MPoly::zero(r));
  f.set_coeff(2, MPoly::constant(r, Rat(1)));
  f.set_coeff(0, -MPoly::variable(r, 0));
  return cover::make_polynomial_in_y(target, "y", f);
}

TEST_CASE("S-integrality of rational points") {
  cover::CoverSpec k2 = cover::make_kummer(2);
  PrimeSet s2({Int(2)});
  CHECK(is_s_integral(k2.target, {Rat(4), Rat(1, 4)}, s2));
  CHECK(!is_s_integral(k2.target, {Rat(4), Rat(1, 4)}, PrimeSet::infinity_only()));
  CHECK(!is_s_integral(k2.target, {Rat(3), Rat(1, 3)}, s2));
  CHECK(is_s_integral(k2.target, {Rat(-1), Rat(-1)}, PrimeSet::infinity_only()));

  CHECK_THROWS_AS(is_s_integral(k2.target, {Rat(2), Rat(3)}, s2), std::invalid_argument);
  CHECK_THROWS_AS(is_s_integral(k2.target, {Rat(2)}, s2), std::invalid_argument);
}

TEST_CASE("S-integrality against a boundary divisor") {
  // A^2 minus V(x): reduction mod p falls into the boundary iff p | x
  auto r = make_ring({"x", "y"});
  cover::VarietyPresentation w(r, {}, {parse_poly(r, "x")});
  CHECK(is_s_integral(w, {Rat(2), Rat(5)}, PrimeSet({Int(2)})));
  CHECK(!is_s_integral(w, {Rat(2), Rat(5)}, PrimeSet::infinity_only()));
  CHECK(is_s_integral(w, {Rat(1), Rat(0)}, PrimeSet::infinity_only()));
  CHECK(is_s_integral(w, {Rat(1, 2), Rat(1)}, PrimeSet({Int(2)})));
  CHECK_THROWS_AS(is_s_integral(w, {Rat(0), Rat(1)}, PrimeSet({Int(2)})),
                  std::invalid_argument);

  // two boundary generators: only their gcd's support matters
  cover::VarietyPresentation w2(r, {}, {parse_poly(r, "x"), parse_poly(r, "y")});
  CHECK(is_s_integral(w2, {Rat(2), Rat(3)}, PrimeSet::infinity_only()));
  CHECK(!is_s_integral(w2, {Rat(2), Rat(4)}, PrimeSet::infinity_only()));
}

TEST_CASE("split_power_relation: exact factor tables") {
  auto pieces = [](const Rat& u, unsigned n) {
    std::vector<UPolyQ> out;
    for (auto& [f, known] : split_power_relation(u, n)) out.push_back(f);
    return out;
  };

  CHECK(pieces(Rat(4), 2) ==
        std::vector<UPolyQ>{up({Rat(-2), Rat(1)}), up({Rat(2), Rat(1)})});
  CHECK(pieces(Rat(-1), 2) == std::vector<UPolyQ>{up({Rat(1), Rat(0), Rat(1)})});
  CHECK(pieces(Rat(2), 2) == std::vector<UPolyQ>{up({Rat(-2), Rat(0), Rat(1)})});

  // x^4 - 16 = (x - 2)(x + 2)(x^2 + 4)
  CHECK(pieces(Rat(16), 4) ==
        std::vector<UPolyQ>{up({Rat(-2), Rat(1)}), up({Rat(2), Rat(1)}),
                            up({Rat(4), Rat(0), Rat(1)})});

  // x^6 - 64 = (x - 2)(x + 2)(x^2 - 2x + 4)(x^2 + 2x + 4)
  CHECK(pieces(Rat(64), 6) ==
        std::vector<UPolyQ>{up({Rat(-2), Rat(1)}), up({Rat(2), Rat(1)}),
                            up({Rat(4), Rat(-2), Rat(1)}), up({Rat(4), Rat(2), Rat(1)})});

  // the biquadratic identity: x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2)
  CHECK(pieces(Rat(-4), 4) ==
        std::vector<UPolyQ>{up({Rat(2), Rat(-2), Rat(1)}), up({Rat(2), Rat(2), Rat(1)})});

  // rational u: x^2 - 1/4 = (x - 1/2)(x + 1/2)
  CHECK(pieces(Rat(1, 4), 2) ==
        std::vector<UPolyQ>{up({Rat(-1, 2), Rat(1)}), up({Rat(1, 2), Rat(1)})});

  CHECK_THROWS_AS(split_power_relation(Rat(1), 0), std::invalid_argument);
  CHECK_THROWS_AS(split_power_relation(Rat(0), 3), std::invalid_argument);
}

TEST_CASE("split_power_relation: product and degree invariants") {
  for (const Rat& u : {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3), Rat(8), Rat(16), Rat(-27),
                       Rat(64), Rat(1, 2), Rat(-4), Rat(81)}) {
    for (unsigned n = 1; n <= 6; ++n) {
      auto fs = split_power_relation(u, n);
      UPolyQ prod = up({Rat(1)});
      int degsum = 0;
      for (const auto& [f, known] : fs) {
        CHECK(f.lead() == 1);
        degsum += f.degree();
        prod = prod * f;
        if (f.degree() <= 3) CHECK(known);
      }
      UPolyQ want;
      want.set_coeff(0, -u);
      want.set_coeff(n, 1);
      CHECK(prod == want);
      CHECK(degsum == (int)n);
    }
  }
}

TEST_CASE("kummer lifts: rational fiber") {
  cover::CoverSpec k2 = cover::make_kummer(2);
  auto lifts = lift_point(k2, {Rat(4), Rat(1, 4)});
  REQUIRE(lifts.size() == 2);
  CHECK(lifts[0].rational == PointQ{Rat(2), Rat(1, 2)});
  CHECK(lifts[1].rational == PointQ{Rat(-2), Rat(-1, 2)});
  CHECK(lifts[0].field_degree() == 1);
  CHECK(!lifts[0].minpoly.may_be_reducible);
}

TEST_CASE("kummer lifts: quadratic fiber") {
  cover::CoverSpec k2 = cover::make_kummer(2);
  auto lifts = lift_point(k2, {Rat(-1), Rat(-1)});
  REQUIRE(lifts.size() == 1);
  const LiftedPoint& lp = lifts[0];
  CHECK(lp.dependence == up({Rat(1), Rat(0), Rat(1)}));
  CHECK(lp.minpoly.coeffs == std::vector<Int>{Int(1), Int(0), Int(1)});
  CHECK(!lp.rational.has_value());
  CHECK(lp.field_degree() == 2);
  // coordinates: t = theta, s = -theta
  CHECK(lp.coords[0] == up({Rat(0), Rat(1)}));
  CHECK(lp.coords[1] == up({Rat(0), Rat(-1)}));
}

TEST_CASE("kummer lifts satisfy the source relations symbolically") {
  for (unsigned n : {2u, 3u, 4u}) {
    cover::CoverSpec c = cover::make_kummer(n);
    for (const Rat& u : {Rat(8), Rat(-2), Rat(16), Rat(1, 4)}) {
      auto lifts = lift_point(c, {u, Rat(1) / u});
      int degsum = 0;
      for (const auto& lp : lifts) {
        degsum += lp.field_degree();
        const UPolyQ& f = lp.dependence;
        // t*s = 1 mod the dependence
        UPolyQ ts = upoly_divmod(lp.coords[0] * lp.coords[1], f).second;
        CHECK(ts == up({Rat(1)}));
        // t^n = u mod the dependence
        UPolyQ tn = lp.coords[0];
        for (unsigned i = 1; i < n; ++i) tn = upoly_divmod(tn * lp.coords[0], f).second;
        CHECK(tn == up({u}));
      }
      CHECK(degsum == (int)fiber_cardinality(c, std::vector<Rat>{u, Rat(1) / u}));
    }
  }
}

TEST_CASE("polynomial-in-y lifts") {
  cover::CoverSpec c = sqrt_spec();

  auto split = lift_point(c, {Rat(4), Rat(1, 4)});
  REQUIRE(split.size() == 2);
  CHECK(split[0].rational == PointQ{Rat(4), Rat(1, 4), Rat(2)});
  CHECK(split[1].rational == PointQ{Rat(4), Rat(1, 4), Rat(-2)});

  auto inert = lift_point(c, {Rat(2), Rat(1, 2)});
  REQUIRE(inert.size() == 1);
  CHECK(inert[0].dependence == up({Rat(-2), Rat(0), Rat(1)}));
  CHECK(!inert[0].rational.has_value());
  // the non-fiber coordinates ride along as constants
  CHECK(inert[0].coords[0] == up({Rat(2)}));
  CHECK(inert[0].coords[1] == up({Rat(1, 2)}));
  CHECK(inert[0].coords[2] == up({Rat(0), Rat(1)}));
}

TEST_CASE("parametrized lifts") {
  cover::CoverSpec c = cusp_spec();

  auto at48 = lift_point(c, {Rat(4), Rat(8)});
  REQUIRE(at48.size() == 1);
  CHECK(at48[0].rational == PointQ{Rat(2)});
  // the integral dependence comes from the lowest-degree coordinate
  CHECK(at48[0].dependence == up({Rat(-4), Rat(0), Rat(1)}));
  CHECK(at48[0].minpoly.coeffs == std::vector<Int>{Int(-2), Int(1)});

  CHECK(lift_point(c, {Rat(0), Rat(0)})[0].rational == PointQ{Rat(0)});
  CHECK(lift_point(c, {Rat(1), Rat(-1)})[0].rational == PointQ{Rat(-1)});
  CHECK(lift_point(c, {Rat(1, 4), Rat(1, 8)})[0].rational == PointQ{Rat(1, 2)});
}

TEST_CASE("lift preconditions") {
  cover::CoverSpec k2 = cover::make_kummer(2);
  CHECK_THROWS_AS(lift_point(k2, {Rat(2), Rat(3)}), std::invalid_argument);
  CHECK_THROWS_AS(lift_point(k2, {Rat(2)}), std::invalid_argument);

  auto r = make_ring({"x"});
  cover::VarietyPresentation src(r, {}, {});
  cover::CoverSpec gen{src, src, {parse_poly(r, "x^2")}, 2, {}, cover::Family::Generic, 0, {}};
  CHECK_THROWS_AS(lift_point(gen, {Rat(4)}), std::domain_error);

  // boundary points are a domain error, not a bad argument
  auto ru = make_ring({"u"});
  cover::VarietyPresentation punct(ru, {}, {parse_poly(ru, "u")});
  UPoly f(MPoly::zero(ru));
  f.set_coeff(2, MPoly::constant(ru, Rat(1)));
  f.set_coeff(0, -MPoly::variable(ru, 0));
  cover::CoverSpec sq = cover::make_polynomial_in_y(punct, "y", f);
  CHECK_THROWS_AS(lift_point(sq, {Rat(0)}), std::domain_error);
  CHECK(lift_point(sq, {Rat(9)}).size() == 2);
}

TEST_CASE("lift integrality") {
  cover::CoverSpec k2 = cover::make_kummer(2);
  PrimeSet s2({Int(2)});

  auto lifts = lift_point(k2, {Rat(4), Rat(1, 4)});
  CHECK(lift_integrality_report(k2, {Rat(4), Rat(1, 4)}, s2, lifts) ==
        std::vector<bool>{true, true});
  CHECK_THROWS_AS(
      lift_integrality_report(k2, {Rat(4), Rat(1, 4)}, PrimeSet::infinity_only(), lifts),
      std::invalid_argument);

  auto in1 = lift_point(k2, {Rat(-1), Rat(-1)});
  CHECK(lift_is_s_integral(in1[0], PrimeSet::infinity_only()));

  // a defining polynomial with a denominator off S fails the lift check
  auto r = make_ring({"u", "v"});
  cover::VarietyPresentation target(r, {parse_poly(r, "u*v - 1")}, {});
  UPoly f(MPoly::zero(r));
  f.set_coeff(2, MPoly::constant(r, Rat(1)));
  f.set_coeff(0, parse_poly(r, "1/3*u"));
  cover::CoverSpec bad = cover::make_polynomial_in_y(target, "y", f);
  auto blifts = lift_point(bad, {Rat(4), Rat(1, 4)});
  REQUIRE(blifts.size() == 1);
  CHECK(!lift_is_s_integral(blifts[0], s2));
  CHECK(lift_is_s_integral(blifts[0], PrimeSet({Int(2), Int(3)})));
}

TEST_CASE("lift printing") {
  cover::CoverSpec k2 = cover::make_kummer(2);
  auto rational = lift_point(k2, {Rat(4), Rat(1, 4)});
  CHECK(lifted_point_str(rational[0]) == "(2, 1/2)");
  auto quad = lift_point(k2, {Rat(-1), Rat(-1)});
  CHECK(lifted_point_str(quad[0]) == "theta with theta^2 + 1 = 0");
}
