#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chevweil/cover.hpp"
#include "chevweil/verify.hpp"

using namespace chevweil;
using namespace chevweil::verify;

TEST_CASE("verify_cw passes on S-unit points of the quadratic cover") {
  cover::CoverSpec c = cover::make_kummer(2);
  cover::CoverPipeline pipe = cover::certify_pipeline(c);
  REQUIRE(pipe.s.has_value());

  std::vector<PointQ> pts{{Rat(4), Rat(1, 4)}, {Rat(-1), Rat(-1)}, {Rat(16), Rat(1, 16)},
                          {Rat(-8), Rat(-1, 8)}, {Rat(1, 2), Rat(2)}};
  CwReport rep = verify_cw(c, *pipe.s, pts, Int(50), &pipe.cert);
  CHECK(rep.passed());
  CHECK(rep.violations.empty());
  CHECK(rep.undetermined.empty());
  CHECK(rep.integrality_failures == 0);
  CHECK(rep.points.size() == 5);
  CHECK(rep.lifts_total >= 5);
  CHECK(rep.ram_checks > 0);
}

TEST_CASE("negative control: shrinking S exposes ramification at 2") {
  cover::CoverSpec c = cover::make_kummer(2);
  cover::CoverPipeline pipe = cover::certify_pipeline(c);

  std::vector<PointQ> pts{{Rat(-1), Rat(-1)}};
  CwReport rep = verify_cw(c, PrimeSet::infinity_only(), pts, Int(100), &pipe.cert);
  CHECK(!rep.passed());
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].p == 2);
  CHECK(rep.violations[0].point_index == 0);
  CHECK(rep.violations[0].lift_index == 0);
  CHECK(rep.violations[0].verdict == numfield::RamVerdict::Ramified);
  CHECK(rep.undetermined.empty());
}

TEST_CASE("verify_cw on a degree-one cover is vacuous") {
  auto rt = make_ring({"x", "y"});
  auto rs = make_ring({"t"});
  cover::CoverSpec cusp =
      cover::make_parametrized({"x", "y"}, {parse_poly(rt, "y^2 - x^3")},
                               {parse_poly(rs, "t^2"), parse_poly(rs, "t^3")}, 1);
  cover::CoverPipeline pipe = cover::certify_pipeline(cusp);
  REQUIRE(pipe.cert.verdict == cover::CoverCertification::Verdict::IsCover);

  std::vector<PointQ> pts{{Rat(4), Rat(8)}, {Rat(1), Rat(1)}, {Rat(0), Rat(0)}};
  CwReport rep = verify_cw(cusp, *pipe.s, pts, Int(10), &pipe.cert);
  CHECK(rep.passed());
  CHECK(rep.violations.empty());
  CHECK(rep.lifts_total == 3);
}

TEST_CASE("verify_cw preconditions") {
  cover::CoverSpec c = cover::make_kummer(2);
  cover::CoverPipeline pipe = cover::certify_pipeline(c);
  std::vector<PointQ> ok{{Rat(4), Rat(1, 4)}};

  CHECK_THROWS_AS(verify_cw(c, *pipe.s, ok, Int(1), &pipe.cert), std::invalid_argument);
  CHECK_THROWS_AS(verify_cw(c, *pipe.s, ok, Int(2000000), &pipe.cert), std::invalid_argument);
  // (3, 1/3) is not {2}-integral
  CHECK_THROWS_AS(verify_cw(c, *pipe.s, {{Rat(3), Rat(1, 3)}}, Int(50), &pipe.cert),
                  std::invalid_argument);

  // a cover that fails certification cannot be verified
  auto rt = make_ring({"x", "y"});
  auto rs = make_ring({"t"});
  cover::CoverSpec nodal = cover::make_parametrized(
      {"x", "y"}, {parse_poly(rt, "y^2 - x^3 - x^2")},
      {parse_poly(rs, "t^2 - 1"), parse_poly(rs, "t^3 - t")}, 1);
  CHECK_THROWS_AS(verify_cw(nodal, PrimeSet::infinity_only(), {{Rat(3), Rat(2)}}, Int(50)),
                  std::invalid_argument);
}

TEST_CASE("verify_cw counts coefficient integrality failures") {
  // y^2 + u/3 puts a denominator 3 into every dependence
  auto r = make_ring({"u", "v"});
  cover::VarietyPresentation target(r, {parse_poly(r, "u*v - 1")}, {});
  UPoly f(MPoly::zero(r));
  f.set_coeff(2, MPoly::constant(r, Rat(1)));
  f.set_coeff(0, parse_poly(r, "1/3*u"));
  cover::CoverSpec bad = cover::make_polynomial_in_y(target, "y", f);

  cover::CoverCertification cert;
  cert.verdict = cover::CoverCertification::Verdict::IsCover;
  PrimeSet s({Int(2)});
  CwReport rep = verify_cw(bad, s, {{Rat(4), Rat(1, 4)}}, Int(10), &cert);
  CHECK(rep.integrality_failures == 1);
  CHECK(!rep.passed());
}

TEST_CASE("witnesses come out sorted") {
  cover::CoverSpec c = cover::make_kummer(2);
  cover::CoverPipeline pipe = cover::certify_pipeline(c);
  // two points whose lifts ramify at different primes: sqrt(-1) at 2, sqrt(3) at 2 and 3
  std::vector<PointQ> pts{{Rat(3), Rat(1, 3)}, {Rat(-1), Rat(-1)}};
  PrimeSet s({Int(3)});
  CwReport rep = verify_cw(c, s, pts, Int(20), &pipe.cert);
  REQUIRE(rep.violations.size() >= 2);
  for (size_t i = 1; i < rep.violations.size(); ++i) {
    const auto& a = rep.violations[i - 1];
    const auto& b = rep.violations[i];
    CHECK((a.point_index < b.point_index ||
           (a.point_index == b.point_index && a.lift_index <= b.lift_index)));
  }
  // sqrt(3): 2 | disc(x^2 - 3) = 12, and 3 is excused by S
  CHECK(rep.violations[0].point_index == 0);
  CHECK(rep.violations[0].p == 2);
  // sqrt(-1) ramifies at 2 only
  CHECK(rep.violations.back().point_index == 1);
  CHECK(rep.violations.back().p == 2);
}

TEST_CASE("cusp divisibility sweep") {
  CuspReport rep = cusp_divisibility_check(Int(10));
  CHECK(rep.passed());
  CHECK(rep.all_divide);
  CHECK(rep.matches_square_family);
  std::vector<std::pair<Int, Int>> want{{Int(0), Int(0)}, {Int(1), Int(-1)}, {Int(1), Int(1)},
                                        {Int(4), Int(-8)}, {Int(4), Int(8)},
                                        {Int(9), Int(-27)}, {Int(9), Int(27)}};
  std::sort(rep.points.begin(), rep.points.end());
  CHECK(rep.points == want);

  CuspReport one = cusp_divisibility_check(Int(1));
  CHECK(one.points.size() == 3);
  CHECK(one.passed());

  CHECK_THROWS_AS(cusp_divisibility_check(Int(0)), std::invalid_argument);
}

TEST_CASE("reduction stays fixed-point-free mod good primes") {
  cover::CoverSpec c = cover::galois_closure(cover::make_kummer(2));
  PrimeSet s({Int(2)});

  ReductionReport r5 = reduction_fixed_point_check(c, s, Int(5));
  CHECK(r5.passed());
  CHECK(r5.points_checked == 4);  // the hyperbola has p - 1 points over F_p

  ReductionReport r7 = reduction_fixed_point_check(c, s, Int(7));
  CHECK(r7.passed());
  CHECK(r7.points_checked == 6);

  // the cyclotomic closure only has points where Phi_3 has roots: 1 mod 3
  cover::CoverSpec k3 = cover::galois_closure(cover::make_kummer(3));
  PrimeSet s3({Int(3)});
  CHECK(reduction_fixed_point_check(k3, s3, Int(5)).points_checked == 0);
  ReductionReport r13 = reduction_fixed_point_check(k3, s3, Int(13));
  CHECK(r13.passed());
  CHECK(r13.points_checked == 24);  // (p - 1) * 2 roots of Phi_3
}

TEST_CASE("reduction check caps at the sample budget") {
  cover::CoverSpec c = cover::galois_closure(cover::make_kummer(2));
  PrimeSet s({Int(2)});
  ReductionReport r = reduction_fixed_point_check(c, s, Int(101), 10);
  CHECK(r.points_checked == 10);
  CHECK(r.passed());
}

TEST_CASE("reduction check finds genuine fixed points") {
  // t -> -t on A^1 fixes 0 over every F_p
  auto r = make_ring({"t"});
  cover::VarietyPresentation src(r, {}, {});
  cover::GroupAction act;
  act.elements.push_back({"id", {parse_poly(r, "t")}});
  act.elements.push_back({"g", {parse_poly(r, "-t")}});
  cover::CoverSpec c{src, src, {parse_poly(r, "t^2")}, 2, act, cover::Family::Generic, 0, {}};

  ReductionReport rep = reduction_fixed_point_check(c, PrimeSet::infinity_only(), Int(5));
  CHECK(!rep.passed());
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->first == "g");
  CHECK(rep.witness->second == std::vector<uint64_t>{0});
}

TEST_CASE("reduction check preconditions") {
  cover::CoverSpec c = cover::galois_closure(cover::make_kummer(2));
  PrimeSet s({Int(2)});
  CHECK_THROWS_AS(reduction_fixed_point_check(c, s, Int(2)), std::invalid_argument);
  CHECK_THROWS_AS(reduction_fixed_point_check(c, s, Int(4)), std::invalid_argument);
  CHECK_THROWS_AS(reduction_fixed_point_check(c, s, Int(1048583)), std::invalid_argument);

  cover::CoverSpec bare = cover::make_kummer(2);
  CHECK_THROWS_AS(reduction_fixed_point_check(bare, s, Int(5)), std::invalid_argument);
}
