#include "chevweil/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chevweil {
namespace verify {

namespace {

bool witness_less(const RamWitness& a, const RamWitness& b) {
  if (a.point_index != b.point_index) return a.point_index < b.point_index;
  if (a.lift_index != b.lift_index) return a.lift_index < b.lift_index;
  return a.p < b.p;
}

}  // namespace

CwReport verify_cw(const cover::CoverSpec& c, const PrimeSet& s,
                   const std::vector<PointQ>& points, const Int& prime_budget,
                   const cover::CoverCertification* cert) {
  cover::CoverCertification local;
  if (!cert) {
    local = cover::certify_pipeline(c).cert;
    cert = &local;
  }
  if (cert->verdict != cover::CoverCertification::Verdict::IsCover)
    throw std::invalid_argument("verify_cw: cover is not certified");
  for (const auto& pt : points)
    if (!lift::is_s_integral(c.target, pt, s))
      throw std::invalid_argument("verify_cw: input point is not S-integral");
  if (prime_budget < 2 || prime_budget > 1000000)
    throw std::invalid_argument("verify_cw: prime budget out of range");

  std::vector<Int> budget_primes = primes_up_to(mpz_get_ui(prime_budget.get_mpz_t()));

  CwReport rep;
  rep.s = s;
  for (size_t i = 0; i < points.size(); ++i) {
    PointResult pr;
    pr.point = points[i];
    pr.lifts = lift::lift_point(c, points[i]);
    rep.lifts_total += pr.lifts.size();
    for (size_t j = 0; j < pr.lifts.size(); ++j) {
      const auto& lp = pr.lifts[j];
      bool integral = lift::lift_is_s_integral(lp, s);
      pr.lift_integral.push_back(integral);
      if (!integral) ++rep.integrality_failures;

      std::set<Int> to_test;
      for (const auto& q : budget_primes)
        if (!s.contains(q)) to_test.insert(q);
      // ramified primes divide the discriminant, so adding its support
      // makes the test complete for this lift
      PrimeSet disc_primes = numfield::poly_discriminant_primes(lp.minpoly);
      for (const auto& q : disc_primes.primes())
        if (!s.contains(q)) to_test.insert(q);

      for (const auto& q : to_test) {
        ++rep.ram_checks;
        numfield::RamResult rr = numfield::ramification_verdict(lp.minpoly, q);
        if (rr.verdict == numfield::RamVerdict::Ramified) {
          rep.violations.push_back({i, j, q, rr.verdict, rr.detail});
        } else if (rr.verdict == numfield::RamVerdict::Undetermined) {
          rep.undetermined.push_back({i, j, q, rr.verdict, rr.detail});
        }
      }
    }
    rep.points.push_back(std::move(pr));
  }
  std::sort(rep.violations.begin(), rep.violations.end(), witness_less);
  std::sort(rep.undetermined.begin(), rep.undetermined.end(), witness_less);
  return rep;
}

CuspReport cusp_divisibility_check(const Int& bound) {
  if (bound < 1) throw std::invalid_argument("cusp_divisibility_check: bound must be >= 1");
  CuspReport rep;
  rep.bound = bound;
  rep.all_divide = true;
  // y^2 = x^3 forces x >= 0; negative x has no real square root
  for (Int x = 0; x <= bound; ++x) {
    Int cube = x * x * x;
    if (mpz_perfect_square_p(cube.get_mpz_t()) == 0) continue;
    Int y;
    mpz_sqrt(y.get_mpz_t(), cube.get_mpz_t());
    std::vector<Int> ys;
    if (y == 0) {
      ys.push_back(0);
    } else {
      ys.push_back(-y);
      ys.push_back(y);
    }
    for (const Int& yy : ys) {
      rep.points.emplace_back(x, yy);
      // 0 | 0 at the cusp, else plain divisibility
      bool div = (x == 0) ? (yy == 0) : (yy % x == 0);
      if (!div) rep.all_divide = false;
    }
  }
  std::vector<std::pair<Int, Int>> expected;
  for (Int t = 0; t * t <= bound; ++t) {
    if (t == 0) {
      expected.emplace_back(0, 0);
      continue;
    }
    expected.emplace_back(t * t, -t * t * t);
    expected.emplace_back(t * t, t * t * t);
  }
  std::sort(expected.begin(), expected.end());
  std::vector<std::pair<Int, Int>> found = rep.points;
  std::sort(found.begin(), found.end());
  rep.matches_square_family = (found == expected);
  return rep;
}

ReductionReport reduction_fixed_point_check(const cover::CoverSpec& c, const PrimeSet& s,
                                            const Int& p, size_t sample) {
  if (!is_prime(p)) throw std::invalid_argument("reduction check: p must be prime");
  if (s.contains(p)) throw std::invalid_argument("reduction check: p lies in S");
  if (p >= Int(1) << 20) throw std::invalid_argument("reduction check: p too large to enumerate");
  if (!c.action) throw std::invalid_argument("reduction check: cover carries no action");

  uint64_t pp = mpz_get_ui(p.get_mpz_t());
  size_t k = c.source.ring->size();
  double space = 1;
  for (size_t i = 0; i < k; ++i) space *= (double)pp;
  if (space > 2e7) throw std::invalid_argument("reduction check: F_p point space too large");

  std::vector<MPolyMod> j1, j2;
  for (const auto& g : c.source.j1.gens) j1.push_back(MPolyMod::reduce(g, pp));
  for (const auto& g : c.source.j2.gens) j2.push_back(MPolyMod::reduce(g, pp));

  struct ModElement {
    std::string name;
    std::vector<MPolyMod> images;
  };
  std::vector<ModElement> els;
  for (const auto& g : c.action->elements) {
    if (g.is_identity()) continue;
    ModElement me{g.name, {}};
    for (const auto& im : g.images) me.images.push_back(MPolyMod::reduce(im, pp));
    els.push_back(std::move(me));
  }

  ReductionReport rep;
  rep.p = p;
  std::vector<uint64_t> point(k, 0);
  // odometer over F_p^k in lexicographic order
  while (rep.points_checked < sample) {
    bool on = true;
    for (const auto& g : j1)
      if (g.eval(point) != 0) {
        on = false;
        break;
      }
    if (on && !j2.empty()) {
      bool off = false;
      for (const auto& g : j2)
        if (g.eval(point) != 0) {
          off = true;
          break;
        }
      on = off;
    }
    if (on) {
      ++rep.points_checked;
      for (const auto& g : els) {
        std::vector<uint64_t> image;
        image.reserve(k);
        for (const auto& im : g.images) image.push_back(im.eval(point));
        if (image == point) {
          rep.witness = std::make_pair(g.name, point);
          return rep;
        }
      }
    }
    size_t i = 0;
    while (i < k && ++point[i] == pp) point[i++] = 0;
    if (i == k) break;
  }
  return rep;
}

}  // namespace verify
}  // namespace chevweil
