#ifndef CHEVWEIL_VERIFY_HPP
#define CHEVWEIL_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chevweil/cover.hpp"
#include "chevweil/lift.hpp"
#include "chevweil/numfield.hpp"
#include "chevweil/primes.hpp"

namespace chevweil {
namespace verify {

// one ramification finding, anchored to a lift of an input point
struct RamWitness {
  size_t point_index = 0;
  size_t lift_index = 0;
  Int p;
  numfield::RamVerdict verdict = numfield::RamVerdict::Undetermined;
  std::string detail;
};

struct PointResult {
  PointQ point;
  std::vector<lift::LiftedPoint> lifts;
  std::vector<bool> lift_integral;
};

/* Outcome of a full run: every lift of every input point must be
 * S-integral and unramified outside S.  Ramified verdicts at p not in S
 * are violations; Undetermined verdicts are surfaced separately and do
 * not fail the run. */
struct CwReport {
  PrimeSet s;
  bool forced_s = false;
  size_t lifts_total = 0;
  size_t ram_checks = 0;
  size_t integrality_failures = 0;
  std::vector<PointResult> points;
  std::vector<RamWitness> violations;
  std::vector<RamWitness> undetermined;

  bool passed() const { return violations.empty() && integrality_failures == 0; }
};

/* Lifts every point and tests ramification of each lift's residue field
 * at all primes p <= prime_budget outside S plus every discriminant
 * prime of the minimal polynomial outside S.  The discriminant primes
 * are the only candidates for ramification, so the check is complete
 * per lift despite the budget.
 *
 * Preconditions: the cover certifies as IsCover (checked internally
 * when cert is not supplied) and every point is S-integral; violations
 * throw std::invalid_argument. */
CwReport verify_cw(const cover::CoverSpec& c, const PrimeSet& s,
                   const std::vector<PointQ>& points, const Int& prime_budget,
                   const cover::CoverCertification* cert = nullptr);

/* Integral points on y^2 = x^3 up to |x| <= bound, by perfect-square
 * testing of x^3; checks that x divides y at every point (0 | 0 at the
 * cusp) and that the point set is exactly {(t^2, t^3) : t^2 <= bound}. */
struct CuspReport {
  Int bound;
  std::vector<std::pair<Int, Int>> points;
  bool all_divide = false;
  bool matches_square_family = false;

  bool passed() const { return all_divide && matches_square_family; }
};

CuspReport cusp_divisibility_check(const Int& bound);

/* Reduction stability at p: no nonidentity element of the action fixes
 * a point of the reduction of W mod p off the boundary.  Points of
 * W(F_p) are enumerated exhaustively (the fixtures have at most three
 * variables), capped at `sample` tested points.  Requires p prime and
 * outside S, and an action on the cover. */
struct ReductionReport {
  Int p;
  size_t points_checked = 0;
  // (element name, fixed point) when soundness fails
  std::optional<std::pair<std::string, std::vector<uint64_t>>> witness;

  bool passed() const { return !witness.has_value(); }
};

ReductionReport reduction_fixed_point_check(const cover::CoverSpec& c, const PrimeSet& s,
                                            const Int& p, size_t sample = 64);

}  // namespace verify
}  // namespace chevweil

#endif
