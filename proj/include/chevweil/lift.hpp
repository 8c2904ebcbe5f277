#ifndef CHEVWEIL_LIFT_HPP
#define CHEVWEIL_LIFT_HPP

#include <optional>
#include <string>
#include <vector>

#include "chevweil/cover.hpp"
#include "chevweil/numfield.hpp"
#include "chevweil/primes.hpp"

namespace chevweil {

using PointQ = std::vector<Rat>;

namespace lift {

/* S-integrality of a rational point of W = V(J1) \ V(J2): the
 * coordinate denominators are supported in S, and at every prime
 * outside S the reduction stays off the boundary.  The point must lie
 * on W over Q. */
bool is_s_integral(const cover::VarietyPresentation& v, const PointQ& p, const PrimeSet& s);

/* One Galois orbit of fiber points over a rational target point,
 * presented by a defining polynomial of a primitive element theta. */
struct LiftedPoint {
  PointQ target;
  UPolyQ dependence;          // monic defining polynomial of theta over Q
  numfield::MinPoly minpoly;  // monic integer model of the same relation
  std::vector<UPolyQ> coords; // source coordinates as polynomials in theta
  std::optional<PointQ> rational;  // set when theta is rational

  int field_degree() const { return dependence.degree(); }
};

/* The full fiber over a rational target point, split into exact-test
 * factors: rational roots become degree-1 entries, pure-power relations
 * are reduced by extracting exact roots, and factors whose
 * irreducibility cannot be certified carry an honest flag.  The degrees
 * of the returned entries sum to the fiber cardinality. */
std::vector<LiftedPoint> lift_point(const cover::CoverSpec& c, const PointQ& target_point);

/* Coefficient-level S-integrality, one flag per lift: the dependence
 * and every coordinate expression have denominators supported in S
 * (the dependence is monic by construction). */
std::vector<bool> lift_integrality_report(const cover::CoverSpec& c, const PointQ& target_point,
                                          const PrimeSet& s,
                                          const std::vector<LiftedPoint>& lifts);

bool lift_is_s_integral(const LiftedPoint& lp, const PrimeSet& s);

std::string lifted_point_str(const LiftedPoint& lp);

/* Exact factor split of x^n - u using root extraction and the
 * biquadratic identity only; factors multiply back to x^n - u.  Each
 * factor is monic and is marked when irreducibility is certified. */
std::vector<std::pair<UPolyQ, bool>> split_power_relation(const Rat& u, unsigned n);

}  // namespace lift
}  // namespace chevweil

#endif
