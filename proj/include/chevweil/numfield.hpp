#ifndef CHEVWEIL_NUMFIELD_HPP
#define CHEVWEIL_NUMFIELD_HPP

#include <string>
#include <vector>

#include "chevweil/primes.hpp"
#include "chevweil/rational.hpp"
#include "chevweil/upoly.hpp"

namespace chevweil {
namespace numfield {

/* Monic integer defining polynomial of an algebraic number.  scale
 * records the substitution theta -> scale * theta used to clear
 * denominators; may_be_reducible marks polynomials whose
 * irreducibility was not certified, which weakens ramification claims
 * but not unramifiedness. */
struct MinPoly {
  std::vector<Int> coeffs;  // ascending; coeffs.back() == 1
  Int scale = 1;
  bool may_be_reducible = false;

  MinPoly() = default;
  explicit MinPoly(std::vector<Int> c);

  int degree() const { return (int)coeffs.size() - 1; }
};

/* Monic integer model of a monic rational polynomial: substitute
 * x -> x/c with c the lcm of the coefficient denominators and clear.
 * Roots get multiplied by c, so primes dividing c can appear as
 * spurious ramification; they are reported as Undetermined. */
MinPoly integral_model(const UPolyQ& f);

enum class RamVerdict { Unramified, Ramified, Undetermined };

std::string verdict_name(RamVerdict v);

struct RamResult {
  RamVerdict verdict = RamVerdict::Undetermined;
  std::string detail;
};

/* Ramification of the rational prime p in Z[x]/(m): squarefree mod p
 * means unramified; a repeated factor means ramified provided the
 * equation order is p-maximal (Dedekind), and is otherwise undetermined
 * rather than guessed. */
RamResult ramification_verdict(const MinPoly& m, const Int& p);

/* Dedekind criterion: with mbar = prod gbar_i^{e_i}, g* = prod gbar_i,
 * h* = mbar/g*, and T = (g*h* - m)/p over Z, the order Z[x]/(m) is
 * p-maximal iff gcd(Tbar, g*, h*) = 1 in F_p[x]. */
bool dedekind_p_maximal(const MinPoly& m, const Int& p);

Int poly_discriminant(const MinPoly& m);

/* Primes dividing disc(m): the candidates for ramification. */
PrimeSet poly_discriminant_primes(const MinPoly& m);

/* Closed-form oracle for quadratic fields Q(sqrt(d)), d squarefree and
 * not 0 or 1: p ramifies iff p divides the field discriminant, which is
 * d for d = 1 mod 4 and 4d otherwise.  Never Undetermined. */
RamVerdict quadratic_oracle(const Int& d, const Int& p);

/* True when some small prime reduction of the monic polynomial f is
 * irreducible, which certifies irreducibility over Q.  False is
 * inconclusive. */
bool certify_irreducible(const UPolyQ& f);

UPolyQ minpoly_to_upoly(const MinPoly& m);

std::string minpoly_str(const MinPoly& m, const std::string& var = "x");

}  // namespace numfield
}  // namespace chevweil

#endif
