#ifndef CHEVWEIL_FERMAT_HPP
#define CHEVWEIL_FERMAT_HPP

#include <string>
#include <vector>

#include "chevweil/rational.hpp"

namespace chevweil {
namespace fermat {

// a x^p + b y^q = c z^r
struct FermatSignature {
  Int a = 1, b = 1, c = 1;
  unsigned p = 2, q = 2, r = 2;
};

// abc != 0 and exponents >= 2; throws std::invalid_argument
void validate(const FermatSignature& sig);

enum class TriangleClass { Hyperbolic, Euclidean, Spherical };
const char* triangle_class_name(TriangleClass t);

// exact comparison of 1/p + 1/q + 1/r with 1
TriangleClass classify(const FermatSignature& sig);

struct BetaValue {
  bool infinite = false;
  Rat value;             // meaningful only when !infinite
  bool flagged = false;  // in {0, 1, inf}, the multiple-fiber locus
};

struct Solution {
  Int x, y, z;
  BetaValue beta_value;
};

bool satisfies(const FermatSignature& sig, const Int& x, const Int& y, const Int& z);

/* All coprime solutions with max(|x|,|y|,|z|) <= bound: exact
 * enumeration of x and y, perfect-power test for z; output is
 * lexicographic in (x, y, z). */
std::vector<Solution> search(const FermatSignature& sig, const Int& bound);

// beta(x,y,z) = a x^p / (c z^r), with z = 0 mapping to infinity
BetaValue beta(const FermatSignature& sig, const Solution& s);

/* The Gm-action on a fiber of beta away from {0, 1, inf}: lambda acts
 * with weights (qr, pr, pq) on (x, y, z), scaling the equation by the
 * common factor lambda^{pqr} and fixing beta.  The weights are
 * validated by exact substitution on searched solutions, never
 * assumed. */
struct FiberStructure {
  unsigned wx = 0, wy = 0, wz = 0;
  size_t verified_on = 0;  // (solution, lambda) pairs exactly checked
};

FiberStructure fiber_structure(const FermatSignature& sig, const Rat& beta0);

std::string solution_str(const Solution& s);
std::string beta_str(const BetaValue& b);

}  // namespace fermat
}  // namespace chevweil

#endif
