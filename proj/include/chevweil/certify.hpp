#ifndef CHEVWEIL_CERTIFY_HPP
#define CHEVWEIL_CERTIFY_HPP

#include <optional>
#include <vector>

#include "chevweil/mpoly.hpp"
#include "chevweil/primes.hpp"

namespace chevweil {
namespace certify {

/* Finitely generated ideal presented by its generator list. */
struct Ideal {
  RingPtr ring;
  std::vector<MPoly> gens;

  Ideal(RingPtr r, std::vector<MPoly> g);
};

/* Power identities h_i^N = sum_j a_ij f_j.  The coefficients a_ij are
 * rational polynomials; their denominators are exactly the arithmetic
 * information the rest of the pipeline consumes. */
struct Certificate {
  std::vector<MPoly> targets;              // h_i
  std::vector<MPoly> gens;                 // f_j
  unsigned N = 1;                          // common exponent
  std::vector<std::vector<MPoly>> coeffs;  // a[i][j]
};

struct Bounds {
  unsigned max_N = 3;
  unsigned max_aux_degree = 6;
};

/* Degree-bounded search for a certificate, iterative deepening on N and
 * on the coefficient degree.  Exact rational Gaussian elimination with
 * partial pivoting on the largest-numerator entry; free variables are
 * set to zero during back-substitution.  In the homogeneous mode (all
 * inputs homogeneous) each a_ij is homogeneous of degree
 * N*deg(h_i) - deg(f_j) or zero.  Absence of a certificate within the
 * bounds is always inconclusive. */
std::optional<Certificate> find_certificate(const std::vector<MPoly>& targets,
                                            const std::vector<MPoly>& gens,
                                            const Bounds& bounds = {});

/* Exact expansion check of every identity in the certificate. */
bool check_certificate(const Certificate& c);

/* Primes dividing any coefficient denominator of any a_ij, plus the
 * infinite place. */
PrimeSet denominator_primes(const Certificate& c);

/* Re-expands the identities over F_p.  Throws std::domain_error when p
 * divides a denominator appearing anywhere in the certificate. */
bool reduce_certificate_mod_p(const Certificate& c, const Int& p);

}  // namespace certify
}  // namespace chevweil

#endif
