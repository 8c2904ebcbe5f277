#ifndef CHEVWEIL_COVER_HPP
#define CHEVWEIL_COVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "chevweil/certify.hpp"
#include "chevweil/mpoly.hpp"
#include "chevweil/primes.hpp"
#include "chevweil/upoly.hpp"

namespace chevweil {
namespace cover {

/* Quasi-projective presentation W = V(J1) \ V(J2) in affine coordinates.
 * An empty J2 generator list means the boundary is empty. */
struct VarietyPresentation {
  RingPtr ring;
  certify::Ideal j1;
  certify::Ideal j2;

  VarietyPresentation(RingPtr r, std::vector<MPoly> j1_gens, std::vector<MPoly> j2_gens);

  bool boundary_empty() const { return j2.gens.empty(); }
  // all J1 generators vanish at p
  bool on_variety(std::span<const Rat> p) const;
  // some J2 generator is nonzero at p (vacuously true without boundary)
  bool off_boundary(std::span<const Rat> p) const;
};

/* Finite group acting by polynomial self-maps; images are listed per
 * ring variable.  The identity must be present. */
struct ActionElement {
  std::string name;
  std::vector<MPoly> images;

  bool is_identity() const;
  std::vector<Rat> apply(std::span<const Rat> p) const;
};

struct GroupAction {
  std::vector<ActionElement> elements;
};

enum class Family { Kummer, Parametrized, PolynomialInY, Generic };

std::string family_name(Family f);

struct CoverSpec {
  VarietyPresentation source;  // W
  VarietyPresentation target;  // V
  std::vector<MPoly> map;      // coordinates of pi, in the source ring
  unsigned degree = 1;
  std::optional<GroupAction> action;
  Family family = Family::Generic;
  unsigned kummer_n = 0;  // Kummer family only

  // PolynomialInY: the monic defining polynomial in the fiber variable,
  // coefficients over the target ring.
  std::optional<size_t> fiber_var;

  std::vector<Rat> project(std::span<const Rat> p) const;
};

/* t -> t^n on Gm = {t*s = 1}; the flagship family. */
CoverSpec make_kummer(unsigned n);

/* A^1 -> V(j1_target), t -> (maps...). */
CoverSpec make_parametrized(std::vector<std::string> target_vars,
                            std::vector<MPoly> target_j1, std::vector<MPoly> maps,
                            unsigned degree);

/* y^d + a_1(x) y^{d-1} + ... + a_d(x) over the target presentation. */
CoverSpec make_polynomial_in_y(VarietyPresentation target, const std::string& yvar,
                               const UPoly& f);

/* Monic defining polynomial in the fiber coordinate over the target
 * ring: the declared one for PolynomialInY, y^n - u for Kummer. */
UPoly fiber_polynomial(const CoverSpec& c);

/* Generators of the locus g(x) = x inside W: J1 together with the
 * nonzero components of g(x) - x, unnormalized.  Denominators and
 * contents are information the certificates must see. */
certify::Ideal fixed_locus_ideal(const VarietyPresentation& w, const ActionElement& g);

struct FixedPointWitness {
  std::string element;
  std::vector<Rat> point;
};

struct FpfResult {
  enum class Status { Certified, Failure, Inconclusive };
  Status status = Status::Inconclusive;
  // one certificate per nonidentity element, in group order
  std::vector<std::pair<std::string, certify::Certificate>> certificates;
  std::optional<FixedPointWitness> witness;
  std::string detail;
};

/* Certifies that no nonidentity element fixes a point of W: for each g,
 * a certificate that the J2 generators (or 1 when the boundary is
 * empty) have a power in J1 + I_g.  A failed search falls back to
 * sampling for a rational fixed point; absence of both certificate and
 * witness is inconclusive. */
FpfResult certify_fixed_point_free(const CoverSpec& c, const certify::Bounds& bounds = {});

struct FiberWitness {
  std::vector<Rat> point_a;
  size_t size_a = 0;
  std::vector<Rat> point_b;
  size_t size_b = 0;
};

struct FiberResult {
  enum class Status {
    CertifiedByDiscriminant,
    CheckedBySampling,
    Failure,
    Inconclusive,
    Unsupported
  };
  Status status = Status::Inconclusive;
  std::optional<certify::Certificate> certificate;
  std::optional<FiberWitness> witness;
  size_t samples = 0;
  std::string detail;
};

/* Constant fiber cardinality.  PolynomialInY and Kummer covers get a
 * discriminant nonvanishing certificate over the target; parametrized
 * covers get exact fiber enumeration over sampled rational points. */
FiberResult certify_constant_fibers(const CoverSpec& c, const certify::Bounds& bounds = {},
                                    size_t min_samples = 25);

struct CoverCertification {
  enum class Verdict { IsCover, NotACover, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  FpfResult fpf;
  FiberResult fibers;
};

/* Full pipeline on a Galois-closed cover: fixed-point-freeness of the
 * action plus constant fibers. */
CoverCertification certify_cover(const CoverSpec& closed, const certify::Bounds& bounds = {});

/* What the end-to-end certification produced: the closure when one
 * exists, the certification run on it (or, when closure fails, the
 * fiber check run on the input cover so degenerate maps are still
 * rejected), and the bad-prime set when the verdict is IsCover. */
struct CoverPipeline {
  CoverSpec cover;
  std::optional<CoverSpec> closed;
  CoverCertification cert;
  std::optional<PrimeSet> s;
  std::string closure_error;

  explicit CoverPipeline(CoverSpec c) : cover(std::move(c)) {}
};

CoverPipeline certify_pipeline(const CoverSpec& c, const certify::Bounds& bounds = {});

/* The finite bad-prime set: denominators of all certificates, coefficient
 * denominators of the presentation data, and leading data of the
 * integral-dependence equations; always includes the infinite place. */
PrimeSet bad_primes(const CoverSpec& c, const CoverCertification& cert);

/* Attaches a transitive fixed-point-free action when the family allows
 * it: identity when one is present, conjugation for degree <= 2
 * polynomial covers, and the cyclotomic-twist group for Kummer covers
 * (for n >= 3 the source is extended by a root of the n-th cyclotomic
 * polynomial so every map stays rational).  Throws std::domain_error
 * for unsupported families. */
CoverSpec galois_closure(const CoverSpec& c);

/* Rational points of W off the boundary, family-driven; may return
 * fewer than requested (cyclotomic closures have no rational points). */
std::vector<std::vector<Rat>> sample_source_points(const CoverSpec& c, size_t count);

/* Rational points of V off the boundary: the hyperbola pattern and
 * plain affine space have direct samplers, parametrized targets go
 * through the parametrization. */
std::vector<std::vector<Rat>> sample_target_points(const CoverSpec& c, size_t count);

/* Exact cardinality of the fiber over a target point: the number of
 * distinct roots over the algebraic closure. */
size_t fiber_cardinality(const CoverSpec& c, std::span<const Rat> target_point);

// n-th cyclotomic polynomial, integer coefficients
UPolyQ cyclotomic(unsigned n);

}  // namespace cover
}  // namespace chevweil

#endif
