#ifndef CHEVWEIL_MPOLY_HPP
#define CHEVWEIL_MPOLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chevweil/rational.hpp"

namespace chevweil {

/* Named variable list shared by the polynomials of one presentation.
 * Rings are compared by their variable lists, so distinct presentations
 * with the same names are interchangeable. */
class Ring {
 public:
  explicit Ring(std::vector<std::string> vars);

  size_t size() const { return vars_.size(); }
  const std::string& var(size_t i) const { return vars_[i]; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::optional<size_t> index_of(const std::string& name) const;

  bool operator==(const Ring& o) const { return vars_ == o.vars_; }

 private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

/* Exponent vector; length always equals the ring size. */
class Mono {
 public:
  Mono() = default;
  explicit Mono(std::vector<uint32_t> exps) : exps_(std::move(exps)) {}
  static Mono one(size_t nvars) { return Mono(std::vector<uint32_t>(nvars, 0)); }

  size_t size() const { return exps_.size(); }
  uint32_t exp(size_t i) const { return exps_[i]; }
  uint32_t total_degree() const;
  bool is_one() const { return total_degree() == 0; }

  Mono operator*(const Mono& o) const;
  // Componentwise difference when divisible, else nullopt.
  std::optional<Mono> divide(const Mono& o) const;

  bool operator==(const Mono& o) const { return exps_ == o.exps_; }

  const std::vector<uint32_t>& exps() const { return exps_; }

 private:
  std::vector<uint32_t> exps_;
};

/* Graded lexicographic order: total degree first, then lex with the
 * first ring variable strongest.  The global term order everywhere. */
struct GradedLexLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

/* Sparse multivariate polynomial over Q.  No zero coefficients are
 * stored; the zero polynomial has an empty term map and total degree -1. */
class MPoly {
 public:
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}
  MPoly(RingPtr ring, const Rat& c);

  static MPoly zero(RingPtr ring) { return MPoly(std::move(ring)); }
  static MPoly constant(RingPtr ring, const Rat& c) { return MPoly(std::move(ring), c); }
  static MPoly variable(const RingPtr& ring, size_t idx);
  static MPoly term(const RingPtr& ring, const Rat& c, const Mono& m);

  const RingPtr& ring() const { return ring_; }
  const std::map<Mono, Rat, GradedLexLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero if absent).
  Rat constant_term() const;

  int total_degree() const;  // -1 for the zero polynomial
  uint32_t degree_in(size_t var) const;

  struct Homogeneity {
    bool homogeneous;
    int degree;  // -1 for the zero polynomial
    bool is_zero;
  };
  Homogeneity homogeneity() const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rat& c) const;
  MPoly pow(unsigned n) const;

  bool operator==(const MPoly& o) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);

  Rat eval(std::span<const Rat> point) const;

  // Substitute images[i] for variable i; images live in a common ring.
  MPoly subst(std::span<const MPoly> images) const;

  MPoly derivative(size_t var) const;

  // Leading data under graded lex.
  const Mono& lead_mono() const;
  const Rat& lead_coeff() const;

  // Exact division; nullopt when o does not divide *this.
  std::optional<MPoly> divide_exact(const MPoly& o) const;

  // All coefficients scaled by the rational c.
  void scale(const Rat& c);

  void add_term(const Mono& m, const Rat& c);

  std::string str() const;

 private:
  RingPtr ring_;
  std::map<Mono, Rat, GradedLexLess> terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

/* Parser for the printed form: rational coefficients, identifiers,
 * '+', '-', '*', '^', parentheses.  parse(str(p)) == p. */
MPoly parse_poly(const RingPtr& ring, const std::string& text);

/* Reduction of an MPoly or a point mod p.  Throws std::domain_error
 * when p divides a denominator. */
uint64_t rat_mod_p(const Rat& x, uint64_t p);

// Dense-on-terms image of an MPoly over F_p; used to cross-check
// certificate identities by genuinely expanding them mod p.
class MPolyMod {
 public:
  MPolyMod(uint64_t p, size_t nvars) : p_(p), nvars_(nvars) {}
  static MPolyMod reduce(const MPoly& f, uint64_t p);

  uint64_t p() const { return p_; }
  bool is_zero() const { return terms_.empty(); }

  MPolyMod operator+(const MPolyMod& o) const;
  MPolyMod operator-(const MPolyMod& o) const;
  MPolyMod operator*(const MPolyMod& o) const;
  MPolyMod pow(unsigned n) const;

  uint64_t eval(std::span<const uint64_t> point) const;

  bool operator==(const MPolyMod& o) const { return p_ == o.p_ && terms_ == o.terms_; }

 private:
  void add_term(const Mono& m, uint64_t c);
  uint64_t p_;
  size_t nvars_;
  std::map<Mono, uint64_t, GradedLexLess> terms_;
};

/* Deterministic sample sequence 0, 1, -1, 2, -2, 1/2, -1/2, 3, ...
 * ordered by height max(|num|, den), then denominator, then sign. */
Rat rational_sequence(size_t k);

}  // namespace chevweil

#endif
