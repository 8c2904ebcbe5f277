#ifndef CHEVWEIL_FPPOLY_HPP
#define CHEVWEIL_FPPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chevweil/rational.hpp"
#include "chevweil/upoly.hpp"

namespace chevweil {

/* Univariate polynomial over F_p, p an odd-or-2 prime below 2^31.
 * Coefficients are reduced representatives in [0, p). */
class FpPoly {
 public:
  explicit FpPoly(uint64_t p) : p_(p) {}
  FpPoly(uint64_t p, std::vector<uint64_t> coeffs);

  static FpPoly x(uint64_t p);
  static FpPoly constant(uint64_t p, uint64_t c);

  // Reduction of a rational-coefficient polynomial; throws when p divides
  // a denominator.
  static FpPoly reduce(const UPolyQ& f, uint64_t p);
  static FpPoly reduce(const std::vector<Int>& coeffs, uint64_t p);

  uint64_t p() const { return p_; }
  int degree() const { return (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint64_t lead() const;
  const std::vector<uint64_t>& coeffs() const { return c_; }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly monic() const;
  FpPoly derivative() const;
  uint64_t eval(uint64_t x) const;

  static std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
  static FpPoly gcd(FpPoly a, FpPoly b);  // monic

  // a^e mod m, exponent an arbitrary-precision integer
  static FpPoly powmod(const FpPoly& a, const Int& e, const FpPoly& m);

  bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  // canonical order: degree, then coefficients from the top
  bool operator<(const FpPoly& o) const;

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  uint64_t p_;
  std::vector<uint64_t> c_;
};

struct FactorModP {
  bool squarefree = false;
  // monic irreducible factors with multiplicities, canonically sorted
  std::vector<std::pair<FpPoly, unsigned>> factors;
};

/* Full factorization over F_p.  Requires lc(f) invertible mod p and no
 * denominator divisible by p. */
FactorModP factor_mod_p(const UPolyQ& f, const Int& p);
FactorModP factor_mod_p(const FpPoly& f);

}  // namespace chevweil

#endif
