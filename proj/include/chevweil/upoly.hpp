#ifndef CHEVWEIL_UPOLY_HPP
#define CHEVWEIL_UPOLY_HPP

#include <cassert>
#include <concepts>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "chevweil/mpoly.hpp"
#include "chevweil/rational.hpp"

namespace chevweil {

inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const MPoly& c) { return c.is_zero(); }

inline Rat coeff_div_exact(const Rat& a, const Rat& b) { return a / b; }
inline MPoly coeff_div_exact(const MPoly& a, const MPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::domain_error("inexact coefficient division");
  return *q;
}

/* Univariate polynomial in a distinguished variable with coefficients
 * in C (Rat, or MPoly for polynomials over a coordinate ring).
 * coeff(i) multiplies y^i; the representation never keeps a zero lead. */
template <class C>
class UPolyT {
 public:
  UPolyT() requires std::default_initializable<C> : zero_() {}
  explicit UPolyT(C zero) : zero_(std::move(zero)) {}
  UPolyT(C zero, std::vector<C> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) {
    normalize();
  }

  int degree() const { return (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }

  const C& coeff(size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const C& lead() const {
    if (c_.empty()) throw std::domain_error("lead of zero polynomial");
    return c_.back();
  }
  const C& zero_coeff() const { return zero_; }

  void set_coeff(size_t i, C v) {
    if (i >= c_.size()) c_.resize(i + 1, zero_);
    c_[i] = std::move(v);
    normalize();
  }

  UPolyT operator-() const {
    UPolyT r(zero_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(zero_ - c);
    return r;
  }

  UPolyT operator+(const UPolyT& o) const {
    UPolyT r(zero_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), zero_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
    r.normalize();
    return r;
  }

  UPolyT operator-(const UPolyT& o) const {
    UPolyT r(zero_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), zero_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) - o.coeff(i);
    r.normalize();
    return r;
  }

  UPolyT operator*(const UPolyT& o) const {
    UPolyT r(zero_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, zero_);
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    r.normalize();
    return r;
  }

  UPolyT scaled(const C& k) const {
    UPolyT r(zero_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * k);
    r.normalize();
    return r;
  }

  UPolyT derivative() const {
    UPolyT r(zero_);
    for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Rat((long)i));
    r.normalize();
    return r;
  }

  bool operator==(const UPolyT& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }

  const std::vector<C>& coeffs() const { return c_; }

 private:
  void normalize() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }

  C zero_;
  std::vector<C> c_;
};

using UPolyQ = UPolyT<Rat>;
using UPoly = UPolyT<MPoly>;

inline UPolyQ upoly_q(std::vector<Rat> coeffs) { return UPolyQ(Rat(0), std::move(coeffs)); }

/* Sylvester resultant, f's coefficient rows on top.  Laplace expansion
 * over rows with a column-mask memo; matrices here stay small. */
template <class C>
C resultant(const UPolyT<C>& f, const UPolyT<C>& g) {
  const C& zero = f.zero_coeff();
  if (f.is_zero() || g.is_zero())
    throw std::domain_error("resultant of the zero polynomial");
  int m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) {
    // empty Sylvester matrix: resultant 1
    return coeff_div_exact(f.lead(), f.lead());
  }
  if (m == 0) {
    C acc = coeff_div_exact(g.lead(), g.lead());
    for (int i = 0; i < n; ++i) acc = acc * f.lead();
    return acc;
  }
  if (n == 0) {
    C acc = coeff_div_exact(f.lead(), f.lead());
    for (int i = 0; i < m; ++i) acc = acc * g.lead();
    return acc;
  }
  int size = m + n;
  // entry(r, c) of the Sylvester matrix
  auto entry = [&](int r, int c) -> const C& {
    if (r < n) {
      int k = m - (c - r);  // row r: f_m ... f_0 starting at column r
      if (c < r || k < 0) return zero;
      return f.coeff((size_t)k);
    }
    int rr = r - n;
    int k = n - (c - rr);
    if (c < rr || k < 0) return zero;
    return g.coeff((size_t)k);
  };
  if (size > 62) throw std::domain_error("resultant: degree too large");
  std::map<uint64_t, C> memo;
  // determinant of rows row..size-1 on the columns present in mask
  auto det = [&](auto&& self, int row, uint64_t mask) -> C {
    if (row == size) return coeff_div_exact(f.lead(), f.lead());  // 1
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    C acc = zero;
    int sign = 1;
    for (int c = 0; c < size; ++c) {
      if (!(mask & (1ull << c))) continue;
      const C& e = entry(row, c);
      if (!coeff_is_zero(e)) {
        C sub = self(self, row + 1, mask & ~(1ull << c));
        if (!coeff_is_zero(sub)) {
          C term = e * sub;
          if (sign > 0)
            acc = acc + term;
          else
            acc = acc - term;
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  uint64_t full = size == 64 ? ~0ull : ((1ull << size) - 1);
  return det(det, 0, full);
}

/* disc(f) = (-1)^(d(d-1)/2) res(f, f') / lc(f); degree-1 convention 1. */
template <class C>
C discriminant(const UPolyT<C>& f) {
  int d = f.degree();
  if (d < 1) throw std::domain_error("discriminant needs degree >= 1");
  C r = resultant(f, f.derivative());
  C q = coeff_div_exact(r, f.lead());
  int sign_exp = (d * (d - 1) / 2) % 2;
  return sign_exp ? (f.zero_coeff() - q) : q;
}

/* ---- rational-coefficient helpers ---- */

Rat upoly_eval(const UPolyQ& f, const Rat& x);

// quotient/remainder; divisor must be nonzero
std::pair<UPolyQ, UPolyQ> upoly_divmod(const UPolyQ& f, const UPolyQ& g);

// monic gcd (zero polynomial when both inputs are zero)
UPolyQ upoly_gcd(UPolyQ a, UPolyQ b);

// f / gcd(f, f'), monic; the radical of f over Q
UPolyQ squarefree_part(const UPolyQ& f);

// all rational roots, ascending, without multiplicity
std::vector<Rat> rational_roots(const UPolyQ& f);

/* ---- conversions ---- */

// f as a univariate polynomial in ring variable var_idx; coefficients in
// the ring without that variable.
UPoly to_upoly(const MPoly& f, size_t var_idx);

// inverse of to_upoly: expand into ring with the variable re-inserted at
// position var_idx.
MPoly from_upoly(const UPoly& f, const RingPtr& ring, size_t var_idx);

// coefficients evaluated at a point of the coefficient ring
UPolyQ specialize(const UPoly& f, std::span<const Rat> point);

// constant-coefficient view; throws when a coefficient is non-constant
UPolyQ constant_coeffs(const UPoly& f);

std::string upoly_str(const UPolyQ& f, const std::string& var);

}  // namespace chevweil

#endif
