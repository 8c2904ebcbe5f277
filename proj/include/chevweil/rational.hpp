#ifndef CHEVWEIL_RATIONAL_HPP
#define CHEVWEIL_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <string>

namespace chevweil {

/* Exact arithmetic carriers.  mpq_class keeps values canonical
 * (reduced, denominator > 0), which is exactly the contract we need:
 * denominators of certificate coefficients are the payload. */
using Int = mpz_class;
using Rat = mpq_class;

inline Int rat_num(const Rat& x) { return x.get_num(); }
inline Int rat_den(const Rat& x) { return x.get_den(); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Rat rat_of(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// "-3/4" or "12"; returns nullopt on malformed input.
std::optional<Rat> parse_rat(const std::string& text);

// Canonical text form, integer when the denominator is 1.
std::string rat_str(const Rat& x);

// Floor of the exact square root; n must be >= 0.
Int isqrt(const Int& n);

// Exact k-th root: r with r^k == n, if one exists in Z.
std::optional<Int> exact_root(const Int& n, unsigned k);

// Exact rational k-th root, sign-aware (k odd allows negatives).
std::optional<Rat> exact_root(const Rat& x, unsigned k);

}  // namespace chevweil

#endif
