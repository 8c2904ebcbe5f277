#ifndef CHEVWEIL_PRIMES_HPP
#define CHEVWEIL_PRIMES_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "chevweil/rational.hpp"

namespace chevweil {

/* A finite set of rational primes together with the infinite place.
 * Every set produced by the pipeline carries the infinite place; the
 * flag exists so that forced sets from the command line can be checked
 * for it explicitly. */
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::set<Int> primes, bool infinity = true)
      : primes_(std::move(primes)), infinity_(infinity) {}

  static PrimeSet infinity_only() { return PrimeSet({}, true); }

  bool includes_infinity() const { return infinity_; }
  const std::set<Int>& primes() const { return primes_; }
  bool contains(const Int& p) const { return primes_.count(p) != 0; }
  bool empty_finite() const { return primes_.empty(); }
  size_t size_finite() const { return primes_.size(); }

  void insert(const Int& p) { primes_.insert(p); }
  void set_infinity(bool v) { infinity_ = v; }

  void merge(const PrimeSet& other) {
    primes_.insert(other.primes_.begin(), other.primes_.end());
    infinity_ = infinity_ || other.infinity_;
  }

  bool subset_of(const PrimeSet& other) const {
    for (const auto& p : primes_)
      if (!other.contains(p)) return false;
    return true;
  }

  // "2, 3, inf" or "none"
  std::string str() const;

  bool operator==(const PrimeSet& o) const = default;

 private:
  std::set<Int> primes_;
  bool infinity_ = true;
};

// Prime factorization, exponents included.  Trial division up to 10^6,
// Pollard rho beyond; fine for the coefficient sizes we produce.
std::map<Int, unsigned> factor(Int n);

// Set of primes dividing n (n != 0); |n| = 1 gives the empty set.
std::set<Int> prime_support(const Int& n);

// Primes dividing numerator or denominator.
std::set<Int> prime_support(const Rat& x);

bool is_prime(const Int& n);

std::vector<Int> primes_up_to(unsigned long bound);

// Largest squarefree d with x = d * (square); sign preserved.
Int squarefree_core(const Rat& x);

/* All S-units of bounded height: rationals +-prod p^e over the finite
 * primes of s with |numerator * denominator| <= height, ascending. */
std::vector<Rat> s_units(const PrimeSet& s, const Int& height);

}  // namespace chevweil

#endif
