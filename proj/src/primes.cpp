#include "chevweil/primes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chevweil {

std::string PrimeSet::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& p : primes_) {
    if (!first) out << ", ";
    out << p.get_str();
    first = false;
  }
  if (infinity_) {
    if (!first) out << ", ";
    out << "inf";
    first = false;
  }
  if (first) out << "none";
  return out.str();
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  // 50 Miller-Rabin rounds: no composite below our sizes survives.
  return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
  // Brent's cycle variant with deterministic restarts.
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    Int saved_x;
    unsigned long power = 1, lam = 0;
    while (d == 1) {
      if (lam == power) {
        saved_x = x;
        power *= 2;
        lam = 0;
      }
      x = (x * x + c) % n;
      ++lam;
      Int diff = x - saved_x;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;  // cycle without factor; retry with next c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
  if (n <= 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Int, unsigned> factor(Int n) {
  if (n == 0) throw std::domain_error("factor(0)");
  if (n < 0) n = -n;
  std::map<Int, unsigned> out;
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[Int(p)] += 1;
      n /= p;
    }
  }
  // wheel over 6k+-1 up to 10^6
  for (unsigned long q = 7; q <= 1000000ul && Int(q) * q <= n; q += 6) {
    for (unsigned long p : {q, q + 4}) {
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        out[Int(p)] += 1;
        n /= p;
      }
    }
  }
  if (n > 1) factor_into(n, out);
  return out;
}

std::set<Int> prime_support(const Int& n) {
  if (n == 0) throw std::domain_error("prime support of 0");
  std::set<Int> out;
  for (auto& [p, e] : factor(n)) out.insert(p);
  return out;
}

std::set<Int> prime_support(const Rat& x) {
  if (x == 0) throw std::domain_error("prime support of 0");
  std::set<Int> out = prime_support(rat_num(x));
  if (!is_integer(x)) {
    auto den = prime_support(rat_den(x));
    out.insert(den.begin(), den.end());
  }
  return out;
}

std::vector<Int> primes_up_to(unsigned long bound) {
  std::vector<bool> sieve(bound + 1, true);
  std::vector<Int> out;
  for (unsigned long i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(Int(i));
    for (unsigned long j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

std::vector<Rat> s_units(const PrimeSet& s, const Int& height) {
  if (height < 1) throw std::invalid_argument("s_units: height must be positive");
  std::vector<Int> ps(s.primes().begin(), s.primes().end());
  std::vector<Rat> out;
  // weight tracks |num * den| of the partial product
  auto rec = [&](auto&& self, size_t i, Rat acc, Int weight) -> void {
    if (i == ps.size()) {
      out.push_back(acc);
      out.push_back(-acc);
      return;
    }
    self(self, i + 1, acc, weight);
    Rat up = acc;
    for (Int w = weight * ps[i]; w <= height; w *= ps[i]) {
      up *= ps[i];
      self(self, i + 1, up, w);
    }
    Rat down = acc;
    for (Int w = weight * ps[i]; w <= height; w *= ps[i]) {
      down /= ps[i];
      self(self, i + 1, down, w);
    }
  };
  rec(rec, 0, Rat(1), Int(1));
  std::sort(out.begin(), out.end());
  return out;
}

Int squarefree_core(const Rat& x) {
  if (x == 0) throw std::domain_error("squarefree core of 0");
  // core(a/b) = core(a*b): sqrt(a/b) = sqrt(ab)/b.
  Int n = rat_num(x) * rat_den(x);
  Int core = n < 0 ? -1 : 1;
  for (auto& [p, e] : factor(n)) {
    if (e % 2 == 1) core *= p;
  }
  return core;
}

}  // namespace chevweil
