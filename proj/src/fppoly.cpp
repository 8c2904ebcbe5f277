#include "chevweil/fppoly.hpp"

#include "chevweil/primes.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace chevweil {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return (uint64_t)((unsigned __int128)a * b % p);
}

uint64_t invmod(uint64_t a, uint64_t p) {
  int64_t t = 0, newt = 1;
  int64_t r = (int64_t)p, newr = (int64_t)(a % p);
  while (newr != 0) {
    int64_t q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  if (t < 0) t += (int64_t)p;
  return (uint64_t)t;
}

}  // namespace

FpPoly::FpPoly(uint64_t p, std::vector<uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  normalize();
}

void FpPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::x(uint64_t p) { return FpPoly(p, {0, 1}); }

FpPoly FpPoly::constant(uint64_t p, uint64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::reduce(const UPolyQ& f, uint64_t p) {
  std::vector<uint64_t> c;
  for (int i = 0; i <= f.degree(); ++i) c.push_back(rat_mod_p(f.coeff((size_t)i), p));
  return FpPoly(p, std::move(c));
}

FpPoly FpPoly::reduce(const std::vector<Int>& coeffs, uint64_t p) {
  std::vector<uint64_t> c;
  for (const Int& k : coeffs) c.push_back(mpz_fdiv_ui(k.get_mpz_t(), p));
  return FpPoly(p, std::move(c));
}

uint64_t FpPoly::lead() const {
  if (c_.empty()) throw std::domain_error("lead of zero polynomial");
  return c_.back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = (coeff(i) + o.coeff(i)) % p_;
  return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  std::vector<uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = (coeff(i) + p_ - o.coeff(i)) % p_;
  return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return FpPoly(p_);
  std::vector<uint64_t> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] = (c[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
  return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  uint64_t inv = invmod(lead(), p_);
  std::vector<uint64_t> c = c_;
  for (auto& k : c) k = mulmod(k, inv, p_);
  return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::derivative() const {
  std::vector<uint64_t> c;
  for (size_t i = 1; i < c_.size(); ++i) c.push_back(mulmod(c_[i], i % p_, p_));
  return FpPoly(p_, std::move(c));
}

uint64_t FpPoly::eval(uint64_t x) const {
  uint64_t acc = 0;
  x %= p_;
  for (size_t i = c_.size(); i-- > 0;) acc = (mulmod(acc, x, p_) + c_[i]) % p_;
  return acc;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  FpPoly r = a;
  std::vector<uint64_t> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, 0);
  uint64_t inv = invmod(b.lead(), a.p_);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    size_t shift = (size_t)(r.degree() - b.degree());
    uint64_t c = mulmod(r.lead(), inv, a.p_);
    q[shift] = c;
    for (size_t i = 0; i < b.c_.size(); ++i) {
      uint64_t sub = mulmod(c, b.c_[i], a.p_);
      r.c_[i + shift] = (r.c_[i + shift] + a.p_ - sub) % a.p_;
    }
    r.normalize();
  }
  return {FpPoly(a.p_, std::move(q)), r};
}

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly FpPoly::powmod(const FpPoly& a, const Int& e, const FpPoly& m) {
  FpPoly base = divmod(a, m).second;
  FpPoly acc = constant(a.p_, 1);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    acc = divmod(acc * acc, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = divmod(acc * base, m).second;
  }
  return acc;
}

bool FpPoly::operator<(const FpPoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::string FpPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) out << " + ";
    if (i == 0) {
      out << c_[i];
    } else {
      if (c_[i] != 1) out << c_[i] << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

namespace {

// x^(p^k) mod f via iterated Frobenius
FpPoly frobenius_power(const FpPoly& f, unsigned k) {
  uint64_t p = f.p();
  FpPoly h = FpPoly::powmod(FpPoly::x(p), Int((unsigned long)p), f);
  for (unsigned i = 1; i < k; ++i) h = FpPoly::powmod(h, Int((unsigned long)p), f);
  return h;
}

// f monic squarefree with all irreducible factors of degree d.
void equal_degree_split(const FpPoly& f, unsigned d, std::vector<FpPoly>& out,
                        std::mt19937_64& rng) {
  if (f.degree() == (int)d) {
    out.push_back(f);
    return;
  }
  uint64_t p = f.p();
  while (true) {
    std::vector<uint64_t> rnd((size_t)f.degree(), 0);
    for (auto& c : rnd) c = rng() % p;
    FpPoly a(p, std::move(rnd));
    if (a.is_zero()) continue;
    FpPoly g = FpPoly::gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, out, rng);
      equal_degree_split(FpPoly::divmod(f, g).first, d, out, rng);
      return;
    }
    FpPoly b(p);
    if (p == 2) {
      // trace map sum_{i<d} a^(2^i) mod f
      FpPoly t = a, acc = a;
      for (unsigned i = 1; i < d; ++i) {
        t = FpPoly::divmod(t * t, f).second;
        acc = acc + t;
      }
      b = acc;
    } else {
      Int e = 1;
      for (unsigned i = 0; i < d; ++i) e *= (unsigned long)p;
      e = (e - 1) / 2;
      b = FpPoly::powmod(a, e, f) - FpPoly::constant(p, 1);
    }
    g = FpPoly::gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, out, rng);
      equal_degree_split(FpPoly::divmod(f, g).first, d, out, rng);
      return;
    }
  }
}

// distinct-degree then equal-degree factorization of a monic squarefree f
void factor_squarefree(FpPoly f, std::vector<FpPoly>& out, std::mt19937_64& rng) {
  uint64_t p = f.p();
  FpPoly h = FpPoly::x(p);
  for (unsigned d = 1; f.degree() > 0 && 2 * (int)d <= f.degree(); ++d) {
    h = FpPoly::powmod(h, Int((unsigned long)p), f);
    FpPoly g = FpPoly::gcd(h - FpPoly::x(p), f);
    if (g.degree() > 0) {
      equal_degree_split(g, d, out, rng);
      f = FpPoly::divmod(f, g).first;
      h = FpPoly::divmod(h, f).second;
    }
  }
  if (f.degree() > 0) out.push_back(f);
}

// p-th root of f when f' == 0: f(x) = g(x^p) and g has the same
// coefficients (Frobenius fixes F_p).
FpPoly pth_root(const FpPoly& f) {
  uint64_t p = f.p();
  std::vector<uint64_t> c;
  for (size_t i = 0; i <= (size_t)f.degree(); i += (size_t)p) c.push_back(f.coeff(i));
  return FpPoly(p, std::move(c));
}

void squarefree_decompose(const FpPoly& f, unsigned mult,
                          std::vector<std::pair<FpPoly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  uint64_t p = f.p();
  FpPoly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_decompose(pth_root(f), mult * (unsigned)p, out);
    return;
  }
  FpPoly g = FpPoly::gcd(f, fp);
  FpPoly w = FpPoly::divmod(f, g).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    FpPoly y = FpPoly::gcd(w, g);
    FpPoly z = FpPoly::divmod(w, y).first;
    if (z.degree() > 0) out.emplace_back(z, mult * i);
    w = y;
    g = FpPoly::divmod(g, y).first;
    ++i;
  }
  if (g.degree() > 0) squarefree_decompose(g, mult, out);
}

}  // namespace

FactorModP factor_mod_p(const FpPoly& f_in) {
  if (f_in.is_zero()) throw std::domain_error("factor of zero polynomial");
  uint64_t p = f_in.p();
  FpPoly f = f_in.monic();
  FactorModP result;
  if (f.degree() == 0) {
    result.squarefree = true;
    return result;
  }
  // deterministic rng seeded from the input
  uint64_t seed = p * 1000003ull;
  for (uint64_t c : f.coeffs()) seed = seed * 131 + c + 17;
  std::mt19937_64 rng(seed);

  std::vector<std::pair<FpPoly, unsigned>> sqf;
  squarefree_decompose(f, 1, sqf);
  std::vector<std::pair<FpPoly, unsigned>> factors;
  for (auto& [part, mult] : sqf) {
    std::vector<FpPoly> irr;
    factor_squarefree(part, irr, rng);
    for (auto& g : irr) factors.emplace_back(g, mult);
  }
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    if (!(a.first == b.first)) return a.first < b.first;
    return a.second < b.second;
  });
  // merge duplicates (can arise from distinct squarefree parts only when
  // multiplicities differ, but be safe)
  std::vector<std::pair<FpPoly, unsigned>> merged;
  for (auto& fm : factors) {
    if (!merged.empty() && merged.back().first == fm.first) merged.back().second += fm.second;
    else merged.push_back(fm);
  }
  result.factors = std::move(merged);
  result.squarefree = true;
  for (auto& [g, m] : result.factors)
    if (m > 1) result.squarefree = false;
  return result;
}

FactorModP factor_mod_p(const UPolyQ& f, const Int& p) {
  if (p <= 1 || !is_prime(p)) throw std::domain_error("p must be prime");
  if (!p.fits_ulong_p() || p.get_ui() > (1ull << 31))
    throw std::domain_error("prime too large for mod-p factorization");
  uint64_t pu = p.get_ui();
  if (f.is_zero()) throw std::domain_error("factor of zero polynomial");
  if (rat_mod_p(f.lead(), pu) == 0)
    throw std::domain_error("leading coefficient vanishes mod p");
  return factor_mod_p(FpPoly::reduce(f, pu));
}

}  // namespace chevweil
