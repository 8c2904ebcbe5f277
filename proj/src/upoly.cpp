#include "chevweil/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "chevweil/primes.hpp"

namespace chevweil {

Rat upoly_eval(const UPolyQ& f, const Rat& x) {
  Rat acc = 0;
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.coeff((size_t)i);
  return acc;
}

std::pair<UPolyQ, UPolyQ> upoly_divmod(const UPolyQ& f, const UPolyQ& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  UPolyQ q(Rat(0)), r = f;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    size_t shift = (size_t)(r.degree() - g.degree());
    Rat c = r.lead() / g.lead();
    UPolyQ t(Rat(0));
    t.set_coeff(shift, c);
    q = q + t;
    r = r - t * g;
  }
  return {q, r};
}

UPolyQ upoly_gcd(UPolyQ a, UPolyQ b) {
  while (!b.is_zero()) {
    auto [q, r] = upoly_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.lead() != 1) a = a.scaled(Rat(1) / a.lead());
  return a;
}

UPolyQ squarefree_part(const UPolyQ& f) {
  if (f.is_zero()) throw std::domain_error("squarefree part of zero");
  if (f.degree() == 0) return upoly_q({Rat(1)});
  UPolyQ g = upoly_gcd(f, f.derivative());
  auto [q, r] = upoly_divmod(f, g);
  assert(r.is_zero());
  if (!q.is_zero() && q.lead() != 1) q = q.scaled(Rat(1) / q.lead());
  return q;
}

namespace {

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out = {Int(1)};
  for (auto& [p, e] : factor(n)) {
    size_t base = out.size();
    Int pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<Rat> rational_roots(const UPolyQ& f) {
  if (f.is_zero()) throw std::domain_error("roots of zero polynomial");
  std::vector<Rat> roots;
  UPolyQ g = f;
  // strip powers of x
  if (g.coeff(0) == 0) {
    roots.push_back(Rat(0));
    while (g.coeff(0) == 0 && g.degree() > 0) {
      std::vector<Rat> shifted;
      for (size_t i = 1; i <= (size_t)g.degree(); ++i) shifted.push_back(g.coeff(i));
      g = upoly_q(std::move(shifted));
    }
  }
  if (g.degree() >= 1) {
    // integer model: multiply by the lcm of the denominators
    Int lcm = 1;
    for (size_t i = 0; i <= (size_t)g.degree(); ++i) {
      Int d = rat_den(g.coeff(i));
      Int gcd;
      mpz_gcd(gcd.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
      lcm = lcm / gcd * d;
    }
    std::vector<Int> ic;
    for (size_t i = 0; i <= (size_t)g.degree(); ++i) {
      Rat c = g.coeff(i) * Rat(lcm);
      ic.push_back(rat_num(c));
    }
    for (const Int& p : divisors(ic.front())) {
      for (const Int& q : divisors(ic.back())) {
        for (int s : {1, -1}) {
          Rat cand(s * p, q);
          cand.canonicalize();
          if (upoly_eval(g, cand) == 0) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

UPoly to_upoly(const MPoly& f, size_t var_idx) {
  const RingPtr& ring = f.ring();
  if (var_idx >= ring->size()) throw std::out_of_range("to_upoly variable");
  std::vector<std::string> base_vars;
  for (size_t i = 0; i < ring->size(); ++i)
    if (i != var_idx) base_vars.push_back(ring->var(i));
  RingPtr base = make_ring(base_vars);
  UPoly out(MPoly::zero(base));
  for (const auto& [m, c] : f.terms()) {
    uint32_t e = m.exp(var_idx);
    std::vector<uint32_t> rest;
    for (size_t i = 0; i < m.size(); ++i)
      if (i != var_idx) rest.push_back(m.exp(i));
    MPoly cur = out.coeff(e);
    cur.add_term(Mono(std::move(rest)), c);
    out.set_coeff(e, std::move(cur));
  }
  return out;
}

MPoly from_upoly(const UPoly& f, const RingPtr& ring, size_t var_idx) {
  MPoly out(ring);
  for (size_t e = 0; e < (size_t)(f.degree() + 1); ++e) {
    for (const auto& [m, c] : f.coeff(e).terms()) {
      std::vector<uint32_t> exps;
      size_t k = 0;
      for (size_t i = 0; i < ring->size(); ++i) {
        if (i == var_idx) exps.push_back((uint32_t)e);
        else exps.push_back(m.exp(k++));
      }
      out.add_term(Mono(std::move(exps)), c);
    }
  }
  return out;
}

UPolyQ specialize(const UPoly& f, std::span<const Rat> point) {
  std::vector<Rat> c;
  for (int i = 0; i <= f.degree(); ++i) c.push_back(f.coeff((size_t)i).eval(point));
  return upoly_q(std::move(c));
}

UPolyQ constant_coeffs(const UPoly& f) {
  std::vector<Rat> c;
  for (int i = 0; i <= f.degree(); ++i) {
    const MPoly& ci = f.coeff((size_t)i);
    if (!ci.is_constant()) throw std::domain_error("non-constant coefficient");
    c.push_back(ci.constant_term());
  }
  return upoly_q(std::move(c));
}

std::string upoly_str(const UPolyQ& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    Rat c = f.coeff((size_t)i);
    if (c == 0) continue;
    bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    if (i == 0) {
      out << rat_str(c);
    } else {
      if (c != 1) out << rat_str(c) << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace chevweil
