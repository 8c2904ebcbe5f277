#include "chevweil/lift.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chevweil {
namespace lift {

namespace {

bool denominators_in(const Rat& x, const PrimeSet& s) {
  for (const auto& p : prime_support(rat_den(x)))
    if (!s.contains(p)) return false;
  return true;
}

bool denominators_in(const UPolyQ& f, const PrimeSet& s) {
  for (int i = 0; i <= f.degree(); ++i)
    if (!denominators_in(f.coeff(i), s)) return false;
  return true;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

UPolyQ x_minus(const Rat& r) {
  UPolyQ f;
  f.set_coeff(0, -r);
  f.set_coeff(1, 1);
  return f;
}

UPolyQ power_poly(unsigned m, const Rat& w) {
  UPolyQ f;
  f.set_coeff(0, -w);
  f.set_coeff(m, 1);
  return f;
}

// canonical order: degree, then coefficients from the top
bool upoly_less(const UPolyQ& a, const UPolyQ& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

}  // namespace

bool is_s_integral(const cover::VarietyPresentation& v, const PointQ& p, const PrimeSet& s) {
  if (p.size() != v.ring->size()) throw std::invalid_argument("is_s_integral: arity mismatch");
  if (!v.on_variety(p)) throw std::invalid_argument("is_s_integral: point is not on the variety");
  if (!v.off_boundary(p)) throw std::invalid_argument("is_s_integral: point lies on the boundary");

  for (const auto& x : p)
    if (!denominators_in(x, s)) return false;

  if (v.boundary_empty()) return true;
  // a p-integral point reduces into the boundary iff p divides every
  // generator value; the gcd of the numerators carries all such primes
  Int g = 0;
  for (const auto& gen : v.j2.gens) {
    Rat val = gen.eval(p);
    Int num = rat_num(val);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) throw std::logic_error("is_s_integral: boundary contact over Q");
  for (const auto& q : prime_support(g))
    if (!s.contains(q)) return false;
  return true;
}

std::vector<std::pair<UPolyQ, bool>> split_power_relation(const Rat& u, unsigned n) {
  if (n == 0 || u == 0) throw std::invalid_argument("split_power_relation: degenerate relation");
  std::vector<std::pair<UPolyQ, bool>> out;
  std::vector<UPolyQ> cofactors;
  std::vector<std::pair<unsigned, Rat>> work{{n, u}};
  while (!work.empty()) {
    auto [m, w] = work.back();
    work.pop_back();
    if (m == 1) {
      out.emplace_back(x_minus(w), true);
      continue;
    }
    bool split = false;
    for (unsigned q : prime_divisors(m)) {
      if (q % 2 == 0 && w < 0) continue;
      if (auto w0 = exact_root(w, q)) {
        UPolyQ pure = power_poly(m / q, *w0);
        auto [cof, rem] = upoly_divmod(power_poly(m, w), pure);
        if (!rem.is_zero()) throw std::logic_error("split_power_relation: inexact split");
        work.emplace_back(m / q, *w0);
        cofactors.push_back(std::move(cof));
        split = true;
        break;
      }
    }
    if (split) continue;
    if (m % 4 == 0) {
      if (auto r = exact_root(Rat(-4) * w, 4)) {
        // w = -4a^4: x^m + 4a^4 = (x^{m/2} - 2a x^{m/4} + 2a^2)(x^{m/2} + 2a x^{m/4} + 2a^2)
        Rat a = *r / 2;
        UPolyQ f1, f2;
        f1.set_coeff(m / 2, 1);
        f1.set_coeff(m / 4, -2 * a);
        f1.set_coeff(0, 2 * a * a);
        f2.set_coeff(m / 2, 1);
        f2.set_coeff(m / 4, 2 * a);
        f2.set_coeff(0, 2 * a * a);
        cofactors.push_back(std::move(f1));
        cofactors.push_back(std::move(f2));
        continue;
      }
    }
    // no exact root and no biquadratic identity: irreducible over Q
    out.emplace_back(power_poly(m, w), true);
  }
  for (auto& cof : cofactors) {
    UPolyQ rest = cof;
    for (const Rat& r : rational_roots(cof)) {
      while (rest.degree() >= 1) {
        auto [q2, rem2] = upoly_divmod(rest, x_minus(r));
        if (!rem2.is_zero()) break;
        rest = q2;
        out.emplace_back(x_minus(r), true);
      }
    }
    if (rest.degree() >= 1) {
      bool known = rest.degree() <= 3 || numfield::certify_irreducible(rest);
      out.emplace_back(std::move(rest), known);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return upoly_less(a.first, b.first); });
  return out;
}

namespace {

LiftedPoint make_lift(const PointQ& target, const UPolyQ& dep, bool irreducible_known) {
  LiftedPoint lp;
  lp.target = target;
  lp.dependence = dep;
  lp.minpoly = numfield::integral_model(dep);
  lp.minpoly.may_be_reducible = !irreducible_known;
  return lp;
}

std::vector<LiftedPoint> lift_kummer(const cover::CoverSpec& c, const PointQ& v) {
  Rat u = v[0];
  unsigned n = c.kummer_n;
  std::vector<LiftedPoint> lifts;
  for (const auto& [f, known] : split_power_relation(u, n)) {
    LiftedPoint lp = make_lift(v, f, known);
    UPolyQ xp;
    xp.set_coeff(1, 1);
    lp.coords.push_back(upoly_divmod(xp, f).second);  // t = theta
    UPolyQ xn1;
    xn1.set_coeff(n - 1, 1);
    lp.coords.push_back(upoly_divmod(xn1, f).second.scaled(Rat(1) / u));  // s = theta^(n-1)/u
    if (f.degree() == 1) {
      Rat t0 = -f.coeff(0);
      lp.rational = PointQ{t0, Rat(1) / t0};
    }
    lifts.push_back(std::move(lp));
  }
  return lifts;
}

std::vector<LiftedPoint> lift_polynomial_in_y(const cover::CoverSpec& c, const PointQ& v) {
  UPolyQ fv = specialize(cover::fiber_polynomial(c), v);
  if (fv.degree() < 1) throw std::invalid_argument("lift_point: degenerate fiber");
  size_t yidx = *c.fiber_var;

  std::vector<std::pair<UPolyQ, bool>> pieces;
  UPolyQ rest = fv;
  for (const Rat& r : rational_roots(fv)) {
    while (rest.degree() >= 1) {
      auto [q, rem] = upoly_divmod(rest, x_minus(r));
      if (!rem.is_zero()) break;
      rest = q;
      pieces.emplace_back(x_minus(r), true);
    }
  }
  if (rest.degree() >= 1) {
    bool known = rest.degree() <= 3 || numfield::certify_irreducible(rest);
    pieces.emplace_back(std::move(rest), known);
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& a, const auto& b) { return upoly_less(a.first, b.first); });

  std::vector<LiftedPoint> lifts;
  for (const auto& [f, known] : pieces) {
    LiftedPoint lp = make_lift(v, f, known);
    for (size_t i = 0; i < v.size() + 1; ++i) {
      UPolyQ ci;
      if (i == yidx) {
        UPolyQ xp;
        xp.set_coeff(1, 1);
        ci = upoly_divmod(xp, f).second;
      } else {
        ci.set_coeff(0, v[i < yidx ? i : i - 1]);
      }
      lp.coords.push_back(std::move(ci));
    }
    if (f.degree() == 1) {
      PointQ p = v;
      p.insert(p.begin() + (long)yidx, -f.coeff(0));
      lp.rational = std::move(p);
    }
    lifts.push_back(std::move(lp));
  }
  return lifts;
}

std::vector<LiftedPoint> lift_parametrized(const cover::CoverSpec& c, const PointQ& v) {
  if (c.degree != 1)
    throw std::domain_error("lift_point: parametrized lifting requires degree 1");
  std::optional<UPolyQ> g;
  for (size_t i = 0; i < c.map.size(); ++i) {
    UPolyQ mi;
    for (const auto& [mono, coeff] : c.map[i].terms()) mi.set_coeff(mono.exp(0), coeff);
    mi.set_coeff(0, mi.coeff(0) - v[i]);
    if (!g) {
      g = mi;
    } else {
      g = upoly_gcd(*g, mi);
    }
  }
  if (!g || g->degree() < 1) throw std::invalid_argument("lift_point: empty fiber");
  UPolyQ sf = squarefree_part(*g);

  std::optional<Rat> t0;
  for (const Rat& r : rational_roots(sf)) {
    PointQ p{r};
    if (!c.source.off_boundary(p)) continue;
    t0 = r;
    break;
  }
  if (!t0) throw std::invalid_argument("lift_point: no rational preimage found");

  // the monic integral dependence comes from the lowest-degree
  // nonconstant coordinate of the parametrization
  std::optional<UPolyQ> dep;
  for (const auto& m : c.map) {
    if (m.total_degree() < 1) continue;
    UPolyQ mi;
    for (const auto& [mono, coeff] : m.terms()) mi.set_coeff(mono.exp(0), coeff);
    mi.set_coeff(0, mi.coeff(0) - v[&m - c.map.data()]);
    if (!dep || mi.degree() < dep->degree()) dep = mi.scaled(Rat(1) / mi.lead());
  }
  if (!dep) throw std::logic_error("lift_point: constant parametrization");

  LiftedPoint lp;
  lp.target = v;
  lp.dependence = *dep;
  lp.minpoly = numfield::integral_model(x_minus(*t0));
  UPolyQ c0;
  c0.set_coeff(0, *t0);
  lp.coords.push_back(std::move(c0));
  lp.rational = PointQ{*t0};
  return {std::move(lp)};
}

}  // namespace

std::vector<LiftedPoint> lift_point(const cover::CoverSpec& c, const PointQ& target_point) {
  if (target_point.size() != c.target.ring->size())
    throw std::invalid_argument("lift_point: arity mismatch");
  if (!c.target.on_variety(target_point))
    throw std::invalid_argument("lift_point: point is not on the target");
  if (!c.target.off_boundary(target_point))
    throw std::domain_error("lift_point: point lies on the boundary");

  switch (c.family) {
    case cover::Family::Kummer: return lift_kummer(c, target_point);
    case cover::Family::PolynomialInY: return lift_polynomial_in_y(c, target_point);
    case cover::Family::Parametrized: return lift_parametrized(c, target_point);
    case cover::Family::Generic: break;
  }
  throw std::domain_error("lift_point: no lifting method for this family");
}

bool lift_is_s_integral(const LiftedPoint& lp, const PrimeSet& s) {
  if (!denominators_in(lp.dependence, s)) return false;
  for (const auto& ci : lp.coords)
    if (!denominators_in(ci, s)) return false;
  return true;
}

std::vector<bool> lift_integrality_report(const cover::CoverSpec& c, const PointQ& target_point,
                                          const PrimeSet& s,
                                          const std::vector<LiftedPoint>& lifts) {
  if (!is_s_integral(c.target, target_point, s))
    throw std::invalid_argument("lift_integrality_report: base point is not S-integral");
  std::vector<bool> out;
  out.reserve(lifts.size());
  for (const auto& lp : lifts) out.push_back(lift_is_s_integral(lp, s));
  return out;
}

std::string lifted_point_str(const LiftedPoint& lp) {
  std::ostringstream os;
  if (lp.rational) {
    os << "(";
    for (size_t i = 0; i < lp.rational->size(); ++i) {
      if (i) os << ", ";
      os << rat_str((*lp.rational)[i]);
    }
    os << ")";
    return os.str();
  }
  os << "theta with " << upoly_str(lp.dependence, "theta") << " = 0";
  if (lp.minpoly.may_be_reducible) os << " (irreducibility not certified)";
  return os.str();
}

}  // namespace lift
}  // namespace chevweil
