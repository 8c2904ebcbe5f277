#include "chevweil/numfield.hpp"

#include <sstream>
#include <stdexcept>

#include "chevweil/fppoly.hpp"

namespace chevweil {
namespace numfield {

MinPoly::MinPoly(std::vector<Int> c) : coeffs(std::move(c)) {
  if (coeffs.size() < 2) throw std::invalid_argument("MinPoly: degree must be positive");
  if (coeffs.back() != 1) throw std::invalid_argument("MinPoly: polynomial must be monic");
}

MinPoly integral_model(const UPolyQ& f) {
  int d = f.degree();
  if (d < 1) throw std::invalid_argument("integral_model: degree must be positive");
  if (f.lead() != 1) throw std::invalid_argument("integral_model: polynomial must be monic");
  Int c = 1;
  for (int i = 0; i < d; ++i) {
    Int den = rat_den(f.coeff(i));
    mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), den.get_mpz_t());
  }
  // x -> x/c: coefficient of x^i becomes a_i * c^(d-i)
  std::vector<Int> coeffs(d + 1);
  Int pw = 1;
  for (int i = d; i >= 0; --i) {
    Rat v = f.coeff(i) * Rat(pw);
    if (!is_integer(v)) throw std::logic_error("integral_model: clearing failed");
    coeffs[i] = rat_num(v);
    pw *= c;
  }
  MinPoly m(std::move(coeffs));
  m.scale = c;
  return m;
}

std::string verdict_name(RamVerdict v) {
  switch (v) {
    case RamVerdict::Unramified: return "Unramified";
    case RamVerdict::Ramified: return "Ramified";
    case RamVerdict::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

namespace {

std::vector<Int> lift_fp(const FpPoly& f) {
  std::vector<Int> out(f.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = Int((unsigned long)f.coeffs()[i]);
  return out;
}

std::vector<Int> mul_z(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

bool dedekind_p_maximal(const MinPoly& m, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("dedekind_p_maximal: p must be prime");
  uint64_t pp = (uint64_t)mpz_get_ui(p.get_mpz_t());
  FpPoly mbar = FpPoly::reduce(m.coeffs, pp);
  FactorModP fac = factor_mod_p(mbar);

  FpPoly gstar = FpPoly::constant(pp, 1);
  for (const auto& [g, e] : fac.factors) gstar = gstar * g;
  FpPoly hstar = FpPoly::divmod(mbar, gstar).first;

  // T = (g* h* - m) / p over Z, with the canonical lifts in [0, p)
  std::vector<Int> prod = mul_z(lift_fp(gstar), lift_fp(hstar));
  std::vector<Int> t(m.coeffs.size(), Int(0));
  if (prod.size() < t.size()) prod.resize(t.size(), Int(0));
  for (size_t i = 0; i < prod.size(); ++i) {
    Int num = prod[i] - (i < m.coeffs.size() ? m.coeffs[i] : Int(0));
    if (num % p != 0) throw std::logic_error("dedekind_p_maximal: lift mismatch");
    if (i < t.size()) {
      t[i] = num / p;
    } else if (num != 0) {
      throw std::logic_error("dedekind_p_maximal: degree overflow");
    }
  }
  FpPoly tbar = FpPoly::reduce(t, pp);
  FpPoly d = FpPoly::gcd(FpPoly::gcd(tbar, gstar), hstar);
  return d.degree() == 0;
}

RamResult ramification_verdict(const MinPoly& m, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("ramification_verdict: p must be prime");
  if (p >= Int(1) << 31)
    return {RamVerdict::Undetermined, "prime exceeds the factorization range"};
  if (m.scale % p == 0)
    return {RamVerdict::Undetermined, "prime divides the denominator-clearing scale"};

  uint64_t pp = (uint64_t)mpz_get_ui(p.get_mpz_t());
  FactorModP fac = factor_mod_p(FpPoly::reduce(m.coeffs, pp));
  if (fac.squarefree) {
    // a squarefree reduction is unramified even when m splits over Q
    return {RamVerdict::Unramified, "squarefree modulo p"};
  }
  if (m.may_be_reducible)
    return {RamVerdict::Undetermined, "defining polynomial may be reducible"};
  if (dedekind_p_maximal(m, p))
    return {RamVerdict::Ramified, "repeated factor modulo p in a p-maximal order"};
  return {RamVerdict::Undetermined, "order not " + p.get_str() + "-maximal"};
}

UPolyQ minpoly_to_upoly(const MinPoly& m) {
  UPolyQ f;
  for (size_t i = 0; i < m.coeffs.size(); ++i) f.set_coeff(i, Rat(m.coeffs[i]));
  return f;
}

Int poly_discriminant(const MinPoly& m) {
  Rat d = discriminant(minpoly_to_upoly(m));
  if (!is_integer(d)) throw std::logic_error("poly_discriminant: non-integral value");
  return rat_num(d);
}

PrimeSet poly_discriminant_primes(const MinPoly& m) {
  Int d = poly_discriminant(m);
  PrimeSet s;
  s.set_infinity(true);
  if (d == 0) throw std::invalid_argument("poly_discriminant_primes: inseparable polynomial");
  for (const auto& p : prime_support(d)) s.insert(p);
  return s;
}

RamVerdict quadratic_oracle(const Int& d, const Int& p) {
  if (d == 0 || d == 1) throw std::invalid_argument("quadratic_oracle: d must define a field");
  if (squarefree_core(Rat(d)) != d)
    throw std::invalid_argument("quadratic_oracle: d must be squarefree");
  if (!is_prime(p)) throw std::invalid_argument("quadratic_oracle: p must be prime");
  Int m4 = ((d % 4) + 4) % 4;
  Int disc = (m4 == 1) ? d : 4 * d;
  return disc % p == 0 ? RamVerdict::Ramified : RamVerdict::Unramified;
}

bool certify_irreducible(const UPolyQ& f) {
  if (f.degree() == 1) return true;
  if (f.degree() < 1 || f.lead() != 1) return false;
  for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul,
                          37ul, 41ul, 43ul, 47ul, 53ul, 59ul, 61ul, 67ul}) {
    bool ok = true;
    for (int i = 0; i < f.degree() && ok; ++i)
      if (rat_den(f.coeff(i)) % Int(q) == 0) ok = false;
    if (!ok) continue;
    FactorModP fac = factor_mod_p(FpPoly::reduce(f, q));
    if (fac.factors.size() == 1 && fac.factors[0].second == 1 &&
        fac.factors[0].first.degree() == f.degree())
      return true;
  }
  return false;
}

std::string minpoly_str(const MinPoly& m, const std::string& var) {
  return upoly_str(minpoly_to_upoly(m), var);
}

}  // namespace numfield
}  // namespace chevweil
