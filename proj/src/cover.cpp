#include "chevweil/cover.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chevweil {
namespace cover {

namespace {

// embeds by variable name into a ring that contains all variables of f
MPoly embed(const MPoly& f, const RingPtr& into) {
  std::vector<MPoly> images;
  images.reserve(f.ring()->size());
  for (const auto& name : f.ring()->vars()) {
    auto idx = into->index_of(name);
    if (!idx) throw std::invalid_argument("embed: missing variable " + name);
    images.push_back(MPoly::variable(into, *idx));
  }
  return f.subst(images);
}

// univariate MPoly (at most one variable used) -> dense coefficients
UPolyQ to_upoly_q(const MPoly& f, size_t var) {
  UPolyQ out;
  for (const auto& [m, c] : f.terms()) {
    for (size_t i = 0; i < m.size(); ++i)
      if (i != var && m.exp(i) != 0)
        throw std::invalid_argument("to_upoly_q: polynomial is not univariate");
    out.set_coeff(m.exp(var), c);
  }
  return out;
}

std::vector<unsigned> units_mod(unsigned n) {
  std::vector<unsigned> u;
  for (unsigned k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) u.push_back(k);
  return u;
}

// z^j reduced mod Phi_n, as a polynomial in the ring variable `zvar`
MPoly power_mod_cyclotomic(unsigned j, const UPolyQ& phi, const RingPtr& ring, size_t zvar) {
  UPolyQ xj;
  xj.set_coeff(j, 1);
  UPolyQ r = upoly_divmod(xj, phi).second;
  MPoly out = MPoly::zero(ring);
  MPoly z = MPoly::variable(ring, zvar);
  for (int i = 0; i <= r.degree(); ++i)
    if (r.coeff(i) != 0) out += MPoly::constant(ring, r.coeff(i)) * z.pow(i);
  return out;
}

std::vector<std::vector<Rat>> sample_presentation(const VarietyPresentation& v, size_t count);

}  // namespace

VarietyPresentation::VarietyPresentation(RingPtr r, std::vector<MPoly> j1_gens,
                                         std::vector<MPoly> j2_gens)
    : ring(std::move(r)),
      j1(ring, std::move(j1_gens)),
      j2(ring, std::move(j2_gens)) {}

bool VarietyPresentation::on_variety(std::span<const Rat> p) const {
  for (const auto& g : j1.gens)
    if (g.eval(p) != 0) return false;
  return true;
}

bool VarietyPresentation::off_boundary(std::span<const Rat> p) const {
  if (j2.gens.empty()) return true;
  for (const auto& g : j2.gens)
    if (g.eval(p) != 0) return true;
  return false;
}

bool ActionElement::is_identity() const {
  for (size_t i = 0; i < images.size(); ++i)
    if (images[i] != MPoly::variable(images[i].ring(), i)) return false;
  return true;
}

std::vector<Rat> ActionElement::apply(std::span<const Rat> p) const {
  std::vector<Rat> out;
  out.reserve(images.size());
  for (const auto& g : images) out.push_back(g.eval(p));
  return out;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Kummer: return "kummer";
    case Family::Parametrized: return "parametrized";
    case Family::PolynomialInY: return "polynomial_in_y";
    case Family::Generic: return "generic";
  }
  return "generic";
}

std::vector<Rat> CoverSpec::project(std::span<const Rat> p) const {
  std::vector<Rat> out;
  out.reserve(map.size());
  for (const auto& g : map) out.push_back(g.eval(p));
  return out;
}

CoverSpec make_kummer(unsigned n) {
  if (n == 0) throw std::invalid_argument("make_kummer: n must be positive");
  auto rs = make_ring({"t", "s"});
  auto rt = make_ring({"u", "v"});
  MPoly t = MPoly::variable(rs, 0), s = MPoly::variable(rs, 1);
  MPoly u = MPoly::variable(rt, 0), v = MPoly::variable(rt, 1);
  VarietyPresentation src(rs, {t * s - MPoly::constant(rs, 1)}, {});
  VarietyPresentation tgt(rt, {u * v - MPoly::constant(rt, 1)}, {});
  CoverSpec c{std::move(src), std::move(tgt), {t.pow(n), s.pow(n)}, n, std::nullopt,
              Family::Kummer, n, std::nullopt};
  return c;
}

CoverSpec make_parametrized(std::vector<std::string> target_vars, std::vector<MPoly> target_j1,
                            std::vector<MPoly> maps, unsigned degree) {
  if (maps.empty()) throw std::invalid_argument("make_parametrized: empty coordinate map");
  auto rs = maps[0].ring();
  if (rs->size() != 1)
    throw std::invalid_argument("make_parametrized: source must have one parameter");
  auto rt = make_ring(std::move(target_vars));
  if (rt->size() != maps.size())
    throw std::invalid_argument("make_parametrized: map arity mismatch");
  VarietyPresentation src(rs, {}, {});
  VarietyPresentation tgt(rt, std::move(target_j1), {});
  CoverSpec c{std::move(src), std::move(tgt), std::move(maps), degree, std::nullopt,
              Family::Parametrized, 0, std::nullopt};
  return c;
}

CoverSpec make_polynomial_in_y(VarietyPresentation target, const std::string& yvar,
                               const UPoly& f) {
  int d = f.degree();
  if (d < 1) throw std::invalid_argument("make_polynomial_in_y: degree must be positive");
  if (!(f.lead() == MPoly::constant(target.ring, 1)))
    throw std::invalid_argument("make_polynomial_in_y: polynomial must be monic");
  std::vector<std::string> vars = target.ring->vars();
  vars.push_back(yvar);
  auto rs = make_ring(std::move(vars));
  size_t yidx = rs->size() - 1;

  std::vector<MPoly> j1, j2;
  for (const auto& g : target.j1.gens) j1.push_back(embed(g, rs));
  for (const auto& g : target.j2.gens) j2.push_back(embed(g, rs));
  MPoly y = MPoly::variable(rs, yidx);
  MPoly fy = MPoly::zero(rs);
  for (int i = 0; i <= d; ++i) fy += embed(f.coeff(i), rs) * y.pow(i);
  j1.push_back(fy);

  std::vector<MPoly> map;
  for (size_t i = 0; i + 1 < rs->size(); ++i) map.push_back(MPoly::variable(rs, i));
  VarietyPresentation src(rs, std::move(j1), std::move(j2));
  CoverSpec c{std::move(src), std::move(target), std::move(map), static_cast<unsigned>(d),
              std::nullopt, Family::PolynomialInY, 0, yidx};
  return c;
}

UPoly fiber_polynomial(const CoverSpec& c) {
  if (c.family == Family::Kummer) {
    MPoly u = MPoly::variable(c.target.ring, 0);
    UPoly f(MPoly::zero(c.target.ring));
    f.set_coeff(0, -u);
    f.set_coeff(c.kummer_n, MPoly::constant(c.target.ring, 1));
    return f;
  }
  if (c.family == Family::PolynomialInY) {
    if (!c.fiber_var) throw std::invalid_argument("fiber_polynomial: no fiber variable");
    const MPoly* defining = nullptr;
    for (const auto& g : c.source.j1.gens)
      if (g.degree_in(*c.fiber_var) > 0) {
        if (defining)
          throw std::invalid_argument("fiber_polynomial: several generators involve the fiber variable");
        defining = &g;
      }
    if (!defining) throw std::invalid_argument("fiber_polynomial: no defining generator");
    UPoly raw = to_upoly(*defining, *c.fiber_var);
    // re-express the coefficients over the declared target ring
    UPoly out(MPoly::zero(c.target.ring));
    for (int i = 0; i <= raw.degree(); ++i) out.set_coeff(i, embed(raw.coeff(i), c.target.ring));
    return out;
  }
  throw std::invalid_argument("fiber_polynomial: family has no fiber polynomial");
}

certify::Ideal fixed_locus_ideal(const VarietyPresentation& w, const ActionElement& g) {
  if (g.images.size() != w.ring->size())
    throw std::invalid_argument("fixed_locus_ideal: arity mismatch");
  if (g.is_identity())
    throw std::domain_error("fixed_locus_ideal: identity fixes everything");
  std::vector<MPoly> gens = w.j1.gens;
  for (size_t i = 0; i < g.images.size(); ++i) {
    MPoly eq = g.images[i] - MPoly::variable(w.ring, i);
    if (!eq.is_zero()) gens.push_back(std::move(eq));
  }
  return certify::Ideal(w.ring, std::move(gens));
}

namespace {

void spot_check_action(const CoverSpec& c) {
  if (!c.action) return;
  auto samples = sample_source_points(c, 8);
  const auto& els = c.action->elements;
  for (const auto& p : samples) {
    std::vector<std::vector<Rat>> orbit;
    for (const auto& g : els) {
      auto q = g.apply(p);
      if (!c.source.on_variety(q))
        throw std::invalid_argument("group action does not preserve the variety (element " +
                                    g.name + ")");
      orbit.push_back(std::move(q));
    }
    // closure under composition, checked pointwise
    for (size_t a = 0; a < els.size(); ++a)
      for (size_t b = 0; b < els.size(); ++b) {
        auto q = els[a].apply(orbit[b]);
        if (std::find(orbit.begin(), orbit.end(), q) == orbit.end())
          throw std::invalid_argument("group action is not closed under composition (" +
                                      els[a].name + " after " + els[b].name + ")");
      }
  }
}

}  // namespace

FpfResult certify_fixed_point_free(const CoverSpec& c, const certify::Bounds& bounds) {
  FpfResult res;
  if (!c.action || c.action->elements.size() <= 1) {
    if (c.degree <= 1) {
      res.status = FpfResult::Status::Certified;
      res.detail = "trivial group";
      return res;
    }
    res.status = FpfResult::Status::Inconclusive;
    res.detail = "no group action attached";
    return res;
  }
  spot_check_action(c);

  std::vector<MPoly> targets = c.source.j2.gens;
  if (targets.empty()) targets.push_back(MPoly::constant(c.source.ring, 1));

  std::vector<std::vector<Rat>> samples;  // filled lazily on first failure
  bool sampled = false;

  for (const auto& g : c.action->elements) {
    if (g.is_identity()) continue;
    certify::Ideal ig = fixed_locus_ideal(c.source, g);
    auto cert = certify::find_certificate(targets, ig.gens, bounds);
    if (cert) {
      res.certificates.emplace_back(g.name, std::move(*cert));
      continue;
    }
    if (!sampled) {
      samples = sample_source_points(c, 64);
      sampled = true;
    }
    for (const auto& p : samples) {
      if (g.apply(p) == p) {
        res.status = FpfResult::Status::Failure;
        res.witness = FixedPointWitness{g.name, p};
        std::ostringstream os;
        os << "element " << g.name << " fixes a rational point";
        res.detail = os.str();
        return res;
      }
    }
    res.status = FpfResult::Status::Inconclusive;
    res.detail = "no certificate for element " + g.name + " within bounds";
    return res;
  }
  res.status = FpfResult::Status::Certified;
  return res;
}

FiberResult certify_constant_fibers(const CoverSpec& c, const certify::Bounds& bounds,
                                    size_t min_samples) {
  FiberResult res;
  if (c.family == Family::Kummer || c.family == Family::PolynomialInY) {
    UPoly f = fiber_polynomial(c);
    MPoly disc = discriminant(f);
    if (disc.is_zero()) {
      res.status = FiberResult::Status::Failure;
      res.detail = "identically inseparable fiber polynomial";
      return res;
    }
    std::vector<MPoly> targets = c.target.j2.gens;
    if (targets.empty()) targets.push_back(MPoly::constant(c.target.ring, 1));
    std::vector<MPoly> gens = c.target.j1.gens;
    gens.push_back(disc);
    auto cert = certify::find_certificate(targets, gens, bounds);
    if (cert) {
      res.status = FiberResult::Status::CertifiedByDiscriminant;
      res.certificate = std::move(*cert);
      if (c.family == Family::Kummer) {
        res.detail = "discriminant of y^" + std::to_string(c.kummer_n) +
                     " - u does not vanish on the base";
      } else {
        res.detail = "fiber discriminant does not vanish on the base";
      }
      return res;
    }
    // no certificate: look for an actual jump in fiber size
    auto pts = sample_target_points(c, std::max<size_t>(min_samples, 25));
    res.samples = pts.size();
    std::optional<std::pair<std::vector<Rat>, size_t>> first;
    for (const auto& v : pts) {
      size_t n = fiber_cardinality(c, v);
      if (!first) {
        first = {v, n};
      } else if (n != first->second) {
        res.status = FiberResult::Status::Failure;
        res.witness = FiberWitness{first->first, first->second, v, n};
        res.detail = "fiber cardinality is not constant";
        return res;
      }
    }
    res.status = FiberResult::Status::Inconclusive;
    res.detail = "no discriminant certificate within bounds";
    return res;
  }
  if (c.family == Family::Parametrized) {
    auto pts = sample_target_points(c, std::max<size_t>(min_samples, 25) * 3);
    if (pts.size() > std::max<size_t>(min_samples, 25)) pts.resize(std::max<size_t>(min_samples, 25));
    res.samples = pts.size();
    if (pts.size() < min_samples) {
      res.status = FiberResult::Status::Inconclusive;
      res.detail = "insufficient rational sample points";
      return res;
    }
    std::optional<std::pair<std::vector<Rat>, size_t>> first;
    for (const auto& v : pts) {
      size_t n = fiber_cardinality(c, v);
      if (!first) {
        first = {v, n};
      } else if (n != first->second) {
        res.status = FiberResult::Status::Failure;
        res.witness = FiberWitness{first->first, first->second, v, n};
        res.detail = "fiber cardinality is not constant";
        return res;
      }
    }
    if (first && first->second != c.degree) {
      res.status = FiberResult::Status::Failure;
      std::ostringstream os;
      os << "constant fiber size " << first->second << " does not match declared degree "
         << c.degree;
      res.detail = os.str();
      return res;
    }
    res.status = FiberResult::Status::CheckedBySampling;
    std::ostringstream os;
    os << "fiber size " << c.degree << " at " << res.samples << " sample points";
    res.detail = os.str();
    return res;
  }
  res.status = FiberResult::Status::Unsupported;
  res.detail = "no fiber method for family " + family_name(c.family);
  return res;
}

CoverCertification certify_cover(const CoverSpec& closed, const certify::Bounds& bounds) {
  CoverCertification out;
  out.fpf = certify_fixed_point_free(closed, bounds);
  out.fibers = certify_constant_fibers(closed, bounds);
  if (out.fpf.status == FpfResult::Status::Failure) {
    out.verdict = CoverCertification::Verdict::NotACover;
    out.reason = "fixed point found: " + out.fpf.detail;
    return out;
  }
  if (out.fibers.status == FiberResult::Status::Failure) {
    out.verdict = CoverCertification::Verdict::NotACover;
    out.reason = "fiber check failed: " + out.fibers.detail;
    return out;
  }
  if (out.fpf.status != FpfResult::Status::Certified) {
    out.verdict = CoverCertification::Verdict::Inconclusive;
    out.reason = "fixed-point-freeness not certified: " + out.fpf.detail;
    return out;
  }
  if (out.fibers.status != FiberResult::Status::CertifiedByDiscriminant &&
      out.fibers.status != FiberResult::Status::CheckedBySampling) {
    out.verdict = CoverCertification::Verdict::Inconclusive;
    out.reason = "constant fibers not certified: " + out.fibers.detail;
    return out;
  }
  out.verdict = CoverCertification::Verdict::IsCover;
  out.reason = "fixed-point-free action with constant fibers";
  return out;
}

namespace {

void add_coeff_primes(const MPoly& f, PrimeSet& s) {
  for (const auto& [m, c] : f.terms())
    for (const auto& p : prime_support(rat_den(c))) s.insert(p);
}

}  // namespace

PrimeSet bad_primes(const CoverSpec& c, const CoverCertification& cert) {
  if (cert.verdict != CoverCertification::Verdict::IsCover)
    throw std::invalid_argument("bad_primes: certification did not succeed");
  PrimeSet s;
  s.set_infinity(true);
  for (const auto& [name, fc] : cert.fpf.certificates) s.merge(certify::denominator_primes(fc));
  if (cert.fibers.certificate) s.merge(certify::denominator_primes(*cert.fibers.certificate));

  for (const auto& g : c.source.j1.gens) add_coeff_primes(g, s);
  for (const auto& g : c.source.j2.gens) add_coeff_primes(g, s);
  for (const auto& g : c.target.j1.gens) add_coeff_primes(g, s);
  for (const auto& g : c.target.j2.gens) add_coeff_primes(g, s);
  for (const auto& g : c.map) add_coeff_primes(g, s);
  if (c.action)
    for (const auto& el : c.action->elements)
      for (const auto& g : el.images) add_coeff_primes(g, s);

  if (c.family == Family::Kummer || c.family == Family::PolynomialInY) {
    UPoly f = fiber_polynomial(c);
    for (int i = 0; i <= f.degree(); ++i) add_coeff_primes(f.coeff(i), s);
  }
  if (c.family == Family::Parametrized) {
    // leading data of the integral dependence of each coordinate
    for (const auto& g : c.map) {
      if (g.total_degree() < 1) continue;
      UPolyQ u = to_upoly_q(g, 0);
      for (const auto& p : prime_support(u.lead())) s.insert(p);
    }
  }
  return s;
}

CoverPipeline certify_pipeline(const CoverSpec& c, const certify::Bounds& bounds) {
  CoverPipeline out(c);
  try {
    out.closed = galois_closure(c);
  } catch (const std::domain_error& e) {
    out.closure_error = e.what();
  }
  if (out.closed) {
    out.cert = certify_cover(*out.closed, bounds);
  } else {
    // fiber degeneracy is visible without a closure; its absence alone
    // never certifies
    out.cert.fibers = certify_constant_fibers(c, bounds);
    out.cert.fpf.status = FpfResult::Status::Inconclusive;
    out.cert.fpf.detail = "no group action available";
    if (out.cert.fibers.status == FiberResult::Status::Failure) {
      out.cert.verdict = CoverCertification::Verdict::NotACover;
      out.cert.reason = "fiber check failed: " + out.cert.fibers.detail;
    } else {
      out.cert.verdict = CoverCertification::Verdict::Inconclusive;
      out.cert.reason = "galois closure unavailable: " + out.closure_error;
    }
  }
  if (out.cert.verdict == CoverCertification::Verdict::IsCover)
    out.s = bad_primes(out.closed ? *out.closed : c, out.cert);
  return out;
}

CoverSpec galois_closure(const CoverSpec& c) {
  if (c.action) return c;  // already closed

  if (c.family == Family::Kummer) {
    unsigned n = c.kummer_n;
    if (n <= 2) {
      CoverSpec out = c;
      auto r = out.source.ring;
      MPoly t = MPoly::variable(r, 0), ss = MPoly::variable(r, 1);
      GroupAction act;
      act.elements.push_back({"id", {t, ss}});
      if (n == 2) act.elements.push_back({"r1", {-t, -ss}});
      out.action = std::move(act);
      out.degree = n;
      return out;
    }
    // adjoin a primitive n-th root of unity as an explicit coordinate
    auto rs = make_ring({"t", "s", "z"});
    MPoly t = MPoly::variable(rs, 0), ss = MPoly::variable(rs, 1), z = MPoly::variable(rs, 2);
    UPolyQ phi = cyclotomic(n);
    MPoly phiz = MPoly::zero(rs);
    for (int i = 0; i <= phi.degree(); ++i)
      if (phi.coeff(i) != 0) phiz += MPoly::constant(rs, phi.coeff(i)) * z.pow(i);
    VarietyPresentation src(rs, {t * ss - MPoly::constant(rs, 1), phiz}, {});

    GroupAction act;
    for (unsigned k : units_mod(n)) {
      for (unsigned j = 0; j < n; ++j) {
        MPoly zt = power_mod_cyclotomic(j, phi, rs, 2);
        MPoly zs = power_mod_cyclotomic((n - j) % n, phi, rs, 2);
        MPoly zz = power_mod_cyclotomic(k, phi, rs, 2);
        std::string name;
        if (j == 0 && k == 1) {
          name = "id";
        } else {
          if (j != 0) name = "r" + std::to_string(j);
          if (k != 1) name += "c" + std::to_string(k);
        }
        act.elements.push_back({std::move(name), {zt * t, zs * ss, zz}});
      }
    }
    unsigned order = static_cast<unsigned>(act.elements.size());
    CoverSpec out{std::move(src), c.target, {t.pow(n), ss.pow(n)}, order, std::move(act),
                  Family::Kummer, n, std::nullopt};
    return out;
  }

  if (c.family == Family::PolynomialInY) {
    if (c.degree == 1) {
      CoverSpec out = c;
      GroupAction act;
      std::vector<MPoly> id;
      for (size_t i = 0; i < out.source.ring->size(); ++i)
        id.push_back(MPoly::variable(out.source.ring, i));
      act.elements.push_back({"id", std::move(id)});
      out.action = std::move(act);
      return out;
    }
    if (c.degree == 2) {
      CoverSpec out = c;
      auto r = out.source.ring;
      UPoly f = fiber_polynomial(c);
      MPoly a1 = embed(f.coeff(1), r);
      std::vector<MPoly> id, conj;
      for (size_t i = 0; i < r->size(); ++i) {
        id.push_back(MPoly::variable(r, i));
        if (i == *out.fiber_var) {
          conj.push_back(-a1 - MPoly::variable(r, i));
        } else {
          conj.push_back(MPoly::variable(r, i));
        }
      }
      GroupAction act;
      act.elements.push_back({"id", std::move(id)});
      act.elements.push_back({"conj", std::move(conj)});
      out.action = std::move(act);
      return out;
    }
    throw std::domain_error(
        "galois_closure: polynomial covers of degree > 2 need an explicit action");
  }

  if (c.family == Family::Parametrized && c.degree == 1) {
    CoverSpec out = c;
    GroupAction act;
    act.elements.push_back({"id", {MPoly::variable(out.source.ring, 0)}});
    out.action = std::move(act);
    return out;
  }

  throw std::domain_error("galois_closure: unsupported family without an explicit action");
}

namespace {

// rational points of an affine grid, diagonal enumeration
std::vector<std::vector<Rat>> affine_grid(size_t nvars, size_t count) {
  std::vector<std::vector<Rat>> out;
  if (nvars == 0) return out;
  for (size_t layer = 0; out.size() < count && layer < 64 * nvars; ++layer) {
    // tuples of sequence indices summing to `layer`
    std::vector<size_t> idx(nvars, 0);
    std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t rem) {
      if (out.size() >= count) return;
      if (pos + 1 == nvars) {
        idx[pos] = rem;
        std::vector<Rat> p;
        p.reserve(nvars);
        for (size_t i = 0; i < nvars; ++i) p.push_back(rational_sequence(idx[i]));
        out.push_back(std::move(p));
        return;
      }
      for (size_t i = 0; i <= rem; ++i) {
        idx[pos] = i;
        rec(pos + 1, rem - i);
      }
    };
    rec(0, layer);
  }
  return out;
}

bool is_hyperbola(const VarietyPresentation& v) {
  if (v.ring->size() != 2 || v.j1.gens.size() != 1) return false;
  MPoly xy1 = MPoly::variable(v.ring, 0) * MPoly::variable(v.ring, 1) -
              MPoly::constant(v.ring, 1);
  return v.j1.gens[0] == xy1 || v.j1.gens[0] == -xy1;
}

std::vector<std::vector<Rat>> sample_presentation(const VarietyPresentation& v, size_t count) {
  std::vector<std::vector<Rat>> out;
  if (is_hyperbola(v)) {
    for (size_t i = 0; i < 4 * count + 4 && out.size() < count; ++i) {
      Rat q = rational_sequence(i);
      if (q == 0) continue;
      std::vector<Rat> p{q, Rat(1) / q};
      if (v.off_boundary(p)) out.push_back(std::move(p));
    }
    return out;
  }
  if (v.j1.gens.empty()) {
    auto grid = affine_grid(v.ring->size(), 4 * count + 4);
    for (auto& p : grid) {
      if (v.off_boundary(p)) out.push_back(std::move(p));
      if (out.size() >= count) break;
    }
    return out;
  }
  return out;  // no generic rational-point sampler
}

}  // namespace

std::vector<std::vector<Rat>> sample_source_points(const CoverSpec& c, size_t count) {
  if (c.family == Family::Kummer) {
    if (c.source.ring->size() != 2) return {};  // cyclotomic closure: no rational points
    return sample_presentation(c.source, count);
  }
  if (c.family == Family::PolynomialInY) {
    std::vector<std::vector<Rat>> out;
    auto base = sample_target_points(c, 4 * count + 4);
    UPoly f = fiber_polynomial(c);
    for (const auto& v : base) {
      UPolyQ fv = specialize(f, v);
      for (const Rat& y : rational_roots(fv)) {
        std::vector<Rat> p = v;
        p.insert(p.begin() + static_cast<long>(*c.fiber_var), y);
        if (c.source.on_variety(p) && c.source.off_boundary(p)) out.push_back(std::move(p));
        if (out.size() >= count) return out;
      }
    }
    return out;
  }
  return sample_presentation(c.source, count);
}

std::vector<std::vector<Rat>> sample_target_points(const CoverSpec& c, size_t count) {
  if (c.family == Family::Parametrized) {
    std::vector<std::vector<Rat>> out;
    auto params = sample_presentation(c.source, 4 * count + 8);
    for (const auto& t : params) {
      auto v = c.project(t);
      if (!c.target.on_variety(v) || !c.target.off_boundary(v)) continue;
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
      if (out.size() >= count) break;
    }
    return out;
  }
  return sample_presentation(c.target, count);
}

size_t fiber_cardinality(const CoverSpec& c, std::span<const Rat> target_point) {
  if (c.family == Family::Kummer || c.family == Family::PolynomialInY) {
    UPoly f = fiber_polynomial(c);
    UPolyQ fv = specialize(f, target_point);
    if (fv.degree() < 1) return 0;
    return static_cast<size_t>(squarefree_part(fv).degree());
  }
  if (c.family == Family::Parametrized) {
    // common roots of map_i(t) = v_i, counted without multiplicity
    std::optional<UPolyQ> g;
    for (size_t i = 0; i < c.map.size(); ++i) {
      UPolyQ u = to_upoly_q(c.map[i], 0);
      u.set_coeff(0, u.coeff(0) - target_point[i]);
      if (!g) {
        g = u;
      } else {
        g = upoly_gcd(*g, u);
      }
    }
    if (!g || g->degree() < 0) throw std::invalid_argument("fiber_cardinality: degenerate fiber");
    if (g->degree() == 0) return 0;
    UPolyQ sf = squarefree_part(*g);
    if (!c.source.j2.gens.empty()) {
      // drop fiber points that land on the source boundary
      std::optional<UPolyQ> b;
      for (const auto& gen : c.source.j2.gens) {
        UPolyQ u = to_upoly_q(gen, 0);
        if (!b) {
          b = u;
        } else {
          b = upoly_gcd(*b, u);
        }
      }
      if (b && b->degree() > 0) {
        UPolyQ shared = upoly_gcd(sf, *b);
        if (shared.degree() > 0) sf = upoly_divmod(sf, shared).first;
      }
    }
    return static_cast<size_t>(sf.degree());
  }
  throw std::invalid_argument("fiber_cardinality: unsupported family");
}

UPolyQ cyclotomic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
  static std::map<unsigned, UPolyQ> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  UPolyQ xn1;  // x^n - 1
  xn1.set_coeff(n, 1);
  xn1.set_coeff(0, -1);
  UPolyQ quotient = xn1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = upoly_divmod(quotient, cyclotomic(d));
    if (r.degree() >= 0) throw std::logic_error("cyclotomic: division failure");
    quotient = q;
  }
  cache.emplace(n, quotient);
  return quotient;
}

}  // namespace cover
}  // namespace chevweil
