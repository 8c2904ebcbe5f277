#include "chevweil/fermat.hpp"

#include <sstream>
#include <stdexcept>

namespace chevweil {
namespace fermat {

void validate(const FermatSignature& sig) {
  if (sig.a == 0 || sig.b == 0 || sig.c == 0)
    throw std::invalid_argument("fermat: coefficients must be nonzero");
  if (sig.p < 2 || sig.q < 2 || sig.r < 2)
    throw std::invalid_argument("fermat: exponents must be >= 2");
}

const char* triangle_class_name(TriangleClass t) {
  switch (t) {
    case TriangleClass::Hyperbolic: return "hyperbolic";
    case TriangleClass::Euclidean: return "euclidean";
    case TriangleClass::Spherical: return "spherical";
  }
  return "?";
}

TriangleClass classify(const FermatSignature& sig) {
  validate(sig);
  Rat sum = Rat(1, sig.p) + Rat(1, sig.q) + Rat(1, sig.r);
  if (sum < 1) return TriangleClass::Hyperbolic;
  if (sum == 1) return TriangleClass::Euclidean;
  return TriangleClass::Spherical;
}

namespace {

Int ipow(const Int& base, unsigned e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Int gcd3(const Int& x, const Int& y, const Int& z) {
  Int g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  return g;
}

}  // namespace

bool satisfies(const FermatSignature& sig, const Int& x, const Int& y, const Int& z) {
  return sig.a * ipow(x, sig.p) + sig.b * ipow(y, sig.q) == sig.c * ipow(z, sig.r);
}

BetaValue beta(const FermatSignature& sig, const Solution& s) {
  validate(sig);
  BetaValue out;
  if (s.z == 0) {
    out.infinite = true;
    out.flagged = true;
    return out;
  }
  out.value = Rat(sig.a * ipow(s.x, sig.p)) / Rat(sig.c * ipow(s.z, sig.r));
  out.flagged = (out.value == 0 || out.value == 1);
  return out;
}

std::vector<Solution> search(const FermatSignature& sig, const Int& bound) {
  validate(sig);
  if (bound < 1) throw std::invalid_argument("search: bound must be >= 1");
  std::vector<Solution> out;
  for (Int x = -bound; x <= bound; ++x) {
    Int ax = sig.a * ipow(x, sig.p);
    for (Int y = -bound; y <= bound; ++y) {
      Int w = ax + sig.b * ipow(y, sig.q);
      if (w % sig.c != 0) continue;
      Int zr = w / sig.c;
      std::vector<Int> zs;
      if (zr == 0) {
        zs.push_back(0);
      } else if (auto z0 = exact_root(zr, sig.r)) {
        if (sig.r % 2 == 0) {
          zs.push_back(-*z0);
          zs.push_back(*z0);
        } else {
          zs.push_back(*z0);
        }
      }
      for (const Int& z : zs) {
        if (z < -bound || z > bound) continue;
        if (gcd3(x, y, z) != 1) continue;
        Solution sol{x, y, z, {}};
        sol.beta_value = beta(sig, sol);
        out.push_back(std::move(sol));
      }
    }
  }
  return out;
}

FiberStructure fiber_structure(const FermatSignature& sig, const Rat& beta0) {
  validate(sig);
  if (beta0 == 0 || beta0 == 1)
    throw std::domain_error("fiber_structure: beta lies in the multiple-fiber locus");
  FiberStructure fs;
  fs.wx = sig.q * sig.r;
  fs.wy = sig.p * sig.r;
  fs.wz = sig.p * sig.q;
  for (const auto& sol : search(sig, 12)) {
    for (long lam : {-3l, -2l, -1l, 1l, 2l, 3l}) {
      Int lx = ipow(Int(lam), fs.wx) * sol.x;
      Int ly = ipow(Int(lam), fs.wy) * sol.y;
      Int lz = ipow(Int(lam), fs.wz) * sol.z;
      if (!satisfies(sig, lx, ly, lz))
        throw std::logic_error("fiber_structure: weights fail the equation");
      if (sol.z != 0) {
        Solution scaled{lx, ly, lz, {}};
        if (beta(sig, scaled).value != sol.beta_value.value)
          throw std::logic_error("fiber_structure: beta moved along the orbit");
      }
      ++fs.verified_on;
    }
  }
  return fs;
}

std::string solution_str(const Solution& s) {
  std::ostringstream os;
  os << "(" << s.x.get_str() << ", " << s.y.get_str() << ", " << s.z.get_str() << ")";
  return os.str();
}

std::string beta_str(const BetaValue& b) {
  if (b.infinite) return "inf";
  return rat_str(b.value);
}

}  // namespace fermat
}  // namespace chevweil
