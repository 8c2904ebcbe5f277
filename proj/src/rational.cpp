#include "chevweil/rational.hpp"

#include <stdexcept>

namespace chevweil {

std::optional<Rat> parse_rat(const std::string& text) {
  if (text.empty()) return std::nullopt;
  // mpq_class(string) aborts on garbage, so validate by hand.
  size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  if (i >= text.size() || !isdigit((unsigned char)text[i])) return std::nullopt;
  while (i < text.size() && isdigit((unsigned char)text[i])) ++i;
  if (i < text.size()) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    if (i >= text.size() || !isdigit((unsigned char)text[i])) return std::nullopt;
    while (i < text.size() && isdigit((unsigned char)text[i])) ++i;
    if (i != text.size()) return std::nullopt;
  }
  Rat r(text.c_str());
  if (r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Int> exact_root(const Int& n, unsigned k) {
  if (k == 0) throw std::domain_error("0th root");
  if (n < 0 && k % 2 == 0) return std::nullopt;
  Int r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  if (!exact) return std::nullopt;
  return r;
}

std::optional<Rat> exact_root(const Rat& x, unsigned k) {
  auto rn = exact_root(rat_num(x), k);
  if (!rn) return std::nullopt;
  auto rd = exact_root(rat_den(x), k);
  if (!rd) return std::nullopt;
  Rat r(*rn, *rd);
  r.canonicalize();
  return r;
}

}  // namespace chevweil
