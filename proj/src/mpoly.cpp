#include "chevweil/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chevweil {

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (const auto& v : vars_) {
    if (v.empty() || !(isalpha((unsigned char)v[0]) || v[0] == '_'))
      throw std::invalid_argument("bad variable name: '" + v + "'");
  }
  for (size_t i = 0; i < vars_.size(); ++i)
    for (size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j])
        throw std::invalid_argument("duplicate variable: " + vars_[i]);
}

std::optional<size_t> Ring::index_of(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> vars) {
  return std::make_shared<Ring>(std::move(vars));
}

uint32_t Mono::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), uint32_t{0});
}

Mono Mono::operator*(const Mono& o) const {
  assert(exps_.size() == o.exps_.size());
  std::vector<uint32_t> e(exps_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
  return Mono(std::move(e));
}

std::optional<Mono> Mono::divide(const Mono& o) const {
  assert(exps_.size() == o.exps_.size());
  std::vector<uint32_t> e(exps_.size());
  for (size_t i = 0; i < e.size(); ++i) {
    if (exps_[i] < o.exps_[i]) return std::nullopt;
    e[i] = exps_[i] - o.exps_[i];
  }
  return Mono(std::move(e));
}

bool GradedLexLess::operator()(const Mono& a, const Mono& b) const {
  uint32_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  for (size_t i = 0; i < a.size(); ++i)
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i);
  return false;
}

MPoly::MPoly(RingPtr ring, const Rat& c) : ring_(std::move(ring)) {
  if (c != 0) terms_.emplace(Mono::one(ring_->size()), c);
}

MPoly MPoly::variable(const RingPtr& ring, size_t idx) {
  if (idx >= ring->size()) throw std::out_of_range("variable index");
  std::vector<uint32_t> e(ring->size(), 0);
  e[idx] = 1;
  return term(ring, 1, Mono(std::move(e)));
}

MPoly MPoly::term(const RingPtr& ring, const Rat& c, const Mono& m) {
  MPoly p(ring);
  p.add_term(m, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat MPoly::constant_term() const {
  auto it = terms_.find(Mono::one(ring_->size()));
  return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return (int)terms_.rbegin()->first.total_degree();
}

uint32_t MPoly::degree_in(size_t var) const {
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
  return d;
}

MPoly::Homogeneity MPoly::homogeneity() const {
  if (terms_.empty()) return {true, -1, true};
  uint32_t d = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_)
    if (m.total_degree() != d) return {false, total_degree(), false};
  return {true, (int)d, false};
}

void MPoly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  assert(same_ring(ring_, o.ring_));
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  assert(same_ring(ring_, o.ring_));
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  r -= o;
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  assert(same_ring(ring_, o.ring_));
  MPoly r(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MPoly MPoly::operator*(const Rat& c) const {
  MPoly r(ring_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly r = constant(ring_, 1);
  MPoly base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

Rat MPoly::eval(std::span<const Rat> point) const {
  if (point.size() != ring_->size()) throw std::invalid_argument("point arity");
  Rat acc = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < m.size(); ++i) {
      for (uint32_t e = 0; e < m.exp(i); ++e) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

MPoly MPoly::subst(std::span<const MPoly> images) const {
  if (images.size() != ring_->size()) throw std::invalid_argument("image arity");
  RingPtr target = images.empty() ? ring_ : images[0].ring();
  // power cache per variable
  std::vector<std::vector<MPoly>> powers(images.size());
  auto power = [&](size_t i, uint32_t e) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  MPoly acc(target);
  for (const auto& [m, c] : terms_) {
    MPoly t = MPoly::constant(target, c);
    for (size_t i = 0; i < m.size(); ++i)
      if (m.exp(i) > 0) t = t * power(i, m.exp(i));
    acc += t;
  }
  return acc;
}

MPoly MPoly::derivative(size_t var) const {
  if (var >= ring_->size()) throw std::out_of_range("derivative variable");
  MPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    uint32_t e = m.exp(var);
    if (e == 0) continue;
    std::vector<uint32_t> exps = m.exps();
    exps[var] -= 1;
    r.add_term(Mono(std::move(exps)), c * Rat((long)e));
  }
  return r;
}

const Mono& MPoly::lead_mono() const {
  if (terms_.empty()) throw std::domain_error("lead of zero polynomial");
  return terms_.rbegin()->first;
}

const Rat& MPoly::lead_coeff() const {
  if (terms_.empty()) throw std::domain_error("lead of zero polynomial");
  return terms_.rbegin()->second;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero polynomial");
  MPoly rem = *this;
  MPoly quot(ring_);
  while (!rem.is_zero()) {
    auto m = rem.lead_mono().divide(o.lead_mono());
    if (!m) return std::nullopt;
    Rat c = rem.lead_coeff() / o.lead_coeff();
    MPoly t = MPoly::term(ring_, c, *m);
    quot += t;
    rem -= t * o;
  }
  return quot;
}

void MPoly::scale(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [m, k] : terms_) k *= c;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // descending graded lex
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Mono& m = it->first;
    Rat c = it->second;
    bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    bool unit_coeff = (c == 1) && !m.is_one();
    if (!unit_coeff) out << rat_str(c);
    bool printed_var = false;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m.exp(i) == 0) continue;
      if (!unit_coeff || printed_var) out << "*";
      out << ring_->var(i);
      if (m.exp(i) > 1) out << "^" << m.exp(i);
      printed_var = true;
      unit_coeff = unit_coeff && true;
    }
    first = false;
  }
  return out.str();
}

/* ---- parser ---- */

namespace {

struct Parser {
  const RingPtr& ring;
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos) + ": " + what + " in '" + s + "'");
  }

  MPoly parse_expr() {
    skip_ws();
    bool neg = false;
    while (true) {
      if (eat('-')) neg = !neg;
      else if (eat('+')) continue;
      else break;
    }
    MPoly acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (eat('+')) acc += parse_term();
      else if (eat('-')) acc -= parse_term();
      else break;
    }
    return acc;
  }

  MPoly parse_term() {
    MPoly acc = parse_factor();
    while (eat('*')) acc = acc * parse_factor();
    return acc;
  }

  MPoly parse_factor() {
    MPoly base = parse_base();
    if (eat('^')) {
      skip_ws();
      size_t start = pos;
      while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
      if (start == pos) fail("expected exponent");
      unsigned long e = std::stoul(s.substr(start, pos - start));
      return base.pow((unsigned)e);
    }
    return base;
  }

  MPoly parse_base() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      MPoly inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos;
      return -parse_factor();
    }
    if (isdigit((unsigned char)c)) {
      size_t start = pos;
      while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
      if (pos < s.size() && s[pos] == '/') {
        size_t save = pos;
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (dstart == pos) {
          pos = save;  // lone '/': not ours
          fail("expected denominator digits");
        }
      }
      auto r = parse_rat(s.substr(start, pos - start));
      if (!r) fail("bad rational literal");
      return MPoly::constant(ring, *r);
    }
    if (isalpha((unsigned char)c) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (isalnum((unsigned char)s[pos]) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      auto idx = ring->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return MPoly::variable(ring, *idx);
    }
    fail("unexpected character");
  }
};

}  // namespace

MPoly parse_poly(const RingPtr& ring, const std::string& text) {
  Parser p{ring, text};
  p.skip_ws();
  if (p.pos >= text.size()) throw std::invalid_argument("empty polynomial");
  MPoly r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

/* ---- mod p ---- */

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return (uint64_t)((unsigned __int128)a * b % p);
}

uint64_t invmod(uint64_t a, uint64_t p) {
  // extended Euclid; p prime, a != 0 mod p
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

uint64_t rat_mod_p(const Rat& x, uint64_t p) {
  Int den = rat_den(x);
  if (mpz_divisible_ui_p(den.get_mpz_t(), p))
    throw std::domain_error("denominator divisible by p");
  uint64_t n = mpz_fdiv_ui(rat_num(x).get_mpz_t(), p);
  uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
  return mulmod(n, invmod(d, p), p);
}

MPolyMod MPolyMod::reduce(const MPoly& f, uint64_t p) {
  MPolyMod r(p, f.ring()->size());
  for (const auto& [m, c] : f.terms()) r.add_term(m, rat_mod_p(c, p));
  return r;
}

void MPolyMod::add_term(const Mono& m, uint64_t c) {
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

MPolyMod MPolyMod::operator+(const MPolyMod& o) const {
  assert(p_ == o.p_);
  MPolyMod r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MPolyMod MPolyMod::operator-(const MPolyMod& o) const {
  assert(p_ == o.p_);
  MPolyMod r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, p_ - c);
  return r;
}

MPolyMod MPolyMod::operator*(const MPolyMod& o) const {
  assert(p_ == o.p_);
  MPolyMod r(p_, nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, mulmod(ca, cb, p_));
  return r;
}

MPolyMod MPolyMod::pow(unsigned n) const {
  MPolyMod r(p_, nvars_);
  r.add_term(Mono::one(nvars_), 1);
  MPolyMod base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

uint64_t MPolyMod::eval(std::span<const uint64_t> point) const {
  uint64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    uint64_t t = c;
    for (size_t i = 0; i < m.size(); ++i)
      for (uint32_t e = 0; e < m.exp(i); ++e) t = mulmod(t, point[i] % p_, p_);
    acc = (acc + t) % p_;
  }
  return acc;
}

Rat rational_sequence(size_t k) {
  static std::vector<Rat> cache = {Rat(0)};
  static unsigned long height = 0;
  while (cache.size() <= k) {
    ++height;
    for (unsigned long den = 1; den <= height; ++den) {
      // batch: max(|num|, den) == height, smaller numerators first
      std::vector<unsigned long> nums;
      if (den == height)
        for (unsigned long n = 1; n < height; ++n) nums.push_back(n);
      nums.push_back(height);
      for (unsigned long n : nums) {
        if (std::gcd(n, den) != 1) continue;
        cache.push_back(rat_of((long)n, (long)den));
        cache.push_back(rat_of(-(long)n, (long)den));
      }
    }
  }
  return cache[k];
}

}  // namespace chevweil
