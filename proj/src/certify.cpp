#include "chevweil/certify.hpp"

#include <algorithm>
#include <stdexcept>

namespace chevweil {
namespace certify {

Ideal::Ideal(RingPtr r, std::vector<MPoly> g) : ring(std::move(r)), gens(std::move(g)) {
  for (const auto& f : gens) {
    if (f.is_zero()) throw std::invalid_argument("zero ideal generator");
    if (!same_ring(f.ring(), ring)) throw std::invalid_argument("generator ring mismatch");
  }
}

namespace {

// monomials of the ring with total degree in [lo, hi], graded lex ascending
std::vector<Mono> monomials_between(size_t nvars, uint32_t lo, uint32_t hi) {
  std::vector<Mono> out;
  std::vector<uint32_t> cur(nvars, 0);
  // enumerate all exponent vectors with sum <= hi, then filter and sort
  auto rec = [&](auto&& self, size_t i, uint32_t remaining) -> void {
    if (i == nvars) {
      out.emplace_back(cur);
      return;
    }
    for (uint32_t e = 0; e <= remaining; ++e) {
      cur[i] = e;
      self(self, i + 1, remaining - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, hi);
  std::erase_if(out, [&](const Mono& m) { return m.total_degree() < lo; });
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

struct LinearSystem {
  // col-major: column k is the coefficient vector of (mono_k * f_{j(k)})
  std::vector<Mono> rows;                 // row labels, sorted
  std::vector<std::vector<Rat>> columns;  // dense columns
  std::vector<Rat> rhs;
};

// Solve M x = rhs exactly; free variables zero.  Partial pivoting on the
// largest-numerator entry in the current column.
std::optional<std::vector<Rat>> solve(LinearSystem sys) {
  size_t nrows = sys.rows.size();
  size_t ncols = sys.columns.size();
  // row-major copy for elimination
  std::vector<std::vector<Rat>> a(nrows, std::vector<Rat>(ncols, Rat(0)));
  for (size_t c = 0; c < ncols; ++c)
    for (size_t r = 0; r < nrows; ++r) a[r][c] = sys.columns[c][r];
  std::vector<Rat>& b = sys.rhs;

  std::vector<size_t> pivot_col;  // per pivot row index, the column
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < nrows; ++col) {
    size_t best = nrows;
    Int best_num = 0;
    for (size_t r = rank; r < nrows; ++r) {
      if (a[r][col] == 0) continue;
      Int num = rat_num(a[r][col]);
      if (num < 0) num = -num;
      if (best == nrows || num > best_num) {
        best = r;
        best_num = num;
      }
    }
    if (best == nrows) continue;  // free column
    std::swap(a[rank], a[best]);
    std::swap(b[rank], b[best]);
    const Rat piv = a[rank][col];
    for (size_t r = 0; r < nrows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Rat factor = a[r][col] / piv;
      for (size_t c = col; c < ncols; ++c) {
        if (a[rank][c] != 0) a[r][c] -= factor * a[rank][c];
      }
      b[r] -= factor * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t r = rank; r < nrows; ++r)
    if (b[r] != 0) return std::nullopt;  // inconsistent

  std::vector<Rat> x(ncols, Rat(0));
  // reduced form: each pivot row has a single pivot entry among pivot
  // columns, plus free columns whose variables stay zero.
  for (size_t i = 0; i < rank; ++i) {
    size_t col = pivot_col[i];
    x[col] = b[i] / a[i][col];
  }
  return x;
}

struct ColsForGen {
  size_t gen;
  std::vector<Mono> monos;
};

// assemble and solve for one target; nullopt when the system is unsolvable
std::optional<std::vector<MPoly>> solve_target(const MPoly& target_power,
                                               const std::vector<MPoly>& gens,
                                               const std::vector<ColsForGen>& cols) {
  const RingPtr& ring = gens.front().ring();
  // collect row monomials
  std::map<Mono, size_t, GradedLexLess> row_index;
  auto touch = [&](const Mono& m) {
    row_index.emplace(m, 0);
  };
  for (const auto& cg : cols)
    for (const auto& m : cg.monos)
      for (const auto& [tm, tc] : gens[cg.gen].terms()) touch(m * tm);
  for (const auto& [tm, tc] : target_power.terms()) touch(tm);
  size_t idx = 0;
  for (auto& [m, i] : row_index) i = idx++;

  LinearSystem sys;
  sys.rows.reserve(row_index.size());
  for (auto& [m, i] : row_index) sys.rows.push_back(m);
  sys.rhs.assign(row_index.size(), Rat(0));
  for (const auto& [tm, tc] : target_power.terms()) sys.rhs[row_index.at(tm)] = tc;

  for (const auto& cg : cols) {
    for (const auto& m : cg.monos) {
      std::vector<Rat> col(row_index.size(), Rat(0));
      for (const auto& [tm, tc] : gens[cg.gen].terms()) col[row_index.at(m * tm)] += tc;
      sys.columns.push_back(std::move(col));
    }
  }

  auto x = solve(std::move(sys));
  if (!x) return std::nullopt;
  std::vector<MPoly> a;
  a.reserve(gens.size());
  size_t k = 0;
  // columns were pushed in cols order == gens order
  for (const auto& cg : cols) {
    MPoly ai(ring);
    for (const auto& m : cg.monos) ai.add_term(m, (*x)[k++]);
    while (a.size() < cg.gen) a.push_back(MPoly::zero(ring));
    a.push_back(std::move(ai));
  }
  while (a.size() < gens.size()) a.push_back(MPoly::zero(ring));
  return a;
}

}  // namespace

std::optional<Certificate> find_certificate(const std::vector<MPoly>& targets,
                                            const std::vector<MPoly>& gens,
                                            const Bounds& bounds) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  if (targets.empty()) throw std::invalid_argument("no targets");
  const RingPtr& ring = gens.front().ring();
  for (const auto& f : gens) {
    if (f.is_zero()) throw std::invalid_argument("zero generator");
    if (!same_ring(f.ring(), ring)) throw std::invalid_argument("ring mismatch");
  }
  for (const auto& h : targets)
    if (!same_ring(h.ring(), ring)) throw std::invalid_argument("ring mismatch");

  bool homogeneous = true;
  for (const auto& f : gens) homogeneous = homogeneous && f.homogeneity().homogeneous;
  for (const auto& h : targets)
    homogeneous = homogeneous && h.homogeneity().homogeneous && !h.is_zero();

  size_t nvars = ring->size();
  for (unsigned N = 1; N <= bounds.max_N; ++N) {
    Certificate cert;
    cert.targets = targets;
    cert.gens = gens;
    cert.N = N;
    bool all_ok = true;
    for (const auto& h : targets) {
      MPoly hn = h.pow(N);
      std::optional<std::vector<MPoly>> row;
      if (homogeneous) {
        int hdeg = (int)N * h.total_degree();
        std::vector<ColsForGen> cols;
        for (size_t j = 0; j < gens.size(); ++j) {
          int d = hdeg - gens[j].total_degree();
          if (d < 0) continue;
          cols.push_back({j, monomials_between(nvars, (uint32_t)d, (uint32_t)d)});
        }
        if (!cols.empty()) row = solve_target(hn, gens, cols);
      } else {
        for (unsigned D = 0; D <= bounds.max_aux_degree && !row; ++D) {
          std::vector<ColsForGen> cols;
          for (size_t j = 0; j < gens.size(); ++j)
            cols.push_back({j, monomials_between(nvars, 0, D)});
          row = solve_target(hn, gens, cols);
        }
      }
      if (!row) {
        all_ok = false;
        break;
      }
      cert.coeffs.push_back(std::move(*row));
    }
    if (all_ok) return cert;
  }
  return std::nullopt;
}

bool check_certificate(const Certificate& c) {
  if (c.coeffs.size() != c.targets.size()) return false;
  for (size_t i = 0; i < c.targets.size(); ++i) {
    if (c.coeffs[i].size() != c.gens.size()) return false;
    MPoly acc = MPoly::zero(c.targets[i].ring());
    for (size_t j = 0; j < c.gens.size(); ++j) acc += c.coeffs[i][j] * c.gens[j];
    if (!(acc == c.targets[i].pow(c.N))) return false;
  }
  return true;
}

PrimeSet denominator_primes(const Certificate& c) {
  PrimeSet out;
  for (const auto& row : c.coeffs) {
    for (const auto& a : row) {
      for (const auto& [m, coeff] : a.terms()) {
        if (is_integer(coeff)) continue;
        for (const auto& p : prime_support(rat_den(coeff))) out.insert(p);
      }
    }
  }
  return out;
}

bool reduce_certificate_mod_p(const Certificate& c, const Int& p) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  if (!p.fits_ulong_p() || p.get_ui() > (1ull << 31))
    throw std::domain_error("prime too large");
  uint64_t pu = p.get_ui();
  auto check_coeffs = [&](const MPoly& f) {
    for (const auto& [m, coeff] : f.terms())
      if (mpz_divisible_ui_p(rat_den(coeff).get_mpz_t(), pu))
        throw std::domain_error("p divides a certificate denominator");
  };
  for (const auto& h : c.targets) check_coeffs(h);
  for (const auto& f : c.gens) check_coeffs(f);
  for (const auto& row : c.coeffs)
    for (const auto& a : row) check_coeffs(a);

  for (size_t i = 0; i < c.targets.size(); ++i) {
    size_t nvars = c.targets[i].ring()->size();
    MPolyMod acc(pu, nvars);
    for (size_t j = 0; j < c.gens.size(); ++j) {
      acc = acc + MPolyMod::reduce(c.coeffs[i][j], pu) * MPolyMod::reduce(c.gens[j], pu);
    }
    if (!(acc == MPolyMod::reduce(c.targets[i], pu).pow(c.N))) return false;
  }
  return true;
}

}  // namespace certify
}  // namespace chevweil
