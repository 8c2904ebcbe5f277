#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chevweil/coverfile.hpp"
#include "chevweil/fermat.hpp"
#include "chevweil/lift.hpp"
#include "chevweil/report.hpp"
#include "chevweil/verify.hpp"

namespace cw = chevweil;

namespace {

struct CommonOpts {
  std::string cover_path;
  std::string out_path;
  long max_n = 0;
  long max_degree = 0;
};

void add_bound_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--max-N", o.max_n, "certificate power search bound");
  cmd->add_option("--max-degree", o.max_degree, "certificate coefficient degree bound");
  cmd->add_option("--out", o.out_path, "write the JSON report to this path");
}

cw::certify::Bounds effective_bounds(const cw::coverfile::CoverFile& cf, const CommonOpts& o) {
  cw::certify::Bounds b = cw::coverfile::bounds_from(cf);
  if (o.max_n > 0) b.max_N = (unsigned)o.max_n;
  if (o.max_degree > 0) b.max_aux_degree = (unsigned)o.max_degree;
  return b;
}

cw::PrimeSet parse_prime_set(const std::string& text) {
  cw::PrimeSet s({}, false);
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    size_t a = cur.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    size_t b = cur.find_last_not_of(" \t");
    cur = cur.substr(a, b - a + 1);
    if (cur == "inf" || cur == "infinity") {
      s.set_infinity(true);
      continue;
    }
    if (cur == "none") continue;
    cw::Int p(cur);
    if (!cw::is_prime(p)) throw std::invalid_argument("--force-S: " + cur + " is not prime");
    s.insert(p);
  }
  return s;
}

/* S-unit sampling for verify --sample: hyperbola targets get exact
 * S-unit points (u, 1/u); everything else falls back to the generic
 * target sampler filtered for S-integrality. */
std::vector<cw::PointQ> sample_points(const cw::cover::CoverSpec& c, const cw::PrimeSet& s,
                                      size_t count) {
  std::vector<cw::PointQ> out;
  if (c.family == cw::cover::Family::Kummer) {
    for (cw::Int height(100); out.size() < count && height <= cw::Int("1000000000000");
         height *= 100) {
      out.clear();
      for (const cw::Rat& u : cw::s_units(s, height)) {
        cw::PointQ p{u, cw::Rat(1) / u};
        if (cw::lift::is_s_integral(c.target, p, s)) out.push_back(std::move(p));
        if (out.size() >= count) break;
      }
    }
    return out;
  }
  for (auto& p : cw::cover::sample_target_points(c, 8 * count + 8)) {
    if (cw::lift::is_s_integral(c.target, p, s)) out.push_back(std::move(p));
    if (out.size() >= count) break;
  }
  return out;
}

int emit(const cw::report::json& rep, const std::string& out_path, const std::string& name) {
  std::cout << cw::report::render_text(rep);
  cw::report::write_report(rep, out_path, name);
  return cw::report::exit_code(rep);
}

int run_certify(const CommonOpts& o) {
  cw::coverfile::CoverFile cf = cw::coverfile::read_cover_file(o.cover_path);
  cw::cover::CoverSpec c = cw::coverfile::to_cover_spec(cf);
  cw::cover::CoverPipeline pipe = cw::cover::certify_pipeline(c, effective_bounds(cf, o));
  return emit(cw::report::certify_report(o.cover_path, pipe), o.out_path, "certify");
}

int run_verify(const CommonOpts& o, const std::string& points_path, long sample,
               const std::string& force_s, long prime_budget) {
  cw::coverfile::CoverFile cf = cw::coverfile::read_cover_file(o.cover_path);
  cw::cover::CoverSpec c = cw::coverfile::to_cover_spec(cf);
  cw::cover::CoverPipeline pipe = cw::cover::certify_pipeline(c, effective_bounds(cf, o));
  if (pipe.cert.verdict != cw::cover::CoverCertification::Verdict::IsCover) {
    // nothing to verify; surface the certification outcome instead
    cw::report::json rep = cw::report::certify_report(o.cover_path, pipe);
    rep["exit"] = 3;
    return emit(rep, o.out_path, "verify");
  }

  cw::PrimeSet s = *pipe.s;
  bool forced = !force_s.empty();
  if (forced) s = parse_prime_set(force_s);

  long budget = prime_budget > 0 ? prime_budget : 100;
  if (auto it = cf.options.find("prime_budget"); prime_budget <= 0 && it != cf.options.end())
    budget = it->second;

  std::vector<cw::PointQ> points;
  if (!points_path.empty()) {
    points = cw::coverfile::read_points_file(points_path, c.target.ring->size());
  } else {
    points = sample_points(c, s, sample > 0 ? (size_t)sample : 25);
  }

  cw::verify::CwReport cwrep = cw::verify::verify_cw(c, s, points, cw::Int(budget), &pipe.cert);
  cwrep.forced_s = forced;
  return emit(cw::report::verify_report(o.cover_path, pipe, cwrep), o.out_path, "verify");
}

int run_fermat(const std::string& a, const std::string& b, const std::string& c, unsigned p,
               unsigned q, unsigned r, long bound, const std::string& out_path) {
  cw::fermat::FermatSignature sig{cw::Int(a), cw::Int(b), cw::Int(c), p, q, r};
  cw::fermat::validate(sig);
  if (bound < 1) throw std::invalid_argument("--bound must be >= 1");
  auto sols = cw::fermat::search(sig, cw::Int(bound));
  return emit(cw::report::fermat_report(sig, cw::Int(bound), sols), out_path, "fermat");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"effective Chevalley-Weil: certify covers, compute bad primes, verify lifts"};
  app.require_subcommand(1);

  CommonOpts cert_o;
  CLI::App* cert = app.add_subcommand("certify", "certify a cover file and compute S");
  cert->add_option("file", cert_o.cover_path, "cover file")->required();
  add_bound_flags(cert, cert_o);

  CommonOpts ver_o;
  std::string points_path, force_s;
  long sample = 0, prime_budget = 0;
  CLI::App* ver = app.add_subcommand("verify", "lift S-integral points and test ramification");
  ver->add_option("file", ver_o.cover_path, "cover file")->required();
  ver->add_option("points", points_path, "points file (one point per line)");
  ver->add_option("--sample", sample, "sample this many S-integral target points");
  ver->add_option("--force-S", force_s, "override S, e.g. '2, inf' (negative controls)");
  ver->add_option("--prime-budget", prime_budget, "test all primes up to this bound");
  add_bound_flags(ver, ver_o);

  std::string fa, fb, fc, fout;
  unsigned fp = 0, fq = 0, fr = 0;
  long fbound = 10;
  CLI::App* fer = app.add_subcommand("fermat", "generalized Fermat harness a x^p + b y^q = c z^r");
  fer->add_option("a", fa, "coefficient a")->required();
  fer->add_option("b", fb, "coefficient b")->required();
  fer->add_option("c", fc, "coefficient c")->required();
  fer->add_option("p", fp, "exponent p")->required();
  fer->add_option("q", fq, "exponent q")->required();
  fer->add_option("r", fr, "exponent r")->required();
  fer->add_option("--bound", fbound, "search box for |x|, |y|, |z|");
  fer->add_option("--out", fout, "write the JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cert->parsed()) return run_certify(cert_o);
    if (ver->parsed()) return run_verify(ver_o, points_path, sample, force_s, prime_budget);
    if (fer->parsed()) return run_fermat(fa, fb, fc, fp, fq, fr, fbound, fout);
  } catch (const cw::coverfile::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
