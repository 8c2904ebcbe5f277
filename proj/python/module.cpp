#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chevweil/coverfile.hpp"
#include "chevweil/fermat.hpp"
#include "chevweil/lift.hpp"
#include "chevweil/report.hpp"
#include "chevweil/verify.hpp"

namespace py = pybind11;

namespace {

using namespace chevweil;

PointQ to_point(const std::vector<std::string>& coords) {
  PointQ p;
  p.reserve(coords.size());
  for (const auto& c : coords) {
    auto x = parse_rat(c);
    if (!x) throw std::invalid_argument("bad rational '" + c + "'");
    p.push_back(*x);
  }
  return p;
}

std::string certify_text(const std::string& text) {
  auto cf = coverfile::parse_cover_file(text);
  auto c = coverfile::to_cover_spec(cf);
  auto pipe = cover::certify_pipeline(c, coverfile::bounds_from(cf));
  return report::render_json(report::certify_report("<memory>", pipe));
}

std::string verify_text(const std::string& text,
                        const std::vector<std::vector<std::string>>& raw_points,
                        long prime_budget, const std::vector<std::string>& force_s) {
  auto cf = coverfile::parse_cover_file(text);
  auto c = coverfile::to_cover_spec(cf);
  auto pipe = cover::certify_pipeline(c, coverfile::bounds_from(cf));
  if (pipe.cert.verdict != cover::CoverCertification::Verdict::IsCover)
    throw std::invalid_argument("cover did not certify: " + pipe.cert.reason);
  PrimeSet s = *pipe.s;
  if (!force_s.empty()) {
    s = PrimeSet({}, false);
    for (const auto& item : force_s) {
      if (item == "inf" || item == "infinity") {
        s.set_infinity(true);
      } else {
        s.insert(Int(item));
      }
    }
  }
  std::vector<PointQ> pts;
  for (const auto& raw : raw_points) pts.push_back(to_point(raw));
  auto cw = verify::verify_cw(c, s, pts, Int(prime_budget), &pipe.cert);
  cw.forced_s = !force_s.empty();
  return report::render_json(report::verify_report("<memory>", pipe, cw));
}

std::string lift_text(const std::string& text, const std::vector<std::string>& coords) {
  auto cf = coverfile::parse_cover_file(text);
  auto c = coverfile::to_cover_spec(cf);
  auto lifts = lift::lift_point(c, to_point(coords));
  report::json out = report::json::array();
  for (const auto& lp : lifts) {
    report::json lj;
    lj["dependence"] = upoly_str(lp.dependence, "theta");
    report::json mp = report::json::array();
    for (const auto& cc : lp.minpoly.coeffs) mp.push_back(cc.get_str());
    lj["minpoly"] = std::move(mp);
    lj["degree"] = lp.field_degree();
    if (lp.rational) {
      report::json r = report::json::array();
      for (const auto& x : *lp.rational) r.push_back(rat_str(x));
      lj["rational"] = std::move(r);
    }
    lj["irreducibility_certified"] = !lp.minpoly.may_be_reducible;
    out.push_back(std::move(lj));
  }
  return report::render_json(out);
}

std::string fermat_text(const std::string& a, const std::string& b, const std::string& c,
                        unsigned p, unsigned q, unsigned r, long bound) {
  fermat::FermatSignature sig{Int(a), Int(b), Int(c), p, q, r};
  fermat::validate(sig);
  auto sols = fermat::search(sig, Int(bound));
  return report::render_json(report::fermat_report(sig, Int(bound), sols));
}

std::string classify_text(unsigned p, unsigned q, unsigned r) {
  fermat::FermatSignature sig{1, 1, 1, p, q, r};
  return fermat::triangle_class_name(fermat::classify(sig));
}

bool cusp_check(long bound) { return verify::cusp_divisibility_check(Int(bound)).passed(); }

std::vector<std::string> s_units_text(const std::vector<long>& primes, long height) {
  PrimeSet s({}, true);
  for (long p : primes) s.insert(Int(p));
  std::vector<std::string> out;
  for (const auto& u : s_units(s, Int(height))) out.push_back(rat_str(u));
  return out;
}

}  // namespace

PYBIND11_MODULE(_chevweil, m) {
  m.doc() = "certified covers, bad primes, S-integral lifting, Fermat harness";
  m.def("certify", &certify_text, py::arg("cover_text"),
        "certify a cover description; returns the JSON report");
  m.def("verify", &verify_text, py::arg("cover_text"), py::arg("points"),
        py::arg("prime_budget") = 100, py::arg("force_s") = std::vector<std::string>{},
        "lift points and test ramification; returns the JSON report");
  m.def("lift", &lift_text, py::arg("cover_text"), py::arg("point"),
        "lift one rational target point; returns a JSON list of fiber orbits");
  m.def("fermat", &fermat_text, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("p"),
        py::arg("q"), py::arg("r"), py::arg("bound") = 10,
        "search coprime solutions of a x^p + b y^q = c z^r; returns the JSON report");
  m.def("classify", &classify_text, py::arg("p"), py::arg("q"), py::arg("r"),
        "triangle class of a signature");
  m.def("cusp_check", &cusp_check, py::arg("bound") = 1000,
        "x | y holds on every integral point of y^2 = x^3 up to the bound");
  m.def("s_units", &s_units_text, py::arg("primes"), py::arg("height"),
        "S-units of bounded height, as exact rational strings");
}
