#include "chevweil/report.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "chevweil/lift.hpp"

namespace chevweil {
namespace report {

namespace {

json point_json(const std::vector<Rat>& p) {
  json out = json::array();
  for (const auto& x : p) out.push_back(rat_str(x));
  return out;
}

json primeset_json(const PrimeSet& s) {
  json fin = json::array();
  for (const auto& p : s.primes()) fin.push_back(p.get_str());
  return json{{"finite", fin}, {"infinity", s.includes_infinity()}};
}

json polys_json(const std::vector<MPoly>& ps) {
  json out = json::array();
  for (const auto& g : ps) out.push_back(g.str());
  return out;
}

json certificate_json(const certify::Certificate& c) {
  json coeffs = json::array();
  for (const auto& row : c.coeffs) coeffs.push_back(polys_json(row));
  return json{{"power", c.N},
              {"targets", polys_json(c.targets)},
              {"generators", polys_json(c.gens)},
              {"coefficients", coeffs},
              {"denominator_primes", primeset_json(certify::denominator_primes(c))}};
}

const char* fpf_status_name(cover::FpfResult::Status s) {
  switch (s) {
    case cover::FpfResult::Status::Certified: return "Certified";
    case cover::FpfResult::Status::Failure: return "Failure";
    case cover::FpfResult::Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* fiber_status_name(cover::FiberResult::Status s) {
  switch (s) {
    case cover::FiberResult::Status::CertifiedByDiscriminant: return "CertifiedByDiscriminant";
    case cover::FiberResult::Status::CheckedBySampling: return "CheckedBySampling";
    case cover::FiberResult::Status::Failure: return "Failure";
    case cover::FiberResult::Status::Inconclusive: return "Inconclusive";
    case cover::FiberResult::Status::Unsupported: return "Unsupported";
  }
  return "?";
}

const char* verdict_str(cover::CoverCertification::Verdict v) {
  switch (v) {
    case cover::CoverCertification::Verdict::IsCover: return "IsCover";
    case cover::CoverCertification::Verdict::NotACover: return "NotACover";
    case cover::CoverCertification::Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

json fpf_json(const cover::FpfResult& r) {
  json out{{"status", fpf_status_name(r.status)}, {"detail", r.detail}};
  json certs = json::array();
  for (const auto& [name, c] : r.certificates) {
    json cj = certificate_json(c);
    cj["element"] = name;
    certs.push_back(std::move(cj));
  }
  out["certificates"] = std::move(certs);
  if (r.witness)
    out["witness"] = json{{"element", r.witness->element}, {"point", point_json(r.witness->point)}};
  return out;
}

json fibers_json(const cover::FiberResult& r) {
  json out{{"status", fiber_status_name(r.status)},
           {"detail", r.detail},
           {"samples", r.samples}};
  if (r.certificate) out["certificate"] = certificate_json(*r.certificate);
  if (r.witness)
    out["witness"] = json{{"point_a", point_json(r.witness->point_a)},
                          {"size_a", r.witness->size_a},
                          {"point_b", point_json(r.witness->point_b)},
                          {"size_b", r.witness->size_b}};
  return out;
}

int verdict_exit(cover::CoverCertification::Verdict v) {
  switch (v) {
    case cover::CoverCertification::Verdict::IsCover: return 0;
    case cover::CoverCertification::Verdict::NotACover: return 1;
    case cover::CoverCertification::Verdict::Inconclusive: return 3;
  }
  return 3;
}

}  // namespace

json certify_report(const std::string& input, const cover::CoverPipeline& pipe) {
  json rep;
  rep["command"] = "certify";
  rep["input"] = input;
  rep["family"] = cover::family_name(pipe.cover.family);
  rep["degree"] = pipe.cover.degree;
  rep["verdict"] = verdict_str(pipe.cert.verdict);
  rep["reason"] = pipe.cert.reason;

  json closure{{"available", pipe.closed.has_value()}};
  if (pipe.closed) {
    if (pipe.closed->action) {
      closure["group_order"] = pipe.closed->action->elements.size();
      json names = json::array();
      for (const auto& g : pipe.closed->action->elements) names.push_back(g.name);
      closure["elements"] = std::move(names);
    }
  } else {
    closure["error"] = pipe.closure_error;
  }
  rep["closure"] = std::move(closure);
  rep["fixed_point_free"] = fpf_json(pipe.cert.fpf);
  rep["fibers"] = fibers_json(pipe.cert.fibers);
  if (pipe.s) rep["bad_primes"] = primeset_json(*pipe.s);
  rep["exit"] = verdict_exit(pipe.cert.verdict);
  return rep;
}

json verify_report(const std::string& input, const cover::CoverPipeline& pipe,
                   const verify::CwReport& cw) {
  json rep;
  rep["command"] = "verify";
  rep["input"] = input;
  rep["family"] = cover::family_name(pipe.cover.family);
  rep["verdict"] = verdict_str(pipe.cert.verdict);
  rep["s"] = primeset_json(cw.s);
  rep["forced_s"] = cw.forced_s;

  json points = json::array();
  for (const auto& pr : cw.points) {
    json pj{{"point", point_json(pr.point)}};
    json lifts = json::array();
    for (size_t j = 0; j < pr.lifts.size(); ++j) {
      const auto& lp = pr.lifts[j];
      json lj;
      lj["dependence"] = upoly_str(lp.dependence, "theta");
      json mp = json::array();
      for (const auto& c : lp.minpoly.coeffs) mp.push_back(c.get_str());
      lj["minpoly"] = std::move(mp);
      lj["degree"] = lp.field_degree();
      if (lp.rational) lj["rational"] = point_json(*lp.rational);
      lj["s_integral"] = j < pr.lift_integral.size() ? json(pr.lift_integral[j]) : json();
      lj["irreducibility_certified"] = !lp.minpoly.may_be_reducible;
      lifts.push_back(std::move(lj));
    }
    pj["lifts"] = std::move(lifts);
    points.push_back(std::move(pj));
  }
  rep["points"] = std::move(points);

  rep["counts"] = json{{"points", cw.points.size()},
                       {"lifts", cw.lifts_total},
                       {"ramification_checks", cw.ram_checks},
                       {"integrality_failures", cw.integrality_failures},
                       {"violations", cw.violations.size()},
                       {"undetermined", cw.undetermined.size()}};

  auto witness_array = [](const std::vector<verify::RamWitness>& ws) {
    json out = json::array();
    for (const auto& w : ws)
      out.push_back(json{{"point", w.point_index},
                         {"lift", w.lift_index},
                         {"prime", w.p.get_str()},
                         {"detail", w.detail}});
    return out;
  };
  rep["violations"] = witness_array(cw.violations);
  rep["undetermined"] = witness_array(cw.undetermined);
  rep["exit"] = cw.passed() ? 0 : 1;
  return rep;
}

json fermat_report(const fermat::FermatSignature& sig, const Int& bound,
                   const std::vector<fermat::Solution>& sols) {
  json rep;
  rep["command"] = "fermat";
  rep["signature"] = json{{"a", sig.a.get_str()}, {"b", sig.b.get_str()},
                          {"c", sig.c.get_str()}, {"p", sig.p},
                          {"q", sig.q},           {"r", sig.r}};
  rep["class"] = fermat::triangle_class_name(fermat::classify(sig));
  rep["bound"] = bound.get_str();

  json table = json::array();
  const fermat::Solution* unflagged = nullptr;
  for (const auto& s : sols) {
    table.push_back(json{{"x", s.x.get_str()},
                         {"y", s.y.get_str()},
                         {"z", s.z.get_str()},
                         {"beta", fermat::beta_str(s.beta_value)},
                         {"flagged", s.beta_value.flagged}});
    if (!s.beta_value.flagged && !unflagged) unflagged = &s;
  }
  rep["solutions"] = std::move(table);
  rep["count"] = sols.size();
  if (unflagged) {
    auto fs = fermat::fiber_structure(sig, unflagged->beta_value.value);
    rep["fiber_structure"] = json{{"weights", json::array({fs.wx, fs.wy, fs.wz})},
                                  {"verified_on", fs.verified_on}};
  }
  rep["exit"] = 0;
  return rep;
}

int exit_code(const json& rep) { return rep.value("exit", 3); }

namespace {

bool scalar_array(const json& a) {
  for (const auto& v : a)
    if (v.is_structured()) return false;
  return true;
}

std::string scalar_str(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_object(std::ostream& os, const json& v, int indent);

void render_item(std::ostream& os, const json& v, int indent) {
  if (v.is_object()) {
    render_object(os, v, indent);
  } else {
    os << std::string(indent, ' ') << scalar_str(v) << "\n";
  }
}

void render_object(std::ostream& os, const json& v, int indent) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    os << std::string(indent, ' ') << it.key() << ":";
    const json& val = it.value();
    if (val.is_object()) {
      os << "\n";
      render_object(os, val, indent + 2);
    } else if (val.is_array()) {
      if (val.empty()) {
        os << " []\n";
      } else if (scalar_array(val)) {
        os << " [";
        bool first = true;
        for (const auto& e : val) {
          if (!first) os << ", ";
          os << scalar_str(e);
          first = false;
        }
        os << "]\n";
      } else {
        os << "\n";
        for (const auto& e : val) {
          os << std::string(indent + 2, ' ') << "-\n";
          render_item(os, e, indent + 4);
        }
      }
    } else {
      os << " " << scalar_str(val) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const json& rep) {
  std::ostringstream os;
  render_object(os, rep, 0);
  return os.str();
}

std::string render_json(const json& rep) { return rep.dump(2) + "\n"; }

void write_report(const json& rep, const std::string& out_path, const std::string& name) {
  std::string path = out_path;
  if (path.empty()) {
    const char* dir = std::getenv("CHEVWEIL_REPORT_DIR");
    if (!dir || !*dir) return;
    path = std::string(dir) + "/" + name + ".json";
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  out << render_json(rep);
}

}  // namespace report
}  // namespace chevweil
