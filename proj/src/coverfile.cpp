#include "chevweil/coverfile.hpp"

#include <fstream>
#include <sstream>

namespace chevweil {
namespace coverfile {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(trim(cur));
  if (!s.empty() && s.back() == ',') out.push_back("");
  return out;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

unsigned long parse_count(const std::string& v, size_t line) {
  try {
    size_t used = 0;
    unsigned long out = std::stoul(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a nonnegative integer, got '" + v + "'");
  }
}

}  // namespace

CoverFile parse_cover_file(const std::string& text) {
  CoverFile cf;
  std::istringstream in(text);
  std::string raw;
  std::string section;  // "" = top level
  size_t lineno = 0;
  bool have_n = false, have_degree = false;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(lineno, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "target" && section != "source" && section != "map" &&
          section != "action" && section != "options")
        throw ParseError(lineno, "unknown section [" + section + "]");
      continue;
    }

    size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(lineno, "empty key");
    if (value.empty()) throw ParseError(lineno, "empty value for '" + key + "'");

    if (section.empty()) {
      if (key == "family") {
        cf.family = value;
      } else if (key == "n") {
        cf.n = (unsigned)parse_count(value, lineno);
        have_n = true;
      } else if (key == "degree") {
        cf.degree = (unsigned)parse_count(value, lineno);
        have_degree = true;
      } else {
        throw ParseError(lineno, "unknown top-level key '" + key + "'");
      }
    } else if (section == "target") {
      if (key == "vars") {
        cf.target_vars = split_list(value);
      } else if (key == "j1") {
        cf.target_j1.push_back(value);
      } else if (key == "j2") {
        cf.target_j2.push_back(value);
      } else {
        throw ParseError(lineno, "unknown key '" + key + "' in [target]");
      }
    } else if (section == "source") {
      if (key == "vars") {
        cf.source_vars = split_list(value);
      } else if (key == "j1") {
        cf.source_j1.push_back(value);
      } else if (key == "j2") {
        cf.source_j2.push_back(value);
      } else if (key == "fiber") {
        cf.fiber = value;
      } else if (key == "poly") {
        cf.poly = value;
      } else {
        throw ParseError(lineno, "unknown key '" + key + "' in [source]");
      }
    } else if (section == "map") {
      cf.map.emplace_back(key, value);
    } else if (section == "action") {
      cf.action.emplace_back(key, join_list(split_list(value)));
    } else {  // options
      if (key != "prime_budget" && key != "max_n" && key != "max_degree" && key != "sample" &&
          key != "bound")
        throw ParseError(lineno, "unknown option '" + key + "'");
      if (cf.options.count(key)) throw ParseError(lineno, "duplicate option '" + key + "'");
      cf.options[key] = (long)parse_count(value, lineno);
    }
  }

  if (cf.family.empty()) throw ParseError(lineno, "missing 'family' line");
  if (cf.family != "kummer" && cf.family != "parametrized" && cf.family != "polynomial_in_y")
    throw ParseError(lineno, "unknown family '" + cf.family + "'");
  if (cf.family == "kummer" && !have_n) throw ParseError(lineno, "kummer needs 'n'");
  if (cf.family != "kummer" && !have_degree)
    throw ParseError(lineno, "family '" + cf.family + "' needs 'degree'");
  return cf;
}

CoverFile read_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cover file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cover_file(buf.str());
}

std::string print_cover_file(const CoverFile& cf) {
  std::ostringstream os;
  os << "family = " << cf.family << "\n";
  if (cf.n) os << "n = " << cf.n << "\n";
  if (cf.degree) os << "degree = " << cf.degree << "\n";

  if (!cf.target_vars.empty() || !cf.target_j1.empty() || !cf.target_j2.empty()) {
    os << "\n[target]\n";
    if (!cf.target_vars.empty()) os << "vars = " << join_list(cf.target_vars) << "\n";
    for (const auto& g : cf.target_j1) os << "j1 = " << g << "\n";
    for (const auto& g : cf.target_j2) os << "j2 = " << g << "\n";
  }
  if (!cf.source_vars.empty() || !cf.source_j1.empty() || !cf.source_j2.empty() ||
      !cf.fiber.empty() || !cf.poly.empty()) {
    os << "\n[source]\n";
    if (!cf.source_vars.empty()) os << "vars = " << join_list(cf.source_vars) << "\n";
    for (const auto& g : cf.source_j1) os << "j1 = " << g << "\n";
    for (const auto& g : cf.source_j2) os << "j2 = " << g << "\n";
    if (!cf.fiber.empty()) os << "fiber = " << cf.fiber << "\n";
    if (!cf.poly.empty()) os << "poly = " << cf.poly << "\n";
  }
  if (!cf.map.empty()) {
    os << "\n[map]\n";
    for (const auto& [k, v] : cf.map) os << k << " = " << v << "\n";
  }
  if (!cf.action.empty()) {
    os << "\n[action]\n";
    for (const auto& [k, v] : cf.action) os << k << " = " << v << "\n";
  }
  if (!cf.options.empty()) {
    os << "\n[options]\n";
    for (const auto& [k, v] : cf.options) os << k << " = " << v << "\n";
  }
  return os.str();
}

namespace {

std::vector<MPoly> parse_gens(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<MPoly> out;
  for (const auto& g : gens) out.push_back(parse_poly(ring, g));
  return out;
}

void attach_action(cover::CoverSpec& c, const CoverFile& cf) {
  if (cf.action.empty()) return;
  cover::GroupAction act;
  bool has_identity = false;
  for (const auto& [name, imgs] : cf.action) {
    cover::ActionElement el{name, {}};
    for (const auto& expr : split_list(imgs)) el.images.push_back(parse_poly(c.source.ring, expr));
    if (el.images.size() != c.source.ring->size())
      throw std::invalid_argument("action element '" + name + "': image arity mismatch");
    has_identity = has_identity || el.is_identity();
    act.elements.push_back(std::move(el));
  }
  if (!has_identity) throw std::invalid_argument("action lacks the identity element");
  c.action = std::move(act);
}

void check_matches(const std::vector<MPoly>& given, const std::vector<MPoly>& canonical,
                   const std::string& what) {
  if (given.size() != canonical.size())
    throw std::invalid_argument(what + " does not match the canonical kummer model");
  for (size_t i = 0; i < given.size(); ++i)
    if (!(given[i] == canonical[i]))
      throw std::invalid_argument(what + " does not match the canonical kummer model");
}

cover::CoverSpec build_kummer(const CoverFile& cf) {
  if (cf.n < 1) throw std::invalid_argument("kummer: n must be >= 1");
  cover::CoverSpec c = cover::make_kummer(cf.n);
  if (cf.degree && cf.degree != cf.n)
    throw std::invalid_argument("kummer: degree must equal n");
  if (!cf.target_vars.empty() && cf.target_vars != c.target.ring->vars())
    throw std::invalid_argument("kummer: target vars must be u, v");
  if (!cf.source_vars.empty() && cf.source_vars != c.source.ring->vars())
    throw std::invalid_argument("kummer: source vars must be t, s");
  if (!cf.target_j1.empty())
    check_matches(parse_gens(c.target.ring, cf.target_j1), c.target.j1.gens, "target j1");
  if (!cf.source_j1.empty())
    check_matches(parse_gens(c.source.ring, cf.source_j1), c.source.j1.gens, "source j1");
  if (!cf.target_j2.empty() || !cf.source_j2.empty())
    throw std::invalid_argument("kummer: the canonical model has no boundary");
  if (!cf.map.empty()) {
    if (cf.map.size() != 2 || cf.map[0].first != "u" || cf.map[1].first != "v")
      throw std::invalid_argument("kummer: map must define u and v");
    std::vector<MPoly> given = {parse_poly(c.source.ring, cf.map[0].second),
                                parse_poly(c.source.ring, cf.map[1].second)};
    check_matches(given, c.map, "map");
  }
  attach_action(c, cf);
  return c;
}

cover::CoverSpec build_parametrized(const CoverFile& cf) {
  if (cf.degree < 1) throw std::invalid_argument("parametrized: degree must be >= 1");
  if (cf.target_vars.empty()) throw std::invalid_argument("parametrized: missing target vars");
  if (!cf.target_j2.empty())
    throw std::invalid_argument("parametrized: targets here are closed (no j2)");
  if (!cf.fiber.empty() || !cf.poly.empty())
    throw std::invalid_argument("parametrized: fiber/poly belong to polynomial_in_y");
  std::string param = "t";
  if (cf.source_vars.size() == 1) {
    param = cf.source_vars[0];
  } else if (!cf.source_vars.empty()) {
    throw std::invalid_argument("parametrized: source must have one parameter");
  }
  if (cf.map.size() != cf.target_vars.size())
    throw std::invalid_argument("parametrized: map must define every target variable");
  auto rs = make_ring({param});
  std::vector<MPoly> maps;
  for (size_t i = 0; i < cf.map.size(); ++i) {
    if (cf.map[i].first != cf.target_vars[i])
      throw std::invalid_argument("parametrized: map lines must follow target var order");
    maps.push_back(parse_poly(rs, cf.map[i].second));
  }
  auto rt = make_ring(cf.target_vars);
  cover::CoverSpec c = cover::make_parametrized(cf.target_vars, parse_gens(rt, cf.target_j1),
                                                std::move(maps), cf.degree);
  attach_action(c, cf);
  return c;
}

cover::CoverSpec build_polynomial_in_y(const CoverFile& cf) {
  if (cf.degree < 1) throw std::invalid_argument("polynomial_in_y: degree must be >= 1");
  if (cf.target_vars.empty()) throw std::invalid_argument("polynomial_in_y: missing target vars");
  if (cf.fiber.empty() || cf.poly.empty())
    throw std::invalid_argument("polynomial_in_y: needs 'fiber' and 'poly'");
  if (!cf.source_vars.empty() || !cf.source_j1.empty() || !cf.source_j2.empty())
    throw std::invalid_argument("polynomial_in_y: the source is derived, not declared");
  auto rt = make_ring(cf.target_vars);
  cover::VarietyPresentation target(rt, parse_gens(rt, cf.target_j1),
                                    parse_gens(rt, cf.target_j2));
  std::vector<std::string> ext = cf.target_vars;
  ext.push_back(cf.fiber);
  auto rext = make_ring(std::move(ext));
  MPoly fy = parse_poly(rext, cf.poly);
  UPoly f = to_upoly(fy, rext->size() - 1);
  if (f.degree() != (int)cf.degree)
    throw std::invalid_argument("polynomial_in_y: declared degree does not match the polynomial");
  cover::CoverSpec c = cover::make_polynomial_in_y(std::move(target), cf.fiber, f);
  attach_action(c, cf);
  return c;
}

}  // namespace

cover::CoverSpec to_cover_spec(const CoverFile& cf) {
  if (cf.family == "kummer") return build_kummer(cf);
  if (cf.family == "parametrized") return build_parametrized(cf);
  if (cf.family == "polynomial_in_y") return build_polynomial_in_y(cf);
  throw std::invalid_argument("unknown family '" + cf.family + "'");
}

certify::Bounds bounds_from(const CoverFile& cf) {
  certify::Bounds b;
  if (auto it = cf.options.find("max_n"); it != cf.options.end()) b.max_N = (unsigned)it->second;
  if (auto it = cf.options.find("max_degree"); it != cf.options.end())
    b.max_aux_degree = (unsigned)it->second;
  return b;
}

std::vector<PointQ> parse_points(const std::string& text, size_t arity) {
  std::vector<PointQ> out;
  std::istringstream in(text);
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    PointQ p;
    for (const auto& part : split_list(line)) {
      auto x = parse_rat(part);
      if (!x) throw ParseError(lineno, "bad rational '" + part + "'");
      p.push_back(*x);
    }
    if (p.size() != arity)
      throw ParseError(lineno, "expected " + std::to_string(arity) + " coordinates");
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<PointQ> read_points_file(const std::string& path, size_t arity) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open points file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_points(buf.str(), arity);
}

}  // namespace coverfile
}  // namespace chevweil
