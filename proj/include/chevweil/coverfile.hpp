#ifndef CHEVWEIL_COVERFILE_HPP
#define CHEVWEIL_COVERFILE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chevweil/certify.hpp"
#include "chevweil/cover.hpp"
#include "chevweil/lift.hpp"

namespace chevweil {
namespace coverfile {

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

/* A cover file, sections verbatim: `family = ...` plus `n`/`degree` up
 * top, then [target], [source], [map], [action], [options].  Repeated
 * j1/j2 keys append generators; unknown keys are rejected. */
struct CoverFile {
  std::string family;
  unsigned n = 0;       // kummer
  unsigned degree = 0;  // parametrized, polynomial_in_y
  std::vector<std::string> target_vars;
  std::vector<std::string> target_j1, target_j2;
  std::vector<std::string> source_vars;
  std::vector<std::string> source_j1, source_j2;
  std::string fiber;  // polynomial_in_y: fiber variable name
  std::string poly;   // polynomial_in_y: defining polynomial
  std::vector<std::pair<std::string, std::string>> map;
  std::vector<std::pair<std::string, std::string>> action;
  std::map<std::string, long> options;

  bool operator==(const CoverFile&) const = default;
};

CoverFile parse_cover_file(const std::string& text);
CoverFile read_cover_file(const std::string& path);

// canonical rendering; parse_cover_file(print_cover_file(cf)) == cf
std::string print_cover_file(const CoverFile& cf);

/* Builds the CoverSpec the file describes.  Kummer files may spell out
 * the canonical model; any explicit section must match it exactly.
 * Throws std::invalid_argument on semantic mismatches. */
cover::CoverSpec to_cover_spec(const CoverFile& cf);

// max_n / max_degree options, defaulted
certify::Bounds bounds_from(const CoverFile& cf);

/* Points file: one point per line as comma-separated rationals; blank
 * lines and # comments skipped. */
std::vector<PointQ> read_points_file(const std::string& path, size_t arity);
std::vector<PointQ> parse_points(const std::string& text, size_t arity);

}  // namespace coverfile
}  // namespace chevweil

#endif
