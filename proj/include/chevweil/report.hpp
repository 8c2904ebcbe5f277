#ifndef CHEVWEIL_REPORT_HPP
#define CHEVWEIL_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "chevweil/cover.hpp"
#include "chevweil/fermat.hpp"
#include "chevweil/verify.hpp"

namespace chevweil {
namespace report {

// insertion-ordered so that renderings are byte-stable
using json = nlohmann::ordered_json;

/* Every report is a single JSON document with an "exit" field; the text
 * rendering is generated from the document itself, so the two carry
 * identical data.  No timestamps: equal inputs give equal bytes. */

json certify_report(const std::string& input, const cover::CoverPipeline& pipe);
json verify_report(const std::string& input, const cover::CoverPipeline& pipe,
                   const verify::CwReport& cw);
json fermat_report(const fermat::FermatSignature& sig, const Int& bound,
                   const std::vector<fermat::Solution>& sols);

int exit_code(const json& rep);

std::string render_text(const json& rep);
std::string render_json(const json& rep);

/* Writes the JSON rendering to out_path when nonempty, otherwise to
 * $CHEVWEIL_REPORT_DIR/<name>.json when that variable is set. */
void write_report(const json& rep, const std::string& out_path, const std::string& name);

}  // namespace report
}  // namespace chevweil

#endif
