#ifndef SUPALG_REPORT_HPP
#define SUPALG_REPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

namespace supalg {

using Json = nlohmann::ordered_json;

/// Renders a report in the requested format.  The JSON form is the canonical
/// one; "text" gives a readable summary and "csv" flattens "table" entries
/// (arrays of uniform objects).  Reports contain no timestamps unless the
/// caller added a "timings" key, so identical runs are byte-identical.
std::string render_report(const Json& report, const std::string& format);

}  // namespace supalg

#endif
