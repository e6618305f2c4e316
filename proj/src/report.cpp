#include "supalg/report.hpp"

#include <sstream>

#include "supalg/errors.hpp"

namespace supalg {

namespace {

void render_text(const Json& j, std::ostream& os, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                os << pad << k << ":\n";
                render_text(v, os, indent + 2);
            } else {
                os << pad << k << ": " << v.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (auto& v : j) {
            if (v.is_object() || v.is_array()) {
                os << pad << "-\n";
                render_text(v, os, indent + 2);
            } else {
                os << pad << "- " << v.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

void render_csv(const Json& j, std::ostream& os) {
    // flatten every array-of-objects member into its own csv block
    for (auto& [k, v] : j.items()) {
        if (!v.is_array() || v.empty() || !v.front().is_object()) continue;
        os << "# " << k << "\n";
        std::vector<std::string> cols;
        for (auto& [ck, cv] : v.front().items()) {
            (void)cv;
            cols.push_back(ck);
        }
        for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
        os << "\n";
        for (auto& row : v) {
            for (size_t i = 0; i < cols.size(); ++i) {
                const auto& cell = row.value(cols[i], Json());
                std::string text;
                if (cell.is_string())
                    text = cell.get<std::string>();
                else if (cell.is_array()) {
                    // semicolon-joined so the cell stays comma-free
                    for (auto& item : cell)
                        text += (text.empty() ? "" : ";") +
                                (item.is_string() ? item.get<std::string>() : item.dump());
                } else
                    text = cell.dump();
                os << (i ? "," : "") << text;
            }
            os << "\n";
        }
    }
}

}  // namespace

std::string render_report(const Json& report, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        os << report.dump(2) << "\n";
    } else if (format == "text") {
        render_text(report, os, 0);
    } else if (format == "csv") {
        render_csv(report, os);
    } else {
        throw InvalidInput("unknown output format: " + format);
    }
    return os.str();
}

}  // namespace supalg
