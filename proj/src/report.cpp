#include "nilkahler/report.hpp"

#include <cstdio>

namespace nilkahler {

std::string quoteValue(const std::string& value) {
    bool plain = !value.empty();
    for (char c : value)
        if (c == ' ' || c == '"' || c == '=' || c == '\\' || c == '\n' || c == '\t') plain = false;
    if (plain) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + "\"";
}

std::string formatDouble(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

ReportLine& ReportLine::add(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
    return *this;
}

ReportLine& ReportLine::add(const Verdict& v) {
    add("outcome", outcomeName(v.outcome));
    add("method", v.method);
    if (!v.detail.empty()) add("detail", v.detail);
    if (v.minimum) add("minimum", formatDouble(*v.minimum));
    return *this;
}

std::string ReportLine::str() const {
    std::string out = head_;
    for (const auto& [k, v] : fields_) {
        if (!out.empty()) out += ' ';
        out += k + "=" + quoteValue(v);
    }
    return out;
}

}  // namespace nilkahler
