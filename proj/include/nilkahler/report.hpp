#pragma once

#include "nilkahler/verdict.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nilkahler {

// One report line of space-separated key=value fields.  Values containing
// spaces, quotes or '=' are double-quoted with backslash escapes.
class ReportLine {
public:
    explicit ReportLine(std::string head = {}) : head_(std::move(head)) {}

    ReportLine& add(const std::string& key, const std::string& value);
    ReportLine& add(const std::string& key, const char* value) { return add(key, std::string(value)); }
    ReportLine& add(const std::string& key, long long value) { return add(key, std::to_string(value)); }
    ReportLine& add(const std::string& key, int value) { return add(key, std::to_string(value)); }
    ReportLine& add(const std::string& key, bool value) { return add(key, std::string(value ? "true" : "false")); }
    // outcome, method, detail, then minimum when present.
    ReportLine& add(const Verdict& v);

    std::string str() const;

private:
    std::string head_;
    std::vector<std::pair<std::string, std::string>> fields_;
};

std::string quoteValue(const std::string& value);

// Fixed-precision decimal that is stable across runs.
std::string formatDouble(double v);

}  // namespace nilkahler
