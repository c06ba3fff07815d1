// Copyright 2026 The exactsimon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "report.h"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace exactsimon::cli {

namespace {

std::string scalar(const nlohmann::ordered_json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void write_section(std::ostream& out, const char* title, const nlohmann::ordered_json& section) {
    if (section.empty()) {
        return;
    }
    out << title << "\n";
    for (const auto& [key, value] : section.items()) {
        out << "  " << std::left << std::setw(22) << key << scalar(value) << "\n";
    }
}

}  // namespace

void RunReport::add_check(const std::string& name, bool passed, const std::string& detail) {
    checks.push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
}

nlohmann::ordered_json RunReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["tool"] = "exactsimon";
    doc["version"] = EXACTSIMON_VERSION;
    doc["command"] = command;
    doc["parameters"] = parameters;
    doc["outcome"] = outcome;
    doc["queries"] = queries;
    doc["checks"] = checks;
    if (!error.empty()) {
        doc["error"] = error;
    }
    doc["timing"] = timing;
    return doc;
}

void RunReport::write(std::ostream& out, OutputFormat format) const {
    if (format == OutputFormat::kJson) {
        out << to_json().dump(2) << "\n";
        return;
    }
    out << "exactsimon " << EXACTSIMON_VERSION << "  " << command << "\n";
    write_section(out, "parameters", parameters);
    write_section(out, "outcome", outcome);
    write_section(out, "queries", queries);
    if (!checks.empty()) {
        std::size_t width = 8;
        for (const auto& c : checks) {
            width = std::max(width, c["name"].get<std::string>().size() + 2);
        }
        out << "checks\n";
        for (const auto& c : checks) {
            out << "  " << (c["passed"].get<bool>() ? "PASS  " : "FAIL  ") << std::left
                << std::setw(static_cast<int>(width)) << c["name"].get<std::string>();
            for (const auto& [key, value] : c.items()) {
                if (key != "name" && key != "passed" && key != "detail") {
                    out << key << "=" << scalar(value) << "  ";
                }
            }
            out << c["detail"].get<std::string>() << "\n";
        }
    }
    if (!error.empty()) {
        out << "error\n  " << error << "\n";
    }
    write_section(out, "timing", timing);
}

}  // namespace exactsimon::cli
