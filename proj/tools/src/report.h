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

#ifndef EXACTSIMON_TOOLS_REPORT_H
#define EXACTSIMON_TOOLS_REPORT_H

#include <iosfwd>
#include <string>

#include "json.hpp"

namespace exactsimon::cli {

enum class OutputFormat { kText, kJson };

/// Everything one command invocation reports. Sections keep insertion order
/// so text and JSON output are stable for identical inputs. Wall-clock values
/// live only under "timing".
struct RunReport {
    std::string command;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    nlohmann::ordered_json outcome = nlohmann::ordered_json::object();
    nlohmann::ordered_json queries = nlohmann::ordered_json::object();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    nlohmann::ordered_json timing = nlohmann::ordered_json::object();
    std::string error;  ///< Set when the command stopped early.

    void add_check(const std::string& name, bool passed, const std::string& detail = "");

    nlohmann::ordered_json to_json() const;
    void write(std::ostream& out, OutputFormat format) const;
};

}  // namespace exactsimon::cli

#endif  // EXACTSIMON_TOOLS_REPORT_H
