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

#include "exactsimon/query_set_io.h"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace exactsimon {

void write_query_set(std::ostream& out, const QuerySet& ys) {
    out << "n=" << ys.n() << " alg=" << to_string(ys.kind()) << "\n";
    for (const QueryElement& e : ys.elements()) {
        out << BitString(e.value, ys.n()).to_string() << "\n";
    }
}

std::string format_query_set(const QuerySet& ys) {
    std::ostringstream out;
    write_query_set(out, ys);
    return out.str();
}

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return line;
}

}  // namespace

QuerySet read_query_set(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw MalformedQuerySetFile(1, "missing header");
    }
    header = strip_cr(header);
    const std::string n_key = "n=";
    const std::string alg_key = " alg=";
    const auto alg_pos = header.find(alg_key);
    if (header.rfind(n_key, 0) != 0 || alg_pos == std::string::npos) {
        throw MalformedQuerySetFile(1, "expected 'n=<int> alg=<preliminary|final>', got '" + header + "'");
    }
    int n = 0;
    const char* first = header.data() + n_key.size();
    const char* last = header.data() + alg_pos;
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr != last || n < 1 || n > kMaxWidth) {
        throw MalformedQuerySetFile(1, "invalid width in header '" + header + "'");
    }
    GeneratorKind kind;
    try {
        kind = parse_generator_kind(header.substr(alg_pos + alg_key.size()));
    } catch (const std::invalid_argument& e) {
        throw MalformedQuerySetFile(1, e.what());
    }

    std::vector<QueryElement> elements;
    std::string line;
    int line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        line = strip_cr(line);
        if (line.empty()) {
            continue;
        }
        if (static_cast<int>(line.size()) != n) {
            throw MalformedQuerySetFile(line_no, "expected a " + std::to_string(n) + "-bit literal, got '" + line + "'");
        }
        BitString b;
        try {
            b = BitString::parse(line);
        } catch (const std::invalid_argument& e) {
            throw MalformedQuerySetFile(line_no, e.what());
        }
        elements.push_back({b.word(), round_from_msb(kind, b.word())});
    }
    return QuerySet(n, kind, std::move(elements));
}

QuerySet parse_query_set(const std::string& text) {
    std::istringstream in(text);
    return read_query_set(in);
}

}  // namespace exactsimon
