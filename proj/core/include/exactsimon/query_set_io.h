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

#ifndef EXACTSIMON_QUERY_SET_IO_H
#define EXACTSIMON_QUERY_SET_IO_H

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "exactsimon/query_set.h"

namespace exactsimon {

class MalformedQuerySetFile : public std::runtime_error {
   public:
    MalformedQuerySetFile(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

   private:
    int line_;
};

/// Query-set text format:
///
///     n=<int> alg=<preliminary|final>
///     <n-character bit literal, x_n first>
///     ...
///
/// One element per line in stored order; '\n' line endings. Rounds are
/// not written: the reader reassigns them from each element's msb, which
/// is how the generators assign them.
void write_query_set(std::ostream& out, const QuerySet& ys);
std::string format_query_set(const QuerySet& ys);

/// Throws MalformedQuerySetFile on a bad header or a literal of the wrong
/// width or alphabet. Content problems (duplicates, order) are left to
/// check_generator_invariants.
QuerySet read_query_set(std::istream& in);
QuerySet parse_query_set(const std::string& text);

}  // namespace exactsimon

#endif  // EXACTSIMON_QUERY_SET_IO_H
