/*
   Copyright 2026 The gtc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef GTC_SELFTEST_HPP
#define GTC_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gtc {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2026;

/// Outcome of one acceptance criterion.
struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    bool excluded = false;  ///< documented exclusion, never a failure
    std::string detail;
    double seconds = 0;
};

/// Runs the acceptance criteria in order. Randomized suites draw from `seed`.
[[nodiscard]] std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

/// One line per criterion, e.g. "PASS 1 Table of representation counts: ...".
/// Timings are optional so that reports can be compared byte for byte.
[[nodiscard]] std::string format_result(const CriterionResult& r, bool with_time = true);

/// True when no criterion failed.
[[nodiscard]] bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace gtc

#endif
