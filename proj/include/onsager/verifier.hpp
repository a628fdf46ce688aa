/*
   Copyright 2026 The onsager-kernel authors

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

#ifndef ONSAGER_VERIFIER_HPP
#define ONSAGER_VERIFIER_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "onsager/straightening.hpp"
#include "onsager/uea.hpp"

namespace onsager {

// Every identity tag, in canonical report order.
const std::vector<std::string>& catalog();
bool is_known_tag(const std::string& tag);

enum class OutputFormat { Json, Text };

struct SuiteConfig {
    int max_index = 3;
    int max_order = 3;
    std::vector<std::string> tags;  // empty selects the whole catalog
    int jobs = 1;
    OutputFormat format = OutputFormat::Json;
    bool timing = false;  // elapsed times are reported as 0 unless set
};

// Throws std::invalid_argument on bounds < 1, jobs < 1 or unknown tags.
void validate(const SuiteConfig& cfg);

using ParamValue = std::variant<long, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

struct Counterexample {
    UEAElement lhs;
    UEAElement rhs;
};

struct InstanceResult {
    std::string tag;
    Params params;
    bool pass = false;
    std::optional<Counterexample> counterexample;
    std::string note;  // annotation; empty when there is nothing to add
    long ms = 0;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<InstanceResult> results;
    int passed = 0;
    int failed = 0;
};

// Results come back in catalog order, then in grid order within a tag,
// whatever the number of worker threads.
SuiteReport run_suite(const SuiteConfig& cfg);

enum class Parity { Even, Odd };

struct SpanAudit {
    Parity parity = Parity::Even;
    int cutoff = 0;
    int generators = 0;            // number of p_i(j,l) included
    int dimension = 0;             // h_k with k <= cutoff in the parity class
    int rank = 0;
    std::vector<int> quotient;     // indices k whose h_k complete the span
};

// Rank of {p_i(j,l) : i*(j+l) <= cutoff, i*(j+l) of the given parity} in span{h_k}.
SpanAudit audit_span(Parity parity, int cutoff);

struct TheoremAudit {
    int max_mdegree = 0;
    int max_index = 0;
    int monomials = 0;
    int rank = 0;
    bool independent = false;
    bool triangular = false;           // leading PBW words pairwise distinct
    int sample_size = 0;
    std::vector<std::string> non_integral;  // sample elements with fractional coordinates
    bool integral = false;
    std::string all_pairs_note;        // dependency found in the AllPairs family, if any
};

TheoremAudit audit_theorem(int max_mdegree, int max_index);

}  // namespace onsager

#endif
