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

#include <gtest/gtest.h>

#include "onsager/json_io.hpp"
#include "onsager/lie.hpp"
#include "onsager/verifier.hpp"

using namespace onsager;

namespace {
SuiteConfig small(std::vector<std::string> tags, int n = 2, int m = 2) {
    SuiteConfig c;
    c.max_index = n;
    c.max_order = m;
    c.tags = std::move(tags);
    return c;
}
}  // namespace

TEST(Catalog, HasEveryTagOnce) {
    const auto& c = catalog();
    EXPECT_EQ(c.size(), 25u);
    for (const auto& t : c) EXPECT_TRUE(is_known_tag(t));
    EXPECT_FALSE(is_known_tag("I4"));
}

TEST(Validate, RejectsBadConfigs) {
    EXPECT_THROW(validate(small({"NOPE"})), std::invalid_argument);
    EXPECT_THROW(validate(small({}, 0, 1)), std::invalid_argument);
    SuiteConfig c = small({});
    c.jobs = 0;
    EXPECT_THROW(validate(c), std::invalid_argument);
}

TEST(RunSuite, SmallCatalogPasses) {
    SuiteReport r = run_suite(small({}));
    EXPECT_EQ(r.failed, 0);
    EXPECT_EQ(r.passed, static_cast<int>(r.results.size()));
    for (const auto& i : r.results) EXPECT_TRUE(i.pass) << i.tag << " " << i.note;
}

TEST(RunSuite, OrderFollowsCatalog) {
    SuiteReport r = run_suite(small({"I9", "I5"}, 1, 1));
    ASSERT_FALSE(r.results.empty());
    EXPECT_EQ(r.results.front().tag, "I5");
    EXPECT_EQ(r.results.back().tag, "I9");
}

TEST(RunSuite, DeterministicAcrossJobs) {
    SuiteConfig c = small({"I5", "I7", "DUV", "REALIZE", "CORINT"});
    const std::string one = format_report(run_suite(c), OutputFormat::Json);
    c.jobs = 4;
    EXPECT_EQ(format_report(run_suite(c), OutputFormat::Json), one);
    c.jobs = 3;
    EXPECT_EQ(format_report(run_suite(c), OutputFormat::Text), format_report(run_suite(small(c.tags)), OutputFormat::Text));
}

TEST(RunSuite, FaultIsDetected) {
    fault::ScopedStructureConstantFault f;
    SuiteReport r = run_suite(small({"I7", "REALIZE"}));
    bool i7 = false, realize = false;
    for (const auto& i : r.results) {
        if (i.pass) continue;
        ASSERT_TRUE(i.counterexample.has_value() || !i.note.empty()) << i.tag;
        i7 |= i.tag == "I7";
        realize |= i.tag == "REALIZE";
    }
    EXPECT_TRUE(i7);
    EXPECT_TRUE(realize);
}

TEST(RunSuite, FaultClearedAfterScope) {
    { fault::ScopedStructureConstantFault f; }
    EXPECT_EQ(run_suite(small({"I7"})).failed, 0);
}

TEST(AuditSpan, CodimensionOne) {
    for (int cutoff : {6, 7})
        for (Parity p : {Parity::Even, Parity::Odd}) {
            SpanAudit a = audit_span(p, cutoff);
            EXPECT_EQ(a.rank, a.dimension - 1) << cutoff;
            EXPECT_EQ(a.quotient.size(), 1u);
        }
    SpanAudit e = audit_span(Parity::Even, 6);
    EXPECT_EQ(e.dimension, 4);
    EXPECT_EQ(e.quotient, std::vector<int>{0});
    EXPECT_EQ(audit_span(Parity::Odd, 7).dimension, 4);
}

TEST(AuditTheorem, SmallCases) {
    TheoremAudit a = audit_theorem(1, 1);
    EXPECT_EQ(a.monomials, 4);
    EXPECT_EQ(a.rank, 4);
    EXPECT_TRUE(a.independent && a.triangular && a.integral);

    TheoremAudit z = audit_theorem(0, 3);
    EXPECT_EQ(z.monomials, 1);
    EXPECT_TRUE(z.independent);

    TheoremAudit b = audit_theorem(3, 3);
    EXPECT_EQ(b.rank, b.monomials);
    EXPECT_TRUE(b.independent && b.triangular && b.integral);
    EXPECT_TRUE(b.non_integral.empty());
}
