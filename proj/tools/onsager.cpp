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

// Command-line front end. Exit codes: 0 success, 1 failure, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "onsager/expression.hpp"
#include "onsager/json_io.hpp"
#include "onsager/loop.hpp"
#include "onsager/straightening.hpp"
#include "onsager/verifier.hpp"

using namespace onsager;

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_tags(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string t;
    while (std::getline(in, t, ',')) {
        t.erase(0, t.find_first_not_of(" \t"));
        t.erase(t.find_last_not_of(" \t") + 1);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "text") return OutputFormat::Text;
    throw UsageError("format must be json or text, got " + s);
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        int r = std::stoi(v, &used);
        if (used == v.size()) return r;
    } catch (const std::exception&) {
    }
    throw UsageError("config key " + key + " needs an integer, got '" + v + "'");
}

// key = value lines; '#' starts a comment
void load_config(const std::string& path, SuiteConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(n) + ": expected key = value");
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "max_index")
            cfg.max_index = parse_int(key, value);
        else if (key == "max_order")
            cfg.max_order = parse_int(key, value);
        else if (key == "jobs")
            cfg.jobs = parse_int(key, value);
        else if (key == "suite")
            cfg.tags = split_tags(value);
        else if (key == "format")
            cfg.format = parse_format(value);
        else if (key == "timing")
            cfg.timing = value == "true" || value == "1";
        else
            throw UsageError(path + ":" + std::to_string(n) + ": unknown key " + key);
    }
}

UEAElement eval_text(const std::string& text) { return evaluate(parse(text)); }

LieElement eval_lie(const std::string& text) {
    auto l = as_lie(eval_text(text));
    if (!l) throw DomainError("expected a degree-one element: " + text);
    return *l;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for the Onsager algebra and its integral form"};
    app.require_subcommand(1);
    std::string format = "text";

    std::string expr_a, expr_b;
    auto* normalize = app.add_subcommand("normalize", "PBW normal form of an expression");
    normalize->add_option("expr", expr_a, "expression")->required();
    normalize->add_option("--format", format, "json or text");

    auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two degree-one elements");
    bracket_cmd->add_option("a", expr_a)->required();
    bracket_cmd->add_option("b", expr_b)->required();

    int mdeg = 3, index = 3;
    auto* coords = app.add_subcommand("coords", "coordinates in the integral basis");
    coords->add_option("expr", expr_a)->required();
    coords->add_option("--mdegree", mdeg, "maximal mdegree");
    coords->add_option("--index", index, "maximal factor index");
    coords->add_option("--format", format, "json or text");

    SuiteConfig cfg;
    std::string suite, vformat;
    int max_index = 0, max_order = 0, jobs = 0;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "run the identity catalog");
    verify->add_option("--suite", suite, "comma-separated tags (default: all)");
    verify->add_option("--max-index", max_index, "index bound");
    verify->add_option("--max-order", max_order, "order bound");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--format", vformat, "json or text");
    verify->add_flag("--timing", timing, "report elapsed milliseconds");

    auto* audit = app.add_subcommand("audit", "structural audits");
    audit->require_subcommand(1);
    std::string parity = "even";
    int cutoff = 6;
    auto* span = audit->add_subcommand("span", "rank of the p-elements in span{h_k}");
    span->add_option("--parity", parity, "even or odd");
    span->add_option("--cutoff", cutoff, "index cutoff");
    span->add_option("--format", format, "json or text");
    auto* theorem = audit->add_subcommand("theorem", "independence, triangularity and integrality");
    theorem->add_option("--mdegree", mdeg, "maximal mdegree");
    theorem->add_option("--index", index, "maximal factor index");
    theorem->add_option("--format", format, "json or text");

    auto* realize = app.add_subcommand("realize", "matrix form in the loop algebra");
    realize->add_option("expr", expr_a)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*normalize) {
            UEAElement v = eval_text(expr_a);
            if (parse_format(format) == OutputFormat::Json)
                std::cout << element_to_json(v).dump(2) << "\n";
            else
                std::cout << to_string(v) << "\n";
            return 0;
        }
        if (*bracket_cmd) {
            std::cout << to_string(bracket(eval_lie(expr_a), eval_lie(expr_b))) << "\n";
            return 0;
        }
        if (*coords) {
            const bool json = parse_format(format) == OutputFormat::Json;
            IntegralityReport rep = integrality_check(eval_text(expr_a), {mdeg, index});
            if (!rep.failure.empty()) {
                std::cerr << rep.failure << "\n";
                return kFail;
            }
            if (json)
                std::cout << Json{{"coordinates", mform_to_json(rep.coordinates)}, {"integral", rep.integral}}.dump(2)
                          << "\n";
            else
                std::cout << to_string(rep.coordinates) << "\nintegral: " << (rep.integral ? "yes" : "no") << "\n";
            return 0;
        }
        if (*verify) {
            if (const char* path = std::getenv("ONSAGER_CONFIG"); path && *path) load_config(path, cfg);
            if (!suite.empty()) cfg.tags = split_tags(suite);
            if (max_index) cfg.max_index = max_index;
            if (max_order) cfg.max_order = max_order;
            if (verify->count("--jobs")) cfg.jobs = jobs;
            if (!vformat.empty()) cfg.format = parse_format(vformat);
            if (timing) cfg.timing = true;
            if (verify->count("--max-index") && max_index < 1) throw UsageError("--max-index must be >= 1");
            if (verify->count("--max-order") && max_order < 1) throw UsageError("--max-order must be >= 1");
            try {
                validate(cfg);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            SuiteReport rep = run_suite(cfg);
            std::cout << format_report(rep, cfg.format);
            return rep.failed == 0 ? 0 : kFail;
        }
        if (*span) {
            if (parity != "even" && parity != "odd") throw UsageError("--parity must be even or odd");
            if (cutoff < 1) throw UsageError("--cutoff must be >= 1");
            SpanAudit a = audit_span(parity == "even" ? Parity::Even : Parity::Odd, cutoff);
            if (parse_format(format) == OutputFormat::Json) {
                std::cout << Json{{"parity", parity},      {"cutoff", a.cutoff}, {"generators", a.generators},
                                  {"dimension", a.dimension}, {"rank", a.rank},     {"quotient", a.quotient}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "parity " << parity << ", cutoff " << a.cutoff << ": rank " << a.rank << " of dimension "
                          << a.dimension << " (" << a.generators << " generators)\nquotient:";
                for (int k : a.quotient) std::cout << " h(" << k << ")";
                std::cout << "\n";
            }
            return 0;
        }
        if (*theorem) {
            if (mdeg < 0 || index < 0) throw UsageError("bounds must be >= 0");
            TheoremAudit a = audit_theorem(mdeg, index);
            if (parse_format(format) == OutputFormat::Json) {
                std::cout << Json{{"mdegree", a.max_mdegree},   {"index", a.max_index},
                                  {"monomials", a.monomials},   {"rank", a.rank},
                                  {"independent", a.independent}, {"triangular", a.triangular},
                                  {"sample", a.sample_size},    {"integral", a.integral},
                                  {"non_integral", a.non_integral}, {"all_pairs", a.all_pairs_note}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << a.monomials << " monomials, rank " << a.rank << "\nindependent: "
                          << (a.independent ? "yes" : "no") << "\ntriangular: " << (a.triangular ? "yes" : "no")
                          << "\nintegral on sample of " << a.sample_size << ": " << (a.integral ? "yes" : "no") << "\n";
                for (const auto& s : a.non_integral) std::cout << "  " << s << "\n";
                if (!a.all_pairs_note.empty()) std::cout << a.all_pairs_note << "\n";
            }
            return a.independent && a.triangular && a.integral ? 0 : kFail;
        }
        if (*realize) {
            std::cout << to_string(embed(eval_lie(expr_a))) << "\n";
            return 0;
        }
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error at " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
