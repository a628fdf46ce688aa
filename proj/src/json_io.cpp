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

#include "onsager/json_io.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace onsager {

namespace {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::XMinus:
            return "xm";
        case Kind::H:
            return "h";
        case Kind::XPlus:
            return "xp";
    }
    return "?";
}

Kind kind_from_name(const std::string& s) {
    if (s == "xm") return Kind::XMinus;
    if (s == "h") return Kind::H;
    if (s == "xp") return Kind::XPlus;
    throw std::invalid_argument("unknown generator kind: " + s);
}

Json params_to_json(const Params& p) {
    Json j = Json::object();
    for (const auto& [k, v] : p) {
        if (std::holds_alternative<long>(v))
            j[k] = std::get<long>(v);
        else
            j[k] = std::get<std::string>(v);
    }
    return j;
}

std::string params_to_text(const Params& p) {
    std::string out;
    for (const auto& [k, v] : p) {
        if (!out.empty()) out += " ";
        out += k + "=" + (std::holds_alternative<long>(v) ? std::to_string(std::get<long>(v)) : std::get<std::string>(v));
    }
    return out;
}

}  // namespace

Json element_to_json(const UEAElement& a) {
    Json words = Json::array();
    for (const auto& [w, c] : pbw_normal_form(a)) {
        Json factors = Json::array();
        for (const auto& e : w) factors.push_back(Json{{"kind", kind_name(e.kind)}, {"index", e.index}});
        words.push_back(Json{{"coeff", to_string(c)}, {"factors", std::move(factors)}});
    }
    return Json{{"words", std::move(words)}};
}

UEAElement element_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("words") || !j["words"].is_array())
        throw std::invalid_argument("element JSON needs a \"words\" array");
    UEAElement r;
    for (const auto& t : j["words"]) {
        if (!t.contains("coeff") || !t["coeff"].is_string() || !t.contains("factors") || !t["factors"].is_array())
            throw std::invalid_argument("each word needs \"coeff\" and \"factors\"");
        UEAElement w = from_scalar(parse_scalar(t["coeff"].get<std::string>()));
        for (const auto& f : t["factors"]) {
            if (!f.contains("kind") || !f.contains("index") || !f["index"].is_number_integer())
                throw std::invalid_argument("each factor needs \"kind\" and integer \"index\"");
            const Kind kind = kind_from_name(f["kind"].get<std::string>());
            const int index = f["index"].get<int>();
            if (index < (kind == Kind::H ? 0 : 1)) throw std::invalid_argument("factor index out of canonical range");
            w = multiply(w, from_lie(generator(kind, index)));
        }
        r += w;
    }
    return pbw_normal_form(r);
}

Json mform_to_json(const MForm& a) {
    Json terms = Json::array();
    for (const auto& [w, c] : a) {
        Json factors = Json::array();
        for (const auto& f : w) {
            if (f.is_lambda()) {
                const auto& l = f.as_lambda();
                factors.push_back(Json{{"kind", "lam"}, {"j", l.j}, {"l", l.l}, {"order", l.order}});
            } else {
                const auto& x = f.as_x();
                factors.push_back(
                    Json{{"kind", x.sign == Sign::Plus ? "xp" : "xm"}, {"index", x.index}, {"order", x.order}});
            }
        }
        terms.push_back(Json{{"coeff", to_string(c)}, {"factors", std::move(factors)}});
    }
    return Json{{"terms", std::move(terms)}};
}

Json report_to_json(const SuiteReport& r) {
    Json tags = Json::array();
    for (const auto& t : r.config.tags) tags.push_back(t);
    // the worker count is left out so that reports agree across --jobs
    Json cfg{{"max_index", r.config.max_index},
             {"max_order", r.config.max_order},
             {"suite", std::move(tags)},
             {"timing", r.config.timing}};
    Json results = Json::array();
    for (const auto& x : r.results) {
        Json rec{{"id", x.tag}, {"params", params_to_json(x.params)}, {"pass", x.pass}};
        if (x.counterexample)
            rec["counterexample"] =
                Json{{"lhs", element_to_json(x.counterexample->lhs)}, {"rhs", element_to_json(x.counterexample->rhs)}};
        else
            rec["counterexample"] = nullptr;
        rec["ms"] = x.ms;
        if (!x.note.empty()) rec["note"] = x.note;
        results.push_back(std::move(rec));
    }
    return Json{{"config", std::move(cfg)},
                {"results", std::move(results)},
                {"summary", Json{{"pass", r.passed}, {"fail", r.failed}}}};
}

std::string format_report(const SuiteReport& r, OutputFormat format) {
    if (format == OutputFormat::Json) return report_to_json(r).dump(2) + "\n";
    std::string out;
    for (const auto& x : r.results) {
        out += fmt::format("{} {} {}", x.pass ? "PASS" : "FAIL", x.tag, params_to_text(x.params));
        if (r.config.timing) out += fmt::format(" ({} ms)", x.ms);
        if (!x.note.empty()) out += " -- " + x.note;
        out += "\n";
        if (x.counterexample) {
            out += "    lhs: " + to_string(x.counterexample->lhs) + "\n";
            out += "    rhs: " + to_string(x.counterexample->rhs) + "\n";
        }
    }
    out += fmt::format("summary: {} passed, {} failed\n", r.passed, r.failed);
    return out;
}

}  // namespace onsager
