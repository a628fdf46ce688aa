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

#ifndef ONSAGER_JSON_IO_HPP
#define ONSAGER_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "onsager/straightening.hpp"
#include "onsager/uea.hpp"
#include "onsager/verifier.hpp"

namespace onsager {

using Json = nlohmann::ordered_json;

// {"words": [{"coeff": "p/q", "factors": [{"kind": "xp|xm|h", "index": n}, ...]}, ...]}
// Words are listed in ascending basis order of the normal form.
Json element_to_json(const UEAElement& a);

// Inverse of element_to_json; throws std::invalid_argument on malformed input.
UEAElement element_from_json(const Json& j);

// {"terms": [{"coeff": "p/q", "factors": [{"kind": "xm|xp", "index", "order"} | {"kind": "lam", "j", "l", "order"}]}]}
Json mform_to_json(const MForm& a);

Json report_to_json(const SuiteReport& r);

// Serialized report, terminated by a newline.
std::string format_report(const SuiteReport& r, OutputFormat format);

}  // namespace onsager

#endif
