/*
   Copyright 2026 The ffclass Authors

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

/*
 * Text and JSON renderings of a certificate. Both read the same Certificate value; nothing is
 * computed here.
 *
 * JSON field order is fixed:
 *   config {q, modulus, split, degree}, field_degree, genus,
 *   places [{place, degree, e, f, g}], counts [B_1..B_g], l_poly [a_0..a_2g],
 *   class_number, criterion (bool or null), verdict, tool_version
 */

#ifndef FFCLASS_REPORT_HPP
#define FFCLASS_REPORT_HPP

#include <string>

#include <json.hpp>

#include "ffclass/curve_stats.hpp"

namespace ffclass {

nlohmann::ordered_json to_json(const Certificate& c);
std::string render_text(const Certificate& c);

}  // namespace ffclass

#endif  // FFCLASS_REPORT_HPP
