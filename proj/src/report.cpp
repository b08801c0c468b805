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

#include "ffclass/report.hpp"

#include <fmt/format.h>

namespace ffclass {

nlohmann::ordered_json to_json(const Certificate& c) {
    using json = nlohmann::ordered_json;
    json places = json::array();
    for (const auto& p : c.places)
        places.push_back({{"place", p.place.name()},
                          {"degree", p.place.degree()},
                          {"e", p.split.e},
                          {"f", p.split.f},
                          {"g", p.split.g_count}});
    json out;
    out["config"] = {{"q", c.q}, {"modulus", format(c.conductor)}, {"split", format(c.split)}, {"degree", c.degree}};
    out["field_degree"] = c.field_degree;
    out["genus"] = c.genus;
    out["places"] = std::move(places);
    out["counts"] = c.counts.counts;
    out["l_poly"] = c.l_poly.coeffs;
    out["class_number"] = c.class_number;
    out["criterion"] = c.criterion ? json(*c.criterion) : json(nullptr);
    out["verdict"] = c.verdict;
    out["tool_version"] = c.tool_version;
    return out;
}

std::string render_text(const Certificate& c) {
    std::string out;
    auto line = [&out](const std::string& s) {
        out += s;
        out += '\n';
    };
    line(fmt::format("configuration: q={} modulus={} split={} degree={}", c.q, format(c.conductor), format(c.split),
                     c.degree));
    line(fmt::format("field degree: {}", c.field_degree));
    line(fmt::format("genus: {}", c.genus));
    if (!c.places.empty()) {
        std::size_t width = 5;
        for (const auto& p : c.places) width = std::max(width, p.place.name().size());
        line(fmt::format("{:<{}}  {:>3}  {:>3}  {:>3}  {:>3}  {}", "place", width, "deg", "e", "f", "g", "status"));
        for (const auto& p : c.places) {
            const auto& r = p.split;
            const char* status = r.e > 1 ? "ramified" : r.f == 1 ? "split" : r.g_count == 1 ? "inert" : "partial";
            line(fmt::format("{:<{}}  {:>3}  {:>3}  {:>3}  {:>3}  {}", p.place.name(), width, p.place.degree(), r.e,
                             r.f, r.g_count, status));
        }
    }
    line(fmt::format("place counts B_1..B_{}: {}", c.counts.max_degree, fmt::join(c.counts.counts, " ")));
    line(fmt::format("L-polynomial: {}", fmt::join(c.l_poly.coeffs, " ")));
    line(fmt::format("class number: {}", c.class_number));
    if (c.criterion)
        line(fmt::format("criterion (one place of degree 4, none of smaller degree): {}",
                         *c.criterion ? "satisfied" : "not satisfied"));
    else
        line("criterion (one place of degree 4, none of smaller degree): not applicable");
    line(fmt::format("verdict: {}", c.verdict));
    return out;
}

}  // namespace ffclass
