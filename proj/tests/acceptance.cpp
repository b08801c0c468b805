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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
// usage: acceptance [PATH_TO_FFCLASS [PATH_TO_NEWTON_ORACLE_SCRIPT]]
// With the tool path, determinism is also checked across two separate processes; with the script
// path, the golden L-polynomial is first reproduced by the external Newton-identity script.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffclass/cli.hpp"
#include "ffclass/curve_stats.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace ffclass;

namespace {

const FieldChar F2(2);

Poly p2(const char* s) { return parse_poly(F2, s); }

struct Run {
    int code;
    std::string out;
    double seconds;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const auto t0 = std::chrono::steady_clock::now();
    const int code = cli::run(args, out, err);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return {code, out.str(), dt.count()};
}

std::string shell(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    if (pclose(pipe) != 0) out = "<process failed>";
    return out;
}

struct Suite {
    int failures = 0;
    void criterion(const std::string& name, const std::function<std::string()>& body) {
        std::string problem;
        try {
            problem = body();
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        if (problem.empty()) {
            std::cout << "[PASS] " << name << '\n';
        } else {
            std::cout << "[FAIL] " << name << ": " << problem << '\n';
            ++failures;
        }
        std::cout.flush();
    }
};

const std::vector<std::string> search_args{"search", "--q", "2", "--modulus-degree", "4", "--split-degree", "7",
                                           "--degree", "5"};

struct SweepEntry {
    Poly m;
    Poly s;
    Certificate cert;
};

std::vector<SweepEntry> sweep() {
    std::vector<SweepEntry> out;
    for (const auto& m : monic_irreducibles(F2, 4))
        for (const auto& s : monic_irreducibles(F2, 7)) out.push_back({m, s, verify_counterexample(validate(m, s, 5))});
    return out;
}

}  // namespace

int main(int argc, char* argv[]) {
    const std::string tool = argc > 1 ? argv[1] : "";
    const std::string newton_script = argc > 2 ? argv[2] : "";
    Suite suite;
    const auto entries = sweep();

    suite.criterion("AC1 reference field: degree 105, genus 4, h = 1, criterion satisfied, < 1 s", [] {
        const auto r = invoke({"verify", "--q", "2", "--modulus", "x^4+x+1", "--split", "x^7+x^4+1", "--degree", "5",
                            "--format", "json"});
        if (r.code != 0) return "exit code " + std::to_string(r.code);
        const auto doc = nlohmann::json::parse(r.out);
        if (doc["field_degree"] != 105) return std::string("field degree ") + doc["field_degree"].dump();
        if (doc["genus"] != 4) return std::string("genus ") + doc["genus"].dump();
        if (doc["class_number"] != 1) return std::string("class number ") + doc["class_number"].dump();
        if (doc["criterion"] != true) return std::string("criterion ") + doc["criterion"].dump();
        if (r.seconds >= 1.0) return "took " + std::to_string(r.seconds) + " s";
        return std::string();
    });

    suite.criterion("AC2 place checks: eight unramified places (1,5,1), conductor (5,1,1)", [] {
        const auto c = verify_counterexample(validate(p2("x^4+x+1"), p2("x^7+x^4+1"), 5));
        const std::set<std::string> unramified{"x",         "x+1",       "infinity",  "x^2+x+1",
                                               "x^3+x+1",   "x^3+x^2+1", "x^4+x^3+1", "x^4+x^3+x^2+x+1"};
        std::set<std::string> seen;
        for (const auto& p : c.places) {
            const auto name = p.place.name();
            const auto& r = p.split;
            if (name == "x^4+x+1") {
                if (r != SplitReport{5, 1, 1}) return "conductor reports " + std::to_string(r.e);
            } else if (unramified.count(name)) {
                if (r != SplitReport{1, 5, 1}) return name + " is not inert";
                seen.insert(name);
            } else {
                return "unexpected place " + name;
            }
        }
        if (seen != unramified) return std::string("missing places");
        return std::string();
    });

    suite.criterion("AC3 remark: S = x^7+x^3+1 verdict, search hit list has both solutions, < 5 s", [&] {
        const auto c = verify_counterexample(validate(p2("x^4+x+1"), p2("x^7+x^3+1"), 5));
        if (c.verdict != verdict_one || c.class_number != 1) return "remark verdict: " + c.verdict;
        auto args = search_args;
        args.insert(args.end(), {"--format", "json"});
        const auto r = invoke(args);
        if (r.code != 0) return "search exit " + std::to_string(r.code);
        if (r.seconds >= 5.0) return "search took " + std::to_string(r.seconds) + " s";
        const auto doc = nlohmann::json::parse(r.out);
        if (doc["scanned"] != 54) return std::string("scanned ") + doc["scanned"].dump();
        std::set<std::pair<std::string, std::string>> hits;
        for (const auto& h : doc["hits"]) hits.insert({h["modulus"].get<std::string>(), h["split"].get<std::string>()});
        if (!hits.count({"x^4+x+1", "x^7+x^4+1"}) || !hits.count({"x^4+x+1", "x^7+x^3+1"}))
            return std::string("reference solutions missing from hit list");
        // full hit list against the brute-force split oracle
        std::set<std::pair<std::string, std::string>> brute;
        for (const auto& e : entries) {
            const auto fifth = oracle::image_of_power_map(oracle::to_vec(e.m), 5, 2);
            const auto rcf = RayClassField::create(e.m, e.s);
            bool any_split = false;
            for (const auto& place : places_up_to(F2, 4))
                if (!rcf.is_conductor(place) && fifth.count(oracle::to_vec(unit_part(rcf, place).rep())))
                    any_split = true;
            if (!any_split) brute.insert({format(e.m), format(e.s)});
        }
        if (brute != hits) return std::string("hit list differs from brute-force oracle");
        return std::string();
    });

    suite.criterion("AC4 dual-path agreement on all 54 configurations: L(1) = 1 <=> criterion", [&] {
        if (entries.size() != 54) return "swept " + std::to_string(entries.size());
        for (const auto& e : entries) {
            if (!e.cert.criterion) return "no criterion for " + format(e.m) + ", " + format(e.s);
            if ((e.cert.class_number == 1) != *e.cert.criterion || !e.cert.consistent)
                return "disagreement at " + format(e.m) + ", " + format(e.s);
        }
        return std::string();
    });

    suite.criterion("AC5 oracle equivalence: is_split == membership in {u^5} over all 15 units", [&] {
        std::size_t checked = 0;
        for (const auto& e : entries) {
            const auto fifth = oracle::image_of_power_map(oracle::to_vec(e.m), 5, 2);
            if (fifth.size() != 3) return std::string("image of u -> u^5 has wrong size");
            const auto v = validate(e.m, e.s, 5);
            for (const auto& place : places_up_to(F2, 4)) {
                if (v.field.is_conductor(place)) continue;
                const bool brute = fifth.count(oracle::to_vec(unit_part(v.field, place).rep())) == 1;
                if (is_split(v.field, v.sub, place) != brute)
                    return "mismatch at " + place.name() + " for " + format(e.m) + ", " + format(e.s);
                ++checked;
            }
        }
        if (checked != 54 * 8) return "checked " + std::to_string(checked) + " place/config pairs";
        return std::string();
    });

    suite.criterion("AC6 L-polynomial fixture (0,0,0,1), q = 2, g = 4", [&] {
        const std::vector<std::int64_t> golden{1, -3, 2, 0, 1, 0, 8, -24, 16};
        if (!newton_script.empty()) {
            const auto out = shell("python3 '" + newton_script + "' 2 4 0,0,0,1");
            if (out != "1 -3 2 0 1 0 8 -24 16\n1\n") return "Newton script printed: " + out;
        }
        const std::vector<std::int64_t> n{0, 0, 0, 4};
        if (oracle::l_poly_by_zeta_series(n, 2, 4) != golden) return std::string("zeta-series oracle disagrees");
        const auto config = validate(p2("x^4+x+1"), p2("x^7+x^4+1"), 5);
        const auto table = count_places(config.field, config.sub, 4);
        const auto l = l_polynomial(point_counts(table, 4), 2, 4);
        if (l.coeffs != golden) return std::string("l_polynomial disagrees with golden coefficients");
        if (class_number(l) != 1) return std::string("h != 1");
        const auto r = invoke({"lpoly", "--q", "2", "--genus", "4", "--counts", "0,0,0,1"});
        if (r.code != 0 || r.out != "L-polynomial: 1 -3 2 0 1 0 8 -24 16\nclass number: 1\n")
            return "lpoly command printed: " + r.out;
        return std::string();
    });

    suite.criterion("AC7 property suites (10^4 cases, q in {2,3,5}; Rabin; Moebius), < 30 s", [] {
        const auto t0 = std::chrono::steady_clock::now();
        for (std::uint32_t q : {2u, 3u, 5u}) {
            if (auto f = properties::ring_axioms(q, 10000, 41 + q)) return "ring axioms: " + std::to_string(f);
            if (auto f = properties::bezout(q, 10000, 43 + q)) return "Bezout: " + std::to_string(f);
            if (auto f = properties::powmod_additivity(q, 10000, 47 + q)) return "powmod: " + std::to_string(f);
        }
        for (std::uint32_t q : {2u, 3u}) {
            if (auto f = properties::rabin_vs_trial_division(q, 8)) return "Rabin vs trial: " + std::to_string(f);
            if (auto f = properties::moebius_counts(q, 10)) return "Moebius: " + std::to_string(f);
        }
        if (monic_irreducibles(F2, 7).size() != 18) return std::string("septic count");
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        if (dt.count() >= 30.0) return "took " + std::to_string(dt.count()) + " s";
        return std::string();
    });

    suite.criterion("AC8 determinism: two search runs are byte-identical", [&] {
        for (const auto& fmt : {"text", "json"}) {
            auto args = search_args;
            args.insert(args.end(), {"--format", fmt});
            if (invoke(args).out != invoke(args).out) return std::string("in-process ") + fmt + " output differs";
        }
        if (!tool.empty()) {
            const std::string cmd = "'" + tool + "' search --q 2 --modulus-degree 4 --split-degree 7 --degree 5";
            const auto a = shell(cmd), b = shell(cmd);
            if (a != b || a.empty()) return std::string("separate processes differ");
            const auto ja = shell(cmd + " --format json"), jb = shell(cmd + " --format json");
            if (ja != jb || ja.empty()) return std::string("separate processes differ (json)");
        }
        return std::string();
    });

    std::cout << (suite.failures == 0 ? "all acceptance criteria passed" : "acceptance failures: " +
                                                                                std::to_string(suite.failures))
              << '\n';
    return suite.failures == 0 ? 0 : 1;
}
