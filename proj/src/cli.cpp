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

#include "ffclass/cli.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <atomic>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "ffclass/curve_stats.hpp"
#include "ffclass/report.hpp"
#include "ffclass/version.hpp"

namespace ffclass::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::uint32_t q = 2;
    std::string modulus;
    std::string split;
    unsigned modulus_degree = 0;
    unsigned split_degree = 0;
    std::uint64_t degree = 0;
    unsigned max_degree = 4;
    unsigned genus = 0;
    std::string counts;
    std::string format = "text";
    std::string output;
};

// Reported with exit code 2.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Poly read_poly(FieldChar field, const std::string& text, const char* flag) {
    try {
        return parse_poly(field, text);
    } catch (const ParseError& e) {
        throw InvalidInput(fmt::format("invalid polynomial for {}: {}", flag, e.what()));
    }
}

FieldChar read_field(std::uint32_t q) {
    try {
        return FieldChar(q);
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(fmt::format("invalid --q: {}", e.what()));
    }
}

void write_file(const std::string& path, const json& doc) {
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot open output file " + path);
    f << doc.dump(2) << '\n';
    if (!f) throw InvalidInput("failed writing output file " + path);
}

void print_violations(std::ostream& err, const std::vector<Violation>& vs) {
    fmt::print(err, "invalid configuration:\n");
    for (const auto& v : vs) fmt::print(err, "  {}: {}\n", v.name, v.detail);
}

Validated read_config(const RunConfig& cfg) {
    const FieldChar field = read_field(cfg.q);
    const Poly m = read_poly(field, cfg.modulus, "--modulus");
    const Poly s = read_poly(field, cfg.split, "--split");
    return validate(m, s, cfg.degree);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto config = read_config(cfg);
    const Certificate cert = verify_counterexample(config);
    const json doc = to_json(cert);
    if (cfg.format == "json") out << doc.dump(2) << '\n';
    else out << render_text(cert);
    if (!cfg.output.empty()) write_file(cfg.output, doc);
    return cert.class_number_one() ? positive : negative;
}

int cmd_tabulate(const RunConfig& cfg, std::ostream& out) {
    const auto config = read_config(cfg);
    const auto& rcf = config.field;
    const auto size = checked_pow(cfg.q, cfg.max_degree);
    if (cfg.max_degree == 0 || !size || *size > max_count_enumeration)
        throw InvalidInput("--max-degree must be at least 1 and keep q^max-degree within 2^24");

    json rows = json::array();
    std::vector<std::array<std::string, 6>> text_rows;
    for (const auto& place : places_up_to(rcf.field(), cfg.max_degree)) {
        const auto r = decomposition(rcf, config.sub, place);
        const std::string unit = rcf.is_conductor(place) ? "ramified" : format(unit_part(rcf, place).rep());
        rows.push_back({{"place", place.name()},
                        {"degree", place.degree()},
                        {"unit_part", unit},
                        {"e", r.e},
                        {"f", r.f},
                        {"g", r.g_count}});
        text_rows.push_back({place.name(), std::to_string(place.degree()), unit, std::to_string(r.e),
                             std::to_string(r.f), std::to_string(r.g_count)});
    }
    if (cfg.format == "json") {
        json doc;
        doc["config"] = {{"q", cfg.q},
                         {"modulus", format(rcf.conductor())},
                         {"split", format(rcf.split())},
                         {"degree", config.sub.degree()}};
        doc["rows"] = rows;
        doc["tool_version"] = std::string(tool_version);
        out << doc.dump(2) << '\n';
        if (!cfg.output.empty()) write_file(cfg.output, doc);
        return positive;
    }
    std::size_t w0 = 5, w2 = 9;
    for (const auto& r : text_rows) {
        w0 = std::max(w0, r[0].size());
        w2 = std::max(w2, r[2].size());
    }
    fmt::print(out, "{:<{}}  {:>3}  {:<{}}  {:>3}  {:>3}  {:>3}\n", "place", w0, "deg", "unit part", w2, "e", "f", "g");
    for (const auto& r : text_rows)
        fmt::print(out, "{:<{}}  {:>3}  {:<{}}  {:>3}  {:>3}  {:>3}\n", r[0], w0, r[1], r[2], w2, r[3], r[4], r[5]);
    if (!cfg.output.empty()) {
        json doc;
        doc["rows"] = rows;
        write_file(cfg.output, doc);
    }
    return positive;
}

// Search scans at most this many candidate polynomials per degree.
constexpr std::uint64_t max_search_candidates = std::uint64_t{1} << 16;

struct PairOutcome {
    std::vector<Violation> violations;
    std::optional<Certificate> certificate;
};

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const FieldChar field = read_field(cfg.q);
    for (unsigned d : {cfg.modulus_degree, cfg.split_degree}) {
        const auto size = checked_pow(cfg.q, d);
        if (d == 0 || !size || *size > max_search_candidates)
            throw InvalidInput(fmt::format("search degree {} is outside 1..log_q(2^16)", d));
    }
    const auto moduli = monic_irreducibles(field, cfg.modulus_degree);
    const auto splits = monic_irreducibles(field, cfg.split_degree);

    std::vector<std::pair<const Poly*, const Poly*>> pairs;
    for (const auto& m : moduli)
        for (const auto& s : splits) pairs.emplace_back(&m, &s);

    // Workers fill disjoint slots; output is assembled afterwards in pair order.
    std::vector<PairOutcome> outcomes(pairs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();) {
            try {
                const auto& [m, s] = pairs[i];
                outcomes[i].violations = check(*m, *s, cfg.degree);
                if (outcomes[i].violations.empty())
                    outcomes[i].certificate = verify_counterexample(validate(*m, *s, cfg.degree));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned threads =
        static_cast<unsigned>(std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(pairs.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);

    std::size_t valid = 0;
    std::vector<const Certificate*> hits;
    std::vector<const Certificate*> conflicts;
    std::map<std::string, std::size_t> rejected;
    for (const auto& o : outcomes) {
        for (const auto& v : o.violations) ++rejected[v.name];
        if (!o.certificate) continue;
        ++valid;
        if (!o.certificate->consistent) conflicts.push_back(&*o.certificate);
        else if (o.certificate->class_number == 1) hits.push_back(&*o.certificate);
    }

    if (valid == 0) {
        fmt::print(err, "no valid configuration among {} pairs\n", pairs.size());
        for (const auto& [name, count] : rejected) fmt::print(err, "  {}: {} pairs\n", name, count);
        return invalid;
    }

    json doc;
    doc["query"] = {{"q", cfg.q},
                    {"modulus_degree", cfg.modulus_degree},
                    {"split_degree", cfg.split_degree},
                    {"degree", cfg.degree}};
    doc["scanned"] = pairs.size();
    doc["valid"] = valid;
    json hit_list = json::array();
    for (const auto* c : hits) hit_list.push_back({{"modulus", format(c->conductor)}, {"split", format(c->split)}});
    doc["hits"] = hit_list;
    json certs = json::array();
    for (const auto& o : outcomes)
        if (o.certificate) certs.push_back(to_json(*o.certificate));
    doc["certificates"] = std::move(certs);
    doc["tool_version"] = std::string(tool_version);

    if (cfg.format == "json") {
        out << doc.dump(2) << '\n';
    } else {
        fmt::print(out, "search: q={} modulus-degree={} split-degree={} degree={}\n", cfg.q, cfg.modulus_degree,
                   cfg.split_degree, cfg.degree);
        fmt::print(out, "pairs scanned: {}\n", pairs.size());
        fmt::print(out, "valid configurations: {}\n", valid);
        for (const auto& [name, count] : rejected) fmt::print(out, "rejected ({}): {}\n", name, count);
        if (hits.empty()) {
            fmt::print(out, "no configurations found\n");
        } else {
            fmt::print(out, "class number one: {}\n", hits.size());
            for (const auto* c : hits) fmt::print(out, "  modulus={} split={}\n", format(c->conductor), format(c->split));
        }
        for (const auto* c : conflicts)
            fmt::print(out, "inconsistent: modulus={} split={} {}\n", format(c->conductor), format(c->split), c->verdict);
    }
    if (!cfg.output.empty()) write_file(cfg.output, doc);
    return conflicts.empty() ? positive : negative;
}

std::vector<std::uint64_t> read_counts(const std::string& text) {
    std::vector<std::uint64_t> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string field = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (field.empty() || field.size() > 18 ||
            !std::all_of(field.begin(), field.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw InvalidInput(fmt::format("malformed --counts entry '{}' at offset {}", field, start));
        out.push_back(std::stoull(field));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

constexpr unsigned max_lpoly_genus = 64;

int cmd_lpoly(const RunConfig& cfg, std::ostream& out) {
    const FieldChar field = read_field(cfg.q);
    if (cfg.genus > max_lpoly_genus) throw InvalidInput("--genus is limited to 64");
    const auto counts = read_counts(cfg.counts);
    if (counts.size() != cfg.genus)
        throw InvalidInput(fmt::format("--counts has {} entries but --genus is {}", counts.size(), cfg.genus));

    PlaceCountTable table;
    table.max_degree = cfg.genus;
    table.counts = counts;
    table.sources.assign(counts.size(), 0);
    LPolynomial l;
    std::int64_t h = 0;
    try {
        l = l_polynomial(point_counts(table, cfg.genus), field.q(), cfg.genus);
        h = class_number(l);
    } catch (const InconsistentCounts& e) {
        throw InvalidInput(fmt::format("inconsistent counts: {}", e.what()));
    } catch (const std::overflow_error& e) {
        throw InvalidInput(fmt::format("inconsistent counts: {}", e.what()));
    }
    if (cfg.format == "json") {
        json doc;
        doc["q"] = cfg.q;
        doc["genus"] = cfg.genus;
        doc["counts"] = counts;
        doc["l_poly"] = l.coeffs;
        doc["class_number"] = h;
        doc["tool_version"] = std::string(tool_version);
        out << doc.dump(2) << '\n';
        if (!cfg.output.empty()) write_file(cfg.output, doc);
    } else {
        fmt::print(out, "L-polynomial: {}\n", fmt::join(l.coeffs, " "));
        fmt::print(out, "class number: {}\n", h);
    }
    return positive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Ray class field subextensions of F_q(x) with class number one"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", cfg.output, "Write the JSON document to this path");
    };
    auto add_config = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q, "Prime field size")->capture_default_str();
        sub->add_option("--modulus", cfg.modulus, "Conductor m, e.g. \"x^4+x+1\"")->required();
        sub->add_option("--split", cfg.split, "Split place S, e.g. \"x^7+x^4+1\"")->required();
        sub->add_option("--degree", cfg.degree, "Degree n of the subextension")->required();
        add_format(sub);
    };

    auto* verify = app.add_subcommand("verify", "Certify the class number of one configuration");
    add_config(verify);

    auto* tabulate = app.add_subcommand("tabulate", "Show the splitting of every place up to a degree");
    add_config(tabulate);
    tabulate->add_option("--max-degree", cfg.max_degree, "Largest place degree to list")->capture_default_str();

    auto* search = app.add_subcommand("search", "Scan all (m, S) pairs of given degrees");
    search->add_option("--q", cfg.q, "Prime field size")->capture_default_str();
    search->add_option("--modulus-degree", cfg.modulus_degree, "Degree of the conductor")->required();
    search->add_option("--split-degree", cfg.split_degree, "Degree of the split place")->required();
    search->add_option("--degree", cfg.degree, "Degree n of the subextension")->required();
    add_format(search);

    auto* lpoly = app.add_subcommand("lpoly", "L-polynomial and class number from place counts");
    lpoly->add_option("--q", cfg.q, "Prime field size")->capture_default_str();
    lpoly->add_option("--genus", cfg.genus, "Genus g")->required();
    lpoly->add_option("--counts", cfg.counts, "Place counts B_1,...,B_g")->required()->expected(0, 1);
    add_format(lpoly);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? positive : invalid;
    }

    try {
        if (*verify) return cmd_verify(cfg, out);
        if (*tabulate) return cmd_tabulate(cfg, out);
        if (*search) return cmd_search(cfg, out, err);
        if (*lpoly) return cmd_lpoly(cfg, out);
    } catch (const ValidationError& e) {
        print_violations(err, e.violations());
        return invalid;
    } catch (const InvalidInput& e) {
        fmt::print(err, "error: {}\n", e.what());
        return invalid;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return invalid;
    }
    return invalid;
}

}  // namespace ffclass::cli
