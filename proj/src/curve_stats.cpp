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

#include "ffclass/curve_stats.hpp"

#include <limits>
#include <stdexcept>

#include "ffclass/version.hpp"

namespace ffclass {

PlaceCountTable count_places(const RayClassField& rcf, const Subextension& sub, unsigned max_degree) {
    if (max_degree == 0) throw std::invalid_argument("maximum degree must be at least 1");
    sub.require_compatible(rcf);
    const auto size = checked_pow(rcf.field().q(), max_degree);
    if (!size || *size > max_count_enumeration)
        throw std::length_error("place enumeration up to degree " + std::to_string(max_degree) + " is too large");

    PlaceCountTable table;
    table.max_degree = max_degree;
    table.counts.assign(max_degree, 0);
    table.sources.assign(max_degree, 0);
    for (const auto& place : places_up_to(rcf.field(), max_degree)) {
        const SplitReport r = decomposition(rcf, sub, place);
        const std::uint64_t upstairs = place.degree() * r.f;
        if (upstairs > max_degree) continue;
        std::uint8_t source = from_unramified;
        if (rcf.is_conductor(place)) source = from_conductor;
        else if (!place.is_infinity() && place.poly() == rcf.split()) source = from_split_place;
        table.counts[upstairs - 1] += r.g_count;
        table.sources[upstairs - 1] |= source;
    }
    return table;
}

std::vector<std::int64_t> point_counts(const PlaceCountTable& table, unsigned max_degree) {
    if (max_degree > table.max_degree)
        throw std::invalid_argument("place table only covers degrees up to " + std::to_string(table.max_degree));
    std::vector<std::int64_t> n(max_degree, 0);
    for (unsigned r = 1; r <= max_degree; ++r)
        for (unsigned d = 1; d <= r; ++d)
            if (r % d == 0) n[r - 1] += static_cast<std::int64_t>(d * table.at(d));
    return n;
}

bool LPolynomial::satisfies_functional_equation() const {
    if (coeffs.size() != 2 * std::size_t{genus} + 1 || coeffs[0] != 1) return false;
    std::int64_t qpow = 1;  // q^{g-i}, walking i downwards from g
    for (unsigned i = genus + 1; i-- > 0;) {
        if (coeffs[2 * genus - i] != qpow * coeffs[i]) return false;
        if (i > 0) qpow *= q;
    }
    return true;
}

std::int64_t LPolynomial::value_at_one() const {
    std::int64_t sum = 0;
    for (auto a : coeffs) sum += a;
    return sum;
}

namespace {

__extension__ typedef __int128 wide;

std::int64_t narrow(wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("L-polynomial coefficient exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

// Keeps intermediates far from the 128-bit edge; every legitimate value here is < 2^63.
wide guard(wide v) {
    constexpr wide limit = wide{1} << 100;
    if (v > limit || v < -limit) throw std::overflow_error("Newton identity intermediate overflow");
    return v;
}

}  // namespace

LPolynomial l_polynomial(std::span<const std::int64_t> counts, std::uint32_t q, unsigned genus) {
    if (counts.size() != genus)
        throw std::invalid_argument("expected " + std::to_string(genus) + " point counts, got " +
                                    std::to_string(counts.size()));
    // power sums of the reciprocal roots
    std::vector<wide> s(genus + 1, 0);
    wide qr = 1;
    for (unsigned r = 1; r <= genus; ++r) {
        qr = guard(qr * q);
        s[r] = guard(qr + 1 - counts[r - 1]);
    }
    // k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} s_i
    std::vector<wide> e(genus + 1, 0);
    e[0] = 1;
    for (unsigned k = 1; k <= genus; ++k) {
        wide acc = 0;
        for (unsigned i = 1; i <= k; ++i) {
            const wide term = guard(e[k - i] * s[i]);
            acc = guard(i % 2 ? acc + term : acc - term);
        }
        if (acc % k != 0)
            throw InconsistentCounts("Newton step " + std::to_string(k) + " is not integral");
        e[k] = acc / k;
    }

    LPolynomial l;
    l.genus = genus;
    l.q = q;
    l.coeffs.assign(2 * std::size_t{genus} + 1, 0);
    for (unsigned i = 0; i <= genus; ++i) l.coeffs[i] = narrow(i % 2 ? -e[i] : e[i]);
    wide qpow = 1;
    for (unsigned i = genus; i-- > 0;) {
        qpow = guard(qpow * q);  // q^{g-i}
        l.coeffs[2 * genus - i] = narrow(guard(qpow * l.coeffs[i]));
    }
    if (l.value_at_one() < 1)
        throw InconsistentCounts("L(1) = " + std::to_string(l.value_at_one()) + " is not a class number");
    return l;
}

std::int64_t class_number(const LPolynomial& l) {
    const std::int64_t h = l.value_at_one();
    if (h < 1) throw InconsistentCounts("L(1) = " + std::to_string(h) + " is not positive");
    return h;
}

bool madan_queen_check(const PlaceCountTable& table, std::uint32_t q, std::int64_t genus) {
    if (q != 2 || genus != 4)
        throw InapplicableCriterion("the criterion covers only q = 2 and genus 4 (got q = " + std::to_string(q) +
                                    ", genus " + std::to_string(genus) + ")");
    if (table.max_degree < 4) throw std::invalid_argument("criterion needs place counts up to degree 4");
    return table.at(1) == 0 && table.at(2) == 0 && table.at(3) == 0 && table.at(4) == 1;
}

Certificate verify_counterexample(const Validated& config) {
    const auto& rcf = config.field;
    const auto& sub = config.sub;
    if (sub.is_identity()) throw std::invalid_argument("certificates need a proper subextension");

    Certificate c{
        .q = rcf.field().q(),
        .conductor = rcf.conductor(),
        .split = rcf.split(),
        .degree = sub.degree(),
        .field_degree = field_degree(rcf),
        .genus = subextension_genus(rcf, sub),
        .places = {},
        .counts = {},
        .l_poly = {},
        .class_number = 0,
        .criterion = std::nullopt,
        .consistent = true,
        .verdict = {},
        .tool_version = std::string(tool_version),
    };
    const auto g = static_cast<unsigned>(c.genus);

    for (auto& place : places_up_to(rcf.field(), g)) {
        const auto report = decomposition(rcf, sub, place);
        c.places.push_back({std::move(place), report});
    }

    std::string problem;
    if (g > 0) {
        c.counts = count_places(rcf, sub, g);
    } else {
        c.counts.max_degree = 0;
    }
    try {
        c.l_poly = l_polynomial(point_counts(c.counts, g), c.q, g);
        c.class_number = class_number(c.l_poly);
    } catch (const InconsistentCounts& ex) {
        problem = ex.what();
    }
    if (c.q == 2 && c.genus == 4) c.criterion = madan_queen_check(c.counts, c.q, c.genus);

    if (problem.empty() && c.criterion && *c.criterion != (c.class_number == 1))
        problem = "L(1) = " + std::to_string(c.class_number) + " but criterion = " + (*c.criterion ? "true" : "false");

    if (!problem.empty()) {
        c.consistent = false;
        c.verdict = "invalid: " + problem;
    } else {
        c.verdict = std::string(c.class_number == 1 ? verdict_one : verdict_more);
    }
    return c;
}

}  // namespace ffclass
