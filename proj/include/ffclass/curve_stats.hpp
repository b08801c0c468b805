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
 * Place counts, L-polynomial and class number of the subextension F.
 *
 * The class number is computed twice: once as h = L(1) from the place counts of F up to its
 * genus, and once by the genus-4 criterion over F_2 (h = 1 iff F has exactly one place of
 * degree 4 and none of degree 1, 2 or 3). A certificate records both and refuses a verdict
 * if they disagree.
 */

#ifndef FFCLASS_CURVE_STATS_HPP
#define FFCLASS_CURVE_STATS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffclass/rayclass.hpp"

namespace ffclass {

/// Where the places of F counted in one degree come from.
enum PlaceSource : std::uint8_t {
    from_unramified = 1 << 0,
    from_conductor = 1 << 1,
    from_split_place = 1 << 2,
};

struct PlaceCountTable {
    unsigned max_degree = 0;
    std::vector<std::uint64_t> counts;  // counts[d - 1] = number of places of F of degree d
    std::vector<std::uint8_t> sources;  // PlaceSource bits, parallel to counts

    std::uint64_t at(unsigned d) const { return counts.at(d - 1); }
};

/// Largest q^D that count_places will enumerate.
inline constexpr std::uint64_t max_count_enumeration = std::uint64_t{1} << 24;

/// Places of F of each degree 1..max_degree. sub may be Subextension::identity().
PlaceCountTable count_places(const RayClassField& rcf, const Subextension& sub, unsigned max_degree);

/// N_r = sum over d | r of d * B_d, for r = 1..max_degree.
std::vector<std::int64_t> point_counts(const PlaceCountTable& table, unsigned max_degree);

struct LPolynomial {
    unsigned genus = 0;
    std::uint32_t q = 0;
    std::vector<std::int64_t> coeffs;  // a_0 .. a_{2g}

    /// a_0 = 1 and a_{2g-i} = q^{g-i} a_i.
    bool satisfies_functional_equation() const;
    std::int64_t value_at_one() const;
};

/// From N_1..N_g via Newton's identities on s_r = q^r + 1 - N_r.
/// Throws InconsistentCounts on a non-integral step or L(1) < 1; std::overflow_error past 64 bits.
LPolynomial l_polynomial(std::span<const std::int64_t> point_counts, std::uint32_t q, unsigned genus);

/// h = L(1). Throws InconsistentCounts if not positive.
std::int64_t class_number(const LPolynomial& l);

/// Only for q = 2 and genus 4, otherwise InapplicableCriterion.
bool madan_queen_check(const PlaceCountTable& table, std::uint32_t q, std::int64_t genus);

struct PlaceReport {
    Place place;
    SplitReport split;
};

struct Certificate {
    std::uint32_t q;
    Poly conductor;
    Poly split;
    std::uint64_t degree;

    std::uint64_t field_degree;
    std::int64_t genus;
    std::vector<PlaceReport> places;  // every place of K of degree <= genus
    PlaceCountTable counts;           // degrees 1..genus
    LPolynomial l_poly;
    std::int64_t class_number;
    std::optional<bool> criterion;    // empty where the criterion does not apply
    bool consistent;
    std::string verdict;
    std::string tool_version;

    bool class_number_one() const { return consistent && class_number == 1; }
};

inline constexpr std::string_view verdict_one = "class number one";
inline constexpr std::string_view verdict_more = "class number greater than one";

Certificate verify_counterexample(const Validated& config);

}  // namespace ffclass

#endif  // FFCLASS_CURVE_STATS_HPP
