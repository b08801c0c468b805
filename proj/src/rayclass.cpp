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

#include "ffclass/rayclass.hpp"

#include <numeric>
#include <stdexcept>

namespace ffclass {

Place Place::finite(Poly p) {
    if (p.is_constant() || !p.is_monic() || !is_irreducible(p))
        throw std::invalid_argument(format(p) + " is not a monic irreducible polynomial");
    return Place(p.field(), std::move(p));
}

const Poly& Place::poly() const {
    if (!poly_) throw std::logic_error("the infinite place has no polynomial");
    return *poly_;
}

std::string Place::name() const {
    return poly_ ? format(*poly_) : "infinity";
}

std::vector<Place> places_up_to(FieldChar field, unsigned max_degree) {
    std::vector<Place> out;
    for (unsigned d = 1; d <= max_degree; ++d) {
        for (auto& p : monic_irreducibles(field, d)) out.push_back(Place::finite(std::move(p)));
        if (d == 1) out.push_back(Place::infinity(field));
    }
    return out;
}

namespace {

void check_place_poly(const Poly& p, const std::string& role, std::vector<Violation>& out) {
    if (p.is_constant()) {
        out.push_back({role + "_constant", format(p) + " has degree < 1"});
        return;
    }
    if (!p.is_monic()) out.push_back({role + "_not_monic", format(p) + " is not monic"});
    if (!is_irreducible(p)) out.push_back({role + "_reducible", format(p) + " is reducible"});
}

// Subextension checks that only need the field sizes. Any of the optional data may be missing when
// the field itself failed validation; the corresponding checks are then skipped.
void check_degree(std::uint64_t n, std::uint32_t q, std::optional<std::uint64_t> unit_order,
                  std::optional<std::size_t> split_degree, std::optional<std::size_t> conductor_degree,
                  std::vector<Violation>& out) {
    const std::string ns = std::to_string(n);
    if (n < 2) {
        out.push_back({"degree_too_small", "subextension degree " + ns + " must be at least 2"});
        return;
    }
    if (unit_order && *unit_order % n != 0)
        out.push_back({"degree_not_dividing_unit_order",
                       ns + " does not divide the unit group order " + std::to_string(*unit_order)});
    if (split_degree && std::gcd<std::uint64_t, std::uint64_t>(n, *split_degree) != 1)
        out.push_back({"degree_not_coprime_to_split_degree",
                       "gcd(" + ns + ", " + std::to_string(*split_degree) + ") != 1"});
    if (n % q == 0)
        out.push_back({"wild_ramification", "characteristic " + std::to_string(q) + " divides " + ns});
    if (conductor_degree) {
        if (((n - 1) * *conductor_degree) % 2 != 0) {
            out.push_back({"genus_parity", "(n - 1) * deg m = " + std::to_string((n - 1) * *conductor_degree) +
                                               " is odd"});
        } else if (unit_order && *unit_order % n == 0) {
            const std::int64_t g = hurwitz_genus(n, *conductor_degree);
            const auto size = g < 0 ? std::optional<std::uint64_t>{1} : checked_pow(q, static_cast<unsigned>(g));
            if (!size || *size > Subextension::max_genus_enumeration)
                out.push_back({"genus_too_large", "q^genus exceeds 2^24 for genus " + std::to_string(g)});
        }
    }
}

}  // namespace

std::vector<Violation> check_field(const Poly& conductor, const Poly& split) {
    std::vector<Violation> out;
    if (conductor.field() != split.field()) {
        out.push_back({"characteristic_mismatch", "conductor and split place live over different fields"});
        return out;
    }
    check_place_poly(conductor, "conductor", out);
    check_place_poly(split, "split", out);
    if (!conductor.is_constant()) {
        const auto residues = checked_pow(conductor.field().q(), static_cast<unsigned>(*conductor.degree()));
        if (!residues || *residues > ResidueCtx::max_residues)
            out.push_back({"conductor_too_large", "q^deg(m) exceeds 2^48"});
    }
    if (split.degree() && *split.degree() > RayClassField::max_split_degree)
        out.push_back({"split_too_large", "deg S exceeds " + std::to_string(RayClassField::max_split_degree)});
    if (conductor == split) out.push_back({"conductor_equals_split", "m and S must be distinct places"});
    return out;
}

RayClassField RayClassField::create(Poly conductor, Poly split) {
    if (auto v = check_field(conductor, split); !v.empty()) throw ValidationError(std::move(v));
    auto ctx = ResidueCtx::create(conductor);
    return RayClassField(std::move(conductor), std::move(split), std::move(ctx));
}

std::vector<Violation> check_subextension(const RayClassField& rcf, std::uint64_t n) {
    std::vector<Violation> out;
    check_degree(n, rcf.field().q(), rcf.unit_order(), rcf.split_degree(), rcf.conductor_degree(), out);
    return out;
}

Subextension Subextension::create(const RayClassField& rcf, std::uint64_t n) {
    if (auto v = check_subextension(rcf, n); !v.empty()) throw ValidationError(std::move(v));
    return Subextension(n, Fingerprint{rcf.conductor(), rcf.split()});
}

void Subextension::require_compatible(const RayClassField& rcf) const {
    if (fingerprint_ && (fingerprint_->conductor != rcf.conductor() || fingerprint_->split != rcf.split()))
        throw std::invalid_argument("subextension was validated against a different ray class field");
}

std::vector<Violation> check(const Poly& conductor, const Poly& split, std::uint64_t n) {
    auto out = check_field(conductor, split);
    if (out.empty()) {
        auto rest = check_subextension(RayClassField::create(conductor, split), n);
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }
    if (conductor.field() != split.field()) return out;
    check_degree(n, conductor.field().q(), std::nullopt, split.degree(), std::nullopt, out);
    return out;
}

Validated validate(const Poly& conductor, const Poly& split, std::uint64_t n) {
    if (auto v = check(conductor, split, n); !v.empty()) throw ValidationError(std::move(v));
    auto rcf = RayClassField::create(conductor, split);
    auto sub = Subextension::create(rcf, n);
    return {std::move(rcf), std::move(sub)};
}

std::uint64_t field_degree(const RayClassField& rcf) {
    return rcf.total_degree();
}

UnitClass unit_part(const RayClassField& rcf, const Place& place) {
    if (place.field() != rcf.field()) throw CharacteristicMismatch("place and field over different F_q");
    if (rcf.is_conductor(place)) throw RamifiedPlace("the conductor " + place.name() + " is ramified");
    const auto& m = rcf.conductor();
    const auto& ctx = rcf.ctx();
    if (place.is_infinity()) return canonical(inverse_mod(rcf.split(), m), ctx);
    const Poly num = powmod(place.poly(), rcf.split_degree(), m);
    const Poly den = powmod(rcf.split(), place.degree(), m);
    return canonical(mulmod(num, inverse_mod(den, m), m), ctx);
}

namespace {

// z_P^{|U|/n}: trivial iff P splits, and its order is the residue degree.
UnitClass quotient_image(const RayClassField& rcf, const Subextension& sub, const Place& place) {
    sub.require_compatible(rcf);
    return pow(unit_part(rcf, place), rcf.unit_order() / sub.degree());
}

}  // namespace

bool is_split(const RayClassField& rcf, const Subextension& sub, const Place& place) {
    return quotient_image(rcf, sub, place).is_identity();
}

SplitReport decomposition(const RayClassField& rcf, const Subextension& sub, const Place& place) {
    const std::uint64_t n = sub.degree();
    if (rcf.is_conductor(place)) {
        sub.require_compatible(rcf);
        return {n, 1, 1};
    }
    const std::uint64_t f = order(quotient_image(rcf, sub, place));
    return {1, f, n / f};
}

std::int64_t hurwitz_genus(std::uint64_t n, std::size_t conductor_degree) {
    if (n == 0) throw std::invalid_argument("extension degree must be positive");
    const auto nn = static_cast<std::int64_t>(n);
    const std::int64_t different = (nn - 1) * static_cast<std::int64_t>(conductor_degree);
    const std::int64_t two_g_minus_two = -2 * nn + different;
    if (two_g_minus_two % 2 != 0)
        throw std::domain_error("(n - 1) * deg m = " + std::to_string(different) + " is odd; no such extension");
    return two_g_minus_two / 2 + 1;
}

std::int64_t subextension_genus(const RayClassField& rcf, const Subextension& sub) {
    sub.require_compatible(rcf);
    if (sub.degree() % rcf.field().q() == 0)
        throw std::domain_error("wild ramification is not supported");
    return hurwitz_genus(sub.degree(), rcf.conductor_degree());
}

}  // namespace ffclass
