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
 * Splitting of places of K = F_q(x) in a cyclic subextension F/K of the ray class field
 * K_S^m, where the conductor m is a single irreducible place and the place S splits completely.
 *
 * The Galois group is never built. Gal(K_S^m/K) has order deg S * |U| and contains the unit
 * group U = (F_q[x]/m)^* / F_q^* with index deg S. For n | |U| and gcd(n, deg S) = 1 the
 * degree-n quotient is reached entirely through U, and Frob(P)^{deg S} is the class of
 *
 *     z_P = P^{deg S} / S^{deg P}  (mod m),
 *
 * so P splits in F iff z_P^{|U|/n} = 1, and the residue degree of P is the order of
 * z_P^{|U|/n}. Both predicates are unchanged if z_P is replaced by its inverse, so nothing here
 * depends on whether the reciprocity map sends P to the arithmetic or geometric Frobenius.
 */

#ifndef FFCLASS_RAYCLASS_HPP
#define FFCLASS_RAYCLASS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffclass/errors.hpp"
#include "ffclass/poly.hpp"
#include "ffclass/unit_group.hpp"

namespace ffclass {

/// A place of F_q(x): a monic irreducible polynomial, or the place at infinity.
class Place {
public:
    /// Throws std::invalid_argument unless p is monic and irreducible.
    static Place finite(Poly p);
    static Place infinity(FieldChar field) { return Place(field, std::nullopt); }

    bool is_infinity() const noexcept { return !poly_; }
    /// Throws std::logic_error for the infinite place.
    const Poly& poly() const;
    std::size_t degree() const noexcept { return poly_ ? *poly_->degree() : 1; }
    const FieldChar& field() const noexcept { return field_; }

    /// Canonical polynomial text, or "infinity".
    std::string name() const;

    friend bool operator==(const Place&, const Place&) = default;

private:
    Place(FieldChar field, std::optional<Poly> poly) : field_(field), poly_(std::move(poly)) {}

    FieldChar field_;
    std::optional<Poly> poly_;
};

/// All places of degree <= max_degree, by degree; within a degree in enumeration order, with
/// infinity after the finite places of degree 1.
std::vector<Place> places_up_to(FieldChar field, unsigned max_degree);

class RayClassField {
public:
    static constexpr std::size_t max_split_degree = 4096;

    /// Throws ValidationError listing every failed check.
    static RayClassField create(Poly conductor, Poly split);

    const FieldChar& field() const noexcept { return conductor_.field(); }
    const Poly& conductor() const noexcept { return conductor_; }
    const Poly& split() const noexcept { return split_; }
    const ResidueCtxPtr& ctx() const noexcept { return ctx_; }

    std::size_t conductor_degree() const noexcept { return *conductor_.degree(); }
    std::size_t split_degree() const noexcept { return *split_.degree(); }
    std::uint64_t unit_order() const noexcept { return ctx_->unit_order(); }
    std::uint64_t total_degree() const noexcept { return split_degree() * unit_order(); }

    bool is_conductor(const Place& p) const { return !p.is_infinity() && p.poly() == conductor_; }

private:
    RayClassField(Poly conductor, Poly split, ResidueCtxPtr ctx)
        : conductor_(std::move(conductor)), split_(std::move(split)), ctx_(std::move(ctx)) {}

    Poly conductor_;
    Poly split_;
    ResidueCtxPtr ctx_;
};

std::vector<Violation> check_field(const Poly& conductor, const Poly& split);

/// The unique subextension F/K of degree n inside a given ray class field.
class Subextension {
public:
    /// Largest q^genus for which place tables up to the genus are enumerated.
    static constexpr std::uint64_t max_genus_enumeration = std::uint64_t{1} << 24;

    /// Throws ValidationError.
    static Subextension create(const RayClassField& rcf, std::uint64_t n);

    /// F = K. Only meaningful as a self-test fixture for place counting.
    static Subextension identity() { return Subextension(1, std::nullopt); }

    std::uint64_t degree() const noexcept { return n_; }
    bool is_identity() const noexcept { return n_ == 1; }

    /// Throws std::invalid_argument if this was validated against a different field.
    void require_compatible(const RayClassField& rcf) const;

private:
    struct Fingerprint {
        Poly conductor;
        Poly split;
    };
    Subextension(std::uint64_t n, std::optional<Fingerprint> fp) : n_(n), fingerprint_(std::move(fp)) {}

    std::uint64_t n_;
    std::optional<Fingerprint> fingerprint_;
};

std::vector<Violation> check_subextension(const RayClassField& rcf, std::uint64_t n);

struct Validated {
    RayClassField field;
    Subextension sub;
};

/// Every violation of both field and subextension checks, in a fixed order.
std::vector<Violation> check(const Poly& conductor, const Poly& split, std::uint64_t n);

/// Throws ValidationError carrying check(conductor, split, n).
Validated validate(const Poly& conductor, const Poly& split, std::uint64_t n);

std::uint64_t field_degree(const RayClassField& rcf);

/// Class of P^{deg S} / S^{deg P} in U; for infinity, the class of 1/S.
/// Throws RamifiedPlace for the conductor.
UnitClass unit_part(const RayClassField& rcf, const Place& place);

bool is_split(const RayClassField& rcf, const Subextension& sub, const Place& place);

struct SplitReport {
    std::uint64_t e;
    std::uint64_t f;
    std::uint64_t g_count;

    friend bool operator==(const SplitReport&, const SplitReport&) = default;
};

/// The conductor is totally ramified: (n, 1, 1).
SplitReport decomposition(const RayClassField& rcf, const Subextension& sub, const Place& place);

/// Genus of a tame cyclic degree-n extension of F_q(x) ramified only at one place of the given
/// degree, every nontrivial character having that place as conductor:
/// 2g - 2 = -2n + (n - 1) * conductor_degree.
/// Throws std::domain_error if the right side is odd.
std::int64_t hurwitz_genus(std::uint64_t n, std::size_t conductor_degree);

std::int64_t subextension_genus(const RayClassField& rcf, const Subextension& sub);

}  // namespace ffclass

#endif  // FFCLASS_RAYCLASS_HPP
