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
 * The group U = (F_q[x]/(m))^* / F_q^* for a monic irreducible m.
 *
 * Each class is stored by its unique monic representative of degree < deg m. Quotienting by
 * constants is then just "make it monic", which is a no-op over F_2.
 */

#ifndef FFCLASS_UNIT_GROUP_HPP
#define FFCLASS_UNIT_GROUP_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "ffclass/arith.hpp"
#include "ffclass/poly.hpp"

namespace ffclass {

class ResidueCtx;
using ResidueCtxPtr = std::shared_ptr<const ResidueCtx>;

class ResidueCtx {
public:
    /// q^{deg m} must not exceed this.
    static constexpr std::uint64_t max_residues = std::uint64_t{1} << 48;

    /// Throws std::invalid_argument unless modulus is monic, irreducible and within the size cap.
    static ResidueCtxPtr create(Poly modulus);

    const FieldChar& field() const noexcept { return modulus_.field(); }
    const Poly& modulus() const noexcept { return modulus_; }
    std::size_t modulus_degree() const noexcept { return *modulus_.degree(); }

    /// (q^{deg m} - 1) / (q - 1)
    std::uint64_t unit_order() const noexcept { return unit_order_; }
    const std::vector<PrimePower>& unit_order_factors() const noexcept { return factors_; }

    friend bool operator==(const ResidueCtx& a, const ResidueCtx& b) { return a.modulus_ == b.modulus_; }

private:
    ResidueCtx(Poly modulus, std::uint64_t unit_order, std::vector<PrimePower> factors)
        : modulus_(std::move(modulus)), unit_order_(unit_order), factors_(std::move(factors)) {}

    Poly modulus_;
    std::uint64_t unit_order_;
    std::vector<PrimePower> factors_;
};

class UnitClass {
public:
    const Poly& rep() const noexcept { return rep_; }
    const ResidueCtxPtr& ctx() const noexcept { return ctx_; }
    bool is_identity() const noexcept { return rep_.is_one(); }

    friend bool operator==(const UnitClass& a, const UnitClass& b) {
        return a.rep_ == b.rep_ && (a.ctx_ == b.ctx_ || *a.ctx_ == *b.ctx_);
    }

private:
    UnitClass(ResidueCtxPtr ctx, Poly rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) {}

    friend UnitClass canonical(const Poly& f, const ResidueCtxPtr& ctx);

    ResidueCtxPtr ctx_;
    Poly rep_;
};

/// Reduces f mod m and scales to monic. Throws NotInvertible if m divides f.
UnitClass canonical(const Poly& f, const ResidueCtxPtr& ctx);
UnitClass identity(const ResidueCtxPtr& ctx);

/// Throws std::invalid_argument if u and v belong to different contexts.
UnitClass mul(const UnitClass& u, const UnitClass& v);
UnitClass inv(const UnitClass& u);
UnitClass pow(const UnitClass& u, std::int64_t e);
UnitClass pow(const UnitClass& u, std::uint64_t e);
inline UnitClass pow(const UnitClass& u, int e) { return pow(u, std::int64_t{e}); }

/// Exact multiplicative order, found by stripping prime factors off the group order.
std::uint64_t order(const UnitClass& u);

/// True iff u^k is the identity. k must be positive.
bool is_identity_power(const UnitClass& u, std::uint64_t k);

/// Every class, in enumeration order of representatives. Throws std::length_error above 2^20 residues.
std::vector<UnitClass> all_units(const ResidueCtxPtr& ctx);

}  // namespace ffclass

#endif  // FFCLASS_UNIT_GROUP_HPP
