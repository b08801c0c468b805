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

#include "ffclass/unit_group.hpp"

#include <stdexcept>

namespace ffclass {

ResidueCtxPtr ResidueCtx::create(Poly modulus) {
    if (modulus.is_constant()) throw std::invalid_argument("modulus must have degree >= 1");
    if (!modulus.is_monic()) throw std::invalid_argument("modulus " + format(modulus) + " is not monic");
    const std::uint32_t q = modulus.field().q();
    const auto residues = checked_pow(q, static_cast<unsigned>(*modulus.degree()));
    if (!residues || *residues > max_residues)
        throw std::invalid_argument("q^deg(modulus) exceeds 2^48 for modulus " + format(modulus));
    if (!is_irreducible(modulus)) throw std::invalid_argument("modulus " + format(modulus) + " is reducible");
    const std::uint64_t n = (*residues - 1) / (q - 1);
    return ResidueCtxPtr(new ResidueCtx(std::move(modulus), n, factorize(n)));
}

UnitClass canonical(const Poly& f, const ResidueCtxPtr& ctx) {
    Poly r = rem(f, ctx->modulus());
    if (r.is_zero()) throw NotInvertible(format(f) + " is divisible by the modulus " + format(ctx->modulus()));
    return UnitClass(ctx, monic(r));
}

UnitClass identity(const ResidueCtxPtr& ctx) {
    return canonical(Poly::one(ctx->field()), ctx);
}

namespace {

void require_same_ctx(const UnitClass& u, const UnitClass& v) {
    if (u.ctx() != v.ctx() && !(*u.ctx() == *v.ctx()))
        throw std::invalid_argument("unit classes belong to different residue rings");
}

}  // namespace

UnitClass mul(const UnitClass& u, const UnitClass& v) {
    require_same_ctx(u, v);
    return canonical(u.rep() * v.rep(), u.ctx());
}

UnitClass inv(const UnitClass& u) {
    return canonical(inverse_mod(u.rep(), u.ctx()->modulus()), u.ctx());
}

UnitClass pow(const UnitClass& u, std::uint64_t e) {
    const auto& ctx = u.ctx();
    return canonical(powmod(u.rep(), e % ctx->unit_order(), ctx->modulus()), ctx);
}

UnitClass pow(const UnitClass& u, std::int64_t e) {
    if (e >= 0) return pow(u, static_cast<std::uint64_t>(e));
    // -(e + 1) + 1 avoids overflow at INT64_MIN.
    const std::uint64_t magnitude = static_cast<std::uint64_t>(-(e + 1)) + 1;
    return pow(inv(u), magnitude);
}

std::uint64_t order(const UnitClass& u) {
    std::uint64_t ord = u.ctx()->unit_order();
    for (const auto& [p, mult] : u.ctx()->unit_order_factors()) {
        for (unsigned i = 0; i < mult && pow(u, ord / p).is_identity(); ++i) ord /= p;
    }
    return ord;
}

bool is_identity_power(const UnitClass& u, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("power must be positive");
    return pow(u, k).is_identity();
}

std::vector<UnitClass> all_units(const ResidueCtxPtr& ctx) {
    const std::uint32_t q = ctx->field().q();
    const auto dm = static_cast<unsigned>(ctx->modulus_degree());
    const auto residues = checked_pow(q, dm);
    if (!residues || *residues > (std::uint64_t{1} << 20))
        throw std::length_error("residue ring too large to enumerate");
    std::vector<UnitClass> out;
    out.reserve(ctx->unit_order());
    // Monic polynomials of degree k < deg m: leading 1, k free lower coefficients.
    for (unsigned k = 0; k < dm; ++k) {
        const std::uint64_t count = *checked_pow(q, k);
        std::vector<Coeff> digits(k + 1, 0);
        digits[k] = 1;
        for (std::uint64_t c = 0; c < count; ++c) {
            std::uint64_t rest = c;
            for (unsigned i = 0; i < k; ++i) {
                digits[i] = static_cast<Coeff>(rest % q);
                rest /= q;
            }
            out.push_back(canonical(Poly(ctx->field(), digits), ctx));
        }
    }
    return out;
}

}  // namespace ffclass
