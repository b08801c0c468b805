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
 * Dense univariate polynomials over a prime field F_q.
 *
 * Coefficients are stored little-endian (index i holds the coefficient of x^i) and the
 * highest stored coefficient is always nonzero, so the zero polynomial is the empty
 * sequence. Its degree is reported as std::nullopt rather than as -1 or 0.
 *
 * Every value is immutable once built and every operation is a pure function.
 */

#ifndef FFCLASS_POLY_HPP
#define FFCLASS_POLY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffclass/errors.hpp"

namespace ffclass {

using Coeff = std::uint32_t;

/// The prime field F_q, 2 <= q < 2^16.
class FieldChar {
public:
    static constexpr std::uint32_t max_q = 1u << 16;

    explicit FieldChar(std::uint32_t q);

    std::uint32_t q() const noexcept { return q_; }

    Coeff add(Coeff a, Coeff b) const noexcept { return static_cast<Coeff>((a + b) % q_); }
    Coeff sub(Coeff a, Coeff b) const noexcept { return static_cast<Coeff>((a + q_ - b) % q_); }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : q_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept {
        return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % q_);
    }
    /// Throws NotInvertible for 0.
    Coeff inv(Coeff a) const;

    friend bool operator==(const FieldChar&, const FieldChar&) = default;

private:
    std::uint32_t q_;
};

class Poly {
public:
    /// The zero polynomial.
    explicit Poly(FieldChar field) : field_(field) {}

    /// Throws std::invalid_argument if any coefficient is >= q.
    Poly(FieldChar field, std::vector<Coeff> coeffs);

    static Poly constant(FieldChar field, Coeff c);
    static Poly monomial(FieldChar field, Coeff c, std::size_t exponent);
    static Poly x(FieldChar field) { return monomial(field, 1, 1); }
    static Poly one(FieldChar field) { return constant(field, 1); }

    const FieldChar& field() const noexcept { return field_; }
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Leading coefficient; 0 for the zero polynomial.
    Coeff leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    /// Coefficient of x^i, 0 beyond the degree.
    Coeff operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Ordering used for enumeration: by degree, then lexicographically from the top coefficient down.
    friend bool operator<(const Poly& a, const Poly& b);

private:
    void normalize();

    FieldChar field_;
    std::vector<Coeff> coeffs_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Coeff c);

inline Poly operator+(const Poly& a, const Poly& b) { return add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return sub(a, b); }
inline Poly operator-(const Poly& a) { return neg(a); }
inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// a = quotient * b + remainder with deg remainder < deg b. Throws std::domain_error for b = 0.
DivRem divrem(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);

/// Scales a nonzero polynomial to leading coefficient 1.
Poly monic(const Poly& a);

struct Xgcd {
    Poly gcd;  // monic, or zero only if both inputs are zero
    Poly u;
    Poly v;
};

/// gcd = u*a + v*b. Throws std::invalid_argument if both inputs are zero.
Xgcd xgcd(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);

/// base^e mod modulus by square-and-multiply. Throws std::domain_error for a constant modulus.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus);
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);

/// Throws NotInvertible unless gcd(a, m) = 1.
Poly inverse_mod(const Poly& a, const Poly& m);

/// Rabin's test. Throws std::domain_error for constant input.
bool is_irreducible(const Poly& f);

/// Largest q^d that monic_irreducibles will scan.
inline constexpr std::uint64_t max_enumeration = std::uint64_t{1} << 32;

/// All monic irreducibles of degree d, ordered by their lower coefficients read as a base-q
/// number with the constant term least significant.
std::vector<Poly> monic_irreducibles(FieldChar field, unsigned d);

/// Reads "x^4+x+1", "2*x^3+x+2", "0". Throws ParseError on bad syntax or a coefficient >= q.
Poly parse_poly(FieldChar field, std::string_view text);
std::string format(const Poly& p);

}  // namespace ffclass

#endif  // FFCLASS_POLY_HPP
