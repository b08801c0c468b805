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

#include "ffclass/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "ffclass/arith.hpp"

namespace ffclass {

FieldChar::FieldChar(std::uint32_t q) : q_(q) {
    if (q < 2 || q >= max_q) throw std::invalid_argument("field size must satisfy 2 <= q < 65536");
    if (!is_prime(q)) throw std::invalid_argument("field size " + std::to_string(q) + " is not prime");
}

Coeff FieldChar::inv(Coeff a) const {
    if (a % q_ == 0) throw NotInvertible("zero has no inverse in F_" + std::to_string(q_));
    // Fermat: a^(q-2)
    std::uint64_t result = 1, base = a % q_;
    for (std::uint32_t e = q_ - 2; e; e >>= 1) {
        if (e & 1) result = result * base % q_;
        base = base * base % q_;
    }
    return static_cast<Coeff>(result);
}

Poly::Poly(FieldChar field, std::vector<Coeff> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (Coeff c : coeffs_)
        if (c >= field_.q())
            throw std::invalid_argument("coefficient " + std::to_string(c) + " out of range for q = " +
                                        std::to_string(field_.q()));
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(FieldChar field, Coeff c) { return Poly(field, {c}); }

Poly Poly::monomial(FieldChar field, Coeff c, std::size_t exponent) {
    std::vector<Coeff> v(exponent + 1, 0);
    v[exponent] = c;
    return Poly(field, std::move(v));
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(),
                                        b.coeffs_.rend());
}

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (a.field() != b.field())
        throw CharacteristicMismatch("operands over F_" + std::to_string(a.field().q()) + " and F_" +
                                     std::to_string(b.field().q()));
}

std::size_t deg(const Poly& p) { return *p.degree(); }

}  // namespace

Poly add(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& f = a.field();
    std::vector<Coeff> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a[i], b[i]);
    return Poly(f, std::move(out));
}

Poly sub(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& f = a.field();
    std::vector<Coeff> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a[i], b[i]);
    return Poly(f, std::move(out));
}

Poly neg(const Poly& a) {
    std::vector<Coeff> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : out) c = a.field().neg(c);
    return Poly(a.field(), std::move(out));
}

Poly mul(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly(f);
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    // Each product is < 2^32, so a 64-bit accumulator absorbs any realistic length before reduction.
    std::vector<std::uint64_t> acc(ac.size() + bc.size() - 1, 0);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) acc[i + j] += static_cast<std::uint64_t>(ac[i]) * bc[j];
    }
    std::vector<Coeff> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Coeff>(acc[i] % f.q());
    return Poly(f, std::move(out));
}

Poly scale(const Poly& a, Coeff c) {
    const auto& f = a.field();
    std::vector<Coeff> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : out) x = f.mul(x, c % f.q());
    return Poly(f, std::move(out));
}

DivRem divrem(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& f = a.field();
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero() || deg(a) < deg(b)) return {Poly(f), a};

    const std::size_t db = deg(b);
    const Coeff lc_inv = f.inv(b.leading());
    std::vector<Coeff> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<Coeff> q(r.size() - db, 0);
    for (std::size_t i = r.size(); i-- > db;) {
        const Coeff c = f.mul(r[i], lc_inv);
        if (c == 0) continue;
        const std::size_t shift = i - db;
        q[shift] = c;
        for (std::size_t j = 0; j <= db; ++j) r[shift + j] = f.sub(r[shift + j], f.mul(c, b[j]));
    }
    r.resize(db);
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly rem(const Poly& a, const Poly& b) {
    return divrem(a, b).remainder;
}

Poly monic(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("zero polynomial has no monic associate");
    if (a.is_monic()) return a;
    return scale(a, a.field().inv(a.leading()));
}

Xgcd xgcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& f = a.field();
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("xgcd of two zero polynomials");

    // Invariant: r0 = s0*a + t0*b and r1 = s1*a + t1*b.
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(f), s1(f);
    Poly t0(f), t1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [quot, r2] = divrem(r0, r1);
        Poly s2 = s0 - quot * s1;
        Poly t2 = t0 - quot * t1;
        r0 = std::exchange(r1, std::move(r2));
        s0 = std::exchange(s1, std::move(s2));
        t0 = std::exchange(t1, std::move(t2));
    }
    const Coeff lc_inv = f.inv(r0.leading());
    return {scale(r0, lc_inv), scale(s0, lc_inv), scale(t0, lc_inv)};
}

Poly gcd(const Poly& a, const Poly& b) {
    return xgcd(a, b).gcd;
}

namespace {

void require_nonconstant_modulus(const Poly& m) {
    if (m.is_constant()) throw std::domain_error("modulus must be nonconstant");
}

}  // namespace

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) {
    return rem(a * b, modulus);
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus) {
    require_same_field(base, modulus);
    require_nonconstant_modulus(modulus);
    Poly result = Poly::one(base.field());
    Poly sq = rem(base, modulus);
    while (e) {
        if (e & 1) result = mulmod(result, sq, modulus);
        e >>= 1;
        if (e) sq = mulmod(sq, sq, modulus);
    }
    return result;
}

Poly inverse_mod(const Poly& a, const Poly& m) {
    require_same_field(a, m);
    require_nonconstant_modulus(m);
    const Poly reduced = rem(a, m);
    if (reduced.is_zero()) throw NotInvertible(format(a) + " is not invertible modulo " + format(m));
    auto g = xgcd(reduced, m);
    if (!g.gcd.is_one()) throw NotInvertible(format(a) + " is not invertible modulo " + format(m));
    return rem(g.u, m);
}

bool is_irreducible(const Poly& f) {
    if (f.is_constant()) throw std::domain_error("irreducibility is undefined for constants");
    const Poly g = monic(f);
    const std::size_t n = deg(g);
    const auto& field = g.field();
    const Poly x = rem(Poly::x(field), g);

    const auto primes = factorize(n);
    // frob[k] = x^(q^k) mod g, kept only where a gcd check needs it.
    Poly h = x;
    std::vector<std::pair<std::size_t, Poly>> checkpoints;
    for (std::size_t k = 1; k <= n; ++k) {
        h = powmod(h, field.q(), g);
        for (const auto& pp : primes)
            if (k == n / pp.prime) checkpoints.emplace_back(k, h);
    }
    if (h != x) return false;
    for (const auto& [k, hk] : checkpoints)
        if (!gcd(hk - x, g).is_one()) return false;
    return true;
}

std::vector<Poly> monic_irreducibles(FieldChar field, unsigned d) {
    if (d == 0) throw std::invalid_argument("degree must be positive");
    const auto total = checked_pow(field.q(), d);
    if (!total || *total > max_enumeration)
        throw std::length_error("enumeration of degree-" + std::to_string(d) + " polynomials over F_" +
                                std::to_string(field.q()) + " exceeds the size cap");
    std::vector<Poly> out;
    std::vector<Coeff> digits(d + 1, 0);
    digits[d] = 1;
    for (std::uint64_t counter = 0; counter < *total; ++counter) {
        // Lower coefficients are the base-q digits of counter, constant term least significant.
        std::uint64_t c = counter;
        for (unsigned i = 0; i < d; ++i) {
            digits[i] = static_cast<Coeff>(c % field.q());
            c /= field.q();
        }
        if (d > 1 && digits[0] == 0) continue;  // divisible by x
        Poly p(field, digits);
        if (is_irreducible(p)) out.push_back(std::move(p));
    }
    return out;
}

namespace {

constexpr std::size_t max_exponent = 1u << 16;

class PolyParser {
public:
    PolyParser(FieldChar field, std::string_view text) : field_(field), text_(text) {}

    Poly run() {
        std::vector<Coeff> acc;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        term(acc);
        for (skip_ws(); !at_end(); skip_ws()) {
            if (peek() != '+') fail(std::string("expected '+' but found '") + peek() + "'");
            ++pos_;
            skip_ws();
            term(acc);
        }
        return Poly(field_, std::move(acc));
    }

private:
    void term(std::vector<Coeff>& acc) {
        Coeff coeff = 1;
        std::size_t exponent = 0;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t at = pos_;
            const std::uint64_t v = number();
            if (v >= field_.q())
                fail_at(at, "coefficient " + std::string(text_.substr(at, pos_ - at)) + " is not below q = " +
                                std::to_string(field_.q()));
            coeff = static_cast<Coeff>(v);
            skip_ws();
            if (peek() != '*') {
                accumulate(acc, coeff, 0);
                return;
            }
            ++pos_;
            skip_ws();
            if (peek() != 'x') fail("expected 'x' after '*'");
        } else if (peek() != 'x') {
            fail(at_end() ? std::string("expected a term") : std::string("unexpected character '") + peek() + "'");
        }
        ++pos_;  // 'x'
        exponent = 1;
        const std::size_t save = pos_;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'");
            const std::size_t at = pos_;
            const std::uint64_t e = number();
            if (e > max_exponent) fail_at(at, "exponent too large");
            exponent = static_cast<std::size_t>(e);
        } else {
            pos_ = save;
        }
        accumulate(acc, coeff, exponent);
    }

    void accumulate(std::vector<Coeff>& acc, Coeff c, std::size_t e) {
        if (acc.size() <= e) acc.resize(e + 1, 0);
        acc[e] = field_.add(acc[e], c);
    }

    std::uint64_t number() {
        std::uint64_t v = 0;
        bool overflow = false;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            const auto digit = static_cast<std::uint64_t>(peek() - '0');
            if (v > (UINT64_MAX - digit) / 10) overflow = true;
            else v = v * 10 + digit;
            ++pos_;
        }
        return overflow ? UINT64_MAX : v;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(line, col, msg);
    }

    FieldChar field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(FieldChar field, std::string_view text) {
    return PolyParser(field, text).run();
}

std::string format(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += 'x';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

}  // namespace ffclass
