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

#include "ffclass/arith.hpp"

namespace ffclass {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    std::vector<PrimePower> out;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.push_back({p, e});
    };
    if (n < 2) return out;
    strip(2);
    for (std::uint64_t d = 3; d <= n / d; d += 2) strip(d);
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) noexcept {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i)
        if (__builtin_mul_overflow(r, base, &r)) return std::nullopt;
    return r;
}

}  // namespace ffclass
