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

#ifndef FFCLASS_ARITH_HPP
#define FFCLASS_ARITH_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace ffclass {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n) noexcept;

/// Trial division. Intended for n up to about 2^48.
std::vector<PrimePower> factorize(std::uint64_t n);

/// base^exp, or nullopt if the result does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) noexcept;

}  // namespace ffclass

#endif  // FFCLASS_ARITH_HPP
