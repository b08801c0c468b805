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

#ifndef FFCLASS_ERRORS_HPP
#define FFCLASS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ffclass {

/// Operands live over different prime fields.
class CharacteristicMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Inverse requested for an element sharing a factor with the modulus.
class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Polynomial text could not be read. Line and column are 1-based.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// The place is the conductor; it has no Frobenius class.
class RamifiedPlace : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Violation {
    std::string name;
    std::string detail;
};

/// A configuration failed one or more named checks. All failures are reported, not just the first.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : std::invalid_argument(summarize(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    static std::string summarize(const std::vector<Violation>& vs) {
        std::string out = "invalid configuration:";
        for (const auto& v : vs) out += " " + v.name + " (" + v.detail + ");";
        return out;
    }

    std::vector<Violation> violations_;
};

/// The class-number criterion was asked about a (q, genus) it does not cover.
class InapplicableCriterion : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Point counts do not come from any curve: a Newton step was non-integral or L(1) < 1.
class InconsistentCounts : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace ffclass

#endif  // FFCLASS_ERRORS_HPP
