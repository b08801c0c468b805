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

#ifndef FFCLASS_CLI_HPP
#define FFCLASS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ffclass::cli {

enum ExitCode : int {
    positive = 0,  // class number one, or a successful query
    negative = 1,  // well-formed configuration, negative verdict
    invalid = 2,   // bad flags, bad polynomial text, or a configuration that fails validation
};

/// Runs the tool on args (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffclass::cli

#endif  // FFCLASS_CLI_HPP
