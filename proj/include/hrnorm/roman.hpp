// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HRNORM_ROMAN_HPP
#define HRNORM_ROMAN_HPP

#include <string_view>

namespace hrnorm {

/// True when every character is one of I, V, X, L, C, D, M.
bool roman_chars_only(std::string_view s);

/// Strict well-formedness: the canonical subtractive form for 1..3999.
/// "IL", "IIII" and the empty string are rejected.
bool roman_wellformed(std::string_view s);

/// Value of a well-formed numeral; 0 when ill-formed.
int roman_value(std::string_view s);

}  // namespace hrnorm

#endif  // HRNORM_ROMAN_HPP
