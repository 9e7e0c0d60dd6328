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

#include "roman_oracle.hpp"

namespace hrnorm::testing {

std::string oracle_to_roman(int n) {
  static const std::pair<int, const char*> steps[] = {
      {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"},
      {90, "XC"},  {50, "L"},   {40, "XL"}, {10, "X"},   {9, "IX"},
      {5, "V"},    {4, "IV"},   {1, "I"}};
  std::string out;
  for (const auto& [value, digits] : steps) {
    while (n >= value) {
      out += digits;
      n -= value;
    }
  }
  return out;
}

const std::map<std::string, int>& oracle_roman_set() {
  static const std::map<std::string, int> set = [] {
    std::map<std::string, int> s;
    for (int n = 1; n <= 3999; ++n) s.emplace(oracle_to_roman(n), n);
    return s;
  }();
  return set;
}

}  // namespace hrnorm::testing
