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

#include "hrnorm/roman.hpp"

#include <array>

namespace hrnorm {

namespace {

// Canonical digit spellings per decimal place, index = digit value.
constexpr std::array<std::string_view, 10> kOnes = {
    "", "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
constexpr std::array<std::string_view, 10> kTens = {
    "", "X", "XX", "XXX", "XL", "L", "LX", "LXX", "LXXX", "XC"};
constexpr std::array<std::string_view, 10> kHundreds = {
    "", "C", "CC", "CCC", "CD", "D", "DC", "DCC", "DCCC", "CM"};
constexpr std::array<std::string_view, 4> kThousands = {"", "M", "MM", "MMM"};

// Consumes the longest table entry prefixing `s` and returns its digit value.
int eat_place(std::string_view& s, const std::string_view* table, int count) {
  int best = 0;
  std::size_t best_len = 0;
  for (int v = 1; v < count; ++v) {
    const auto& form = table[v];
    if (form.size() > best_len && s.substr(0, form.size()) == form) {
      best = v;
      best_len = form.size();
    }
  }
  s.remove_prefix(best_len);
  return best;
}

}  // namespace

bool roman_chars_only(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c != 'I' && c != 'V' && c != 'X' && c != 'L' && c != 'C' &&
        c != 'D' && c != 'M')
      return false;
  return true;
}

bool roman_wellformed(std::string_view s) {
  return roman_value(s) > 0;
}

int roman_value(std::string_view s) {
  if (!roman_chars_only(s)) return 0;
  std::string_view rest = s;
  int value = eat_place(rest, kThousands.data(), 4) * 1000;
  value += eat_place(rest, kHundreds.data(), 10) * 100;
  value += eat_place(rest, kTens.data(), 10) * 10;
  value += eat_place(rest, kOnes.data(), 10);
  if (!rest.empty()) return 0;
  return value;
}

}  // namespace hrnorm
