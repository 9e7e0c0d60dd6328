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

#ifndef HRNORM_SPELLING_HPP
#define HRNORM_SPELLING_HPP

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hrnorm/types.hpp"

namespace hrnorm {

/// Word forms for one thousands group (tisuća, milijun, ...).
struct ScaleEntry {
  long long value = 0;
  std::string one;    // the bare form used when the group equals 1
  std::string sg;     // group ends in 1 (except 11)
  std::string pauc;   // group ends in 2..4 (except 12..14)
  std::string pl;     // everything else
  Gender multiplier_gender = Gender::Masculine;
};

/// All linguistic lookup material, loaded from the spelling TSV. Immutable
/// after load; every expander borrows it by const reference.
struct SpellingTables {
  std::array<std::array<std::string, 3>, 10> units{};  // [digit][gender]
  std::map<int, std::string> teens;
  std::map<int, std::string> tens;
  std::map<int, std::string> hundreds;
  std::vector<ScaleEntry> scales;  // descending by value
  std::map<long long, std::pair<std::string, bool>> ordinal_roots;  // +soft
  std::map<std::string, std::string> ordinal_suffixes;  // "nom-m-sg[+soft]"
  std::array<std::string, 13> months_nom{};
  std::array<std::string, 13> months_gen{};
  std::vector<std::pair<std::string, std::string>> letters;
  std::map<std::string, std::array<std::string, 3>> time_units;
  std::map<std::string, std::string> words;
  std::set<std::string> roman_triggers;

  static SpellingTables load(const std::string& path);

  /// Missing required keys, empty when the table set is complete.
  std::vector<std::string> completeness_problems() const;

  const std::string& unit_word(int digit, Gender gender) const;
  const std::string& connective(const std::string& key) const;
};

/// Noun form selection after a number: 1 -> singular, 2..4 -> paucal,
/// otherwise plural, decided by the last two digits (11..14 are plural).
enum class PaucalForm { Singular, Paucal, Plural };
PaucalForm paucal_form(long long n);

}  // namespace hrnorm

#endif  // HRNORM_SPELLING_HPP
