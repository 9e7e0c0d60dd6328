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

#ifndef HRNORM_NUMEXPAND_HPP
#define HRNORM_NUMEXPAND_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hrnorm/spelling.hpp"
#include "hrnorm/types.hpp"

namespace hrnorm {

/// Expands integers into Croatian word sequences. Numbers are processed in
/// groups of three digits from the most significant group down; each group
/// is spelled from root words (hundreds, tens/teens, units) and the group's
/// scale word follows with paucal agreement. The conjunction "i" joins tens
/// and units in the last nonzero group only.
class NumberSpeller {
 public:
  // Numbers at or above this bound raise MagnitudeError.
  static constexpr long long kUpperBound = 1'000'000'000'000'000LL;  // 10^15

  explicit NumberSpeller(const SpellingTables& tables);

  /// 0 <= n < 10^15.
  std::vector<std::string> expand_cardinal(long long n,
                                           const MorphTag& tag = {}) const;

  /// 1 <= n < 10^15; only the final word takes the ordinal ending.
  std::vector<std::string> expand_ordinal(long long n,
                                          const MorphTag& tag = {}) const;

  /// Requires a well-formed numeral; equals expand_ordinal of its value.
  /// Throws InternalError on ill-formed input (the classifier's job).
  std::vector<std::string> expand_roman(std::string_view surface,
                                        const MorphTag& tag = {}) const;

  /// Inverse of expand_cardinal; throws ParseError on unknown words.
  long long parse_spelled_number(const std::vector<std::string>& words) const;

  /// Expansion of one three-digit group (0 < value < 1000) without a scale
  /// word. Exposed for the compositionality property.
  std::vector<std::string> expand_group(int value, Gender gender,
                                        bool final_group) const;

  /// One word per digit ("051" -> nula pet jedan).
  std::vector<std::string> digitwise(std::string_view digits) const;

 private:
  std::string ordinal_word(long long component, const MorphTag& tag) const;
  const std::string& suffix_for(const MorphTag& tag, bool soft) const;

  const SpellingTables& t_;

  struct ReverseEntry {
    enum class Kind { Value, Scale, Conjunction } kind = Kind::Value;
    long long value = 0;
  };
  std::map<std::string, ReverseEntry, std::less<>> reverse_;
};

}  // namespace hrnorm

#endif  // HRNORM_NUMEXPAND_HPP
