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

#ifndef HRNORM_DATETIME_HPP
#define HRNORM_DATETIME_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hrnorm/numexpand.hpp"
#include "hrnorm/spelling.hpp"

namespace hrnorm {

struct DateParts {
  int day = 0;
  int month = 0;                 // 1..12 when numeric
  std::string month_surface;     // set instead of `month` for combined dates
  std::optional<int> year;
  bool dot_after_year = false;
};

struct TimeParts {
  int hours = 0;
  int minutes = 0;
  std::optional<int> seconds;
};

/// Date, time and phone-number verbalization. Days read as nominative
/// masculine ordinals, months as genitive month names, years as feminine
/// ordinals; times compose cardinals with paucal unit words.
class DateTimeExpander {
 public:
  DateTimeExpander(const SpellingTables& tables, const NumberSpeller& speller)
      : t_(tables), speller_(speller) {}

  /// Throws MalformedDateError when day/month leave their ranges or the
  /// month surface is not a Croatian month name.
  std::vector<std::string> expand_date(const DateParts& date,
                                       Case year_case = Case::Nominative) const;

  /// Throws MalformedTimeError outside 0..23 / 0..59 / 0..59.
  std::vector<std::string> expand_time(const TimeParts& time) const;

  /// Groups without a leading zero read as cardinals, groups with one read
  /// digit by digit. Throws InternalError on non-digit characters.
  std::vector<std::string> expand_phone(
      const std::vector<std::string>& groups) const;

  /// Genitive month word for a month surface in either case, empty if the
  /// surface is not a month name.
  std::string month_genitive(std::string_view surface) const;

  /// Shape parsers shared with the classifier. They validate digit counts,
  /// not value ranges; range errors surface in expand_* calls.
  static std::optional<TimeParts> parse_time(std::string_view core);
  static std::optional<DateParts> parse_numeric_date(std::string_view core,
                                                     bool trailing_dot);

 private:
  const SpellingTables& t_;
  const NumberSpeller& speller_;
};

}  // namespace hrnorm

#endif  // HRNORM_DATETIME_HPP
