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

#include "hrnorm/datetime.hpp"

#include <charconv>

#include "hrnorm/errors.hpp"
#include "hrnorm/utf8.hpp"

namespace hrnorm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

int to_int(std::string_view s) {
  int out = 0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

const std::string& pick_paucal(const std::array<std::string, 3>& forms,
                               long long n) {
  switch (paucal_form(n)) {
    case PaucalForm::Singular:
      return forms[0];
    case PaucalForm::Paucal:
      return forms[1];
    default:
      return forms[2];
  }
}

}  // namespace

std::string DateTimeExpander::month_genitive(std::string_view surface) const {
  const std::string folded = utf8::lower_copy(surface);
  for (int m = 1; m <= 12; ++m)
    if (folded == t_.months_nom[m] || folded == t_.months_gen[m])
      return t_.months_gen[m];
  return {};
}

std::vector<std::string> DateTimeExpander::expand_date(const DateParts& date,
                                                       Case year_case) const {
  if (date.day < 1 || date.day > 31)
    throw MalformedDateError("day " + std::to_string(date.day) +
                             " outside 1..31");

  std::string month_word;
  if (!date.month_surface.empty()) {
    month_word = month_genitive(date.month_surface);
    if (month_word.empty())
      throw MalformedDateError("'" + date.month_surface +
                               "' is not a month name");
  } else {
    if (date.month < 1 || date.month > 12)
      throw MalformedDateError("month " + std::to_string(date.month) +
                               " outside 1..12");
    month_word = t_.months_gen[date.month];
  }

  auto words = speller_.expand_ordinal(
      date.day, {Case::Nominative, Gender::Masculine, GramNumber::Singular});
  words.push_back(month_word);

  if (date.year) {
    if (*date.year < 1 || *date.year > 9999)
      throw MalformedDateError("year " + std::to_string(*date.year) +
                               " outside 1..9999");
    auto year_words = speller_.expand_ordinal(
        *date.year, {year_case, Gender::Feminine, GramNumber::Singular});
    words.insert(words.end(), year_words.begin(), year_words.end());
  }
  return words;
}

std::vector<std::string> DateTimeExpander::expand_time(
    const TimeParts& time) const {
  if (time.hours < 0 || time.hours > 23)
    throw MalformedTimeError("hours " + std::to_string(time.hours) +
                             " outside 0..23");
  if (time.minutes < 0 || time.minutes > 59)
    throw MalformedTimeError("minutes " + std::to_string(time.minutes) +
                             " outside 0..59");
  if (time.seconds && (*time.seconds < 0 || *time.seconds > 59))
    throw MalformedTimeError("seconds " + std::to_string(*time.seconds) +
                             " outside 0..59");

  const MorphTag masc{};
  const MorphTag fem{Case::Nominative, Gender::Feminine, GramNumber::Singular};

  auto words = speller_.expand_cardinal(time.hours, masc);
  words.push_back(pick_paucal(t_.time_units.at("hour"), time.hours));

  if (time.minutes > 0) {
    words.push_back(t_.connective("and"));
    auto minute_words = speller_.expand_cardinal(time.minutes, fem);
    words.insert(words.end(), minute_words.begin(), minute_words.end());
    words.push_back(pick_paucal(t_.time_units.at("minute"), time.minutes));
  }
  if (time.seconds && *time.seconds > 0) {
    words.push_back(t_.connective("and"));
    auto second_words = speller_.expand_cardinal(*time.seconds, fem);
    words.insert(words.end(), second_words.begin(), second_words.end());
    words.push_back(pick_paucal(t_.time_units.at("second"), *time.seconds));
  }
  return words;
}

std::vector<std::string> DateTimeExpander::expand_phone(
    const std::vector<std::string>& groups) const {
  std::vector<std::string> words;
  for (const auto& group : groups) {
    if (!all_digits(group))
      throw InternalError("phone group '" + group + "' is not all digits");
    if (group[0] == '0' || group.size() > 15) {
      auto digit_words = speller_.digitwise(group);
      words.insert(words.end(), digit_words.begin(), digit_words.end());
    } else {
      long long value = 0;
      std::from_chars(group.data(), group.data() + group.size(), value);
      auto group_words = speller_.expand_cardinal(value);
      words.insert(words.end(), group_words.begin(), group_words.end());
    }
  }
  return words;
}

std::optional<TimeParts> DateTimeExpander::parse_time(std::string_view core) {
  const auto parts = split(core, ':');
  if (parts.size() != 2 && parts.size() != 3) return std::nullopt;
  if (parts[0].size() < 1 || parts[0].size() > 2 || !all_digits(parts[0]))
    return std::nullopt;
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i].size() != 2 || !all_digits(parts[i])) return std::nullopt;

  TimeParts time;
  time.hours = to_int(parts[0]);
  time.minutes = to_int(parts[1]);
  if (parts.size() == 3) time.seconds = to_int(parts[2]);
  return time;
}

std::optional<DateParts> DateTimeExpander::parse_numeric_date(
    std::string_view core, bool trailing_dot) {
  const bool slashed = core.find('/') != std::string_view::npos;
  if (slashed && core.find('.') != std::string_view::npos) return std::nullopt;
  const auto parts = split(core, slashed ? '/' : '.');
  if (parts.size() != 2 && parts.size() != 3) return std::nullopt;

  // Dotted day.month forms need the closing orthographic dot; a slashed
  // form and a dotless final year are accepted as-is.
  if (!slashed && parts.size() == 2 && !trailing_dot) return std::nullopt;

  if (parts[0].size() > 2 || !all_digits(parts[0])) return std::nullopt;
  if (parts[1].size() > 2 || !all_digits(parts[1])) return std::nullopt;

  DateParts date;
  date.day = to_int(parts[0]);
  date.month = to_int(parts[1]);
  if (parts.size() == 3) {
    if (parts[2].size() < 1 || parts[2].size() > 4 || !all_digits(parts[2]))
      return std::nullopt;
    date.year = to_int(parts[2]);
    date.dot_after_year = trailing_dot;
  }
  return date;
}

}  // namespace hrnorm
