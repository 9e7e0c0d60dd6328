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

#include "hrnorm/numexpand.hpp"

#include "hrnorm/errors.hpp"
#include "hrnorm/roman.hpp"

namespace hrnorm {

NumberSpeller::NumberSpeller(const SpellingTables& tables) : t_(tables) {
  // Reverse tables for parse_spelled_number.
  for (int d = 0; d <= 9; ++d)
    for (int g = 0; g < 3; ++g)
      if (!t_.units[d][g].empty())
        reverse_[t_.units[d][g]] = {ReverseEntry::Kind::Value, d};
  for (const auto& [v, w] : t_.teens)
    reverse_[w] = {ReverseEntry::Kind::Value, v};
  for (const auto& [v, w] : t_.tens)
    reverse_[w] = {ReverseEntry::Kind::Value, v};
  for (const auto& [v, w] : t_.hundreds)
    reverse_[w] = {ReverseEntry::Kind::Value, v};
  for (const auto& s : t_.scales) {
    for (const auto* form : {&s.one, &s.sg, &s.pauc, &s.pl})
      if (!form->empty())
        reverse_[*form] = {ReverseEntry::Kind::Scale, s.value};
  }
  const auto conj = t_.words.find("and");
  if (conj != t_.words.end())
    reverse_[conj->second] = {ReverseEntry::Kind::Conjunction, 0};
}

std::vector<std::string> NumberSpeller::expand_group(int value, Gender gender,
                                                     bool final_group) const {
  std::vector<std::string> words;
  const int h = value / 100;
  const int r = value % 100;
  if (h > 0) words.push_back(t_.hundreds.at(h * 100));
  if (r >= 11 && r <= 19) {
    words.push_back(t_.teens.at(r));
  } else {
    const int ten = r / 10;
    const int unit = r % 10;
    if (ten > 0) words.push_back(t_.tens.at(ten * 10));
    if (unit > 0) {
      if (ten > 0 && final_group) words.push_back(t_.connective("and"));
      words.push_back(t_.unit_word(unit, gender));
    }
  }
  return words;
}

std::vector<std::string> NumberSpeller::expand_cardinal(
    long long n, const MorphTag& tag) const {
  if (n < 0 || n >= kUpperBound)
    throw MagnitudeError("number out of supported range [0, 10^15)");
  if (n == 0) return {t_.unit_word(0, tag.gender)};

  std::vector<std::string> words;
  long long rest = n;
  for (const auto& scale : t_.scales) {
    const long long group = rest / scale.value;
    rest %= scale.value;
    if (group == 0) continue;
    const bool final_group = rest == 0;
    if (group == 1) {
      words.push_back(scale.one);
      continue;
    }
    auto group_words = expand_group(static_cast<int>(group),
                                    scale.multiplier_gender, final_group);
    words.insert(words.end(), group_words.begin(), group_words.end());
    switch (paucal_form(group)) {
      case PaucalForm::Singular:
        words.push_back(scale.sg);
        break;
      case PaucalForm::Paucal:
        words.push_back(scale.pauc);
        break;
      case PaucalForm::Plural:
        words.push_back(scale.pl);
        break;
    }
  }
  if (rest > 0) {
    auto group_words =
        expand_group(static_cast<int>(rest), tag.gender, true);
    words.insert(words.end(), group_words.begin(), group_words.end());
  }
  return words;
}

const std::string& NumberSpeller::suffix_for(const MorphTag& tag,
                                             bool soft) const {
  const std::string base = to_string(tag);
  if (soft) {
    const auto it = t_.ordinal_suffixes.find(base + "+soft");
    if (it != t_.ordinal_suffixes.end()) return it->second;
  }
  const auto it = t_.ordinal_suffixes.find(base);
  if (it == t_.ordinal_suffixes.end())
    throw DomainError("no ordinal ending for morphological tag " + base);
  return it->second;
}

std::string NumberSpeller::ordinal_word(long long component,
                                        const MorphTag& tag) const {
  const auto it = t_.ordinal_roots.find(component);
  if (it == t_.ordinal_roots.end())
    throw DomainError("no ordinal root for component " +
                      std::to_string(component));
  return it->second.first + suffix_for(tag, it->second.second);
}

std::vector<std::string> NumberSpeller::expand_ordinal(
    long long n, const MorphTag& tag) const {
  if (n < 1 || n >= kUpperBound)
    throw DomainError("ordinal out of supported range [1, 10^15)");

  auto words = expand_cardinal(n, tag);

  // Find the value component the final word spells and swap in its ordinal
  // form: the scale word when the number ends in a whole group, otherwise
  // the unit, teen, ten or hundred of the last group.
  long long rest = n;
  long long final_component = 0;
  for (const auto& scale : t_.scales) {
    const long long group = rest / scale.value;
    rest %= scale.value;
    if (group != 0 && rest == 0) {
      final_component = scale.value;
      break;
    }
  }
  if (final_component == 0) {
    const int g = static_cast<int>(rest > 0 ? rest : n % 1000);
    const int r = g % 100;
    if (r >= 11 && r <= 19)
      final_component = r;
    else if (r % 10 != 0)
      final_component = r % 10;
    else if (r != 0)
      final_component = r;
    else
      final_component = (g / 100) * 100;
  }

  words.back() = ordinal_word(final_component, tag);
  return words;
}

std::vector<std::string> NumberSpeller::expand_roman(
    std::string_view surface, const MorphTag& tag) const {
  const int value = roman_value(surface);
  if (value == 0)
    throw InternalError("ill-formed Roman numeral leaked past classification: " +
                        std::string(surface));
  return expand_ordinal(value, tag);
}

long long NumberSpeller::parse_spelled_number(
    const std::vector<std::string>& words) const {
  if (words.empty()) throw ParseError("empty word sequence");
  long long total = 0;
  long long group = 0;
  bool any_value = false;
  for (const auto& word : words) {
    const auto it = reverse_.find(word);
    if (it == reverse_.end())
      throw ParseError("word '" + word + "' is not a number word");
    switch (it->second.kind) {
      case ReverseEntry::Kind::Conjunction:
        break;
      case ReverseEntry::Kind::Value:
        group += it->second.value;
        any_value = true;
        break;
      case ReverseEntry::Kind::Scale:
        total += (group == 0 ? 1 : group) * it->second.value;
        group = 0;
        any_value = true;
        break;
    }
  }
  if (!any_value) throw ParseError("no number words in sequence");
  return total + group;
}

std::vector<std::string> NumberSpeller::digitwise(
    std::string_view digits) const {
  std::vector<std::string> words;
  words.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw InternalError("digitwise reading of non-digit character");
    words.push_back(t_.unit_word(c - '0', Gender::Masculine));
  }
  return words;
}

}  // namespace hrnorm
