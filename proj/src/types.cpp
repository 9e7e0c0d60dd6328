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

#include "hrnorm/types.hpp"

#include <array>

namespace hrnorm {

namespace {

constexpr std::array<const char*, kNswClassCount> kClassNames = {
    "StandardWord",   "Abbreviation", "Acronym",      "Symbol",
    "MeasurementUnit", "CardinalNumber", "OrdinalNumber", "RomanNumeral",
    "DateNumeric",    "DateCombined", "Time",         "Year",
    "PhoneNumber",    "DecimalNumber", "Currency",    "Email",
    "Url",            "MixedAlphanumeric",
};

constexpr std::array<const char*, 7> kCaseNames = {"nom", "gen", "dat", "acc",
                                                   "voc", "loc", "ins"};

}  // namespace

const char* to_string(NswClass cls) {
  return kClassNames[static_cast<std::size_t>(cls)];
}

std::optional<NswClass> nsw_class_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i)
    if (name == kClassNames[i]) return static_cast<NswClass>(i);
  return std::nullopt;
}

std::string to_string(const MorphTag& tag) {
  std::string out = kCaseNames[static_cast<std::size_t>(tag.morph_case)];
  out.push_back('-');
  out.push_back("mfn"[static_cast<std::size_t>(tag.gender)]);
  out += tag.number == GramNumber::Singular ? "-sg" : "-pl";
  return out;
}

std::optional<MorphTag> morph_tag_from_string(std::string_view key) {
  MorphTag tag;
  const auto dash1 = key.find('-');
  if (dash1 == std::string_view::npos) return std::nullopt;
  const auto dash2 = key.find('-', dash1 + 1);
  if (dash2 == std::string_view::npos) return std::nullopt;
  const auto case_part = key.substr(0, dash1);
  const auto gender_part = key.substr(dash1 + 1, dash2 - dash1 - 1);
  const auto number_part = key.substr(dash2 + 1);

  bool found = false;
  for (std::size_t i = 0; i < kCaseNames.size(); ++i) {
    if (case_part == kCaseNames[i]) {
      tag.morph_case = static_cast<Case>(i);
      found = true;
      break;
    }
  }
  if (!found) return std::nullopt;

  if (gender_part == "m")
    tag.gender = Gender::Masculine;
  else if (gender_part == "f")
    tag.gender = Gender::Feminine;
  else if (gender_part == "n")
    tag.gender = Gender::Neuter;
  else
    return std::nullopt;

  if (number_part == "sg")
    tag.number = GramNumber::Singular;
  else if (number_part == "pl")
    tag.number = GramNumber::Plural;
  else
    return std::nullopt;

  return tag;
}

}  // namespace hrnorm
