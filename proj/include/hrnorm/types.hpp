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

#ifndef HRNORM_TYPES_HPP
#define HRNORM_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hrnorm {

/// Classes a token span can be assigned to. The inventory forms a
/// three-branch tree: character-based spans (abbreviations, acronyms,
/// symbols, units), digit-based spans (numbers, dates, times, ...) and
/// combined alphanumeric spans (e-mails, URLs, mixed shapes).
enum class NswClass : std::uint8_t {
  StandardWord,
  Abbreviation,
  Acronym,
  Symbol,
  MeasurementUnit,
  CardinalNumber,
  OrdinalNumber,
  RomanNumeral,
  DateNumeric,
  DateCombined,
  Time,
  Year,
  PhoneNumber,
  DecimalNumber,
  Currency,
  Email,
  Url,
  MixedAlphanumeric,
};

constexpr int kNswClassCount = 18;

const char* to_string(NswClass cls);
std::optional<NswClass> nsw_class_from_string(std::string_view name);

/// One whitespace-free span of input text. When an orthographic dot is
/// attached (ordinal numbers, abbreviations), the dot is part of the
/// surface slice and trailing_dot is set; core() strips it again.
struct Token {
  std::string surface;
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;
  std::size_t sentence_index = 0;
  bool trailing_dot = false;

  std::string_view core() const {
    std::string_view s{surface};
    if (trailing_dot && !s.empty() && s.back() == '.') s.remove_suffix(1);
    return s;
  }
};

struct Sentence {
  std::size_t index = 0;
  std::vector<Token> tokens;
};

/// Croatian has seven cases; only the ones the engine inflects for are
/// ever requested, the rest exist so tables can be extended in data.
enum class Case : std::uint8_t {
  Nominative,
  Genitive,
  Dative,
  Accusative,
  Vocative,
  Locative,
  Instrumental,
};

enum class Gender : std::uint8_t { Masculine, Feminine, Neuter };

enum class GramNumber : std::uint8_t { Singular, Plural };

struct MorphTag {
  Case morph_case = Case::Nominative;
  Gender gender = Gender::Masculine;
  GramNumber number = GramNumber::Singular;

  bool operator==(const MorphTag&) const = default;
};

/// "nom-m-sg" style key used by the suffix tables and the TSV fixtures.
std::string to_string(const MorphTag& tag);
std::optional<MorphTag> morph_tag_from_string(std::string_view key);

/// Contiguous run of tokens carrying one class. Multi-token spans occur
/// only for dates, times, phone numbers and e-mail/URL shapes.
struct ClassifiedSpan {
  std::size_t sentence = 0;
  std::size_t first_token = 0;
  std::size_t token_count = 1;
  NswClass cls = NswClass::StandardWord;
  std::string rule;
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;
  std::string surface;  // exact input slice covering the span
};

/// Expanded word sequence replacing one span.
struct Expansion {
  std::vector<std::string> words;
  std::vector<MorphTag> tags;  // one per word
  std::string source;          // rule id or dictionary row reference
  std::string original;        // the replaced surface
};

/// Address of a token inside a segmented text.
struct TokenPosition {
  std::size_t sentence = 0;
  std::size_t token = 0;

  auto operator<=>(const TokenPosition&) const = default;
};

/// Single splice instruction for reattach(): replace `token_count`
/// consecutive tokens starting at `pos` with `words`.
struct Replacement {
  TokenPosition pos;
  std::size_t token_count = 1;
  std::vector<std::string> words;
};

}  // namespace hrnorm

#endif  // HRNORM_TYPES_HPP
