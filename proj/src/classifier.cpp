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

#include "hrnorm/classifier.hpp"

#include <charconv>

#include "hrnorm/datetime.hpp"
#include "hrnorm/roman.hpp"
#include "hrnorm/tokenizer.hpp"
#include "hrnorm/utf8.hpp"

namespace hrnorm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

long long digits_value(std::string_view s) {
  long long out = 0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

// Digits, optionally with thousands dots (10.000) and a leading minus.
bool plain_or_grouped_digits(std::string_view s) {
  if (!s.empty() && s[0] == '-') s.remove_prefix(1);
  if (all_digits(s)) return true;
  const auto first_dot = s.find('.');
  if (first_dot == std::string_view::npos || first_dot == 0 || first_dot > 3)
    return false;
  if (!all_digits(s.substr(0, first_dot))) return false;
  std::size_t pos = first_dot;
  while (pos < s.size()) {
    if (s[pos] != '.' || pos + 4 > s.size() ||
        !all_digits(s.substr(pos + 1, 3)))
      return false;
    pos += 4;
  }
  return true;
}

std::string strip_grouping(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != '.') out.push_back(c);
  return out;
}

bool decimal_shape(std::string_view s) {
  if (!s.empty() && s[0] == '-') s.remove_prefix(1);
  const auto comma = s.find(',');
  if (comma == std::string_view::npos || comma == 0 || comma + 1 >= s.size())
    return false;
  return plain_or_grouped_digits(s.substr(0, comma)) &&
         all_digits(s.substr(comma + 1));
}

bool alphabetic_word(std::string_view core) {
  if (core.empty()) return false;
  std::size_t pos = 0;
  char32_t prev = 0;
  while (pos < core.size()) {
    const std::size_t at = pos;
    const char32_t cp = utf8::decode(core, pos);
    if (utf8::is_letter(cp)) {
      prev = cp;
      continue;
    }
    // Internal hyphen/apostrophe between letters still reads as a word.
    if ((cp == U'-' || cp == U'\'') && at > 0 && utf8::is_letter(prev) &&
        pos < core.size()) {
      std::size_t peek = pos;
      if (utf8::is_letter(utf8::decode(core, peek))) {
        prev = 0;
        continue;
      }
    }
    return false;
  }
  return true;
}

bool punct_only(std::string_view surface) {
  std::size_t pos = 0;
  while (pos < surface.size())
    if (!utf8::is_punct_or_symbol(utf8::decode(surface, pos))) return false;
  return !surface.empty();
}

std::size_t codepoint_count(std::string_view s) {
  std::size_t pos = 0, count = 0;
  while (pos < s.size()) {
    utf8::decode(s, pos);
    ++count;
  }
  return count;
}

bool all_upper_letters(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char32_t cp = utf8::decode(s, pos);
    if (!utf8::is_upper(cp)) return false;
  }
  return !s.empty();
}

bool starts_upper(std::string_view s) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  return utf8::is_upper(utf8::decode(s, pos));
}

bool year_cue_token(const Token& token) {
  if (token.trailing_dot)
    return token.surface == "g." || token.surface == "god.";
  const auto core = token.core();
  return core == "godine" || core == "godina" || core == "godini";
}

bool year_shape(const Token& token) {
  const auto core = token.core();
  return all_digits(core) && core.size() >= 3 && core.size() <= 4;
}

// Lookup key for the dictionary: the dotted surface when the orthographic
// dot is attached, the bare core otherwise.
std::string lexicon_key(const Token& token) {
  return token.trailing_dot ? token.surface : std::string(token.core());
}

}  // namespace

const std::map<std::string, std::string>& classifier_rule_catalog() {
  static const std::map<std::string, std::string> catalog = {
      {"punct", "punctuation token outside the dictionary passes through"},
      {"email-shape", "local@domain shape"},
      {"url-shape", "scheme://, www. or domain.tld shape"},
      {"date-combined", "ordinal day + month name (+ optional year)"},
      {"date-numeric", "d.m.(yyyy) or d/m(/yyyy) in one token"},
      {"date-numeric-seq", "adjacent dotted day, month and optional year"},
      {"time-shape", "h:mm or h:mm:ss"},
      {"phone-shape", "digit groups joined by / or - in one token"},
      {"phone-seq", "adjacent digit groups led by a zero group"},
      {"decimal-comma", "digits, decimal comma, digits"},
      {"ordinal-dot", "digits with the orthographic dot"},
      {"year-cue", "3-4 digit number before g./god./godine"},
      {"cardinal-digits", "bare digits, optionally with thousands dots"},
      {"roman-context", "well-formed Roman numeral licensed by dot/trigger"},
      {"lexicon", "surface found in the dictionary"},
      {"lexicon-miss-word", "dictionary word whose context rules all failed"},
      {"acronym-caps", "2-8 uppercase letters outside the dictionary"},
      {"standard-word", "alphabetic token outside the dictionary"},
      {"mixed-fallback", "any other alphanumeric shape"},
  };
  return catalog;
}

bool is_roman_numeral(const Token& token, const NeighborTokens& neighbors,
                      const SpellingTables& tables, const Lexicon& lexicon) {
  const auto core = token.core();
  if (!roman_chars_only(core) || !roman_wellformed(core)) return false;

  const bool single_letter = codepoint_count(core) == 1;
  if (single_letter && !token.trailing_dot) return false;
  // "I. Horvat": an initial before a capitalized name, not a numeral.
  if (single_letter && neighbors.next && starts_upper(neighbors.next->core()) &&
      alphabetic_word(neighbors.next->core()))
    return false;

  if (token.trailing_dot) return true;

  auto is_trigger = [&](const Token* tok, bool sentence_initial) {
    if (!tok) return false;
    if (tables.roman_triggers.count(tok->surface)) return true;
    if (tables.roman_triggers.count(utf8::lower_copy(tok->surface)))
      return true;
    // Proper-name proxy: capitalized word, not sentence-initial, unknown to
    // the dictionary.
    return !sentence_initial && starts_upper(tok->core()) &&
           alphabetic_word(tok->core()) && !lexicon.find(lexicon_key(*tok));
  };
  return is_trigger(neighbors.prev, neighbors.prev_sentence_initial) ||
         is_trigger(neighbors.next, false);
}

std::vector<ClassifiedSpan> classify(std::string_view text,
                                     const Sentence& sentence,
                                     const Lexicon& lexicon,
                                     const SpellingTables& tables) {
  std::vector<ClassifiedSpan> spans;
  const auto& tokens = sentence.tokens;

  auto make_span = [&](std::size_t first, std::size_t count, NswClass cls,
                       std::string rule) {
    ClassifiedSpan span;
    span.sentence = sentence.index;
    span.first_token = first;
    span.token_count = count;
    span.cls = cls;
    span.rule = std::move(rule);
    span.byte_start = tokens[first].byte_start;
    span.byte_end = tokens[first + count - 1].byte_end;
    span.surface = std::string(
        text.substr(span.byte_start, span.byte_end - span.byte_start));
    spans.push_back(std::move(span));
  };

  // Proper-name proxy shared by the dictionary context rules.
  auto proper_name_like = [&](std::size_t index) {
    if (index >= tokens.size()) return false;
    const Token& tok = tokens[index];
    return index > 0 && starts_upper(tok.core()) &&
           alphabetic_word(tok.core()) && !lexicon.find(lexicon_key(tok));
  };

  // Shallow shape probe for precedes-class rules, where the next span is
  // not classified yet.
  auto probe_class = [&](std::size_t index) -> std::optional<NswClass> {
    if (index >= tokens.size()) return std::nullopt;
    const Token& tok = tokens[index];
    const auto core = tok.core();
    if (all_digits(core))
      return tok.trailing_dot ? NswClass::OrdinalNumber
                              : NswClass::CardinalNumber;
    if (decimal_shape(core)) return NswClass::DecimalNumber;
    if (roman_chars_only(core) && roman_wellformed(core) && tok.trailing_dot)
      return NswClass::RomanNumeral;
    return std::nullopt;
  };

  std::size_t i = 0;
  while (i < tokens.size()) {
    const Token& tok = tokens[i];
    const auto core = tok.core();
    const Token* next = i + 1 < tokens.size() ? &tokens[i + 1] : nullptr;

    // 1. Bare punctuation outside the dictionary.
    if (punct_only(tok.surface) && !lexicon.find(tok.surface)) {
      make_span(i, 1, NswClass::StandardWord, "punct");
      ++i;
      continue;
    }

    // 2./3. Addresses.
    if (matches_email(core)) {
      make_span(i, 1, NswClass::Email, "email-shape");
      ++i;
      continue;
    }
    if (matches_url(core)) {
      make_span(i, 1, NswClass::Url, "url-shape");
      ++i;
      continue;
    }

    // 4. Combined date: "3. svibnja 2012." / "3. svibnja".
    if (tok.trailing_dot && all_digits(core) && core.size() <= 2 && next) {
      const long long day = digits_value(core);
      const bool next_is_month =
          alphabetic_word(next->core()) &&
          [&] {
            const std::string folded = utf8::lower_copy(next->core());
            for (int m = 1; m <= 12; ++m)
              if (folded == tables.months_nom[m] ||
                  folded == tables.months_gen[m])
                return true;
            return false;
          }();
      if (day >= 1 && day <= 31 && next_is_month) {
        std::size_t count = 2;
        if (i + 2 < tokens.size() && year_shape(tokens[i + 2]) &&
            !year_cue_token(tokens[i + 2]))
          count = 3;
        make_span(i, count, NswClass::DateCombined, "date-combined");
        i += count;
        continue;
      }
    }

    // 5. Numeric date in one token.
    if (core.find('.') != std::string_view::npos ||
        core.find('/') != std::string_view::npos) {
      if (const auto date =
              DateTimeExpander::parse_numeric_date(core, tok.trailing_dot)) {
        const bool plausible = (date->day >= 1 && date->day <= 31 &&
                                date->month >= 1 && date->month <= 12) ||
                               tok.trailing_dot;
        if (plausible && !plain_or_grouped_digits(core)) {
          make_span(i, 1, NswClass::DateNumeric, "date-numeric");
          ++i;
          continue;
        }
      }
    }

    // 6. Numeric date spread over tokens: "3." "5." "2012."/"2012".
    if (tok.trailing_dot && all_digits(core) && core.size() <= 2 && next &&
        next->trailing_dot && all_digits(next->core()) &&
        next->core().size() <= 2) {
      const long long day = digits_value(core);
      const long long month = digits_value(next->core());
      if (day >= 1 && day <= 31 && month >= 1 && month <= 12) {
        std::size_t count = 2;
        if (i + 2 < tokens.size() && year_shape(tokens[i + 2])) count = 3;
        make_span(i, count, NswClass::DateNumeric, "date-numeric-seq");
        i += count;
        continue;
      }
    }

    // 7. Time.
    if (DateTimeExpander::parse_time(core)) {
      make_span(i, 1, NswClass::Time, "time-shape");
      ++i;
      continue;
    }

    // 8. Phone number in one token: 051/123-456.
    if (!tok.trailing_dot &&
        (core.find('/') != std::string_view::npos ||
         core.find('-') != std::string_view::npos) &&
        core.find('.') == std::string_view::npos && !core.empty() &&
        core[0] != '-') {
      bool groups_ok = true;
      std::size_t digit_count = 0;
      std::string_view rest = core;
      while (!rest.empty() && groups_ok) {
        const auto sep = rest.find_first_of("/-");
        const auto group = sep == std::string_view::npos
                               ? rest
                               : rest.substr(0, sep);
        if (!all_digits(group)) groups_ok = false;
        digit_count += group.size();
        if (sep == std::string_view::npos) break;
        rest.remove_prefix(sep + 1);
        if (rest.empty()) groups_ok = false;
      }
      if (groups_ok && (core[0] == '0' || digit_count >= 7)) {
        make_span(i, 1, NswClass::PhoneNumber, "phone-shape");
        ++i;
        continue;
      }
    }

    // 9. Phone number as adjacent digit groups led by a zero group.
    if (!tok.trailing_dot && all_digits(core) && core[0] == '0') {
      std::size_t count = 1;
      std::size_t digit_count = core.size();
      while (i + count < tokens.size() && count < 4) {
        const Token& part = tokens[i + count];
        if (part.trailing_dot || !all_digits(part.core())) break;
        digit_count += part.core().size();
        ++count;
      }
      if (count >= 2 && digit_count >= 6) {
        make_span(i, count, NswClass::PhoneNumber, "phone-seq");
        i += count;
        continue;
      }
    }

    // 10. Decimal number with a comma.
    if (decimal_shape(core)) {
      make_span(i, 1, NswClass::DecimalNumber, "decimal-comma");
      ++i;
      continue;
    }

    // 11./12. Ordinal dot versus year cue.
    if (plain_or_grouped_digits(core) && core[0] != '-') {
      const bool cue = next && year_shape(tok) && year_cue_token(*next);
      if (cue) {
        make_span(i, 1, NswClass::Year, "year-cue");
        ++i;
        continue;
      }
      if (tok.trailing_dot) {
        const std::string digits = strip_grouping(core);
        if (digits_value(digits) >= 1) {
          make_span(i, 1, NswClass::OrdinalNumber, "ordinal-dot");
          ++i;
          continue;
        }
      } else {
        make_span(i, 1, NswClass::CardinalNumber, "cardinal-digits");
        ++i;
        continue;
      }
    }
    if (!tok.trailing_dot && core.size() > 1 && core[0] == '-' &&
        (plain_or_grouped_digits(core) || decimal_shape(core))) {
      make_span(i, 1,
                decimal_shape(core) ? NswClass::DecimalNumber
                                    : NswClass::CardinalNumber,
                decimal_shape(core) ? "decimal-comma" : "cardinal-digits");
      ++i;
      continue;
    }

    // 14. Roman numerals.
    {
      NeighborTokens neighbors;
      neighbors.prev = i > 0 ? &tokens[i - 1] : nullptr;
      neighbors.prev_sentence_initial = i == 1;
      neighbors.next = next;
      if (is_roman_numeral(tok, neighbors, tables, lexicon)) {
        make_span(i, 1, NswClass::RomanNumeral, "roman-context");
        ++i;
        continue;
      }
    }

    // 15. Dictionary classes.
    if (const LexEntry* entry = lexicon.find(lexicon_key(tok))) {
      NeighborContext ctx;
      if (!spans.empty() && spans.back().sentence == sentence.index)
        ctx.prev_class = spans.back().cls;
      ctx.next_class = probe_class(i + 1);
      ctx.prev_proper_name = i > 0 && proper_name_like(i - 1);
      ctx.next_proper_name = proper_name_like(i + 1);
      const ResolveResult res = lexicon.resolve(lexicon_key(tok), ctx);
      if (res.hit || !alphabetic_word(core)) {
        make_span(i, 1, entry->cls, "lexicon");
        ++i;
        continue;
      }
      // A word-shaped surface whose context rules all failed reads as an
      // ordinary word ("s" the preposition vs "s" the second).
      make_span(i, 1, NswClass::StandardWord, "lexicon-miss-word");
      ++i;
      continue;
    }

    // Sentence-initial capitalized abbreviation ("Npr." -> "npr.").
    if (tok.trailing_dot) {
      const std::string lowered = utf8::lower_copy(lexicon_key(tok));
      if (const LexEntry* entry = lexicon.find(lowered)) {
        make_span(i, 1, entry->cls, "lexicon");
        ++i;
        continue;
      }
    }

    // 16. Acronyms.
    {
      const std::size_t cps = codepoint_count(core);
      if (!tok.trailing_dot && cps >= 2 && cps <= 8 &&
          all_upper_letters(core)) {
        make_span(i, 1, NswClass::Acronym, "acronym-caps");
        ++i;
        continue;
      }
    }

    // 17. Plain words (a trailing attached dot does not change the reading).
    if (alphabetic_word(core)) {
      make_span(i, 1, NswClass::StandardWord, "standard-word");
      ++i;
      continue;
    }

    // 18. Everything else.
    make_span(i, 1, NswClass::MixedAlphanumeric, "mixed-fallback");
    ++i;
  }

  return spans;
}

}  // namespace hrnorm
