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

#include "hrnorm/pipeline.hpp"

#include <charconv>

#include "hrnorm/roman.hpp"
#include "hrnorm/utf8.hpp"

namespace hrnorm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::string strip_grouping(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != '.') out.push_back(c);
  return out;
}

long long to_ll(std::string_view s) {
  long long out = 0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

std::vector<std::string> split_groups(std::string_view core) {
  std::vector<std::string> groups;
  std::string current;
  for (char c : core) {
    if (c == '/' || c == '-') {
      if (!current.empty()) groups.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) groups.push_back(std::move(current));
  return groups;
}

bool is_vowel(char32_t cp) {
  switch (utf8::to_lower(cp)) {
    case U'a':
    case U'e':
    case U'i':
    case U'o':
    case U'u':
      return true;
    default:
      return false;
  }
}

const char* separator_key(char32_t cp) {
  switch (cp) {
    case U'.':
      return "point";
    case U',':
      return "comma";
    case U'/':
      return "slash";
    case U':':
      return "colon";
    case U'-':
      return "hyphen";
    case U'_':
      return "underscore";
    case U'@':
      return "at";
    case U'?':
      return "question";
    case U'=':
      return "equals";
    case U'#':
      return "hash";
    case U'&':
      return "ampersand";
    default:
      return nullptr;
  }
}

// Numeric value of a span, used for paucal agreement of a following unit
// word. Decimals report none and take the plural form.
std::optional<long long> span_number_value(const ClassifiedSpan& span,
                                           const Sentence& sentence) {
  const Token& tok = sentence.tokens[span.first_token];
  const auto core = tok.core();
  switch (span.cls) {
    case NswClass::CardinalNumber:
    case NswClass::OrdinalNumber:
    case NswClass::Year: {
      const std::string digits =
          strip_grouping(core[0] == '-' ? core.substr(1) : core);
      if (!all_digits(digits) || digits.size() > 15) return std::nullopt;
      return to_ll(digits);
    }
    case NswClass::RomanNumeral: {
      const int v = roman_value(core);
      return v > 0 ? std::optional<long long>(v) : std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

bool number_like(NswClass cls) {
  switch (cls) {
    case NswClass::CardinalNumber:
    case NswClass::OrdinalNumber:
    case NswClass::Year:
    case NswClass::RomanNumeral:
      return true;
    default:
      return false;
  }
}

bool lexicon_class(NswClass cls) {
  switch (cls) {
    case NswClass::Abbreviation:
    case NswClass::Symbol:
    case NswClass::MeasurementUnit:
    case NswClass::Currency:
      return true;
    default:
      return false;
  }
}

const std::string& pick_paucal_variant(const LexSense& sense,
                                       std::optional<long long> value) {
  if (!value) return sense.variants[2];
  switch (paucal_form(*value)) {
    case PaucalForm::Singular:
      return sense.variants[0];
    case PaucalForm::Paucal:
      return sense.variants[1];
    default:
      return sense.variants[2];
  }
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto space = text.find(' ', start);
    if (space == std::string_view::npos) {
      words.emplace_back(text.substr(start));
      break;
    }
    if (space > start) words.emplace_back(text.substr(start, space - start));
    start = space + 1;
  }
  return words;
}

}  // namespace

Normalizer::Normalizer(RunConfig config)
    : config_(std::move(config)),
      tables_(SpellingTables::load(config_.spelling_path)),
      lexicon_(Lexicon::load(config_.lexicon_paths, config_.profile)),
      speller_(tables_),
      datetime_(tables_, speller_) {
  tok_config_.abbreviations = lexicon_.dotted_surfaces();
  tok_config_.roman_triggers = tables_.roman_triggers;
  for (auto& glued : lexicon_.glued_symbol_surfaces())
    tok_config_.glued_symbols.push_back(std::move(glued));
}

std::vector<std::string> Normalizer::verbalize_chars(
    std::string_view core) const {
  std::vector<std::string> words;

  auto spell_run = [&](const std::string& run) {
    const std::string folded = utf8::lower_copy(run);
    std::size_t pos = 0;
    while (pos < folded.size()) {
      std::size_t best_len = 0;
      const std::string* best = nullptr;
      for (const auto& [letter, name] : tables_.letters) {
        if (letter.size() > best_len &&
            folded.compare(pos, letter.size(), letter) == 0) {
          best_len = letter.size();
          best = &name;
        }
      }
      if (best) {
        words.push_back(*best);
        pos += best_len;
      } else {
        std::size_t cp_pos = pos;
        utf8::decode(folded, cp_pos);
        words.push_back(folded.substr(pos, cp_pos - pos));
        pos = cp_pos;
      }
    }
  };

  std::string letter_run;
  std::size_t letter_cps = 0;
  bool letter_vowel = false;
  std::string digit_run;

  auto flush = [&] {
    if (!letter_run.empty()) {
      if (letter_cps >= 2 && letter_vowel)
        words.push_back(utf8::lower_copy(letter_run));
      else
        spell_run(letter_run);
      letter_run.clear();
      letter_cps = 0;
      letter_vowel = false;
    }
    if (!digit_run.empty()) {
      if (digit_run[0] == '0' || digit_run.size() > 15) {
        auto digit_words = speller_.digitwise(digit_run);
        words.insert(words.end(), digit_words.begin(), digit_words.end());
      } else {
        auto value_words = speller_.expand_cardinal(to_ll(digit_run));
        words.insert(words.end(), value_words.begin(), value_words.end());
      }
      digit_run.clear();
    }
  };

  std::size_t pos = 0;
  while (pos < core.size()) {
    const std::size_t at = pos;
    const char32_t cp = utf8::decode(core, pos);
    if (utf8::is_digit(cp)) {
      if (!letter_run.empty()) flush();
      digit_run.push_back(static_cast<char>(cp));
      continue;
    }
    if (utf8::is_letter(cp)) {
      if (!digit_run.empty()) flush();
      letter_run.append(core.substr(at, pos - at));
      ++letter_cps;
      letter_vowel = letter_vowel || is_vowel(cp);
      continue;
    }
    flush();
    if (const char* key = separator_key(cp)) {
      auto sep_words = split_words(tables_.connective(key));
      words.insert(words.end(), sep_words.begin(), sep_words.end());
    }
    // Other marks inside a mixed shape carry no reading.
  }
  flush();
  return words;
}

std::vector<std::string> Normalizer::fallback_digits(
    const ClassifiedSpan& span, const Sentence& sentence) const {
  std::vector<std::string> words;
  for (std::size_t k = 0; k < span.token_count; ++k) {
    const auto core = sentence.tokens[span.first_token + k].core();
    for (char c : core)
      if (c >= '0' && c <= '9')
        words.push_back(tables_.unit_word(c - '0', Gender::Masculine));
  }
  return words;
}

Normalizer::SpanOutcome Normalizer::expand_span(
    const ClassifiedSpan& span, const Sentence& sentence, const MorphTag& tag,
    bool has_override, std::optional<long long> prev_value,
    const ResolveResult& resolution) const {
  SpanOutcome out;
  out.source = span.rule;
  const Token& tok = sentence.tokens[span.first_token];
  const auto core = tok.core();

  auto fallback = [&] {
    out.words = fallback_digits(span, sentence);
    out.status = "fallback";
  };

  switch (span.cls) {
    case NswClass::CardinalNumber: {
      const bool negative = core.size() > 1 && core[0] == '-';
      const std::string digits =
          strip_grouping(negative ? core.substr(1) : core);
      if (digits.size() >= 16) {
        fallback();
        break;
      }
      if (negative) out.words.push_back(tables_.connective("minus"));
      auto words = speller_.expand_cardinal(to_ll(digits), tag);
      out.words.insert(out.words.end(), words.begin(), words.end());
      break;
    }
    case NswClass::OrdinalNumber: {
      const std::string digits = strip_grouping(core);
      if (digits.size() >= 16) {
        fallback();
        break;
      }
      out.words = speller_.expand_ordinal(to_ll(digits), tag);
      break;
    }
    case NswClass::Year: {
      MorphTag year_tag{Case::Nominative, Gender::Feminine,
                        GramNumber::Singular};
      if (has_override) {
        year_tag = tag;
      } else if (span.first_token + 1 < sentence.tokens.size()) {
        const auto cue = sentence.tokens[span.first_token + 1].core();
        if (cue == "godine")
          year_tag.morph_case = Case::Genitive;
        else if (cue == "godini")
          year_tag.morph_case = Case::Locative;
      }
      out.words = speller_.expand_ordinal(to_ll(std::string(core)), year_tag);
      break;
    }
    case NswClass::RomanNumeral:
      out.words = speller_.expand_roman(core, tag);
      break;
    case NswClass::DateNumeric: {
      DateParts date;
      if (span.token_count == 1) {
        const auto parsed =
            DateTimeExpander::parse_numeric_date(core, tok.trailing_dot);
        if (!parsed) {
          fallback();
          break;
        }
        date = *parsed;
      } else {
        date.day = static_cast<int>(to_ll(core));
        date.month = static_cast<int>(
            to_ll(sentence.tokens[span.first_token + 1].core()));
        if (span.token_count == 3) {
          const Token& year_tok = sentence.tokens[span.first_token + 2];
          date.year = static_cast<int>(to_ll(year_tok.core()));
          date.dot_after_year = year_tok.trailing_dot;
        }
      }
      try {
        out.words = datetime_.expand_date(date);
      } catch (const MalformedDateError&) {
        fallback();
      }
      break;
    }
    case NswClass::DateCombined: {
      DateParts date;
      date.day = static_cast<int>(to_ll(core));
      date.month_surface =
          std::string(sentence.tokens[span.first_token + 1].core());
      if (span.token_count == 3) {
        const Token& year_tok = sentence.tokens[span.first_token + 2];
        date.year = static_cast<int>(to_ll(year_tok.core()));
        date.dot_after_year = year_tok.trailing_dot;
      }
      try {
        out.words = datetime_.expand_date(date);
      } catch (const MalformedDateError&) {
        fallback();
      }
      break;
    }
    case NswClass::Time: {
      const auto time = DateTimeExpander::parse_time(core);
      if (!time) {
        fallback();
        break;
      }
      try {
        out.words = datetime_.expand_time(*time);
      } catch (const MalformedTimeError&) {
        fallback();
      }
      break;
    }
    case NswClass::PhoneNumber: {
      std::vector<std::string> groups;
      if (span.token_count == 1) {
        groups = split_groups(core);
      } else {
        for (std::size_t k = 0; k < span.token_count; ++k)
          groups.emplace_back(sentence.tokens[span.first_token + k].core());
      }
      out.words = datetime_.expand_phone(groups);
      break;
    }
    case NswClass::DecimalNumber: {
      std::string_view rest = core;
      const bool negative = !rest.empty() && rest[0] == '-';
      if (negative) rest.remove_prefix(1);
      const auto comma = rest.find(',');
      const std::string int_part = strip_grouping(rest.substr(0, comma));
      const std::string_view fraction = rest.substr(comma + 1);
      if (int_part.size() >= 16 || fraction.size() >= 16) {
        fallback();
        break;
      }
      if (negative) out.words.push_back(tables_.connective("minus"));
      auto int_words = speller_.expand_cardinal(to_ll(int_part));
      out.words.insert(out.words.end(), int_words.begin(), int_words.end());
      out.words.push_back(tables_.connective("decimal"));
      if (fraction[0] == '0') {
        auto digit_words = speller_.digitwise(fraction);
        out.words.insert(out.words.end(), digit_words.begin(),
                         digit_words.end());
      } else {
        auto frac_words = speller_.expand_cardinal(to_ll(fraction));
        out.words.insert(out.words.end(), frac_words.begin(),
                         frac_words.end());
      }
      break;
    }
    case NswClass::Email:
    case NswClass::Url:
    case NswClass::MixedAlphanumeric:
      out.words = verbalize_chars(core);
      break;
    case NswClass::Acronym: {
      try {
        for (const auto& name : spell_acronym(core, tables_)) {
          auto parts = split_words(name);
          out.words.insert(out.words.end(), parts.begin(), parts.end());
        }
      } catch (const SpellError&) {
        out.status = "miss";
        out.words.clear();
      }
      break;
    }
    case NswClass::Abbreviation:
    case NswClass::Symbol:
    case NswClass::MeasurementUnit:
    case NswClass::Currency: {
      if (!resolution.hit) {
        out.status = "miss";
        break;
      }
      const std::string& variant =
          resolution.sense->paucal
              ? pick_paucal_variant(*resolution.sense, prev_value)
              : resolution.sense->variants[0];
      out.words = split_words(variant);
      out.source = resolution.sense->source;
      break;
    }
    case NswClass::StandardWord:
      break;
  }
  return out;
}

std::pair<std::string, RunReport> Normalizer::normalize(
    const std::string& text) const {
  const auto sentences = segment(text, tok_config_);

  struct FlatSpan {
    ClassifiedSpan span;
    const Sentence* sentence;
  };
  std::vector<FlatSpan> flat;
  RunReport report;
  report.sentence_count = sentences.size();
  for (const auto& sentence : sentences) {
    report.token_count += sentence.tokens.size();
    for (auto& span : classify(text, sentence, lexicon_, tables_))
      flat.push_back({std::move(span), &sentence});
  }

  // Resolve dictionary senses with full span context; senses may carry an
  // agreement tag that re-renders the number span before them.
  std::vector<std::optional<MorphTag>> overrides(flat.size());
  std::vector<ResolveResult> resolutions(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const auto& span = flat[i].span;
    if (!lexicon_class(span.cls)) continue;
    const Token& tok = flat[i].sentence->tokens[span.first_token];

    NeighborContext ctx;
    auto same_sentence = [&](std::size_t j) {
      return flat[j].span.sentence == span.sentence &&
             flat[j].sentence == flat[i].sentence;
    };
    auto proper = [&](std::size_t j) {
      const auto& other = flat[j].span;
      if (other.cls != NswClass::StandardWord || other.first_token == 0)
        return false;
      const Token& other_tok = flat[j].sentence->tokens[other.first_token];
      std::size_t p = 0;
      const auto other_core = other_tok.core();
      if (other_core.empty()) return false;
      return utf8::is_upper(utf8::decode(other_core, p));
    };
    if (i > 0 && same_sentence(i - 1)) {
      ctx.prev_class = flat[i - 1].span.cls;
      ctx.prev_proper_name = proper(i - 1);
    }
    if (i + 1 < flat.size() && same_sentence(i + 1)) {
      ctx.next_class = flat[i + 1].span.cls;
      ctx.next_proper_name = proper(i + 1);
    }

    const std::string key =
        tok.trailing_dot ? tok.surface : std::string(tok.core());
    ResolveResult res = lexicon_.resolve(key, ctx);
    if (!res.hit) {
      const std::string lowered = utf8::lower_copy(key);
      if (lowered != key) res = lexicon_.resolve(lowered, ctx);
    }
    resolutions[i] = res;
    if (res.hit && res.sense->prev_agreement && i > 0 && same_sentence(i - 1) &&
        number_like(flat[i - 1].span.cls))
      overrides[i - 1] = res.sense->prev_agreement;
  }

  std::vector<Replacement> replacements;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const auto& span = flat[i].span;
    const Sentence& sentence = *flat[i].sentence;
    if (span.cls == NswClass::StandardWord) continue;

    std::optional<long long> prev_value;
    if (i > 0 && flat[i - 1].span.sentence == span.sentence &&
        flat[i - 1].sentence == flat[i].sentence)
      prev_value = span_number_value(flat[i - 1].span, *flat[i - 1].sentence);

    const MorphTag tag = overrides[i] ? *overrides[i] : MorphTag{};
    SpanOutcome outcome = expand_span(span, sentence, tag,
                                      overrides[i].has_value(), prev_value,
                                      resolutions[i]);

    SpanRecord record;
    record.byte_start = span.byte_start;
    record.byte_end = span.byte_end;
    record.surface = span.surface;
    record.cls = span.cls;
    record.rule = span.rule;
    record.source = outcome.source;
    record.status = outcome.status;

    if (outcome.status == "miss" || outcome.words.empty()) {
      record.status = "miss";
      record.expansion.clear();
      ++report.miss_count;
      report.records.push_back(std::move(record));
      continue;
    }

    // Sentence-initial expansions start uppercase when configured.
    if (config_.capitalize_sentence_start && span.first_token == 0)
      outcome.words.front() = utf8::capitalize_first(outcome.words.front());

    std::string joined;
    for (const auto& w : outcome.words) {
      if (!joined.empty()) joined.push_back(' ');
      joined += w;
    }
    record.expansion = joined;
    report.records.push_back(record);

    // A span-final attached dot that also closed the clause (sentence-final
    // ordinal, abbreviation at end of text) must survive the splice.
    std::vector<std::string> replacement_words = outcome.words;
    const Token& last_tok =
        sentence.tokens[span.first_token + span.token_count - 1];
    if (last_tok.trailing_dot) {
      bool only_marks_follow = true;
      for (std::size_t k = span.first_token + span.token_count;
           k < sentence.tokens.size(); ++k) {
        const auto other_core = sentence.tokens[k].core();
        std::size_t p = 0;
        const char32_t cp = utf8::decode(
            other_core.empty() ? std::string_view(sentence.tokens[k].surface)
                               : other_core,
            p);
        if (utf8::is_letter(cp) || utf8::is_digit(cp)) {
          only_marks_follow = false;
          break;
        }
      }
      if (only_marks_follow) replacement_words.back().push_back('.');
    }

    Replacement rep;
    rep.pos = {span.sentence, span.first_token};
    rep.token_count = span.token_count;
    rep.words = std::move(replacement_words);
    replacements.push_back(std::move(rep));
  }

  std::string output = reattach(text, sentences, replacements);

  if (config_.strict && report.miss_count > 0)
    throw StrictMissError(std::move(report));
  return {std::move(output), std::move(report)};
}

}  // namespace hrnorm
