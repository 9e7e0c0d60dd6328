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

#include "hrnorm/lexicon.hpp"

#include <algorithm>

#include "hrnorm/errors.hpp"
#include "hrnorm/tsv.hpp"
#include "hrnorm/utf8.hpp"

namespace hrnorm {

namespace {

std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      return parts;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool is_number_class(NswClass cls) {
  switch (cls) {
    case NswClass::CardinalNumber:
    case NswClass::DecimalNumber:
      return true;
    default:
      return false;
  }
}

bool is_ordinal_class(NswClass cls) {
  switch (cls) {
    case NswClass::OrdinalNumber:
    case NswClass::RomanNumeral:
    case NswClass::Year:
      return true;
    default:
      return false;
  }
}

// "fixed", "paucal-f", optionally "+prev-<g>-<case>".
struct ParadigmSpec {
  bool paucal = false;
  Gender counted_gender = Gender::Masculine;
  std::optional<MorphTag> prev_agreement;
};

std::optional<ParadigmSpec> parse_paradigm(std::string_view text) {
  ParadigmSpec spec;
  std::string_view base = text;
  std::string_view prev;
  if (const auto plus = text.find('+'); plus != std::string_view::npos) {
    base = text.substr(0, plus);
    prev = text.substr(plus + 1);
  }

  if (base == "fixed") {
    spec.paucal = false;
  } else if (base.rfind("paucal-", 0) == 0 && base.size() == 8) {
    spec.paucal = true;
    switch (base[7]) {
      case 'm':
        spec.counted_gender = Gender::Masculine;
        break;
      case 'f':
        spec.counted_gender = Gender::Feminine;
        break;
      case 'n':
        spec.counted_gender = Gender::Neuter;
        break;
      default:
        return std::nullopt;
    }
    // A counted noun's gender is also what the preceding number agrees
    // with, unless the row overrides it explicitly.
    spec.prev_agreement =
        MorphTag{Case::Nominative, spec.counted_gender, GramNumber::Singular};
  } else {
    return std::nullopt;
  }

  if (!prev.empty()) {
    if (prev.rfind("prev-", 0) != 0) return std::nullopt;
    const auto rest = prev.substr(5);  // "<g>-<case>"
    if (rest.size() < 3 || rest[1] != '-') return std::nullopt;
    MorphTag tag;
    switch (rest[0]) {
      case 'm':
        tag.gender = Gender::Masculine;
        break;
      case 'f':
        tag.gender = Gender::Feminine;
        break;
      case 'n':
        tag.gender = Gender::Neuter;
        break;
      default:
        return std::nullopt;
    }
    const auto case_part = rest.substr(2);
    if (case_part == "nom")
      tag.morph_case = Case::Nominative;
    else if (case_part == "gen")
      tag.morph_case = Case::Genitive;
    else if (case_part == "dat")
      tag.morph_case = Case::Dative;
    else if (case_part == "acc")
      tag.morph_case = Case::Accusative;
    else if (case_part == "loc")
      tag.morph_case = Case::Locative;
    else if (case_part == "ins")
      tag.morph_case = Case::Instrumental;
    else
      return std::nullopt;
    spec.prev_agreement = tag;
  }
  return spec;
}

std::string paradigm_string(const LexSense& sense) {
  std::string out = sense.paucal
                        ? std::string("paucal-") +
                              "mfn"[static_cast<std::size_t>(sense.counted_gender)]
                        : std::string("fixed");
  // The implicit paucal agreement is not re-emitted.
  if (sense.prev_agreement &&
      (!sense.paucal ||
       !(sense.prev_agreement->morph_case == Case::Nominative &&
         sense.prev_agreement->gender == sense.counted_gender))) {
    const auto& tag = *sense.prev_agreement;
    out += "+prev-";
    out += "mfn"[static_cast<std::size_t>(tag.gender)];
    out += '-';
    const char* names[] = {"nom", "gen", "dat", "acc", "voc", "loc", "ins"};
    out += names[static_cast<std::size_t>(tag.morph_case)];
  }
  return out;
}

}  // namespace

bool context_rule_valid(std::string_view rule) {
  if (rule == "follows-ordinal" || rule == "follows-cardinal" ||
      rule == "adjacent-proper-name")
    return true;
  for (const auto prefix : {"follows-class=", "precedes-class="}) {
    if (rule.rfind(prefix, 0) == 0)
      return nsw_class_from_string(rule.substr(std::string_view(prefix).size()))
          .has_value();
  }
  return false;
}

bool context_rule_matches(std::string_view rule, const NeighborContext& ctx) {
  if (rule == "follows-ordinal")
    return ctx.prev_class && is_ordinal_class(*ctx.prev_class);
  if (rule == "follows-cardinal")
    return ctx.prev_class && is_number_class(*ctx.prev_class);
  if (rule == "adjacent-proper-name")
    return ctx.prev_proper_name || ctx.next_proper_name;
  if (rule.rfind("follows-class=", 0) == 0) {
    const auto cls = nsw_class_from_string(rule.substr(14));
    return cls && ctx.prev_class && *ctx.prev_class == *cls;
  }
  if (rule.rfind("precedes-class=", 0) == 0) {
    const auto cls = nsw_class_from_string(rule.substr(15));
    return cls && ctx.next_class && *ctx.next_class == *cls;
  }
  return false;
}

Lexicon Lexicon::load(const std::vector<std::string>& paths,
                      const std::string& profile) {
  Lexicon lex;
  for (const auto& path : paths) {
    const TsvFile file = read_tsv(path);
    for (const auto& row : file.rows) {
      if (row.cols.size() != 7)
        throw LoadError(path, row.line_no, row.cols.size(),
                        "expected 7 columns (surface, class, expansion, "
                        "paradigm, context, profile, comment)");
      const auto& surface = row.cols[0];
      const auto cls = nsw_class_from_string(row.cols[1]);
      const auto& expansion = row.cols[2];
      const auto paradigm = parse_paradigm(row.cols[3]);
      const auto& context = row.cols[4];
      const auto& row_profile = row.cols[5];

      if (surface.empty())
        throw LoadError(path, row.line_no, 1, "empty surface");
      if (!cls)
        throw LoadError(path, row.line_no, 2,
                        "unknown class '" + row.cols[1] + "'");
      if (expansion.empty())
        throw LoadError(path, row.line_no, 3, "empty expansion");
      if (!paradigm)
        throw LoadError(path, row.line_no, 4,
                        "unknown paradigm '" + row.cols[3] + "'");
      if (context != "-" && !context_rule_valid(context))
        throw LoadError(path, row.line_no, 5,
                        "unknown context rule '" + context + "'");

      if (row_profile != "-" && (profile.empty() || row_profile != profile))
        continue;  // row belongs to a different profile

      LexSense sense;
      sense.paucal = paradigm->paucal;
      sense.counted_gender = paradigm->counted_gender;
      sense.prev_agreement = paradigm->prev_agreement;
      sense.context = context == "-" ? std::string{} : context;
      sense.source = path + ":" + std::to_string(row.line_no);
      sense.variants = sense.paucal ? split_on(expansion, '/')
                                    : std::vector<std::string>{expansion};
      if (sense.paucal && sense.variants.size() != 3)
        throw LoadError(path, row.line_no, 3,
                        "paucal expansion needs sg/pauc/pl variants");
      for (const auto& v : sense.variants)
        if (v.empty())
          throw LoadError(path, row.line_no, 3, "empty expansion variant");

      auto [it, inserted] = lex.entries_.try_emplace(surface);
      LexEntry& entry = it->second;
      if (inserted) {
        entry.surface = surface;
        entry.cls = *cls;
        entry.profile = row_profile == "-" ? std::string{} : row_profile;
      } else {
        if (entry.cls != *cls)
          throw LoadError(path, row.line_no, 2,
                          "surface '" + surface +
                              "' declared with two different classes");
        const std::string this_profile =
            row_profile == "-" ? std::string{} : row_profile;
        if (entry.profile != this_profile) {
          // Profile-specific rows replace the whole profile-less entry.
          if (!this_profile.empty()) {
            entry.senses.clear();
            entry.default_sense.reset();
            entry.profile = this_profile;
            entry.cls = *cls;
          } else {
            continue;  // profile rows already shadow this surface
          }
        }
      }

      if (sense.context.empty()) {
        if (entry.default_sense)
          throw LoadError(path, row.line_no, 5,
                          "duplicate default sense for surface '" + surface +
                              "'");
        entry.default_sense = entry.senses.size();
      }
      entry.senses.push_back(std::move(sense));
    }
  }
  return lex;
}

const LexEntry* Lexicon::find(std::string_view surface) const {
  const auto it = entries_.find(surface);
  return it == entries_.end() ? nullptr : &it->second;
}

ResolveResult Lexicon::resolve(std::string_view surface,
                               const NeighborContext& context) const {
  ResolveResult result;
  const LexEntry* entry = find(surface);
  if (!entry) return result;
  result.entry = entry;
  for (const auto& sense : entry->senses) {
    if (sense.context.empty()) continue;
    if (context_rule_matches(sense.context, context)) {
      result.hit = true;
      result.sense = &sense;
      return result;
    }
  }
  if (entry->default_sense) {
    result.hit = true;
    result.sense = &entry->senses[*entry->default_sense];
  }
  return result;
}

std::string Lexicon::serialize() const {
  std::string out = "# schema: lexicon\n";
  for (const auto& [surface, entry] : entries_) {
    for (const auto& sense : entry.senses) {
      out += surface;
      out += '\t';
      out += to_string(entry.cls);
      out += '\t';
      for (std::size_t i = 0; i < sense.variants.size(); ++i) {
        if (i) out += '/';
        out += sense.variants[i];
      }
      out += '\t';
      out += paradigm_string(sense);
      out += '\t';
      out += sense.context.empty() ? "-" : sense.context;
      out += '\t';
      out += entry.profile.empty() ? "-" : entry.profile;
      out += "\t-\n";
    }
  }
  return out;
}

std::set<std::string> Lexicon::dotted_surfaces() const {
  std::set<std::string> out;
  for (const auto& [surface, entry] : entries_)
    if (surface.size() > 1 && surface.back() == '.') out.insert(surface);
  return out;
}

std::vector<std::string> Lexicon::glued_symbol_surfaces() const {
  std::vector<std::string> out;
  for (const auto& [surface, entry] : entries_) {
    std::size_t pos = 0;
    const char32_t first = utf8::decode(surface, pos);
    if (pos < surface.size() && utf8::is_punct_or_symbol(first))
      out.push_back(surface);
  }
  return out;
}

bool Lexicon::operator==(const Lexicon& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (const auto& [surface, entry] : entries_) {
    const LexEntry* theirs = other.find(surface);
    if (!theirs) return false;
    if (entry.cls != theirs->cls || entry.profile != theirs->profile ||
        entry.default_sense != theirs->default_sense ||
        entry.senses.size() != theirs->senses.size())
      return false;
    for (std::size_t i = 0; i < entry.senses.size(); ++i) {
      const auto& a = entry.senses[i];
      const auto& b = theirs->senses[i];
      if (a.variants != b.variants || a.paucal != b.paucal ||
          a.counted_gender != b.counted_gender ||
          a.prev_agreement != b.prev_agreement || a.context != b.context)
        return false;
    }
  }
  return true;
}

std::vector<std::string> spell_acronym(std::string_view surface,
                                       const SpellingTables& tables) {
  if (surface.empty()) throw SpellError("empty acronym");
  const std::string folded = utf8::lower_copy(surface);

  std::vector<std::string> names;
  std::size_t pos = 0;
  while (pos < folded.size()) {
    std::string best_name;
    std::size_t best_len = 0;
    for (const auto& [letter, name] : tables.letters) {
      if (letter.size() > best_len &&
          folded.compare(pos, letter.size(), letter) == 0) {
        best_len = letter.size();
        best_name = name;
      }
    }
    if (best_len == 0) {
      std::size_t cp_pos = pos;
      utf8::decode(folded, cp_pos);
      throw SpellError("no spoken name for character '" +
                       std::string(folded.substr(pos, cp_pos - pos)) + "'");
    }
    names.push_back(best_name);
    pos += best_len;
  }
  return names;
}

}  // namespace hrnorm
