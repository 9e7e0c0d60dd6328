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

#ifndef HRNORM_LEXICON_HPP
#define HRNORM_LEXICON_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hrnorm/spelling.hpp"
#include "hrnorm/types.hpp"

namespace hrnorm {

/// What a dictionary sense sees of its surroundings when a context rule is
/// evaluated. Missing neighbors stay unset, so rules never fire across
/// sentence edges.
struct NeighborContext {
  std::optional<NswClass> prev_class;
  std::optional<NswClass> next_class;
  bool prev_proper_name = false;
  bool next_proper_name = false;
};

/// One expansion alternative of a dictionary surface.
struct LexSense {
  std::vector<std::string> variants;  // 1 form, or sg/pauc/pl for paucal
  bool paucal = false;
  Gender counted_gender = Gender::Masculine;  // gender a number agrees with
  std::optional<MorphTag> prev_agreement;     // re-render the number before
  std::string context;                        // rule id, empty for default
  std::string source;                         // file:line of the row
};

struct LexEntry {
  std::string surface;
  NswClass cls = NswClass::Abbreviation;
  std::string profile;  // empty for profile-less rows
  std::vector<LexSense> senses;
  std::optional<std::size_t> default_sense;
};

struct ResolveResult {
  bool hit = false;
  const LexEntry* entry = nullptr;
  const LexSense* sense = nullptr;
};

/// Immutable dictionary of abbreviations, symbols, units and currencies.
/// Rows with the requested profile shadow profile-less entries of the same
/// surface; rows of other profiles are dropped at load time.
class Lexicon {
 public:
  static Lexicon load(const std::vector<std::string>& paths,
                      const std::string& profile = {});

  const LexEntry* find(std::string_view surface) const;

  /// First sense whose context rule matches wins, then the default sense;
  /// a miss is a value, not an error.
  ResolveResult resolve(std::string_view surface,
                        const NeighborContext& context) const;

  /// Canonical TSV of the loaded entries; reloading it yields an equal
  /// lexicon.
  std::string serialize() const;

  /// Dotted surfaces, used by the tokenizer's dot disambiguator.
  std::set<std::string> dotted_surfaces() const;

  /// Multi-character surfaces starting with a symbol ("°C"); the tokenizer
  /// needs them to keep such marks in one piece.
  std::vector<std::string> glued_symbol_surfaces() const;

  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, LexEntry, std::less<>>& entries() const {
    return entries_;
  }

  bool operator==(const Lexicon& other) const;

 private:
  std::map<std::string, LexEntry, std::less<>> entries_;
};

bool context_rule_matches(std::string_view rule, const NeighborContext& ctx);

/// The closed context-rule vocabulary ("follows-ordinal", ...). X stands
/// for a class name in the =X forms.
bool context_rule_valid(std::string_view rule);

/// Letter-by-letter reading of an acronym: one spoken name per letter or
/// digraph. Requires an all-uppercase alphabetic surface of length >= 2;
/// throws SpellError on letters missing from the table.
std::vector<std::string> spell_acronym(std::string_view surface,
                                       const SpellingTables& tables);

}  // namespace hrnorm

#endif  // HRNORM_LEXICON_HPP
