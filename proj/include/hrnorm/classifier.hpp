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

#ifndef HRNORM_CLASSIFIER_HPP
#define HRNORM_CLASSIFIER_HPP

#include <map>
#include <string>

#include "hrnorm/lexicon.hpp"
#include "hrnorm/spelling.hpp"
#include "hrnorm/types.hpp"

namespace hrnorm {

/// Neighboring tokens of a Roman-numeral candidate.
struct NeighborTokens {
  const Token* prev = nullptr;
  bool prev_sentence_initial = false;
  const Token* next = nullptr;
};

/// Covers every token of the sentence with exactly one span. Pattern rules
/// apply in a fixed priority order; see classifier_rule_catalog() for the
/// rule inventory. `text` is the original input the sentence was segmented
/// from (span surfaces are exact input slices).
std::vector<ClassifiedSpan> classify(std::string_view text,
                                     const Sentence& sentence,
                                     const Lexicon& lexicon,
                                     const SpellingTables& tables);

/// True when the surface is a well-formed Roman numeral read as a number:
/// it carries the ordinal dot or a neighboring trigger word licenses it.
/// Bare single letters and initials before capitalized names stay words.
bool is_roman_numeral(const Token& token, const NeighborTokens& neighbors,
                      const SpellingTables& tables, const Lexicon& lexicon);

/// Rule id -> one-line description of every rule classify() can emit.
const std::map<std::string, std::string>& classifier_rule_catalog();

}  // namespace hrnorm

#endif  // HRNORM_CLASSIFIER_HPP
