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

#ifndef HRNORM_TOKENIZER_HPP
#define HRNORM_TOKENIZER_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hrnorm/types.hpp"

namespace hrnorm {

/// Lookup material the dot disambiguator consults. The pipeline fills the
/// sets from the loaded dictionaries; defaults are enough for plain text.
struct TokenizerConfig {
  std::set<std::string> abbreviations;     // dotted surfaces: "npr.", "g."
  std::set<std::string> roman_triggers;    // words licensing a Roman dot
  std::vector<std::string> glued_symbols = {"°C", "°F"};
};

/// Splits UTF-8 text into sentences and tokens. A dot ends a sentence only
/// when the preceding token is not a known abbreviation, is not an ordinal
/// continued in lowercase, and the next material starts uppercase, starts a
/// digit clause or the input ends; otherwise the dot stays attached to its
/// token. Throws EncodingError on invalid UTF-8.
std::vector<Sentence> segment(std::string_view text,
                              const TokenizerConfig& config = {});

/// Splices expansions back into the original text. Unreplaced bytes,
/// including whitespace runs, are copied verbatim. Throws InternalError on
/// positions that do not identify existing tokens or on overlaps.
std::string reattach(std::string_view text,
                     const std::vector<Sentence>& sentences,
                     const std::vector<Replacement>& replacements);

/// Shape helpers shared with the classifier.
bool matches_email(std::string_view s);
bool matches_url(std::string_view s);

}  // namespace hrnorm

#endif  // HRNORM_TOKENIZER_HPP
