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

#ifndef HRNORM_PIPELINE_HPP
#define HRNORM_PIPELINE_HPP

#include <string>
#include <utility>
#include <vector>

#include "hrnorm/classifier.hpp"
#include "hrnorm/datetime.hpp"
#include "hrnorm/errors.hpp"
#include "hrnorm/lexicon.hpp"
#include "hrnorm/numexpand.hpp"
#include "hrnorm/spelling.hpp"
#include "hrnorm/tokenizer.hpp"
#include "hrnorm/types.hpp"

namespace hrnorm {

struct RunConfig {
  std::string profile;                     // genre overlay, empty for none
  std::vector<std::string> lexicon_paths;
  std::string spelling_path;
  bool capitalize_sentence_start = true;
  bool strict = false;
};

/// One line of the machine-readable run report.
struct SpanRecord {
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;
  std::string surface;
  NswClass cls = NswClass::StandardWord;
  std::string rule;
  std::string expansion;  // joined words, empty on a miss
  std::string source;     // dictionary row or rule id
  std::string status;     // "hit" | "miss" | "fallback"
};

struct RunReport {
  std::vector<SpanRecord> records;  // one per non-standard span
  std::size_t sentence_count = 0;
  std::size_t token_count = 0;
  std::size_t miss_count = 0;
};

/// Raised in strict mode when any span stays unresolved.
class StrictMissError : public Error {
 public:
  explicit StrictMissError(RunReport report)
      : Error("strict mode: " + std::to_string(report.miss_count) +
              " token(s) left unresolved"),
        report_(std::move(report)) {}

  const RunReport& report() const { return report_; }

 private:
  RunReport report_;
};

/// Loads the dictionaries once and then rewrites texts: every detected
/// non-standard span is replaced by its expansion, everything else is
/// byte-identical. Immutable after construction, safe to share.
class Normalizer {
 public:
  explicit Normalizer(RunConfig config);

  std::pair<std::string, RunReport> normalize(const std::string& text) const;

  const SpellingTables& tables() const { return tables_; }
  const Lexicon& lexicon() const { return lexicon_; }
  const NumberSpeller& speller() const { return speller_; }
  const TokenizerConfig& tokenizer_config() const { return tok_config_; }

 private:
  struct SpanOutcome {
    std::vector<std::string> words;
    std::string source;
    std::string status = "hit";
  };

  SpanOutcome expand_span(const ClassifiedSpan& span, const Sentence& sentence,
                          const MorphTag& tag, bool has_override,
                          std::optional<long long> prev_value,
                          const ResolveResult& resolution) const;
  std::vector<std::string> verbalize_chars(std::string_view core) const;
  std::vector<std::string> fallback_digits(const ClassifiedSpan& span,
                                           const Sentence& sentence) const;

  RunConfig config_;
  SpellingTables tables_;
  Lexicon lexicon_;
  NumberSpeller speller_;
  DateTimeExpander datetime_;
  TokenizerConfig tok_config_;
};

}  // namespace hrnorm

#endif  // HRNORM_PIPELINE_HPP
