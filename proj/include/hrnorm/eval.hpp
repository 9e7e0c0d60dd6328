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

#ifndef HRNORM_EVAL_HPP
#define HRNORM_EVAL_HPP

#include <map>
#include <string>
#include <vector>

#include "hrnorm/types.hpp"

namespace hrnorm {

inline const std::vector<std::string>& genre_names() {
  static const std::vector<std::string> names = {
      "educational", "scientific", "popular", "news", "formal"};
  return names;
}

/// One annotated non-standard word of the gold corpus.
struct GoldRecord {
  std::string text_id;
  std::string genre;
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;
  NswClass gold_class = NswClass::StandardWord;
  std::vector<std::string> gold_expansions;  // accepted surface strings
};

/// One span the system produced on a gold text.
struct SystemSpan {
  std::string text_id;
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;
  NswClass cls = NswClass::StandardWord;
  std::string expansion;
};

struct EvalCounters {
  std::size_t texts = 0;
  std::size_t words = 0;
  std::size_t total_tokens = 0;
  std::size_t unrecognized = 0;
  std::size_t recognized = 0;
  std::size_t flective_correct = 0;
  std::size_t flective_incorrect = 0;
  std::size_t class_correct = 0;  // supplementary: span and class both match

  double token_correctness() const {
    return total_tokens == 0
               ? 0.0
               : 100.0 * static_cast<double>(recognized) /
                     static_cast<double>(total_tokens);
  }
  double flective_correctness() const {
    return recognized == 0 ? 0.0
                           : 100.0 * static_cast<double>(flective_correct) /
                                 static_cast<double>(recognized);
  }
};

struct EvalReport {
  std::map<std::string, EvalCounters> per_genre;
  EvalCounters overall;
};

/// Parses the gold TSV (text_id, genre, start, end, class, expansions
/// separated by "|"). Throws LoadError on schema violations.
std::vector<GoldRecord> load_gold(const std::string& path);

/// A gold NSW counts as recognized when a system span matches its byte
/// range exactly; a recognized NSW is flectively correct when its expansion
/// equals any gold alternative after whitespace collapsing and case
/// folding. Word counts per text feed the report's words column.
EvalReport evaluate(const std::vector<SystemSpan>& system_spans,
                    const std::vector<GoldRecord>& gold,
                    const std::map<std::string, std::string>& texts_by_id);

enum class ReportFormat { Text, Structured };

/// Text format prints the counters table (texts, words, total tokens,
/// unrecognized, recognized, correct, incorrect) per genre plus OVERALL;
/// structured format carries the same fields as JSON.
std::string render_report(const EvalReport& report, ReportFormat format);

}  // namespace hrnorm

#endif  // HRNORM_EVAL_HPP
