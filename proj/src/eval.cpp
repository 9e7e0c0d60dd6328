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

#include "hrnorm/eval.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hrnorm/errors.hpp"
#include "hrnorm/tsv.hpp"
#include "hrnorm/utf8.hpp"

namespace hrnorm {

namespace {

std::size_t parse_offset(const TsvFile& file, const TsvRow& row,
                         std::size_t col) {
  const auto& value = row.cols[col];
  std::size_t out = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw LoadError(file.path, row.line_no, col + 1,
                    "offset expected, got '" + value + "'");
  return out;
}

std::size_t count_words(const std::string& text) {
  std::size_t count = 0;
  bool in_word = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = utf8::decode(text, pos);
    if (utf8::is_space(cp)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++count;
    }
  }
  return count;
}

}  // namespace

std::vector<GoldRecord> load_gold(const std::string& path) {
  const TsvFile file = read_tsv(path);
  std::vector<GoldRecord> records;
  records.reserve(file.rows.size());
  for (const auto& row : file.rows) {
    if (row.cols.size() != 6)
      throw LoadError(path, row.line_no, row.cols.size(),
                      "expected 6 columns (text_id, genre, start, end, "
                      "class, expansions)");
    GoldRecord record;
    record.text_id = row.cols[0];
    record.genre = row.cols[1];
    if (std::find(genre_names().begin(), genre_names().end(), record.genre) ==
        genre_names().end())
      throw LoadError(path, row.line_no, 2,
                      "unknown genre '" + record.genre + "'");
    record.byte_start = parse_offset(file, row, 2);
    record.byte_end = parse_offset(file, row, 3);
    if (record.byte_end <= record.byte_start)
      throw LoadError(path, row.line_no, 4, "empty or inverted span");
    const auto cls = nsw_class_from_string(row.cols[4]);
    if (!cls)
      throw LoadError(path, row.line_no, 5,
                      "unknown class '" + row.cols[4] + "'");
    record.gold_class = *cls;
    std::size_t start = 0;
    const auto& expansions = row.cols[5];
    while (start <= expansions.size()) {
      const auto bar = expansions.find('|', start);
      const auto part = bar == std::string::npos
                            ? expansions.substr(start)
                            : expansions.substr(start, bar - start);
      if (!part.empty()) record.gold_expansions.push_back(part);
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (record.gold_expansions.empty())
      throw LoadError(path, row.line_no, 6, "no gold expansion");
    records.push_back(std::move(record));
  }
  return records;
}

EvalReport evaluate(const std::vector<SystemSpan>& system_spans,
                    const std::vector<GoldRecord>& gold,
                    const std::map<std::string, std::string>& texts_by_id) {
  // Index system spans by (text, start, end) for exact-boundary matching.
  struct Key {
    std::string_view text_id;
    std::size_t start;
    std::size_t end;
    bool operator<(const Key& other) const {
      return std::tie(text_id, start, end) <
             std::tie(other.text_id, other.start, other.end);
    }
  };
  std::map<Key, const SystemSpan*> by_span;
  for (const auto& span : system_spans)
    by_span.emplace(Key{span.text_id, span.byte_start, span.byte_end}, &span);

  EvalReport report;
  std::map<std::string, std::set<std::string>> texts_per_genre;
  std::map<std::string, std::size_t> words_per_text;

  for (const auto& record : gold) {
    const auto text_it = texts_by_id.find(record.text_id);
    if (text_it == texts_by_id.end())
      throw Error("gold record references unknown text '" + record.text_id +
                  "'");
    if (!words_per_text.count(record.text_id))
      words_per_text[record.text_id] = count_words(text_it->second);

    EvalCounters& genre = report.per_genre[record.genre];
    texts_per_genre[record.genre].insert(record.text_id);
    ++genre.total_tokens;

    const auto match = by_span.find(
        Key{record.text_id, record.byte_start, record.byte_end});
    if (match == by_span.end()) {
      ++genre.unrecognized;
      continue;
    }
    ++genre.recognized;
    if (match->second->cls == record.gold_class) ++genre.class_correct;

    const std::string got = utf8::fold_for_match(match->second->expansion);
    bool correct = false;
    for (const auto& accepted : record.gold_expansions) {
      if (got == utf8::fold_for_match(accepted)) {
        correct = true;
        break;
      }
    }
    if (correct)
      ++genre.flective_correct;
    else
      ++genre.flective_incorrect;
  }

  for (auto& [genre, counters] : report.per_genre) {
    counters.texts = texts_per_genre[genre].size();
    for (const auto& text_id : texts_per_genre[genre])
      counters.words += words_per_text[text_id];
    report.overall.texts += counters.texts;
    report.overall.words += counters.words;
    report.overall.total_tokens += counters.total_tokens;
    report.overall.unrecognized += counters.unrecognized;
    report.overall.recognized += counters.recognized;
    report.overall.flective_correct += counters.flective_correct;
    report.overall.flective_incorrect += counters.flective_incorrect;
    report.overall.class_correct += counters.class_correct;
  }
  return report;
}

namespace {

void append_row(std::ostringstream& out, const std::string& label,
                const EvalCounters& c) {
  out << label << '\t' << c.texts << '\t' << c.words << '\t' << c.total_tokens
      << '\t' << c.unrecognized << '\t' << c.recognized << '\t'
      << c.flective_correct << '\t' << c.flective_incorrect << '\n';
}

nlohmann::json counters_json(const EvalCounters& c) {
  return {{"texts", c.texts},
          {"words", c.words},
          {"total_tokens", c.total_tokens},
          {"unrecognized", c.unrecognized},
          {"recognized", c.recognized},
          {"flective_correct", c.flective_correct},
          {"flective_incorrect", c.flective_incorrect},
          {"class_correct", c.class_correct},
          {"token_correctness", c.token_correctness()},
          {"flective_correctness", c.flective_correctness()}};
}

std::string format_pct(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

}  // namespace

std::string render_report(const EvalReport& report, ReportFormat format) {
  if (format == ReportFormat::Structured) {
    nlohmann::json out;
    out["overall"] = counters_json(report.overall);
    for (const auto& [genre, counters] : report.per_genre)
      out["genres"][genre] = counters_json(counters);
    return out.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "genre\ttexts\twords\ttotal tokens\tunrecog. tokens\trecog. tokens"
         "\tcorrect tokens (morpho.)\tincorr. tokens (morpho.)\n";
  for (const auto& genre : genre_names()) {
    const auto it = report.per_genre.find(genre);
    if (it != report.per_genre.end()) append_row(out, genre, it->second);
  }
  append_row(out, "OVERALL", report.overall);
  out << "token correctness: " << format_pct(report.overall.token_correctness())
      << "%\n";
  out << "flective correctness: "
      << format_pct(report.overall.flective_correctness()) << "%\n";
  return out.str();
}

}  // namespace hrnorm
