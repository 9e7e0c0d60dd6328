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
//
// Release gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>

#include "hrnorm/classifier.hpp"
#include "hrnorm/eval.hpp"
#include "hrnorm/fixtures.hpp"
#include "hrnorm/lexicon.hpp"
#include "hrnorm/numexpand.hpp"
#include "hrnorm/pipeline.hpp"
#include "hrnorm/roman.hpp"
#include "hrnorm/tokenizer.hpp"
#include "hrnorm/tsv.hpp"
#include "oracles/number_oracle.hpp"
#include "oracles/roman_oracle.hpp"
#include "test_util.hpp"

using namespace hrnorm;
using hrnorm::testing::data_path;
using hrnorm::testing::join;
using hrnorm::testing::random_croatian_text;
using hrnorm::testing::test_lexicon;
using hrnorm::testing::test_normalizer;
using hrnorm::testing::test_tables;
using hrnorm::testing::test_tokenizer_config;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok,
            const std::string& detail = {}) {
  std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

// 1. Metric reproduction from the published overall counters.
void criterion_metrics() {
  EvalCounters counters;
  counters.total_tokens = 1728;
  counters.unrecognized = 80;
  counters.recognized = 1648;
  counters.flective_correct = 1316;
  counters.flective_incorrect = 378;
  const double token = counters.token_correctness();
  const double flective = counters.flective_correctness();
  char detail[128];
  std::snprintf(detail, sizeof detail, "token %.4f%%, flective %.4f%%", token,
                flective);
  report(1, "metric reproduction",
         std::fabs(token - 95.37) <= 0.01 && std::fabs(flective - 79.85) <=
                                                  0.01,
         detail);
}

// 2. Frozen forms straight from the reference description.
void criterion_reference_examples() {
  const NumberSpeller speller{test_tables()};
  bool ok = join(speller.expand_ordinal(21)) == "dvadeset i prvi";

  std::string joined;
  for (const auto& name : spell_acronym("MMF", test_tables())) joined += name;
  ok = ok && joined == "ememef";
  joined.clear();
  for (const auto& name : spell_acronym("DVD", test_tables())) joined += name;
  ok = ok && joined == "devede";

  const auto sentences =
      segment("Ivo je na natjecanju bio 3. i odlikovan je broncom.",
              test_tokenizer_config());
  ok = ok && sentences.size() == 1;

  NeighborContext after_ordinal;
  after_ordinal.prev_class = NswClass::OrdinalNumber;
  NeighborContext after_cardinal;
  after_cardinal.prev_class = NswClass::CardinalNumber;
  NeighborContext near_name;
  near_name.next_proper_name = true;
  const auto& lex = test_lexicon();
  const auto year = lex.resolve("g.", after_ordinal);
  const auto gram = lex.resolve("g.", after_cardinal);
  const auto mister = lex.resolve("g.", near_name);
  ok = ok && year.hit && year.sense->variants[0] == "godine";
  ok = ok && gram.hit && gram.sense->variants.back() == "grama";
  ok = ok && mister.hit && mister.sense->variants[0] == "gospodin";

  report(2, "reference example fidelity", ok);
}

// 3. parse_spelled_number inverts expand_cardinal across the full range.
void criterion_round_trip() {
  const NumberSpeller speller{test_tables()};
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (long long n = 0; n <= 1'000'000 && ok; ++n)
    ok = speller.parse_spelled_number(speller.expand_cardinal(n)) == n;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long long> dist(
      1'000'000, NumberSpeller::kUpperBound - 1);
  for (int i = 0; i < 1'000'000 && ok; ++i) {
    const long long n = dist(rng);
    ok = speller.parse_spelled_number(speller.expand_cardinal(n)) == n;
  }
  const auto seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(
          std::chrono::steady_clock::now() - start)
          .count();
  char detail[96];
  std::snprintf(detail, sizeof detail, "%.1f s for 2M round trips", seconds);
  report(3, "number round-trip identity", ok && seconds < 60.0, detail);
}

// 4. Independent oracle equivalence for cardinals and Roman numerals.
void criterion_oracles() {
  const NumberSpeller speller{test_tables()};
  bool ok = true;
  long long first_bad = -1;
  for (long long n = 0; n <= 1'000'000; ++n) {
    if (join(speller.expand_cardinal(n)) !=
        hrnorm::testing::oracle_cardinal(n)) {
      ok = false;
      first_bad = n;
      break;
    }
  }
  bool roman_ok = true;
  for (int n = 1; n <= 3999 && roman_ok; ++n) {
    const std::string numeral = hrnorm::testing::oracle_to_roman(n);
    roman_ok = roman_wellformed(numeral) && roman_value(numeral) == n &&
               join(speller.expand_roman(numeral)) ==
                   join(speller.expand_ordinal(n));
  }
  char detail[96];
  if (!ok)
    std::snprintf(detail, sizeof detail, "first cardinal mismatch at %lld",
                  first_bad);
  else
    std::snprintf(detail, sizeof detail, "cardinals 0..10^6, romans 1..3999");
  report(4, "oracle equivalence", ok && roman_ok, detail);
}

// 5. End-to-end run over the shipped gold corpus.
void criterion_gold_corpus() {
  try {
    const auto gold = load_gold(data_path("gold/gold_hr.tsv"));

    std::map<std::string, std::string> genre_of_text;
    for (const auto& record : gold)
      genre_of_text[record.text_id] = record.genre;

    std::map<std::string, std::unique_ptr<Normalizer>> normalizers;
    std::map<std::string, std::string> texts;
    std::vector<SystemSpan> spans;
    for (const auto& [text_id, genre] : genre_of_text) {
      texts[text_id] =
          read_file(data_path("gold/texts/" + text_id + ".txt"));
      auto& normalizer = normalizers[genre];
      if (!normalizer)
        normalizer = std::make_unique<Normalizer>(
            hrnorm::testing::test_run_config(genre));
      const auto [output, run_report] = normalizer->normalize(texts[text_id]);
      for (const auto& record : run_report.records)
        spans.push_back({text_id, record.byte_start, record.byte_end,
                         record.cls, record.expansion});
    }

    const auto eval_report = evaluate(spans, gold, texts);
    const double token = eval_report.overall.token_correctness();
    const double flective = eval_report.overall.flective_correctness();
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "%zu gold NSWs, token %.2f%%, flective %.2f%%",
                  eval_report.overall.total_tokens, token, flective);
    report(5, "gold fixture corpus", eval_report.overall.total_tokens >= 200 &&
                                         token == 100.0 && flective >= 95.0,
           detail);
  } catch (const Error& e) {
    report(5, "gold fixture corpus", false, e.what());
  }
}

// 6. Invariant suites on randomized input.
void criterion_invariants() {
  const auto config = test_tokenizer_config();
  std::mt19937 rng(4242);
  bool round_trip = true;
  for (int i = 0; i < 1000 && round_trip; ++i) {
    const std::string text = random_croatian_text(rng);
    round_trip = reattach(text, segment(text, config), {}) == text;
  }

  bool coverage = true;
  bool deterministic = true;
  for (int i = 0; i < 1000 && coverage && deterministic; ++i) {
    const std::string text = random_croatian_text(rng);
    const auto sentences = segment(text, config);
    for (const auto& sentence : sentences) {
      const auto spans =
          classify(text, sentence, test_lexicon(), test_tables());
      std::size_t next = 0;
      for (const auto& span : spans) {
        if (span.first_token != next) coverage = false;
        next = span.first_token + span.token_count;
      }
      if (next != sentence.tokens.size()) coverage = false;
      const auto again =
          classify(text, sentence, test_lexicon(), test_tables());
      if (again.size() != spans.size()) deterministic = false;
      for (std::size_t k = 0; deterministic && k < spans.size(); ++k)
        deterministic = spans[k].cls == again[k].cls &&
                        spans[k].rule == again[k].rule;
    }
  }

  bool conservation = true;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int round = 0; round < 200 && conservation; ++round) {
    std::vector<GoldRecord> gold;
    std::vector<SystemSpan> spans;
    std::map<std::string, std::string> texts = {{"t", "neki tekst"}};
    const int n = 1 + round % 9;
    for (int r = 0; r < n; ++r) {
      GoldRecord record;
      record.text_id = "t";
      record.genre = genre_names()[r % genre_names().size()];
      record.byte_start = r * 5;
      record.byte_end = r * 5 + 2;
      record.gold_class = NswClass::CardinalNumber;
      record.gold_expansions = {"dva"};
      gold.push_back(record);
      if (coin(rng))
        spans.push_back({"t", record.byte_start, record.byte_end,
                         NswClass::CardinalNumber,
                         coin(rng) ? "dva" : "tri"});
    }
    const auto eval_report = evaluate(spans, gold, texts);
    EvalCounters sum;
    for (const auto& [genre, c] : eval_report.per_genre) {
      if (c.unrecognized + c.recognized != c.total_tokens) conservation = false;
      if (c.flective_correct + c.flective_incorrect != c.recognized)
        conservation = false;
      sum.total_tokens += c.total_tokens;
      sum.recognized += c.recognized;
    }
    if (sum.total_tokens != eval_report.overall.total_tokens ||
        sum.recognized != eval_report.overall.recognized)
      conservation = false;
  }

  report(6, "invariant suites",
         round_trip && coverage && deterministic && conservation);
}

// 7. Fixture validation plus seeded schema mutations.
void criterion_fixture_validation() {
  bool ok = true;
  std::string detail;
  try {
    const auto manifest = load_manifest(data_path("manifest.tsv"));
    const auto clean = validate_all(manifest);
    if (!clean.ok()) {
      ok = false;
      detail = clean.violations.front().file + ": " +
               clean.violations.front().message;
    }
  } catch (const Error& e) {
    ok = false;
    detail = e.what();
  }

  // Each seeded mutation must be flagged with a line number.
  struct Mutation {
    const char* name;
    const char* content;
  };
  const Mutation mutations[] = {
      {"duplicate-default",
       "# schema: lexicon\nx.\tAbbreviation\ta\tfixed\t-\t-\tc\n"
       "x.\tAbbreviation\tb\tfixed\t-\t-\tc\n"},
      {"unknown-context",
       "# schema: lexicon\nx.\tAbbreviation\ta\tfixed\tnear-verb\t-\tc\n"},
      {"bad-class", "# schema: lexicon\nx.\tFrog\ta\tfixed\t-\t-\tc\n"},
      {"bad-genre", "# schema: gold\nt\tpoetry\t0\t2\tYear\tdvije\n"},
      {"bad-offset", "# schema: gold\nt\tnews\tzero\t2\tYear\tdvije\n"},
  };
  for (const auto& mutation : mutations) {
    const std::string path =
        std::string("/tmp/hrnorm_acceptance_") + mutation.name + ".tsv";
    {
      std::FILE* f = std::fopen(path.c_str(), "wb");
      std::fputs(mutation.content, f);
      std::fclose(f);
    }
    const auto mutated = validate_file(path);
    bool flagged = !mutated.ok();
    bool has_line = false;
    for (const auto& violation : mutated.violations)
      has_line = has_line || violation.line > 0;
    if (!flagged || !has_line) {
      ok = false;
      detail = std::string("mutation not flagged: ") + mutation.name;
    }
    std::remove(path.c_str());
  }

  report(7, "fixture validation", ok, detail);
}

}  // namespace

int main() {
  criterion_metrics();
  criterion_reference_examples();
  criterion_round_trip();
  criterion_oracles();
  criterion_gold_corpus();
  criterion_invariants();
  criterion_fixture_validation();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
