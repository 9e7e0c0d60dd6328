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

#include "hrnorm/tokenizer.hpp"

#include <doctest.h>

#include <random>

#include "hrnorm/errors.hpp"
#include "hrnorm/tsv.hpp"
#include "test_util.hpp"

using namespace hrnorm;
using hrnorm::testing::random_croatian_text;
using hrnorm::testing::test_tokenizer_config;

namespace {

std::string render(const std::vector<Sentence>& sentences) {
  std::string out;
  for (const auto& sentence : sentences) {
    if (!out.empty()) out += "||";
    bool first = true;
    for (const auto& token : sentence.tokens) {
      if (!first) out += "|";
      out += token.surface;
      first = false;
    }
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("tokenizer");

TEST_CASE("segmentation fixture table") {
  const auto fixture =
      read_tsv(hrnorm::testing::data_path("segmentation_hr.tsv"));
  const TokenizerConfig config = test_tokenizer_config();
  REQUIRE(fixture.rows.size() > 30);
  for (const auto& row : fixture.rows) {
    REQUIRE(row.cols.size() == 3);
    const auto sentences = segment(row.cols[1], config);
    const std::string expected = row.cols[2] == "-" ? "" : row.cols[2];
    CAPTURE(row.cols[0]);
    CAPTURE(row.cols[1]);
    CHECK(render(sentences) == expected);
  }
}

TEST_CASE("competition sentence stays one sentence") {
  const auto sentences = segment(
      "Ivo je na natjecanju bio 3. i odlikovan je broncom.",
      test_tokenizer_config());
  REQUIRE(sentences.size() == 1);
  bool found = false;
  for (const auto& token : sentences[0].tokens) {
    if (token.core() == "3") {
      CHECK(token.trailing_dot);
      CHECK(token.surface == "3.");
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("empty input yields no sentences") {
  CHECK(segment("").empty());
  CHECK(segment("   \n\t ").empty());
}

TEST_CASE("dotted years keep the dot across a sentence break") {
  const auto sentences =
      segment("Došao je 1999. Otišao je 2001.", test_tokenizer_config());
  REQUIRE(sentences.size() == 2);
  const Token& year = sentences[0].tokens.back();
  CHECK(year.surface == "1999.");
  CHECK(year.trailing_dot);
  CHECK(year.sentence_index == 0);
}

TEST_CASE("abbreviation dots never split before lowercase") {
  const TokenizerConfig config = test_tokenizer_config();
  for (const auto& surface : config.abbreviations) {
    const std::string text = "Vidi " + surface + " dalje u tekstu.";
    const auto sentences = segment(text, config);
    CAPTURE(surface);
    CHECK(sentences.size() == 1);
  }
}

TEST_CASE("token byte ranges are strictly increasing and consistent") {
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    const std::string text = random_croatian_text(rng);
    std::size_t last_end = 0;
    for (const auto& sentence : segment(text, test_tokenizer_config())) {
      for (const auto& token : sentence.tokens) {
        CHECK(token.byte_start < token.byte_end);
        CHECK(token.byte_start >= last_end);
        CHECK(text.substr(token.byte_start,
                          token.byte_end - token.byte_start) ==
              token.surface);
        last_end = token.byte_end;
      }
    }
  }
}

TEST_CASE("round-trip through reattach is the identity") {
  std::mt19937 rng(7);
  const TokenizerConfig config = test_tokenizer_config();
  for (int i = 0; i < 1000; ++i) {
    const std::string text = random_croatian_text(rng);
    const auto sentences = segment(text, config);
    CAPTURE(text);
    REQUIRE(reattach(text, sentences, {}) == text);
  }
}

TEST_CASE("invalid UTF-8 reports the byte offset") {
  const std::string bad = std::string("abc ") + "\xC0\x80" + " def";
  CHECK_THROWS_AS((void)segment(bad), EncodingError);
  try {
    (void)segment(bad);
  } catch (const EncodingError& e) {
    CHECK(e.byte_offset() == 4);
  }
}

TEST_CASE("reattach splices replacements") {
  const std::string text = "Ivo je na natjecanju bio 3. i odlikovan je broncom.";
  const auto sentences = segment(text, test_tokenizer_config());
  REQUIRE(sentences.size() == 1);

  std::size_t ordinal_index = sentences[0].tokens.size();
  for (std::size_t i = 0; i < sentences[0].tokens.size(); ++i)
    if (sentences[0].tokens[i].surface == "3.") ordinal_index = i;
  REQUIRE(ordinal_index < sentences[0].tokens.size());

  SUBCASE("single splice matches the string-splice oracle") {
    const auto out =
        reattach(text, sentences, {{{0, ordinal_index}, 1, {"treći"}}});
    // Independent splice: plain string surgery on the known offsets.
    const Token& tok = sentences[0].tokens[ordinal_index];
    std::string expected = text;
    expected.replace(tok.byte_start, tok.byte_end - tok.byte_start, "treći");
    CHECK(out == expected);
    CHECK(out == "Ivo je na natjecanju bio treći i odlikovan je broncom.");
  }

  SUBCASE("two non-adjacent splices preserve separators") {
    const auto out = reattach(
        text, sentences,
        {{{0, 0}, 1, {"Ivan"}}, {{0, ordinal_index}, 1, {"treći"}}});
    CHECK(out == "Ivan je na natjecanju bio treći i odlikovan je broncom.");
  }

  SUBCASE("bad positions raise internal errors") {
    CHECK_THROWS_AS(
        (void)reattach(text, sentences, {{{5, 0}, 1, {"x"}}}), InternalError);
    CHECK_THROWS_AS(
        (void)reattach(text, sentences, {{{0, 999}, 1, {"x"}}}),
        InternalError);
    CHECK_THROWS_AS((void)reattach(text, sentences,
                                   {{{0, ordinal_index}, 1, {"a"}},
                                    {{0, ordinal_index}, 1, {"b"}}}),
                    InternalError);
  }
}

TEST_CASE("multi-token replacement covers the whole slice") {
  const std::string text = "Rođen je 3. 5. 2012. u Rijeci.";
  const auto sentences = segment(text, test_tokenizer_config());
  REQUIRE(sentences.size() == 1);
  const auto out = reattach(
      text, sentences,
      {{{0, 2}, 3, {"trećeg", "svibnja", "dvije", "tisuće", "dvanaeste"}}});
  CHECK(out == "Rođen je trećeg svibnja dvije tisuće dvanaeste u Rijeci.");
}

TEST_CASE("address shapes are recognized") {
  CHECK(matches_email("ana.anic5@uniri.hr"));
  CHECK_FALSE(matches_email("ana.anic5uniri.hr"));
  CHECK(matches_url("http://perldoc.perl.org/faq5.htm"));
  CHECK(matches_url("www.uniri.hr"));
  CHECK(matches_url("uniri.hr"));
  CHECK_FALSE(matches_url("3.5.2012"));
  CHECK_FALSE(matches_url("riječ"));
}

TEST_SUITE_END();
