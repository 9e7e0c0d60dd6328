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

#include "hrnorm/fixtures.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "hrnorm/tsv.hpp"
#include "test_util.hpp"

using namespace hrnorm;
using hrnorm::testing::data_path;
using hrnorm::testing::test_lexicon;
using hrnorm::testing::test_tables;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/hrnorm_fixture_" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_SUITE_BEGIN("fixtures");

TEST_CASE("the shipped fixture set validates cleanly") {
  const auto manifest = load_manifest(data_path("manifest.tsv"));
  CHECK(manifest.entries.size() >= 5);
  const auto report = validate_all(manifest);
  for (const auto& violation : report.violations) {
    CAPTURE(violation.file);
    CAPTURE(violation.message);
    CHECK(false);
  }
  CHECK(report.ok());
}

TEST_CASE("spelling tables are complete") {
  CHECK(test_tables().completeness_problems().empty());
}

TEST_CASE("letter table covers the thirty-letter alphabet") {
  const std::set<std::string> required = {
      "a", "b", "c",  "č", "ć", "d", "dž", "đ", "e", "f",
      "g", "h", "i",  "j", "k", "l", "lj", "m", "n", "nj",
      "o", "p", "r",  "s", "š", "t", "u",  "v", "z", "ž"};
  std::set<std::string> present;
  for (const auto& [letter, name] : test_tables().letters)
    present.insert(letter);
  for (const auto& letter : required) {
    CAPTURE(letter);
    CHECK(present.count(letter) == 1);
  }
}

TEST_CASE("dictionary size meets the floor") {
  std::set<std::string> abbreviations;
  std::size_t symbolish = 0;
  for (const auto& [surface, entry] : test_lexicon().entries()) {
    if (entry.cls == NswClass::Abbreviation) abbreviations.insert(surface);
    if (entry.cls == NswClass::Symbol ||
        entry.cls == NswClass::MeasurementUnit ||
        entry.cls == NswClass::Currency)
      ++symbolish;
  }
  CHECK(abbreviations.size() >= 150);
  CHECK(symbolish >= 30);
}

TEST_CASE("seeded mutations are flagged with line numbers") {
  SUBCASE("duplicate default sense") {
    const auto path = write_temp(
        "dup.tsv",
        "# schema: lexicon\n"
        "x.\tAbbreviation\tjedan\tfixed\t-\t-\ta\n"
        "x.\tAbbreviation\tdva\tfixed\t-\t-\tb\n");
    const auto report = validate_file(path);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations[0].line == 3);
    std::remove(path.c_str());
  }
  SUBCASE("unknown context rule") {
    const auto path = write_temp(
        "rule.tsv",
        "# schema: lexicon\n"
        "x.\tAbbreviation\tjedan\tfixed\tnear-verb\t-\ta\n");
    const auto report = validate_file(path);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations[0].line == 2);
    std::remove(path.c_str());
  }
  SUBCASE("missing teen row in the spelling tables") {
    std::string content = read_file(data_path("spelling_hr.tsv"));
    const auto pos = content.find("teen\t11\tjedanaest\t-\n");
    REQUIRE(pos != std::string::npos);
    content.erase(pos, std::string("teen\t11\tjedanaest\t-\n").size());
    const auto path = write_temp("teens.tsv", content);
    const auto report = validate_file(path, "spelling");
    REQUIRE_FALSE(report.ok());
    bool mentioned = false;
    for (const auto& violation : report.violations)
      mentioned = mentioned || violation.message.find("teen 11") !=
                                   std::string::npos;
    CHECK(mentioned);
    std::remove(path.c_str());
  }
  SUBCASE("bad genre in the gold corpus") {
    const auto path = write_temp(
        "gold.tsv",
        "# schema: gold\n"
        "t1\tpoetry\t0\t2\tOrdinalNumber\ttreći\n");
    const auto report = validate_file(path);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations[0].line == 2);
    std::remove(path.c_str());
  }
  SUBCASE("carriage returns are rejected") {
    const auto path = write_temp(
        "crlf.tsv",
        "# schema: lexicon\r\n"
        "x.\tAbbreviation\tjedan\tfixed\t-\t-\ta\r\n");
    const auto report = validate_file(path);
    CHECK_FALSE(report.ok());
    std::remove(path.c_str());
  }
  SUBCASE("digest mismatch is reported") {
    const auto data = write_temp("digest_data.tsv",
                                 "# schema: segmentation\na\tb\tc\n");
    const auto manifest_path = write_temp(
        "digest_manifest.tsv",
        "digest_data.tsv\tsegmentation\t1\t0000000000000000\n");
    const auto manifest = load_manifest(manifest_path);
    const auto report = validate_all(manifest);
    REQUIRE_FALSE(report.ok());
    bool mentioned = false;
    for (const auto& violation : report.violations)
      mentioned = mentioned ||
                  violation.message.find("digest mismatch") !=
                      std::string::npos;
    CHECK(mentioned);
    std::remove(data.c_str());
    std::remove(manifest_path.c_str());
  }
}

TEST_CASE("gold corpus covers every class at least three times") {
  const auto report = validate_file(data_path("gold/gold_hr.tsv"), "gold");
  for (const auto& violation : report.violations) {
    CAPTURE(violation.message);
    CHECK(false);
  }
}

TEST_CASE("fnv1a64 is stable") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a64_hex("hrnorm") != fnv1a64_hex("hrnorm "));
}

TEST_SUITE_END();
