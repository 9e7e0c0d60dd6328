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

#include "hrnorm/datetime.hpp"

#include <doctest.h>

#include "hrnorm/errors.hpp"
#include "test_util.hpp"

using namespace hrnorm;
using hrnorm::testing::join;
using hrnorm::testing::test_tables;

namespace {

const NumberSpeller& speller() {
  static const NumberSpeller instance{test_tables()};
  return instance;
}

const DateTimeExpander& expander() {
  static const DateTimeExpander instance{test_tables(), speller()};
  return instance;
}

}  // namespace

TEST_SUITE_BEGIN("datetime");

TEST_CASE("date expansion frozen forms") {
  CHECK(join(expander().expand_date({3, 5, "", 2012, true})) ==
        "treći svibnja dvije tisuće dvanaesta");
  CHECK(join(expander().expand_date({1, 1, "", std::nullopt, false})) ==
        "prvi siječnja");
  CHECK(join(expander().expand_date({31, 12, "", 1999, false})) ==
        "trideset i prvi prosinca tisuću devetsto devedeset i deveta");
}

TEST_CASE("combined dates keep the genitive month") {
  DateParts date;
  date.day = 3;
  date.month_surface = "svibnja";
  CHECK(join(expander().expand_date(date)) == "treći svibnja");
  date.month_surface = "svibanj";
  CHECK(join(expander().expand_date(date)) == "treći svibnja");
  date.month_surface = "Svibnja";
  CHECK(join(expander().expand_date(date)) == "treći svibnja");
  date.month_surface = "stolnjak";
  CHECK_THROWS_AS((void)expander().expand_date(date), MalformedDateError);
}

TEST_CASE("date range violations") {
  CHECK_THROWS_AS((void)expander().expand_date({1, 13, "", std::nullopt, false}),
                  MalformedDateError);
  CHECK_THROWS_AS((void)expander().expand_date({0, 5, "", std::nullopt, false}),
                  MalformedDateError);
  CHECK_THROWS_AS((void)expander().expand_date({32, 5, "", std::nullopt, false}),
                  MalformedDateError);
}

TEST_CASE("month word never varies with day or year") {
  for (int month = 1; month <= 12; ++month) {
    const std::string genitive = test_tables().months_gen[month];
    for (int day : {1, 15, 31}) {
      for (std::optional<int> year :
           {std::optional<int>{}, std::optional<int>{2000}}) {
        const auto words =
            expander().expand_date({day, month, "", year, false});
        bool found = false;
        for (const auto& word : words) found = found || word == genitive;
        CAPTURE(month);
        CAPTURE(day);
        CHECK(found);
      }
    }
  }
}

TEST_CASE("the day word is exactly the nominative masculine ordinal") {
  for (int day = 1; day <= 31; ++day) {
    const auto date_words = expander().expand_date({day, 6, "", std::nullopt,
                                                    false});
    const auto ordinal_words = speller().expand_ordinal(day);
    REQUIRE(date_words.size() >= ordinal_words.size());
    for (std::size_t i = 0; i < ordinal_words.size(); ++i)
      CHECK(date_words[i] == ordinal_words[i]);
  }
}

TEST_CASE("time expansion frozen forms") {
  CHECK(join(expander().expand_time({14, 5, std::nullopt})) ==
        "četrnaest sati i pet minuta");
  CHECK(join(expander().expand_time({1, 0, std::nullopt})) == "jedan sat");
  CHECK(join(expander().expand_time({2, 0, std::nullopt})) == "dva sata");
  CHECK(join(expander().expand_time({21, 1, std::nullopt})) ==
        "dvadeset i jedan sat i jedna minuta");
  CHECK(join(expander().expand_time({14, 5, 30})) ==
        "četrnaest sati i pet minuta i trideset sekundi");
  CHECK(join(expander().expand_time({0, 0, std::nullopt})) == "nula sati");
}

TEST_CASE("time totality over the full grid") {
  for (int h = 0; h < 24; ++h)
    for (int m = 0; m < 60; ++m)
      CHECK_NOTHROW((void)expander().expand_time({h, m, std::nullopt}));
  for (int h : {24, 25, 99})
    CHECK_THROWS_AS((void)expander().expand_time({h, 0, std::nullopt}),
                    MalformedTimeError);
  for (int m : {60, 61, 99})
    CHECK_THROWS_AS((void)expander().expand_time({12, m, std::nullopt}),
                    MalformedTimeError);
  CHECK_THROWS_AS((void)expander().expand_time({12, 0, 60}),
                  MalformedTimeError);
}

TEST_CASE("phone groups") {
  CHECK(join(expander().expand_phone({"051", "123"})) ==
        "nula pet jedan sto dvadeset i tri");
  CHECK(join(expander().expand_phone({"7"})) == "sedam");
  CHECK(join(expander().expand_phone({"00"})) == "nula nula");
  CHECK_THROWS_AS((void)expander().expand_phone({"12a"}), InternalError);
}

TEST_CASE("numeric date parsing") {
  auto date = DateTimeExpander::parse_numeric_date("15.11.2024", true);
  REQUIRE(date);
  CHECK(date->day == 15);
  CHECK(date->month == 11);
  CHECK(date->year == 2024);
  CHECK(date->dot_after_year);

  date = DateTimeExpander::parse_numeric_date("3.5", true);
  REQUIRE(date);
  CHECK(date->day == 3);
  CHECK(date->month == 5);
  CHECK_FALSE(date->year.has_value());

  CHECK_FALSE(DateTimeExpander::parse_numeric_date("3.5", false));
  CHECK_FALSE(DateTimeExpander::parse_numeric_date("10.000", false));

  date = DateTimeExpander::parse_numeric_date("3/5/2012", false);
  REQUIRE(date);
  CHECK(date->day == 3);
  CHECK(date->month == 5);
  CHECK(date->year == 2012);
}

TEST_CASE("time parsing") {
  auto time = DateTimeExpander::parse_time("14:05");
  REQUIRE(time);
  CHECK(time->hours == 14);
  CHECK(time->minutes == 5);
  CHECK_FALSE(time->seconds.has_value());

  time = DateTimeExpander::parse_time("9:05:30");
  REQUIRE(time);
  CHECK(time->seconds == 30);

  CHECK_FALSE(DateTimeExpander::parse_time("14:5"));
  CHECK_FALSE(DateTimeExpander::parse_time("14"));
  CHECK_FALSE(DateTimeExpander::parse_time("a:05"));
}

TEST_SUITE_END();
