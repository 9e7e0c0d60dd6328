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

#include "hrnorm/spelling.hpp"

#include <algorithm>
#include <charconv>

#include "hrnorm/errors.hpp"
#include "hrnorm/tsv.hpp"

namespace hrnorm {

namespace {

long long parse_number(const TsvFile& file, const TsvRow& row,
                       const std::string& value) {
  long long out = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw LoadError(file.path, row.line_no, 2, "numeric key expected, got '" +
                                                   value + "'");
  return out;
}

ScaleEntry& scale_slot(std::vector<ScaleEntry>& scales, long long value) {
  for (auto& s : scales)
    if (s.value == value) return s;
  scales.push_back({});
  scales.back().value = value;
  return scales.back();
}

const std::array<long long, 4> kRequiredScales = {
    1'000LL, 1'000'000LL, 1'000'000'000LL, 1'000'000'000'000LL};

const char* kCroatianAlphabet[] = {
    "a", "b", "c",  "č", "ć", "d", "dž", "đ", "e", "f",
    "g", "h", "i",  "j", "k", "l", "lj", "m", "n", "nj",
    "o", "p", "r",  "s", "š", "t", "u",  "v", "z", "ž"};

}  // namespace

PaucalForm paucal_form(long long n) {
  if (n < 0) n = -n;
  const long long r = n % 100;
  if (r >= 11 && r <= 14) return PaucalForm::Plural;
  switch (r % 10) {
    case 1:
      return PaucalForm::Singular;
    case 2:
    case 3:
    case 4:
      return PaucalForm::Paucal;
    default:
      return PaucalForm::Plural;
  }
}

SpellingTables SpellingTables::load(const std::string& path) {
  const TsvFile file = read_tsv(path);
  SpellingTables t;

  for (const auto& row : file.rows) {
    if (row.cols.size() != 4)
      throw LoadError(path, row.line_no, row.cols.size(),
                      "expected 4 columns (category, key, form, tag)");
    const auto& category = row.cols[0];
    const auto& key = row.cols[1];
    const auto& form = row.cols[2];
    const auto& tag = row.cols[3];
    if (form.empty())
      throw LoadError(path, row.line_no, 3, "empty form");

    if (category == "unit") {
      const long long d = parse_number(file, row, key);
      if (d < 0 || d > 9)
        throw LoadError(path, row.line_no, 2, "unit key out of range");
      if (tag == "-") {
        for (auto& g : t.units[d]) g = form;
      } else if (tag == "m") {
        t.units[d][0] = form;
      } else if (tag == "f") {
        t.units[d][1] = form;
      } else if (tag == "n") {
        t.units[d][2] = form;
      } else {
        throw LoadError(path, row.line_no, 4, "unknown unit tag '" + tag + "'");
      }
    } else if (category == "teen") {
      t.teens[static_cast<int>(parse_number(file, row, key))] = form;
    } else if (category == "ten") {
      t.tens[static_cast<int>(parse_number(file, row, key))] = form;
    } else if (category == "hundred") {
      t.hundreds[static_cast<int>(parse_number(file, row, key))] = form;
    } else if (category == "scale") {
      auto& slot = scale_slot(t.scales, parse_number(file, row, key));
      if (tag == "one")
        slot.one = form;
      else if (tag == "sg")
        slot.sg = form;
      else if (tag == "pauc")
        slot.pauc = form;
      else if (tag == "pl")
        slot.pl = form;
      else if (tag == "gender")
        slot.multiplier_gender =
            form == "f" ? Gender::Feminine
                        : form == "n" ? Gender::Neuter : Gender::Masculine;
      else
        throw LoadError(path, row.line_no, 4, "unknown scale tag '" + tag + "'");
    } else if (category == "ordinal") {
      t.ordinal_roots[parse_number(file, row, key)] = {form, tag == "soft"};
    } else if (category == "ordsuf") {
      t.ordinal_suffixes[tag == "soft" ? key + "+soft" : key] = form;
    } else if (category == "month") {
      const long long m = parse_number(file, row, key);
      if (m < 1 || m > 12)
        throw LoadError(path, row.line_no, 2, "month key out of range");
      if (tag == "nom")
        t.months_nom[m] = form;
      else if (tag == "gen")
        t.months_gen[m] = form;
      else
        throw LoadError(path, row.line_no, 4, "unknown month tag '" + tag + "'");
    } else if (category == "letter") {
      t.letters.emplace_back(key, form);
    } else if (category == "timeunit") {
      auto& forms = t.time_units[key];
      if (tag == "sg")
        forms[0] = form;
      else if (tag == "pauc")
        forms[1] = form;
      else if (tag == "pl")
        forms[2] = form;
      else
        throw LoadError(path, row.line_no, 4,
                        "unknown timeunit tag '" + tag + "'");
    } else if (category == "word") {
      t.words[key] = form;
    } else if (category == "roman-trigger") {
      t.roman_triggers.insert(key);
    } else {
      throw LoadError(path, row.line_no, 1,
                      "unknown category '" + category + "'");
    }
  }

  std::sort(t.scales.begin(), t.scales.end(),
            [](const ScaleEntry& a, const ScaleEntry& b) {
              return a.value > b.value;
            });
  return t;
}

std::vector<std::string> SpellingTables::completeness_problems() const {
  std::vector<std::string> problems;
  auto missing = [&](const std::string& what) { problems.push_back(what); };

  for (int d = 0; d <= 9; ++d)
    for (int g = 0; g < 3; ++g)
      if (units[d][g].empty())
        missing("unit " + std::to_string(d) + " (gender " +
                std::string(1, "mfn"[g]) + ")");
  for (int v = 11; v <= 19; ++v)
    if (!teens.count(v)) missing("teen " + std::to_string(v));
  for (int v = 10; v <= 90; v += 10)
    if (!tens.count(v)) missing("ten " + std::to_string(v));
  for (int v = 100; v <= 900; v += 100)
    if (!hundreds.count(v)) missing("hundred " + std::to_string(v));

  for (long long v : kRequiredScales) {
    const auto it = std::find_if(scales.begin(), scales.end(),
                                 [&](const ScaleEntry& s) { return s.value == v; });
    if (it == scales.end() || it->one.empty() || it->sg.empty() ||
        it->pauc.empty() || it->pl.empty())
      missing("scale " + std::to_string(v));
    if (!ordinal_roots.count(v))
      missing("ordinal root for scale " + std::to_string(v));
  }

  for (int v = 1; v <= 19; ++v)
    if (!ordinal_roots.count(v)) missing("ordinal root " + std::to_string(v));
  for (int v = 20; v <= 90; v += 10)
    if (!ordinal_roots.count(v)) missing("ordinal root " + std::to_string(v));
  for (int v = 100; v <= 900; v += 100)
    if (!ordinal_roots.count(v)) missing("ordinal root " + std::to_string(v));

  for (const char* key : {"nom-m-sg", "nom-f-sg", "nom-n-sg"})
    if (!ordinal_suffixes.count(key))
      missing(std::string("ordinal suffix ") + key);

  for (int m = 1; m <= 12; ++m) {
    if (months_nom[m].empty()) missing("month nominative " + std::to_string(m));
    if (months_gen[m].empty()) missing("month genitive " + std::to_string(m));
  }

  for (const char* letter : kCroatianAlphabet) {
    const auto it = std::find_if(
        letters.begin(), letters.end(),
        [&](const auto& entry) { return entry.first == letter; });
    if (it == letters.end() || it->second.empty())
      missing(std::string("letter ") + letter);
  }

  for (const char* key : {"hour", "minute", "second"}) {
    const auto it = time_units.find(key);
    if (it == time_units.end() || it->second[0].empty() ||
        it->second[1].empty() || it->second[2].empty())
      missing(std::string("timeunit ") + key);
  }

  for (const char* key : {"and", "decimal", "minus", "point", "slash", "colon",
                          "hyphen", "underscore", "at"})
    if (!words.count(key)) missing(std::string("word ") + key);

  if (roman_triggers.empty()) missing("roman-trigger list");
  return problems;
}

const std::string& SpellingTables::unit_word(int digit, Gender gender) const {
  return units[digit][static_cast<std::size_t>(gender)];
}

const std::string& SpellingTables::connective(const std::string& key) const {
  const auto it = words.find(key);
  if (it == words.end())
    throw InternalError("connective word '" + key + "' not in spelling tables");
  return it->second;
}

}  // namespace hrnorm
