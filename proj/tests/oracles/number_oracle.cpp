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

#include "number_oracle.hpp"

#include <array>
#include <stdexcept>

namespace hrnorm::testing {

namespace {

const std::array<const char*, 10> kOnesM = {
    "nula", "jedan", "dva", "tri", "četiri",
    "pet",  "šest",  "sedam", "osam", "devet"};
const std::array<const char*, 10> kOnesF = {
    "nula", "jedna", "dvije", "tri", "četiri",
    "pet",  "šest",  "sedam", "osam", "devet"};
const std::array<const char*, 10> kOnesN = {
    "nula", "jedno", "dva", "tri", "četiri",
    "pet",  "šest",  "sedam", "osam", "devet"};
const std::array<const char*, 10> kTeens = {
    "deset",      "jedanaest", "dvanaest",  "trinaest",  "četrnaest",
    "petnaest",   "šesnaest",  "sedamnaest", "osamnaest", "devetnaest"};
const std::array<const char*, 10> kTens = {
    "",       "deset",    "dvadeset",  "trideset",    "četrdeset",
    "pedeset", "šezdeset", "sedamdeset", "osamdeset",  "devedeset"};
const std::array<const char*, 10> kHundreds = {
    "",       "sto",     "dvjesto",  "tristo",   "četiristo",
    "petsto", "šeststo", "sedamsto", "osamsto",  "devetsto"};

// Masculine nominative ordinals; feminine and neuter derive by swapping the
// final -i (treći -> treća / treće).
const std::array<const char*, 20> kOrdinalsM = {
    "",          "prvi",       "drugi",      "treći",       "četvrti",
    "peti",      "šesti",      "sedmi",      "osmi",        "deveti",
    "deseti",    "jedanaesti", "dvanaesti",  "trinaesti",   "četrnaesti",
    "petnaesti", "šesnaesti",  "sedamnaesti", "osamnaesti", "devetnaesti"};
const std::array<const char*, 10> kOrdinalTensM = {
    "",         "deseti",    "dvadeseti",  "trideseti",    "četrdeseti",
    "pedeseti", "šezdeseti", "sedamdeseti", "osamdeseti",  "devedeseti"};
const std::array<const char*, 10> kOrdinalHundredsM = {
    "",        "stoti",     "dvjestoti",  "tristoti",  "četiristoti",
    "petstoti", "šeststoti", "sedamstoti", "osamstoti", "devetstoti"};

struct Scale {
  long long value;
  const char* one;   // bare form for a group of exactly 1
  const char* sg;    // group ends in 1 (not 11)
  const char* pauc;  // group ends in 2..4 (not 12..14)
  const char* pl;
  char gender;
  const char* ordinal_m;
};

const std::array<Scale, 4> kScales = {{
    {1'000'000'000'000LL, "bilijun", "bilijun", "bilijuna", "bilijuna", 'm',
     "bilijunti"},
    {1'000'000'000LL, "milijarda", "milijarda", "milijarde", "milijardi", 'f',
     "milijarditi"},
    {1'000'000LL, "milijun", "milijun", "milijuna", "milijuna", 'm',
     "milijunti"},
    {1'000LL, "tisuću", "tisuća", "tisuće", "tisuća", 'f', "tisućiti"},
}};

const char* one_word(int digit, char gender) {
  switch (gender) {
    case 'f':
      return kOnesF[digit];
    case 'n':
      return kOnesN[digit];
    default:
      return kOnesM[digit];
  }
}

void append(std::string& out, const std::string& word) {
  if (!out.empty()) out += ' ';
  out += word;
}

void spell_group(std::string& out, int g, char gender, bool with_conj) {
  if (g >= 100) {
    append(out, kHundreds[g / 100]);
    g %= 100;
  }
  if (g >= 10 && g <= 19) {
    append(out, kTeens[g - 10]);
    return;
  }
  if (g >= 20) {
    append(out, kTens[g / 10]);
    if (g % 10 != 0) {
      if (with_conj) append(out, "i");
      append(out, one_word(g % 10, gender));
    }
    return;
  }
  if (g > 0) append(out, one_word(g, gender));
}

const char* scale_form(const Scale& scale, long long group) {
  const long long r = group % 100;
  if (r >= 11 && r <= 14) return scale.pl;
  switch (r % 10) {
    case 1:
      return scale.sg;
    case 2:
    case 3:
    case 4:
      return scale.pauc;
    default:
      return scale.pl;
  }
}

std::string feminize(std::string word) {
  word.pop_back();  // all masculine ordinals here end in "i"
  word += 'a';
  return word;
}

std::string neuterize(std::string word) {
  const bool soft = word.size() >= 6 && word.compare(word.size() - 6, 6,
                                                     "tre\xc4\x87i") == 0;
  word.pop_back();
  word += soft ? 'e' : 'o';
  return word;
}

std::string ordinal_component_word(long long component, char gender) {
  std::string m;
  if (component < 20)
    m = kOrdinalsM[component];
  else if (component < 100 && component % 10 == 0)
    m = kOrdinalTensM[component / 10];
  else if (component < 1000 && component % 100 == 0)
    m = kOrdinalHundredsM[component / 100];
  else {
    for (const auto& scale : kScales)
      if (scale.value == component) m = scale.ordinal_m;
  }
  if (m.empty()) throw std::logic_error("oracle: bad ordinal component");
  if (gender == 'f') return feminize(m);
  if (gender == 'n') return neuterize(m);
  return m;
}

}  // namespace

std::string oracle_cardinal(long long n, char gender) {
  if (n < 0) throw std::logic_error("oracle: negative input");
  if (n == 0) return one_word(0, gender);

  std::string out;
  long long rest = n;
  for (const auto& scale : kScales) {
    const long long group = rest / scale.value;
    rest %= scale.value;
    if (group == 0) continue;
    if (group == 1) {
      append(out, scale.one);
      continue;
    }
    spell_group(out, static_cast<int>(group), scale.gender, rest == 0);
    append(out, scale_form(scale, group));
  }
  if (rest > 0) spell_group(out, static_cast<int>(rest), gender, true);
  return out;
}

std::string oracle_ordinal(long long n, char gender) {
  if (n < 1) throw std::logic_error("oracle: ordinal needs n >= 1");

  // The lowest nonzero component decides the ordinal word.
  long long component;
  if (n % 100 >= 11 && n % 100 <= 19)
    component = n % 100;
  else if (n % 10 != 0)
    component = n % 10;
  else if (n % 100 != 0)
    component = n % 100;
  else if (n % 1000 != 0)
    component = (n % 1000) / 100 * 100;
  else {
    component = 1000;
    long long m = n;
    while (m % (component * 1000) == 0 && component < 1'000'000'000'000LL)
      component *= 1000;
  }

  std::string prefix = oracle_cardinal(n, gender);
  const auto last_space = prefix.find_last_of(' ');
  if (last_space == std::string::npos)
    prefix.clear();
  else
    prefix.resize(last_space);

  const std::string word = ordinal_component_word(component, gender);
  return prefix.empty() ? word : prefix + " " + word;
}

}  // namespace hrnorm::testing
