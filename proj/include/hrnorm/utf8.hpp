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

#ifndef HRNORM_UTF8_HPP
#define HRNORM_UTF8_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace hrnorm::utf8 {

/// Decodes the code point starting at `pos` and advances `pos` past it.
/// Throws EncodingError on malformed sequences.
char32_t decode(std::string_view text, std::size_t& pos);

/// Validates the whole string; throws EncodingError at the first bad byte.
void validate(std::string_view text);

std::string encode(char32_t cp);

bool is_space(char32_t cp);
bool is_digit(char32_t cp);
bool is_letter(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);

/// ASCII punctuation plus the usual typographic marks; currency and other
/// symbol code points are included (a "symbol" here is anything the
/// tokenizer splits into a standalone token).
bool is_punct_or_symbol(char32_t cp);

char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);

/// Upper-cases only the first code point ("dvadeset" -> "Dvadeset").
std::string capitalize_first(std::string_view word);

/// Lower-cases the whole string (ASCII, Latin-1 and Latin Extended-A).
std::string lower_copy(std::string_view text);

/// Lower-cases and collapses every whitespace run to a single space;
/// leading and trailing whitespace is dropped. Used for expansion matching.
std::string fold_for_match(std::string_view text);

}  // namespace hrnorm::utf8

#endif  // HRNORM_UTF8_HPP
