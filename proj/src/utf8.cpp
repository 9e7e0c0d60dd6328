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

#include "hrnorm/utf8.hpp"

#include "hrnorm/errors.hpp"

namespace hrnorm::utf8 {

namespace {

bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

char32_t decode(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw EncodingError(pos, "decode past end of input");
  const auto b0 = static_cast<unsigned char>(text[pos]);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  auto need = [&](std::size_t n) {
    if (pos + n > text.size())
      throw EncodingError(pos, "truncated UTF-8 sequence");
    for (std::size_t i = 1; i < n; ++i)
      if (!is_continuation(static_cast<unsigned char>(text[pos + i])))
        throw EncodingError(pos + i, "missing UTF-8 continuation byte");
  };
  if (b0 >= 0xC2 && b0 <= 0xDF) {
    need(2);
    char32_t cp = (static_cast<char32_t>(b0 & 0x1F) << 6) |
                  (static_cast<unsigned char>(text[pos + 1]) & 0x3F);
    pos += 2;
    return cp;
  }
  if (b0 >= 0xE0 && b0 <= 0xEF) {
    need(3);
    const auto b1 = static_cast<unsigned char>(text[pos + 1]);
    if (b0 == 0xE0 && b1 < 0xA0)
      throw EncodingError(pos, "overlong UTF-8 sequence");
    if (b0 == 0xED && b1 >= 0xA0)
      throw EncodingError(pos, "UTF-16 surrogate in UTF-8 input");
    char32_t cp = (static_cast<char32_t>(b0 & 0x0F) << 12) |
                  (static_cast<char32_t>(b1 & 0x3F) << 6) |
                  (static_cast<unsigned char>(text[pos + 2]) & 0x3F);
    pos += 3;
    return cp;
  }
  if (b0 >= 0xF0 && b0 <= 0xF4) {
    need(4);
    const auto b1 = static_cast<unsigned char>(text[pos + 1]);
    if (b0 == 0xF0 && b1 < 0x90)
      throw EncodingError(pos, "overlong UTF-8 sequence");
    if (b0 == 0xF4 && b1 >= 0x90)
      throw EncodingError(pos, "code point above U+10FFFF");
    char32_t cp = (static_cast<char32_t>(b0 & 0x07) << 18) |
                  (static_cast<char32_t>(b1 & 0x3F) << 12) |
                  (static_cast<char32_t>(
                       static_cast<unsigned char>(text[pos + 2]) & 0x3F)
                   << 6) |
                  (static_cast<unsigned char>(text[pos + 3]) & 0x3F);
    pos += 4;
    return cp;
  }
  throw EncodingError(pos, "invalid UTF-8 lead byte");
}

void validate(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) decode(text, pos);
}

std::string encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x00A0:  // no-break space
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
    case 0xFEFF:  // stray BOM / zero width no-break
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200B;
  }
}

bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool is_punct_or_symbol(char32_t cp) {
  if (cp < 0x80) {
    return !is_digit(cp) && !(cp >= U'A' && cp <= U'Z') &&
           !(cp >= U'a' && cp <= U'z') && cp > U' ';
  }
  // Latin-1 punctuation/symbol block (¡ ... ¿ plus × ÷).
  if (cp >= 0xA1 && cp <= 0xBF) return true;
  if (cp == 0xD7 || cp == 0xF7) return true;
  // General punctuation, currency symbols, letterlike symbols we treat as
  // standalone marks (dashes, quotes, ellipsis, €, ‰, №, ™).
  if (cp >= 0x2010 && cp <= 0x205E) return true;
  if (cp >= 0x20A0 && cp <= 0x20CF) return true;
  if (cp == 0x2122 || cp == 0x2116) return true;
  return false;
}

bool is_letter(char32_t cp) {
  if (cp < 0x80)
    return (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z');
  // Everything non-ASCII that is neither whitespace nor a known mark passes
  // through as letter material so foreign scripts survive untouched.
  return !is_space(cp) && !is_punct_or_symbol(cp);
}

bool is_upper(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return true;
  if ((cp >= 0xC0 && cp <= 0xD6) || (cp >= 0xD8 && cp <= 0xDE)) return true;
  // Latin Extended-A alternates upper/lower; three sub-ranges differ in
  // parity. Covers Č, Ć, Đ, Š, Ž and the rest of the block.
  if (cp >= 0x100 && cp <= 0x137) return cp % 2 == 0;
  if (cp >= 0x139 && cp <= 0x148) return cp % 2 == 1;
  if (cp >= 0x14A && cp <= 0x177) return cp % 2 == 0;
  if (cp == 0x179 || cp == 0x17B || cp == 0x17D) return true;
  return false;
}

bool is_lower(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return true;
  if ((cp >= 0xDF && cp <= 0xF6) || (cp >= 0xF8 && cp <= 0xFF)) return true;
  if (cp >= 0x100 && cp <= 0x137) return cp % 2 == 1;
  if (cp >= 0x139 && cp <= 0x148) return cp % 2 == 0;
  if (cp >= 0x14A && cp <= 0x177) return cp % 2 == 1;
  if (cp == 0x17A || cp == 0x17C || cp == 0x17E) return true;
  return false;
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if ((cp >= 0xC0 && cp <= 0xD6) || (cp >= 0xD8 && cp <= 0xDE))
    return cp + 0x20;
  if (is_upper(cp) && cp >= 0x100 && cp <= 0x17D) return cp + 1;
  return cp;
}

char32_t to_upper(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return cp - 0x20;
  if ((cp >= 0xE0 && cp <= 0xF6) || (cp >= 0xF8 && cp <= 0xFE))
    return cp - 0x20;
  if (is_lower(cp) && cp >= 0x101 && cp <= 0x17E) return cp - 1;
  return cp;
}

std::string capitalize_first(std::string_view word) {
  if (word.empty()) return {};
  std::size_t pos = 0;
  const char32_t first = decode(word, pos);
  return encode(to_upper(first)) + std::string(word.substr(pos));
}

std::string lower_copy(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) out += encode(to_lower(decode(text, pos)));
  return out;
}

std::string fold_for_match(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  bool pending_space = false;
  while (pos < text.size()) {
    const char32_t cp = decode(text, pos);
    if (is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out += encode(to_lower(cp));
  }
  return out;
}

}  // namespace hrnorm::utf8
