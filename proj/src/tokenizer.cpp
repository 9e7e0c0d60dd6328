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

#include <algorithm>
#include <map>
#include <regex>

#include "hrnorm/errors.hpp"
#include "hrnorm/roman.hpp"
#include "hrnorm/utf8.hpp"

namespace hrnorm {

namespace {

enum class RawKind {
  Word,      // alphanumeric material, possibly a whole e-mail/URL
  DotRun,    // one or more '.'
  Bang,      // '!', '?' or U+2026 ellipsis: unconditional clause end
  Closer,    // closing quote/bracket, transparent for the case check
  Opener,    // opening quote/bracket, transparent for the case check
  Mark,      // any other punctuation or symbol token
};

struct RawTok {
  std::size_t start = 0;
  std::size_t end = 0;
  RawKind kind = RawKind::Mark;
};

const std::regex& email_regex() {
  static const std::regex re(
      R"([A-Za-z0-9][A-Za-z0-9._%+-]*@[A-Za-z0-9-]+(\.[A-Za-z0-9-]+)+)",
      std::regex::optimize);
  return re;
}

const std::regex& url_regex() {
  static const std::regex re(
      R"((https?|ftp)://[^[:space:]]+|www\.[A-Za-z0-9-]+(\.[A-Za-z0-9-]+)+(/[^[:space:]]*)?|[a-z0-9-]+(\.[a-z0-9-]+)*\.(hr|com|org|net|edu|gov|eu|io|info|de|it|si|at|uk)(/[^[:space:]]*)?)",
      std::regex::optimize);
  return re;
}

bool is_closer_cp(char32_t cp) {
  switch (cp) {
    case U')':
    case U']':
    case U'}':
    case U'"':
    case U'\'':
    case 0x00BB:  // »
    case 0x201D:  // ”
    case 0x2019:  // ’
    case 0x201C:  // “ (Croatian „...“ closes with this)
      return true;
    default:
      return false;
  }
}

bool is_opener_cp(char32_t cp) {
  switch (cp) {
    case U'(':
    case U'[':
    case U'{':
    case 0x00AB:  // «
    case 0x201E:  // „
    case 0x2018:  // ‘
      return true;
    default:
      return false;
  }
}

bool is_joinable(char32_t joiner, char32_t prev, char32_t next) {
  switch (joiner) {
    case U'.':
    case U',':
    case U':':
      return utf8::is_digit(prev) && utf8::is_digit(next);
    case U'/':
    case U'-':
    case U'@':
      return (utf8::is_digit(prev) || utf8::is_letter(prev)) &&
             (utf8::is_digit(next) || utf8::is_letter(next));
    default:
      return false;
  }
}

std::size_t trim_url_tail(std::string_view text, std::size_t start,
                          std::size_t end) {
  static const std::string_view tail_junk = ".,;:!?)»\"'";
  while (end > start && tail_junk.find(text[end - 1]) != std::string_view::npos)
    --end;
  return end;
}

class RawScanner {
 public:
  RawScanner(std::string_view text, const TokenizerConfig& config)
      : text_(text), config_(config) {}

  std::vector<RawTok> scan() {
    std::vector<RawTok> raws;
    std::size_t pos = 0;
    while (pos < text_.size()) {
      std::size_t cp_pos = pos;
      const char32_t cp = utf8::decode(text_, cp_pos);
      if (utf8::is_space(cp)) {
        pos = cp_pos;
        continue;
      }
      if (cp == U'.') {
        std::size_t end = cp_pos;
        while (end < text_.size() && text_[end] == '.') ++end;
        raws.push_back({pos, end, RawKind::DotRun});
        pos = end;
        continue;
      }
      if (cp == U'!' || cp == U'?' || cp == 0x2026) {
        raws.push_back({pos, cp_pos, RawKind::Bang});
        pos = cp_pos;
        continue;
      }
      if (utf8::is_digit(cp) || utf8::is_letter(cp) ||
          (cp == U'-' && starts_number(cp_pos))) {
        if (std::size_t len = match_address(pos); len > 0) {
          raws.push_back({pos, pos + len, RawKind::Word});
          pos += len;
          continue;
        }
        raws.push_back({pos, scan_word(pos), RawKind::Word});
        pos = raws.back().end;
        continue;
      }
      if (std::size_t len = match_glued_symbol(pos); len > 0) {
        raws.push_back({pos, pos + len, RawKind::Mark});
        pos += len;
        continue;
      }
      RawKind kind = RawKind::Mark;
      if (is_closer_cp(cp)) kind = RawKind::Closer;
      if (is_opener_cp(cp)) kind = RawKind::Opener;
      raws.push_back({pos, cp_pos, kind});
      pos = cp_pos;
    }
    return raws;
  }

 private:
  bool starts_number(std::size_t after_minus) {
    if (after_minus >= text_.size()) return false;
    std::size_t p = after_minus;
    return utf8::is_digit(utf8::decode(text_, p));
  }

  // Longest e-mail or URL match anchored at `pos`, 0 if none.
  std::size_t match_address(std::size_t pos) {
    const char* begin = text_.data() + pos;
    const char* end = text_.data() + text_.size();
    std::cmatch m;
    std::size_t best = 0;
    if (std::regex_search(begin, end, m, email_regex(),
                          std::regex_constants::match_continuous))
      best = static_cast<std::size_t>(m.length(0));
    if (std::regex_search(begin, end, m, url_regex(),
                          std::regex_constants::match_continuous)) {
      const auto len =
          trim_url_tail(text_, pos, pos + m.length(0)) - pos;
      best = std::max(best, len);
    }
    return best;
  }

  std::size_t match_glued_symbol(std::size_t pos) {
    std::size_t best = 0;
    for (const auto& sym : config_.glued_symbols)
      if (sym.size() > best && text_.substr(pos, sym.size()) == sym)
        best = sym.size();
    return best;
  }

  // Maximal run of letters/digits with digit-internal . , : and
  // alnum-internal / - @; a leading minus glues to a digit.
  std::size_t scan_word(std::size_t pos) {
    std::size_t cur = pos;
    char32_t prev = 0;
    if (text_[cur] == '-') {
      prev = U'-';
      ++cur;
    }
    while (cur < text_.size()) {
      std::size_t next_pos = cur;
      const char32_t cp = utf8::decode(text_, next_pos);
      if (utf8::is_digit(cp) || utf8::is_letter(cp)) {
        prev = cp;
        cur = next_pos;
        continue;
      }
      if (cp == U'.' || cp == U',' || cp == U':' || cp == U'/' ||
          cp == U'-' || cp == U'@') {
        if (next_pos < text_.size()) {
          std::size_t peek_pos = next_pos;
          const char32_t next_cp = utf8::decode(text_, peek_pos);
          if (is_joinable(cp, prev, next_cp)) {
            prev = cp;
            cur = next_pos;
            continue;
          }
        }
      }
      break;
    }
    return cur;
  }

  std::string_view text_;
  const TokenizerConfig& config_;
};

bool core_is_digit_shaped(std::string_view core) {
  if (core.empty()) return false;
  std::size_t i = core[0] == '-' ? 1 : 0;
  if (i >= core.size() || !utf8::is_digit(static_cast<unsigned char>(core[i])))
    return false;
  for (; i < core.size(); ++i) {
    const char c = core[i];
    if (!utf8::is_digit(static_cast<unsigned char>(c)) && c != '.' &&
        c != ',' && c != ':' && c != '/' && c != '-')
      return false;
  }
  return true;
}

bool is_single_upper_letter(std::string_view core) {
  std::size_t pos = 0;
  if (core.empty()) return false;
  const char32_t cp = utf8::decode(core, pos);
  return pos == core.size() && utf8::is_upper(cp);
}

bool starts_upper(std::string_view s) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  return utf8::is_upper(utf8::decode(s, pos));
}

class SentenceBuilder {
 public:
  SentenceBuilder(std::string_view text, const TokenizerConfig& config)
      : text_(text), config_(config) {}

  std::vector<Sentence> build(const std::vector<RawTok>& raws) {
    for (std::size_t i = 0; i < raws.size(); ++i) {
      const RawTok& raw = raws[i];
      switch (raw.kind) {
        case RawKind::Word:
          push_token(raw);
          break;
        case RawKind::Bang:
          push_token(raw);
          absorb_trailers(raws, i);
          close_sentence();
          break;
        case RawKind::DotRun:
          if (raw.end - raw.start >= 2) {
            push_token(raw);  // ellipsis: always end of clause
            absorb_trailers(raws, i);
            close_sentence();
          } else {
            handle_dot(raws, i);
          }
          break;
        default:
          push_token(raw);
          break;
      }
    }
    close_sentence();
    return std::move(sentences_);
  }

 private:
  std::string_view slice(const RawTok& raw) const {
    return text_.substr(raw.start, raw.end - raw.start);
  }

  void push_token(const RawTok& raw) {
    Token tok;
    tok.surface = std::string(slice(raw));
    tok.byte_start = raw.start;
    tok.byte_end = raw.end;
    current_.push_back(std::move(tok));
    if (raw.kind == RawKind::Word) {
      prev_word_ = word_index_;
      word_index_ = static_cast<long>(current_.size()) - 1;
    }
  }

  void close_sentence() {
    if (current_.empty()) return;
    Sentence sentence;
    sentence.index = sentences_.size();
    for (auto& tok : current_) tok.sentence_index = sentence.index;
    sentence.tokens = std::move(current_);
    current_.clear();
    sentences_.push_back(std::move(sentence));
    word_index_ = prev_word_ = -1;
  }

  // Pulls closing quotes and further clause-final marks into the sentence
  // that just ended.
  void absorb_trailers(const std::vector<RawTok>& raws, std::size_t& i) {
    while (i + 1 < raws.size() && (raws[i + 1].kind == RawKind::Closer ||
                                   raws[i + 1].kind == RawKind::Bang)) {
      ++i;
      push_token(raws[i]);
    }
  }

  // First Word raw after index i, looking through quotes and brackets.
  const RawTok* next_word(const std::vector<RawTok>& raws,
                          std::size_t i) const {
    for (std::size_t j = i + 1; j < raws.size(); ++j) {
      if (raws[j].kind == RawKind::Word) return &raws[j];
      if (raws[j].kind == RawKind::Closer || raws[j].kind == RawKind::Opener)
        continue;
      return nullptr;  // other punctuation: treat like a lowercase clause
    }
    return nullptr;  // end of input
  }

  bool is_known_abbreviation(std::string_view core) const {
    std::string dotted = std::string(core) + ".";
    if (config_.abbreviations.count(dotted)) return true;
    // Sentence-initial capitalization of a listed abbreviation still counts.
    std::string lowered = utf8::lower_copy(dotted);
    return lowered != dotted && config_.abbreviations.count(lowered) > 0;
  }

  bool roman_licensed(std::string_view core) const {
    if (!roman_wellformed(core)) return false;
    if (prev_word_ < 0) return false;
    const Token& trigger = current_[static_cast<std::size_t>(prev_word_)];
    if (config_.roman_triggers.count(trigger.surface)) return true;
    if (config_.roman_triggers.count(utf8::lower_copy(trigger.surface)))
      return true;
    // Proper-name proxy: capitalized word that does not open the sentence.
    return prev_word_ > 0 && starts_upper(trigger.surface);
  }

  void attach_dot(const RawTok& dot) {
    Token& tok = current_.back();
    tok.surface.push_back('.');
    tok.byte_end = dot.end;
    tok.trailing_dot = true;
  }

  void handle_dot(const std::vector<RawTok>& raws, std::size_t& i) {
    const RawTok& dot = raws[i];
    const bool adjacent = word_index_ >= 0 &&
                          static_cast<std::size_t>(word_index_) ==
                              current_.size() - 1 &&
                          current_.back().byte_end == dot.start;
    const RawTok* next = next_word(raws, i);
    const bool next_upper = next && starts_upper(slice(*next));
    const bool next_digit =
        next && utf8::is_digit(static_cast<unsigned char>(slice(*next)[0]));
    const bool at_end = next == nullptr;

    if (adjacent) {
      const Token& word = current_.back();
      const std::string_view core{word.surface};
      if (is_known_abbreviation(core) || is_single_upper_letter(core) ||
          roman_licensed(core)) {
        attach_dot(dot);
        return;  // listed material never terminates mid-text
      }
      if (core_is_digit_shaped(core)) {
        attach_dot(dot);
        // An ordinal continued in lowercase (or chained into a date by the
        // next number) keeps the sentence open.
        if (next_upper || at_end) {
          absorb_trailers(raws, i);
          close_sentence();
        }
        return;
      }
      if (next_upper || next_digit || at_end) {
        push_token(dot);
        absorb_trailers(raws, i);
        close_sentence();
        return;
      }
      attach_dot(dot);
      return;
    }

    // Stray dot with no word to attach to.
    push_token(dot);
    if (next_upper || next_digit || at_end) {
      absorb_trailers(raws, i);
      close_sentence();
    }
  }

  std::string_view text_;
  const TokenizerConfig& config_;
  std::vector<Sentence> sentences_;
  std::vector<Token> current_;
  long word_index_ = -1;  // index of last Word token in current_
  long prev_word_ = -1;   // index of the Word token before it
};

}  // namespace

std::vector<Sentence> segment(std::string_view text,
                              const TokenizerConfig& config) {
  utf8::validate(text);
  RawScanner scanner(text, config);
  SentenceBuilder builder(text, config);
  return builder.build(scanner.scan());
}

std::string reattach(std::string_view text,
                     const std::vector<Sentence>& sentences,
                     const std::vector<Replacement>& replacements) {
  struct Splice {
    std::size_t byte_start;
    std::size_t byte_end;
    std::string words;
  };
  std::vector<Splice> splices;
  splices.reserve(replacements.size());

  for (const auto& rep : replacements) {
    if (rep.pos.sentence >= sentences.size())
      throw InternalError("replacement sentence index out of range");
    const auto& tokens = sentences[rep.pos.sentence].tokens;
    if (rep.token_count == 0 || rep.pos.token >= tokens.size() ||
        rep.pos.token + rep.token_count > tokens.size())
      throw InternalError("replacement token range out of range");
    std::string joined;
    for (const auto& w : rep.words) {
      if (!joined.empty()) joined.push_back(' ');
      joined += w;
    }
    splices.push_back({tokens[rep.pos.token].byte_start,
                       tokens[rep.pos.token + rep.token_count - 1].byte_end,
                       std::move(joined)});
  }

  std::sort(splices.begin(), splices.end(),
            [](const Splice& a, const Splice& b) {
              return a.byte_start < b.byte_start;
            });
  for (std::size_t i = 1; i < splices.size(); ++i)
    if (splices[i].byte_start < splices[i - 1].byte_end)
      throw InternalError("overlapping replacements");

  std::string out;
  out.reserve(text.size());
  std::size_t cursor = 0;
  for (const auto& splice : splices) {
    out += text.substr(cursor, splice.byte_start - cursor);
    out += splice.words;
    cursor = splice.byte_end;
  }
  out += text.substr(cursor);
  return out;
}

bool matches_email(std::string_view s) {
  return std::regex_match(s.begin(), s.end(), email_regex());
}

bool matches_url(std::string_view s) {
  return std::regex_match(s.begin(), s.end(), url_regex());
}

}  // namespace hrnorm
