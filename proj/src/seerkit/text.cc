// Copyright 2026 The seerkit Authors
//
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

#include "seerkit/text.h"

#include <array>
#include <cstdint>

namespace seerkit::text {
namespace {

// ASCII folding for U+00C0..U+017F (Latin-1 Supplement letters and Latin
// Extended-A). Empty entries are the two arithmetic signs, treated as spaces.
constexpr std::array<const char*, 0xC0> kLatinFold = {
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e",
    "i", "i", "i", "i", "d", "n", "o", "o", "o", "o", "o", "",
    "o", "u", "u", "u", "u", "y", "th", "ss", "a", "a", "a", "a",
    "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i", "i",
    "d", "n", "o", "o", "o", "o", "o", "", "o", "u", "u", "u",
    "u", "y", "th", "y", "a", "a", "a", "a", "a", "a", "c", "c",
    "c", "c", "c", "c", "c", "c", "d", "d", "d", "d", "e", "e",
    "e", "e", "e", "e", "e", "e", "e", "e", "g", "g", "g", "g",
    "g", "g", "g", "g", "h", "h", "h", "h", "i", "i", "i", "i",
    "i", "i", "i", "i", "i", "i", "ij", "ij", "j", "j", "k", "k",
    "k", "l", "l", "l", "l", "l", "l", "l", "l", "l", "l", "n",
    "n", "n", "n", "n", "n", "n", "n", "n", "o", "o", "o", "o",
    "o", "o", "oe", "oe", "r", "r", "r", "r", "r", "r", "s", "s",
    "s", "s", "s", "s", "s", "s", "t", "t", "t", "t", "t", "t",
    "u", "u", "u", "u", "u", "u", "u", "u", "u", "u", "u", "u",
    "w", "w", "y", "y", "y", "z", "z", "z", "z", "z", "z", "s",
};

enum class CharClass { kWord, kSpace, kBoundary, kDrop };

struct Decoded {
  char32_t cp;
  size_t length;  // bytes consumed; cp is U+FFFD for invalid sequences
};

Decoded decode(std::string_view s, size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  size_t n = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    n = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    n = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    n = 4;
    cp = b0 & 0x07;
  } else {
    return {0xFFFD, 1};
  }
  if (i + n > s.size()) return {0xFFFD, 1};
  for (size_t k = 1; k < n; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return {0xFFFD, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, n};
}

CharClass classify_ascii(char c) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
      (c >= '0' && c <= '9')) {
    return CharClass::kWord;
  }
  switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?':
    case '(': case ')': case '[': case ']': case '{': case '}':
    case '"': case '|':
      return CharClass::kBoundary;
    default:
      return CharClass::kSpace;
  }
}

CharClass classify(char32_t cp) {
  if (cp < 0x80) return classify_ascii(static_cast<char>(cp));
  if (cp >= 0x0300 && cp <= 0x036F) return CharClass::kDrop;  // combining marks
  switch (cp) {
    case 0x00A1: case 0x00AB: case 0x00BB: case 0x00BF:  // ¡ « » ¿
    case 0x201C: case 0x201D: case 0x201E:               // “ ” „
    case 0x2014: case 0x2026:                            // em dash, ellipsis
    case 0x3001: case 0x3002:                            // 、 。
      return CharClass::kBoundary;
    case 0xFFFD:
      return CharClass::kSpace;
    default:
      break;
  }
  if (cp < 0xC0) return CharClass::kSpace;  // Latin-1 symbols and NBSP
  if (cp == 0xD7 || cp == 0xF7) return CharClass::kSpace;
  if (cp >= 0x2000 && cp <= 0x206F) return CharClass::kSpace;  // general punct
  return CharClass::kWord;
}

void append_utf8(std::string& out, std::string_view s, size_t i, size_t n) {
  out.append(s.substr(i, n));
}

bool is_ascii_lower_word(std::string_view w) {
  if (w.empty()) return false;
  for (char c : w) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

// Porter stemmer following the original algorithm's buffer discipline:
// b[0..k] is the current word and j marks the end of the stem under test.
// Characters past k stay in the buffer until the end, as some conditions in
// step 5 read them.
class PorterStemmer {
 public:
  explicit PorterStemmer(std::string_view word)
      : b_(std::string(word) + std::string(4, '\0')),
        k_(static_cast<int>(word.size()) - 1) {}

  std::string run() {
    step1ab();
    if (k_ >= 0) {
      step1c();
      step2();
      step3();
      step4();
      step5();
    }
    return b_.substr(0, static_cast<size_t>(k_ + 1));
  }

 private:
  bool cons(int i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b[0..j].
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool doublec(int j) const {
    if (j < 1) return false;
    if (b_[j] != b_[j - 1]) return false;
    return cons(j);
  }

  // b[i-2], b[i-1], b[i] is consonant-vowel-consonant and the final
  // consonant is not w, x or y.
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char ch = b_[i];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(std::string_view s) {
    const int len = static_cast<int>(s.size());
    if (len > k_ + 1) return false;
    if (std::string_view(b_).substr(k_ - len + 1, len) != s) return false;
    j_ = k_ - len;
    return true;
  }

  void setto(std::string_view s) {
    b_.replace(j_ + 1, s.size(), s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void r(std::string_view s) {
    if (m() > 0) setto(s);
  }

  void step1ab() {
    if (k_ >= 0 && b_[k_] == 's') {
      if (ends("sses")) {
        k_ -= 2;
      } else if (ends("ies")) {
        setto("i");
      } else if (k_ == 0 || b_[k_ - 1] != 's') {
        --k_;
      }
    }
    if (k_ < 0) return;
    if (ends("eed")) {
      if (m() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at")) {
        setto("ate");
      } else if (ends("bl")) {
        setto("ble");
      } else if (ends("iz")) {
        setto("ize");
      } else if (doublec(k_)) {
        --k_;
        const char ch = b_[k_];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else {
        j_ = k_;
        if (m() == 1 && cvc(k_)) setto("e");
      }
    }
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) b_[k_] = 'i';
  }

  void step2() {
    if (k_ < 1) return;
    switch (b_[k_ - 1]) {
      case 'a':
        if (ends("ational")) { r("ate"); break; }
        if (ends("tional")) { r("tion"); break; }
        break;
      case 'c':
        if (ends("enci")) { r("ence"); break; }
        if (ends("anci")) { r("ance"); break; }
        break;
      case 'e':
        if (ends("izer")) { r("ize"); break; }
        break;
      case 'l':
        if (ends("abli")) { r("able"); break; }
        if (ends("alli")) { r("al"); break; }
        if (ends("entli")) { r("ent"); break; }
        if (ends("eli")) { r("e"); break; }
        if (ends("ousli")) { r("ous"); break; }
        break;
      case 'o':
        if (ends("ization")) { r("ize"); break; }
        if (ends("ation")) { r("ate"); break; }
        if (ends("ator")) { r("ate"); break; }
        break;
      case 's':
        if (ends("alism")) { r("al"); break; }
        if (ends("iveness")) { r("ive"); break; }
        if (ends("fulness")) { r("ful"); break; }
        if (ends("ousness")) { r("ous"); break; }
        break;
      case 't':
        if (ends("aliti")) { r("al"); break; }
        if (ends("iviti")) { r("ive"); break; }
        if (ends("biliti")) { r("ble"); break; }
        break;
      default:
        break;
    }
  }

  void step3() {
    switch (b_[k_]) {
      case 'e':
        if (ends("icate")) { r("ic"); break; }
        if (ends("ative")) { r(""); break; }
        if (ends("alize")) { r("al"); break; }
        break;
      case 'i':
        if (ends("iciti")) { r("ic"); break; }
        break;
      case 'l':
        if (ends("ical")) { r("ic"); break; }
        if (ends("ful")) { r(""); break; }
        break;
      case 's':
        if (ends("ness")) { r(""); break; }
        break;
      default:
        break;
    }
  }

  void step4() {
    if (k_ < 1) return;
    switch (b_[k_ - 1]) {
      case 'a':
        if (ends("al")) break;
        return;
      case 'c':
        if (ends("ance")) break;
        if (ends("ence")) break;
        return;
      case 'e':
        if (ends("er")) break;
        return;
      case 'i':
        if (ends("ic")) break;
        return;
      case 'l':
        if (ends("able")) break;
        if (ends("ible")) break;
        return;
      case 'n':
        if (ends("ant")) break;
        if (ends("ement")) break;
        if (ends("ment")) break;
        if (ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j_ >= 0 && (b_[j_] == 's' || b_[j_] == 't')) break;
        if (ends("ou")) break;
        return;
      case 's':
        if (ends("ism")) break;
        return;
      case 't':
        if (ends("ate")) break;
        if (ends("iti")) break;
        return;
      case 'u':
        if (ends("ous")) break;
        return;
      case 'v':
        if (ends("ive")) break;
        return;
      case 'z':
        if (ends("ize")) break;
        return;
      default:
        return;
    }
    if (m() > 1) k_ = j_;
  }

  void step5() {
    j_ = k_;
    if (b_[k_] == 'e') {
      const int a = m();
      if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
    }
    if (k_ >= 0 && b_[k_] == 'l' && doublec(k_) && m() > 1) --k_;
  }

  std::string b_;
  int k_;
  int j_ = 0;
};

}  // namespace

std::vector<Segment> segment_words(std::string_view utf8) {
  std::vector<Segment> segments(1);
  std::string token;
  auto flush_token = [&] {
    if (!token.empty()) {
      segments.back().push_back(std::move(token));
      token.clear();
    }
  };
  auto flush_segment = [&] {
    flush_token();
    if (!segments.back().empty()) segments.emplace_back();
  };

  size_t i = 0;
  while (i < utf8.size()) {
    const Decoded d = decode(utf8, i);
    const CharClass cls = classify(d.cp);
    switch (cls) {
      case CharClass::kWord:
        if (d.cp < 0x80) {
          char c = static_cast<char>(d.cp);
          if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
          token.push_back(c);
        } else if (d.cp >= 0xC0 && d.cp < 0x180) {
          token.append(kLatinFold[d.cp - 0xC0]);
        } else {
          append_utf8(token, utf8, i, d.length);
        }
        break;
      case CharClass::kSpace:
        flush_token();
        break;
      case CharClass::kBoundary:
        flush_segment();
        break;
      case CharClass::kDrop:
        break;
    }
    i += d.length;
  }
  flush_token();
  if (segments.back().empty()) segments.pop_back();
  return segments;
}

std::string porter_stem(std::string_view word) {
  if (!is_ascii_lower_word(word)) return std::string(word);
  return PorterStemmer(word).run();
}

std::string stem_token(std::string_view token) {
  std::string current(token);
  while (true) {
    std::string next = porter_stem(current);
    if (next == current || next.empty()) return current;
    current = std::move(next);
  }
}

std::vector<Segment> normalize_segments(std::string_view utf8) {
  std::vector<Segment> segments = segment_words(utf8);
  for (Segment& seg : segments) {
    for (std::string& tok : seg) tok = stem_token(tok);
  }
  return segments;
}

std::vector<std::string> normalize_tokens(std::string_view utf8) {
  std::vector<std::string> out;
  for (Segment& seg : normalize_segments(utf8)) {
    for (std::string& tok : seg) out.push_back(std::move(tok));
  }
  return out;
}

std::string join(const std::vector<std::string>& tokens, char sep) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(sep);
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> split(std::string_view joined, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= joined.size()) {
    const size_t pos = joined.find(sep, start);
    const size_t end = pos == std::string_view::npos ? joined.size() : pos;
    if (end > start) out.emplace_back(joined.substr(start, end - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

size_t count_words(std::string_view utf8) {
  size_t n = 0;
  for (const Segment& seg : segment_words(utf8)) n += seg.size();
  return n;
}

}  // namespace seerkit::text
