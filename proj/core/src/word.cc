// Copyright 2026 The rep132 Authors
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

#include "rep132/word.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>
#include <utility>

namespace rep132 {
namespace {

void CheckLetters(const std::vector<Letter>& letters) {
  for (Letter x : letters) {
    if (x < 1) {
      throw std::invalid_argument("word letters must be positive integers, got " +
                                  std::to_string(x));
    }
  }
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Letter ParseToken(std::string_view token, std::string_view whole) {
  Letter value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("malformed word '" + std::string(whole) + "'");
  }
  return value;
}

int Sign(Letter a, Letter b) { return (a > b) - (a < b); }

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  CheckLetters(letters_);
}

Word::Word(std::initializer_list<Letter> letters) : letters_(letters) {
  CheckLetters(letters_);
}

Word Word::Parse(std::string_view text) {
  const std::string_view s = Trim(text);
  std::vector<Letter> letters;
  if (s.empty()) return Word();
  if (s.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t dot = s.find('.', start);
      const std::string_view token =
          s.substr(start, dot == std::string_view::npos ? s.npos : dot - start);
      letters.push_back(ParseToken(token, s));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  } else if (std::all_of(s.begin(), s.end(), [](char c) {
               return std::isdigit(static_cast<unsigned char>(c));
             })) {
    for (char c : s) letters.push_back(c - '0');
  } else if (std::all_of(s.begin(), s.end(),
                         [](char c) { return c >= 'a' && c <= 'z'; })) {
    for (char c : s) letters.push_back(c - 'a' + 1);
  } else {
    throw std::invalid_argument("malformed word '" + std::string(s) + "'");
  }
  return Word(std::move(letters));
}

std::string Word::ToString() const {
  std::string out;
  const bool digits = MaxLetter() <= 9;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!digits && i > 0) out += '.';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::vector<Letter> Word::Alphabet() const {
  std::vector<Letter> a = letters_;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

Letter Word::MaxLetter() const {
  return letters_.empty() ? 0
                          : *std::max_element(letters_.begin(), letters_.end());
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.ToString();
}

Pattern::Pattern(Word letters) : letters_(std::move(letters)) {
  if (letters_.empty() || letters_.size() > kMaxLength) {
    throw std::invalid_argument("pattern length must be in 1.." +
                                std::to_string(kMaxLength));
  }
  if (Reduce(letters_) != letters_) {
    throw std::invalid_argument("pattern '" + letters_.ToString() +
                                "' is not in reduced form");
  }
}

Pattern Pattern::Parse(std::string_view text) {
  return Pattern(Word::Parse(text));
}

const Pattern& Pattern::P132() {
  static const Pattern p(Word{1, 3, 2});
  return p;
}

const Pattern& Pattern::P123() {
  static const Pattern p(Word{1, 2, 3});
  return p;
}

const Pattern& Pattern::P21() {
  static const Pattern p(Word{2, 1});
  return p;
}

Word Reduce(const Word& w) {
  const std::vector<Letter> alphabet = w.Alphabet();
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) {
    const auto it = std::lower_bound(alphabet.begin(), alphabet.end(), x);
    out.push_back(static_cast<Letter>(it - alphabet.begin()) + 1);
  }
  return Word(std::move(out));
}

std::size_t Occurrences(const Word& w, Letter x) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
}

bool Alternates(const Word& w, Letter x, Letter y) {
  if (x == y) {
    throw std::invalid_argument("alternation needs two distinct letters");
  }
  Letter last = 0;
  bool seen_x = false;
  bool seen_y = false;
  bool alternating = true;
  for (Letter c : w) {
    if (c != x && c != y) continue;
    seen_x |= c == x;
    seen_y |= c == y;
    if (c == last) alternating = false;
    last = c;
  }
  if (!seen_x || !seen_y) {
    throw std::invalid_argument("alternation query on a letter absent from " +
                                w.ToString());
  }
  return alternating;
}

std::optional<std::vector<std::size_t>> ContainsPattern(const Word& w,
                                                        const Pattern& p) {
  const std::size_t k = p.size();
  const std::size_t n = w.size();
  if (k > n) return std::nullopt;
  const Word& pat = p.word();
  std::vector<std::size_t> chosen(k);

  // Depth-first over index tuples in lexicographic order; each new index is
  // checked against every index already chosen.
  auto extend = [&](auto&& self, std::size_t depth, std::size_t from) -> bool {
    if (depth == k) return true;
    for (std::size_t i = from; i + (k - depth) <= n; ++i) {
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        ok = Sign(w[chosen[d]], w[i]) == Sign(pat[d], pat[depth]);
      }
      if (!ok) continue;
      chosen[depth] = i;
      if (self(self, depth + 1, i + 1)) return true;
    }
    return false;
  };
  if (extend(extend, 0, 0)) return chosen;
  return std::nullopt;
}

bool Avoids132(const Word& w) {
  Avoid132Tracker tracker;
  for (Letter c : w) {
    if (c > Avoid132Tracker::kMaxLetter) {
      return Avoids(w, Pattern::P132());
    }
    if (tracker.WouldCreate132(c)) return false;
    tracker.Push(c);
  }
  return true;
}

bool IsKUniform(const Word& w, std::size_t k) {
  std::map<Letter, std::size_t> counts;
  for (Letter c : w) ++counts[c];
  return std::all_of(counts.begin(), counts.end(),
                     [k](const auto& kv) { return kv.second == k; });
}

BigInt Catalan(unsigned n) {
  // Exact: C_0 = 1, C_{i+1} = C_i * 2(2i + 1) / (i + 2).
  BigInt c = 1;
  for (unsigned i = 0; i < n; ++i) {
    c = c * 2 * (2 * i + 1) / (i + 2);
  }
  return c;
}

}  // namespace rep132
