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

// Words over a totally ordered alphabet of positive integers, together with
// the basic combinatorics needed for word-representation of graphs:
// reduced forms, occurrence counts, alternation of two letters and
// containment of classical patterns.
//
// Text format: a word whose letters are all <= 9 is written as a digit string
// ("45342312"); otherwise letters are dot separated ("10.2.10.1.2"). The
// parser also accepts lowercase alphabetic words, encoded a=1, b=2, ...

#ifndef REP132_WORD_H_
#define REP132_WORD_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rep132 {

using Letter = int;
using BigInt = boost::multiprecision::cpp_int;

class Word {
 public:
  Word() = default;
  // Throws std::invalid_argument if some letter is < 1.
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  // Throws std::invalid_argument on malformed text.
  static Word Parse(std::string_view text);
  std::string ToString() const;

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Sorted distinct letters, A(w).
  std::vector<Letter> Alphabet() const;
  // 0 for the empty word.
  Letter MaxLetter() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// A classical pattern: a word that equals its own reduced form. Lengths 1..4
// are supported.
class Pattern {
 public:
  static constexpr std::size_t kMaxLength = 4;

  // Throws std::invalid_argument unless `letters` is reduced and
  // 1 <= length <= kMaxLength.
  explicit Pattern(Word letters);
  static Pattern Parse(std::string_view text);

  static const Pattern& P132();
  static const Pattern& P123();
  static const Pattern& P21();

  const Word& word() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::string ToString() const { return letters_.ToString(); }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Word letters_;
};

// Replaces the i-th smallest letter by i.
Word Reduce(const Word& w);

std::size_t Occurrences(const Word& w, Letter x);

// True iff the projection of `w` onto {x, y} is xyxy... or yxyx...
// Throws std::invalid_argument if x == y or either letter is absent.
bool Alternates(const Word& w, Letter x, Letter y);

// Lexicographically smallest tuple of 0-based positions at which `p` occurs
// in `w` as an order-isomorphic subsequence, or nullopt if `w` avoids `p`.
std::optional<std::vector<std::size_t>> ContainsPattern(const Word& w,
                                                        const Pattern& p);

inline bool Avoids(const Word& w, const Pattern& p) {
  return !ContainsPattern(w, p).has_value();
}

// One-pass 132 check using Avoid132Tracker (letters must be <= 63).
bool Avoids132(const Word& w);

// True iff every letter of A(w) occurs exactly k times. Vacuously true for
// the empty word.
bool IsKUniform(const Word& w, std::size_t k);

// C_n = binom(2n, n) / (n + 1).
BigInt Catalan(unsigned n);

// Incremental 132 detection. A letter c appended to a prefix creates an
// occurrence of 132 iff some earlier pair a...b (a before b, a < b) has
// a < c < b. The union of those open intervals is kept as a bitmask; when c
// is appended, the new intervals (a, c) for earlier a < c collapse to
// (prefix_min, c). Letters must lie in 1..63.
class Avoid132Tracker {
 public:
  static constexpr Letter kMaxLetter = 63;

  bool WouldCreate132(Letter c) const { return (forbidden_ >> c) & 1u; }

  void Push(Letter c) {
    if (prefix_min_ != 0 && prefix_min_ < c) {
      const std::uint64_t below_c = (std::uint64_t{1} << c) - 1;
      const std::uint64_t upto_min = (std::uint64_t{1} << (prefix_min_ + 1)) - 1;
      forbidden_ |= below_c & ~upto_min;
    }
    if (prefix_min_ == 0 || c < prefix_min_) prefix_min_ = c;
  }

  std::uint64_t forbidden() const { return forbidden_; }

 private:
  std::uint64_t forbidden_ = 0;
  Letter prefix_min_ = 0;
};

}  // namespace rep132

#endif  // REP132_WORD_H_
