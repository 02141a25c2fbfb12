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

#include "rep132/representation.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "rep132/constructions.h"

namespace rep132 {
namespace {

TEST(GraphFromWordTest, Examples) {
  EXPECT_EQ(GraphFromWord(Word::Parse("43451251")),
            LabeledGraph(5, {{1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}}));
  EXPECT_EQ(GraphFromWord(Word::Parse("bcdad")),
            LabeledGraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}}));
  EXPECT_EQ(GraphFromWord(Word::Parse("6645342312")),
            DisjointUnion(Cycle(5), LabeledGraph(1)));
  EXPECT_EQ(GraphFromWord(Word::Parse("1")), LabeledGraph(1));
  EXPECT_EQ(GraphFromWord(Word()), LabeledGraph(0));
}

TEST(GraphFromWordTest, RejectsGappedAlphabet) {
  EXPECT_THROW(GraphFromWord(Word::Parse("3474")), std::invalid_argument);
  EXPECT_THROW(GraphFromWord(Word::Parse("13")), std::invalid_argument);
}

TEST(GraphFromWordTest, AgreesWithProjectionOracle) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 7;
    std::uniform_int_distribution<int> letter(1, n);
    std::vector<int> w;
    for (int c = 1; c <= n; ++c) w.push_back(c);
    const int extra = trial % 9;
    for (int i = 0; i < extra; ++i) w.push_back(letter(rng));
    std::shuffle(w.begin(), w.end(), rng);
    ASSERT_EQ(oracle::EdgesOf(GraphFromWord(Word(w))), oracle::GraphOf(w, n)) << Word(w);
  }
}

TEST(GraphFromWordTest, ReduceCommutesWithRelabeling) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> letter(1, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> w(2 + trial % 10);
    for (int& c : w) c = letter(rng);
    const Word word(w);
    const Word reduced = Reduce(word);
    const std::vector<Letter> alphabet = word.Alphabet();
    const LabeledGraph g = GraphFromWord(reduced);
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      for (std::size_t j = i + 1; j < alphabet.size(); ++j) {
        ASSERT_EQ(g.Adjacent(static_cast<int>(i) + 1, static_cast<int>(j) + 1),
                  Alternates(word, alphabet[i], alphabet[j]));
      }
    }
  }
}

TEST(RepresentsTest, Verdicts) {
  EXPECT_TRUE(Represents(Word::Parse("43212341"), Star(3)).verdict);
  const LabeledGraph fig(5, {{1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}});
  EXPECT_TRUE(Represents(Word::Parse("43451251"), fig).verdict);
  EXPECT_TRUE(Represents(Word::Parse("1"), LabeledGraph(1)).verdict);
  EXPECT_FALSE(Represents(Word::Parse("1"), LabeledGraph(1)).first_violation.has_value());
}

TEST(RepresentsTest, ReportsFirstViolationInPairOrder) {
  const RepresentationCheck extra = Represents(Word::Parse("1234"), Path(4));
  ASSERT_TRUE(extra.first_violation.has_value());
  EXPECT_EQ(extra.first_violation->reason, ViolationReason::kNonEdgeAlternating);
  EXPECT_EQ(*extra.first_violation->pair, (Edge{1, 3}));

  const RepresentationCheck missing = Represents(Word::Parse("2113"), Path(3));
  ASSERT_TRUE(missing.first_violation.has_value());
  EXPECT_EQ(missing.first_violation->reason, ViolationReason::kEdgeNotAlternating);
  EXPECT_EQ(*missing.first_violation->pair, (Edge{1, 2}));

  const RepresentationCheck alphabet = Represents(Word::Parse("123"), Path(4));
  EXPECT_FALSE(alphabet.verdict);
  EXPECT_EQ(alphabet.first_violation->reason, ViolationReason::kAlphabetMismatch);
  EXPECT_FALSE(alphabet.first_violation->pair.has_value());
  EXPECT_FALSE(Represents(Word::Parse("3474"), Path(4)).verdict);
}

TEST(Is132RepresentantTest, Examples) {
  EXPECT_TRUE(Is132Representant(Word::Parse("43212341"), Star(3)));
  EXPECT_TRUE(Is132Representant(Word::Parse("342312"), Cycle(4)));
  EXPECT_FALSE(Is132Representant(Word::Parse("1324"), Complete(4)));
  // Represents K_4 but contains 132.
  EXPECT_TRUE(Represents(Word::Parse("1324"), Complete(4)).verdict);
}

TEST(CombineComponentsTest, Examples) {
  const std::vector<Word> edges = {Word::Parse("1212"), Word::Parse("1212")};
  EXPECT_EQ(CombineComponents(edges), Word::Parse("34341212"));
  const std::vector<Word> single = {Word::Parse("4545")};
  EXPECT_EQ(CombineComponents(single), Word::Parse("1212"));

  const std::vector<Word> k3_k2 = {Word::Parse("231231"), Word::Parse("1212")};
  const Word combined = CombineComponents(k3_k2);
  EXPECT_EQ(combined, Word::Parse("4545231231"));
  EXPECT_TRUE(Is132Representant(combined, DisjointUnion(Complete(3), Complete(2))));
}

TEST(CombineComponentsTest, RejectsBadInput) {
  const std::vector<Word> not_uniform = {Word::Parse("123")};
  EXPECT_THROW(CombineComponents(not_uniform), std::invalid_argument);
  const std::vector<Word> contains = {Word::Parse("132132")};
  EXPECT_THROW(CombineComponents(contains), std::invalid_argument);
}

TEST(CombineComponentsTest, RepresentsBlockUnion) {
  // 2-uniform 132-avoiding words over small alphabets, paired up.
  std::vector<Word> pool;
  for (int n = 1; n <= 3; ++n) {
    oracle::ForEach132AvoidingWord(n, 2, [&](const std::vector<int>& w) {
      if (static_cast<int>(w.size()) == 2 * n) pool.emplace_back(w);
    });
  }
  for (const Word& a : pool) {
    for (const Word& b : pool) {
      const std::vector<Word> parts = {a, b};
      const Word w = CombineComponents(parts);
      EXPECT_TRUE(IsKUniform(w, 2));
      EXPECT_FALSE(oracle::Contains132(oracle::Letters(w)));
      const LabeledGraph expected = DisjointUnion(GraphFromWord(a), GraphFromWord(b));
      ASSERT_EQ(GraphFromWord(w), expected) << a << " + " << b << " -> " << w;
    }
  }
}

TEST(AddIsolatedTest, Examples) {
  EXPECT_EQ(AddIsolated(Word::Parse("45342312")), Word::Parse("6645342312"));
  EXPECT_EQ(AddIsolated(Word()), Word::Parse("11"));
  EXPECT_THROW(AddIsolated(Word::Parse("132")), std::invalid_argument);
  EXPECT_EQ(RemoveVertexWord(Word::Parse("6645342312"), 6), Word::Parse("45342312"));
  EXPECT_THROW(RemoveVertexWord(Word::Parse("12"), 3), std::invalid_argument);
}

TEST(AddIsolatedTest, AddsOneIsolatedVertexAndKeepsAvoidance) {
  for (int n = 1; n <= 4; ++n) {
    oracle::ForEach132AvoidingWord(n, 2, [&](const std::vector<int>& letters) {
      const Word w(letters);
      const Word grown = AddIsolated(w);
      ASSERT_FALSE(oracle::Contains132(oracle::Letters(grown)));
      const LabeledGraph g = GraphFromWord(grown);
      ASSERT_EQ(g, DisjointUnion(GraphFromWord(w), LabeledGraph(1)));
      ASSERT_EQ(Degree(g, n + 1), 0);
    });
  }
}

// Letters of degree >= 2 occur at most twice in a 132-avoiding word; a
// pendant letter whose neighbour has degree >= 2 occurs at most three times.
TEST(CopyBoundTest, HoldsForAllShortAvoidingWords) {
  std::size_t words = 0;
  for (int n = 1; n <= 5; ++n) {
    oracle::ForEach132AvoidingWord(n, 9, [&](const std::vector<int>& letters) {
      ++words;
      const Word w(letters);
      const LabeledGraph g = GraphFromWord(w);
      for (int x = 1; x <= n; ++x) {
        const int d = Degree(g, x);
        const std::size_t copies = Occurrences(w, x);
        if (d >= 2) {
          ASSERT_LE(copies, 2u) << w << " letter " << x;
        }
        if (d == 1 && Degree(g, g.Neighbors(x).front()) >= 2) {
          ASSERT_LE(copies, 3u) << w << " letter " << x;
        }
      }
    }, 9);
  }
  EXPECT_GT(words, 0u);
}

}  // namespace
}  // namespace rep132
