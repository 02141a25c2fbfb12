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

#include "rep132/graph.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"

namespace rep132 {
namespace {

TEST(LabeledGraphTest, NormalizesAndSortsEdges) {
  const LabeledGraph g(4, {{3, 1}, {2, 1}, {4, 3}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {1, 3}, {3, 4}}));
  EXPECT_TRUE(g.Adjacent(3, 1));
  EXPECT_FALSE(g.Adjacent(2, 3));
  EXPECT_EQ(g.Neighbors(3), (std::vector<int>{1, 4}));
}

TEST(LabeledGraphTest, RejectsBadEdges) {
  EXPECT_THROW(LabeledGraph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(LabeledGraph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  EXPECT_THROW(LabeledGraph(3, {{1, 4}}), std::invalid_argument);
  EXPECT_THROW(LabeledGraph(3, {{0, 2}}), std::invalid_argument);
}

TEST(LabelingTest, PermutationAlgebra) {
  EXPECT_THROW(Labeling({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Labeling({0, 1}), std::invalid_argument);
  const Labeling a({2, 3, 1});
  const Labeling b({1, 3, 2});
  EXPECT_EQ(a.After(a.Inverse()), Labeling::Identity(3));
  EXPECT_EQ(a.After(b)(2), a(b(2)));
}

TEST(DegreeTest, OutOfRangeThrows) {
  const LabeledGraph g = Star(3);
  EXPECT_EQ(Degree(g, 1), 3);
  EXPECT_EQ(Degree(g, 4), 1);
  EXPECT_THROW(Degree(g, 0), std::out_of_range);
  EXPECT_THROW(Degree(g, 5), std::out_of_range);
}

TEST(FamiliesTest, EdgeSets) {
  EXPECT_EQ(Complete(4).size(), 6u);
  EXPECT_EQ(Edgeless(3).size(), 0u);
  EXPECT_EQ(Cycle(4).edges(), (std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  EXPECT_EQ(Path(3).edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
  EXPECT_EQ(Path(1).order(), 1);
  const LabeledGraph w5 = Wheel(5);
  EXPECT_EQ(w5.order(), 6);
  EXPECT_EQ(w5.size(), 10u);
  EXPECT_EQ(Degree(w5, 6), 5);
  const LabeledGraph pr3 = Prism(3);
  EXPECT_EQ(pr3.size(), 9u);
  EXPECT_TRUE(pr3.Adjacent(1, 4));
  EXPECT_TRUE(pr3.Adjacent(4, 6));
  EXPECT_EQ(Star(3).edges(), (std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}}));
  EXPECT_THROW(Cycle(2), std::invalid_argument);
  EXPECT_THROW(Path(0), std::invalid_argument);
  const LabeledGraph u = DisjointUnion(Complete(3), Complete(2));
  EXPECT_EQ(u.edges(), (std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}, {4, 5}}));
}

TEST(RelabelTest, StarCentreMovesFromOneToFour) {
  const LabeledGraph b = Star(3);
  const LabeledGraph c = Relabel(b, Labeling({4, 2, 3, 1}));
  EXPECT_EQ(c.edges(), (std::vector<Edge>{{1, 4}, {2, 4}, {3, 4}}));
  EXPECT_TRUE(Isomorphic(b, c));
}

TEST(AutomorphismsTest, GroupOrders) {
  EXPECT_EQ(Automorphisms(Wheel(5)).size(), 10u);
  EXPECT_EQ(Automorphisms(Complete(4)).size(), 24u);
  EXPECT_EQ(Automorphisms(Path(4)).size(), 2u);
  EXPECT_EQ(Automorphisms(Prism(3)).size(), 12u);
  EXPECT_EQ(Automorphisms(Star(3)).size(), 6u);
  EXPECT_EQ(Automorphisms(LabeledGraph(0)).size(), 1u);
  for (const Labeling& alpha : Automorphisms(Cycle(5))) {
    EXPECT_EQ(Relabel(Cycle(5), alpha), Cycle(5));
  }
  const auto autos = Automorphisms(Cycle(6));
  EXPECT_TRUE(std::is_sorted(autos.begin(), autos.end()));
  EXPECT_EQ(autos.size(), 12u);
}

TEST(CanonicalFormTest, AgreesWithAllPermutationsOracle) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& edges : oracle::AllLabeledGraphs(n, false)) {
      const LabeledGraph g = oracle::ToGraph(n, {edges.begin(), edges.end()});
      const LabeledGraph canonical = CanonicalForm(g);
      ASSERT_EQ(oracle::EdgesOf(canonical), oracle::EdgesOf(oracle::ToGraph(
                                                 n, oracle::Canonical(n, edges))))
          << g.DebugString();
      ASSERT_EQ(Relabel(g, CanonicalLabeling(g)), canonical);
    }
  }
}

TEST(CanonicalFormTest, RejectsLargeOrders) {
  EXPECT_THROW(CanonicalForm(Edgeless(kMaxCanonicalOrder + 1)), std::invalid_argument);
}

TEST(EnumerateGraphsTest, ClassCounts) {
  EXPECT_EQ(EnumerateGraphs(0, true).size(), 1u);
  EXPECT_EQ(EnumerateGraphs(1, true).size(), 0u);
  EXPECT_EQ(EnumerateGraphs(1, false).size(), 1u);
  EXPECT_EQ(EnumerateGraphs(2, true).size(), 1u);
  EXPECT_EQ(EnumerateGraphs(3, true).size(), 2u);
  EXPECT_EQ(EnumerateGraphs(4, false).size(), 11u);
  EXPECT_EQ(EnumerateGraphs(4, true).size(), 7u);
  EXPECT_EQ(EnumerateGraphs(5, false).size(), 34u);
  EXPECT_EQ(EnumerateGraphs(5, true).size(), 23u);
  EXPECT_EQ(EnumerateGraphs(6, false).size(), 156u);
  EXPECT_EQ(EnumerateGraphs(6, true).size(), 122u);
  EXPECT_THROW(EnumerateGraphs(kMaxEnumerationOrder + 1, true), std::invalid_argument);
}

TEST(EnumerateGraphsTest, MatchesEdgeSubsetOracle) {
  for (int n = 1; n <= 5; ++n) {
    for (bool isolate_free : {false, true}) {
      std::set<std::vector<std::pair<int, int>>> expected;
      for (const auto& edges : oracle::AllLabeledGraphs(n, isolate_free)) {
        expected.insert(oracle::Canonical(n, edges));
      }
      const auto got = EnumerateGraphs(n, isolate_free);
      ASSERT_EQ(got.size(), expected.size()) << n;
      std::set<std::vector<std::pair<int, int>>> seen;
      for (const LabeledGraph& g : got) {
        const auto e = oracle::EdgesOf(g);
        seen.insert(oracle::Canonical(n, e));
        EXPECT_EQ(g, CanonicalForm(g));
      }
      EXPECT_EQ(seen, expected);
      EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), CatalogLess));
    }
  }
}

}  // namespace
}  // namespace rep132
