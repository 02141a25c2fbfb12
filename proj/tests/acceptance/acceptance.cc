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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "rep132/circle.h"
#include "rep132/constructions.h"
#include "rep132/graph.h"
#include "rep132/io.h"
#include "rep132/representation.h"
#include "rep132/search.h"
#include "rep132/word.h"

namespace rep132 {
namespace {

using Clock = std::chrono::steady_clock;

// Time limits, in seconds.
constexpr double kKnEnumerationLimit = 10;
constexpr double kKnOracleLimit = 120;
constexpr double kConstructionsLimit = 30;
constexpr double kLabelingLimit = 5;
constexpr double kWheelFullLimit = 60 * 60;
constexpr double kWheelReducedLimit = 10 * 60;
constexpr double kCatalogLimit = 15 * 60;
constexpr double kCircleLimit = 10 * 60;
constexpr double kTheoremLimit = 5 * 60;
constexpr double kOrderSixLimit = 12 * 60 * 60;

constexpr int kRandomTrees = 500;
constexpr int kMaxTreeOrder = 12;
constexpr double kOrderSixWithinBudget = 0.95;
constexpr int kReducedWorkers = 4;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void Require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail << " [failed: " << what << "]";
  }
};

// Graphs found representable in criteria 4 and 6, for criterion 7.
std::vector<LabeledGraph> g_representable;

std::set<Word> AsSet(const std::vector<Word>& words) { return {words.begin(), words.end()}; }

std::set<Word> WitnessSet(const SearchReport& r) {
  std::set<Word> out;
  for (const Witness& w : r.all_witnesses) out.insert(w.word);
  return out;
}

SearchConfig FixedAll() {
  SearchConfig cfg;
  cfg.fixed_labeling = true;
  cfg.find_all = true;
  return cfg;
}

void KnEnumeration(Verdict& v) {
  const std::vector<int> expected = {12, 27, 72, 213, 670, 2190};
  for (int n = 3; n <= 8; ++n) {
    const KnRepertoire rep = KnEnumerate(n);
    const std::size_t distinct = AsSet(rep.AllWords()).size();
    v.Require(rep.total == expected[n - 3] && distinct == rep.AllWords().size() &&
                  KnCount(n) == rep.total,
              "K_" + std::to_string(n) + " count");
    v.detail << " K" << n << "=" << rep.total;
  }
  std::set<Word> listed;
  for (const char* w : {"231231", "23123", "31231", "3123", "3213", "123", "231", "213",
                        "312", "321", "1231", "2312"}) {
    listed.insert(Word::Parse(w));
  }
  v.Require(AsSet(KnEnumerate(3).AllWords()) == listed, "K_3 word list");
}

void KnOracle(Verdict& v) {
  for (int n = 3; n <= 5; ++n) {
    const SearchReport r = SearchFixed(Complete(n), FixedAll());
    const bool same = WitnessSet(r) == AsSet(KnEnumerate(n).AllWords());
    v.Require(same, "search vs enumeration for K_" + std::to_string(n));
    v.detail << " K" << n << ":" << r.all_witnesses.size() << (same ? " equal" : " differ");
  }
}

void Constructions(Verdict& v) {
  std::mt19937 rng(20260101);
  int trees_ok = 0;
  for (int trial = 0; trial < kRandomTrees; ++trial) {
    const int n = 1 + static_cast<int>(rng() % kMaxTreeOrder);
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 1);
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
      edges.emplace_back(label[rng() % static_cast<unsigned>(i)], label[i]);
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    const RootedTree t = PreorderLabel(RootedTree(n, label[0], edges));
    const Word w = TreeRepresentant(t);
    bool ok = Avoids132(w) && Represents(w, t.ToGraph()).verdict;
    for (int x = 1; x <= n; ++x) ok = ok && Occurrences(w, x) == (x == t.root() ? 1u : 2u);
    trees_ok += ok;
  }
  v.Require(trees_ok == kRandomTrees, "random trees");
  v.detail << " trees " << trees_ok << "/" << kRandomTrees;
  int cycles_ok = 0;
  for (int n = 3; n <= 12; ++n) cycles_ok += Is132Representant(CycleRepresentant(n), Cycle(n));
  v.Require(cycles_ok == 10, "cycles 3..12");
  v.detail << ", cycles " << cycles_ok << "/10";
  v.Require(PathRepresentant(4).ToString() == "4342312", "path(4)");
  v.Require(CycleRepresentant(4).ToString() == "342312", "cycle(4)");
  v.Require(CycleRepresentant(5).ToString() == "45342312", "cycle(5)");
  const std::vector<std::pair<int, int>> example = {{1, 2}, {1, 5}, {1, 6}, {2, 3},
                                                    {2, 4}, {6, 7}, {6, 8}};
  const std::string tree_word = TreeRepresentant(RootedTree(8, 1, example)).ToString();
  v.Require(tree_word == "876785432341256", "example tree word");
  v.detail << ", example tree " << tree_word;
}

void LabelingSensitivity(Verdict& v) {
  const LabeledGraph b = Star(3);
  const LabeledGraph c = Relabel(b, Labeling({4, 2, 3, 1}));
  SearchConfig fixed;
  fixed.fixed_labeling = true;
  const SearchReport rc = SearchFixed(c, fixed);
  v.detail << " centre-4 star: " << ToString(rc.outcome);
  if (rc.witness) {
    v.detail << " (witness " << rc.witness->word << ", independently verified "
             << (oracle::Is132Representant(oracle::Letters(rc.witness->word), c) ? "valid"
                                                                                   : "invalid")
             << ")";
    g_representable.push_back(c);
  }
  v.Require(rc.outcome == Outcome::kNotRepresentable, "centre-4 star must be not-representable");

  const SearchReport rb = SearchFixed(b, FixedAll());
  v.detail << "; centre-1 star: " << ToString(rb.outcome);
  v.Require(rb.outcome == Outcome::kRepresentable, "centre-1 star representable");
  v.Require(WitnessSet(rb).contains(Word::Parse("43212341")), "43212341 among witnesses");
  if (rb.outcome == Outcome::kRepresentable) g_representable.push_back(b);
}

void NegativeResults(Verdict& v) {
  for (const auto& [name, g] : {std::pair<std::string, LabeledGraph>{"W5", Wheel(5)},
                                {"Pr3", Prism(3)}}) {
    const auto start = Clock::now();
    const SearchReport full = SearchAllLabelings(g, SearchConfig{});
    const double full_s = std::chrono::duration<double>(Clock::now() - start).count();
    SearchConfig reduced_cfg;
    reduced_cfg.use_automorphism_reduction = true;
    reduced_cfg.workers = kReducedWorkers;
    const auto mid = Clock::now();
    const SearchReport reduced = SearchAllLabelings(g, reduced_cfg);
    const double reduced_s = std::chrono::duration<double>(Clock::now() - mid).count();
    const std::size_t autos = Automorphisms(g).size();
    v.Require(full.outcome == Outcome::kNotRepresentable &&
                  full.labelings_searched == full.labelings_total && full.labelings_total == 720,
              name + " full certificate");
    v.Require(reduced.outcome == Outcome::kNotRepresentable &&
                  reduced.labelings_searched * autos == 720,
              name + " reduced certificate");
    v.Require(full_s <= kWheelFullLimit, name + " full time");
    v.Require(reduced_s <= kWheelReducedLimit, name + " reduced time");
    v.detail << " " << name << ": " << ToString(full.outcome) << " " << full.labelings_searched
             << "/" << full.labelings_total << " labelings (" << full_s << " s), reduced "
             << reduced.labelings_searched << " cosets x " << autos << " (" << reduced_s << " s);";
  }
  // Reduction safety on every graph with at most five vertices.
  int checked = 0;
  bool agree = true;
  for (int n = 1; n <= 5; ++n) {
    for (const LabeledGraph& g : EnumerateGraphs(n, false)) {
      SearchConfig reduced;
      reduced.use_automorphism_reduction = true;
      agree = agree && SearchAllLabelings(g, SearchConfig{}).outcome ==
                           SearchAllLabelings(g, reduced).outcome;
      ++checked;
    }
  }
  v.Require(agree, "reduction safety");
  v.detail << " reduction safety on " << checked << " graphs";
}

void Catalogs(Verdict& v) {
  for (const auto& [order, expected] : {std::pair<int, std::size_t>{4, 7}, {5, 23}}) {
    const auto scan = ScanOrder(order, SearchConfig{});
    std::size_t representable = 0, verified = 0;
    for (const ScanEntry& e : scan) {
      if (e.report.outcome != Outcome::kRepresentable) continue;
      ++representable;
      verified += Is132Representant(e.report.witness->word,
                                    Relabel(e.graph, e.report.witness->labeling));
      g_representable.push_back(e.graph);
    }
    v.Require(scan.size() == expected && representable == expected && verified == expected,
              "order " + std::to_string(order));
    v.detail << " order " << order << ": " << representable << "/" << scan.size()
             << " representable, " << verified << " witnesses verified;";
  }
}

void CircleGraphs(Verdict& v) {
  std::size_t ok = 0;
  for (const LabeledGraph& g : g_representable) {
    const auto d = CircleWitness(g);
    ok += d.has_value() && IntersectionGraph(*d) == g;
  }
  v.Require(!g_representable.empty() && ok == g_representable.size(), "circle witnesses");
  const bool prism_absent = !CircleWitness(Prism(3)).has_value();
  v.Require(prism_absent, "prism has no chord diagram");
  v.detail << " " << ok << "/" << g_representable.size()
           << " representable graphs have chord diagrams; Pr3 "
           << (prism_absent ? "has none" : "has one");
}

void Theorems(Verdict& v) {
  std::size_t words = 0, degree2 = 0, pendant = 0;
  for (int n = 1; n <= 5; ++n) {
    oracle::ForEach132AvoidingWord(
        n, 9,
        [&](const std::vector<int>& letters) {
          ++words;
          const Word w(letters);
          const LabeledGraph g = GraphFromWord(w);
          for (int x = 1; x <= n; ++x) {
            const int d = Degree(g, x);
            if (d >= 2 && Occurrences(w, x) > 2) ++degree2;
            if (d == 1 && Degree(g, g.Neighbors(x).front()) >= 2 && Occurrences(w, x) > 3) {
              ++pendant;
            }
          }
        },
        9);
  }
  std::size_t chord_words = 0, chord_bad = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> w;
    for (int x = 1; x <= n; ++x) w.insert(w.end(), {x, x});
    do {
      ++chord_words;
      chord_bad += IntersectionGraph(ChordDiagram(w)) != GraphFromWord(Word(w));
    } while (std::next_permutation(w.begin(), w.end()));
  }
  v.Require(degree2 == 0, "degree >= 2 copy bound");
  v.Require(pendant == 0, "pendant copy bound");
  v.Require(chord_bad == 0, "chord/word graphs");
  v.detail << " " << words << " avoiding words: " << degree2 << " + " << pendant
           << " counterexamples; " << chord_words << " 2-uniform words: " << chord_bad
           << " mismatches";
}

void OrderSix(Verdict& v) {
  SearchConfig cfg;
  cfg.use_automorphism_reduction = true;
  const auto scan = ScanOrder(6, cfg);
  const LabeledGraph w5 = CanonicalForm(Wheel(5));
  std::size_t within = 0, not_representable = 0;
  bool w5_listed = false;
  for (const ScanEntry& e : scan) {
    within += e.report.outcome != Outcome::kBudgetExceeded;
    if (e.report.outcome == Outcome::kNotRepresentable) {
      ++not_representable;
      w5_listed = w5_listed || e.graph == w5;
    }
  }
  const double fraction = scan.empty() ? 0.0 : static_cast<double>(within) / scan.size();
  v.Require(fraction >= kOrderSixWithinBudget, "classes within budget");
  v.Require(w5_listed, "W5 among non-representable");
  v.detail << " " << within << "/" << scan.size() << " classes decided; " << not_representable
           << " not representable; W5 the only one: "
           << (w5_listed && not_representable == 1 ? "yes" : "no");
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<void(Verdict&)> run;
};

}  // namespace
}  // namespace rep132

int main() {
  using rep132::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "K_n enumeration counts", rep132::kKnEnumerationLimit, rep132::KnEnumeration},
      {2, "K_n search equals enumeration", rep132::kKnOracleLimit, rep132::KnOracle},
      {3, "tree, path and cycle constructions", rep132::kConstructionsLimit,
       rep132::Constructions},
      {4, "labeling sensitivity on the 4-vertex star", rep132::kLabelingLimit,
       rep132::LabelingSensitivity},
      {5, "W5 and Pr3 not representable", rep132::kWheelFullLimit, rep132::NegativeResults},
      {6, "order 4 and 5 catalogs", rep132::kCatalogLimit, rep132::Catalogs},
      {7, "representable graphs are circle graphs", rep132::kCircleLimit,
       rep132::CircleGraphs},
      {8, "copy bounds and chord equality", rep132::kTheoremLimit, rep132::Theorems},
      {9, "order 6 scan", rep132::kOrderSixLimit, rep132::OrderSix},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    rep132::Verdict v;
    const auto start = rep132::Clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    const double seconds = std::chrono::duration<double>(rep132::Clock::now() - start).count();
    v.Require(seconds <= c.limit_s, "time limit");
    failures += !v.pass;
    std::printf("criterion %d: %s  %s (%.2f s, limit %.0f s):%s\n", c.id,
                v.pass ? "PASS" : "FAIL", c.name.c_str(), seconds, c.limit_s,
                v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
