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

// Exhaustive decision procedure for 132-representability.
//
// SearchFixed enumerates, depth first and in ascending letter order, every
// word over 1..n in which each letter occurs between 1 and max_copies times,
// and accepts the words that avoid 132 and represent the graph. The first
// witness is therefore the lexicographically smallest one.
//
// Completeness of the default max_copies = 2: if G is 132-representable then
// some relabeling of G has a 132-avoiding representant in which every letter
// occurs at most twice. Reducing that word maps its letters onto 1..n without
// changing relative order, so it still avoids 132 and still represents the
// correspondingly relabeled G. Searching every labeling of 1..n with at most
// two copies per letter therefore decides representability. With a fixed
// labeling the bound is not known to be complete, so a fixed-labeling
// "not representable" verdict is relative to max_copies.
//
// Pruning rules (each can be switched off for cross-checking):
//   avoid132:          reject a letter that would complete an occurrence of
//                      132 (incremental forbidden-interval test).
//   alternation:       reject a repeated letter x when some neighbor of x
//                      has not occurred since the previous x; an edge pair
//                      must alternate, and letters are never removed.
//   exhausted_nonedge: once x and a non-neighbor y both hold max_copies
//                      copies, their projection is final; reject if it
//                      alternates.

#ifndef REP132_SEARCH_H_
#define REP132_SEARCH_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rep132/graph.h"
#include "rep132/word.h"

namespace rep132 {

inline constexpr int kMaxSearchOrder = 12;
inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;

struct PruningRules {
  bool avoid132 = true;
  bool alternation = true;
  bool exhausted_nonedge = true;
};

struct SearchConfig {
  int max_copies = 2;  // 1, 2 or 3
  bool fixed_labeling = false;
  bool find_all = false;
  bool use_automorphism_reduction = false;
  // Per graph, summed over labelings in labeling order. nullopt: unlimited.
  std::optional<std::uint64_t> node_budget = kDefaultNodeBudget;
  PruningRules pruning;
  // Worker threads for labelings (SearchAllLabelings) or graphs (ScanOrder).
  int workers = 1;
};

enum class Outcome { kRepresentable, kNotRepresentable, kBudgetExceeded };

std::string_view ToString(Outcome outcome);

struct Witness {
  Labeling labeling;
  Word word;  // a 132-representant of Relabel(graph, labeling)

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct SearchStats {
  // For budget-exceeded outcomes nodes_visited is clamped to the budget and
  // words_tested covers completed labelings only, so that the numbers do not
  // depend on the worker count.
  std::uint64_t nodes_visited = 0;
  std::uint64_t words_tested = 0;
  std::uint64_t labelings_tried = 0;
  std::chrono::nanoseconds wall_time{0};
};

struct SearchReport {
  LabeledGraph graph;
  Outcome outcome = Outcome::kNotRepresentable;
  // First witness (smallest labeling, then smallest word).
  std::optional<Witness> witness;
  // Every witness found, in search order; filled only with find_all.
  std::vector<Witness> all_witnesses;
  SearchStats stats;
  // Exhaustion certificate.
  std::uint64_t labelings_searched = 0;
  std::uint64_t labelings_total = 0;
  bool automorphism_reduced = false;
  int max_copies = 2;
  bool fixed_labeling = false;
};

// Validates cfg and the graph order; throws std::invalid_argument.
void ValidateSearch(const LabeledGraph& g, const SearchConfig& cfg);

// Searches the graph under its own labeling.
SearchReport SearchFixed(const LabeledGraph& g, const SearchConfig& cfg);

// Searches every labeling (or one per automorphism coset) in lexicographic
// order and stops at the first witness unless cfg.find_all. Parallel runs
// (cfg.workers > 1) produce the same report as serial ones.
SearchReport SearchAllLabelings(const LabeledGraph& g, const SearchConfig& cfg);

// SearchFixed or SearchAllLabelings according to cfg.fixed_labeling.
SearchReport Search(const LabeledGraph& g, const SearchConfig& cfg);

// Labelings in lexicographic order; with reduction only the lexicographically
// smallest member sigma∘alpha of each coset over the automorphisms alpha.
std::vector<Labeling> LabelingsToSearch(const LabeledGraph& g, bool use_automorphism_reduction);

struct ScanEntry {
  LabeledGraph graph;  // canonical form
  SearchReport report;
};

// SearchAllLabelings on every isolate-free graph of order n, in catalog
// order. cfg.workers distributes graphs; each graph is searched serially.
std::vector<ScanEntry> ScanOrder(int n, const SearchConfig& cfg);

}  // namespace rep132

#endif  // REP132_SEARCH_H_
