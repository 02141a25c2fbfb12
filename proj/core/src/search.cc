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

#include "rep132/search.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "rep132/representation.h"

namespace rep132 {
namespace {

constexpr int kMaxCopies = 3;
constexpr int kMaxWordLength = kMaxSearchOrder * kMaxCopies;
constexpr int kMaxAllLabelingsOrder = 9;
constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();
constexpr std::size_t kNoStop = std::numeric_limits<std::size_t>::max();

using LetterSet = std::uint16_t;
static_assert(kMaxSearchOrder < 16);

// Search state after a prefix. Copied on descent; small enough that copying
// is cheaper than undo bookkeeping.
struct Frame {
  std::array<std::uint8_t, kMaxSearchOrder + 1> count{};
  std::array<std::array<std::uint8_t, kMaxCopies>, kMaxSearchOrder + 1> pos{};
  // since[x]: letters that occurred after the last x.
  std::array<LetterSet, kMaxSearchOrder + 1> since{};
  std::uint64_t forbidden = 0;  // Avoid132Tracker state, inlined
  int prefix_min = 0;
  LetterSet present = 0;
  LetterSet spent = 0;
  bool has132 = false;
};

bool AlternatesIn(const Frame& f, int x, int y) {
  const int cx = f.count[x];
  const int cy = f.count[y];
  if (cx > cy + 1 || cy > cx + 1) return false;
  int i = 0, j = 0, last = 0;
  while (i < cx || j < cy) {
    const bool take_x = j == cy || (i < cx && f.pos[x][i] < f.pos[y][j]);
    const int cur = take_x ? x : y;
    if (cur == last) return false;
    last = cur;
    take_x ? ++i : ++j;
  }
  return true;
}

struct FixedRun {
  std::vector<Word> witnesses;
  std::uint64_t nodes = 0;
  std::uint64_t words_tested = 0;
  bool budget_exceeded = false;
  bool cancelled = false;
};

struct CancelCheck {
  const std::atomic<std::size_t>* stop_index = nullptr;
  std::size_t my_index = 0;

  bool operator()() const {
    return stop_index != nullptr &&
           stop_index->load(std::memory_order_relaxed) < my_index;
  }
};

class WordSearcher {
 public:
  WordSearcher(const LabeledGraph& g, const SearchConfig& cfg, std::uint64_t cap,
               CancelCheck cancel)
      : n_(g.order()),
        max_copies_(cfg.max_copies),
        find_all_(cfg.find_all),
        rules_(cfg.pruning),
        cap_(cap),
        cancel_(cancel) {
    full_ = static_cast<LetterSet>(((1u << (n_ + 1)) - 1) & ~1u);
    for (int x = 1; x <= n_; ++x) {
      for (int y = 1; y <= n_; ++y) {
        if (x != y && g.Adjacent(x, y)) adj_[x] |= static_cast<LetterSet>(1u << y);
      }
      nonadj_[x] = static_cast<LetterSet>(full_ & ~adj_[x] & ~(1u << x));
    }
  }

  FixedRun Run() {
    Visit(Frame{}, 0);
    return std::move(run_);
  }

 private:
  enum class Step { kContinue, kStop };

  Step Visit(const Frame& f, int len) {
    if (++run_.nodes > cap_) {
      run_.budget_exceeded = true;
      return Step::kStop;
    }
    if ((run_.nodes & 1023u) == 0 && cancel_()) {
      run_.cancelled = true;
      return Step::kStop;
    }
    if (f.present == full_) {
      ++run_.words_tested;
      if (Accept(f)) {
        run_.witnesses.emplace_back(
            std::vector<Letter>(word_.begin(), word_.begin() + len));
        if (!find_all_) return Step::kStop;
      }
    }
    for (int x = 1; x <= n_; ++x) {
      if (f.count[x] == max_copies_) continue;
      const bool makes132 = (f.forbidden >> x) & 1u;
      if (makes132 && rules_.avoid132) continue;
      if (rules_.alternation && f.count[x] != 0 && (adj_[x] & ~f.since[x]) != 0) {
        continue;
      }
      Frame next = f;
      Push(next, x, len, makes132);
      if (rules_.exhausted_nonedge && next.count[x] == max_copies_ &&
          ExhaustedNonEdgeAlternates(next, x)) {
        continue;
      }
      word_[len] = static_cast<Letter>(x);
      if (Visit(next, len + 1) == Step::kStop) return Step::kStop;
    }
    return Step::kContinue;
  }

  void Push(Frame& f, int x, int len, bool makes132) const {
    const LetterSet bit = static_cast<LetterSet>(1u << x);
    f.pos[x][f.count[x]] = static_cast<std::uint8_t>(len);
    ++f.count[x];
    for (int z = 1; z <= n_; ++z) f.since[z] |= bit;
    f.since[x] = 0;
    if (f.prefix_min != 0 && f.prefix_min < x) {
      const std::uint64_t below_x = (std::uint64_t{1} << x) - 1;
      const std::uint64_t upto_min = (std::uint64_t{1} << (f.prefix_min + 1)) - 1;
      f.forbidden |= below_x & ~upto_min;
    }
    if (f.prefix_min == 0 || x < f.prefix_min) f.prefix_min = x;
    f.present |= bit;
    if (f.count[x] == max_copies_) f.spent |= bit;
    f.has132 |= makes132;
  }

  bool ExhaustedNonEdgeAlternates(const Frame& f, int x) const {
    for (unsigned others = nonadj_[x] & f.spent; others != 0; others &= others - 1) {
      if (AlternatesIn(f, x, std::countr_zero(others))) return true;
    }
    return false;
  }

  bool Accept(const Frame& f) const {
    if (f.has132) return false;
    for (int x = 1; x <= n_; ++x) {
      for (int y = x + 1; y <= n_; ++y) {
        if (AlternatesIn(f, x, y) != (((adj_[x] >> y) & 1u) != 0)) return false;
      }
    }
    return true;
  }

  int n_;
  int max_copies_;
  bool find_all_;
  PruningRules rules_;
  std::uint64_t cap_;
  CancelCheck cancel_;
  LetterSet full_ = 0;
  std::array<LetterSet, kMaxSearchOrder + 1> adj_{};
  std::array<LetterSet, kMaxSearchOrder + 1> nonadj_{};
  std::array<Letter, kMaxWordLength> word_{};
  FixedRun run_;
};

std::uint64_t Factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void CheckSoundness(const LabeledGraph& g, const Witness& w) {
  if (!Is132Representant(w.word, Relabel(g, w.labeling))) {
    throw std::logic_error("search produced an invalid witness " + w.word.ToString() +
                           " for " + g.DebugString());
  }
}

}  // namespace

std::string_view ToString(Outcome outcome) {
  switch (outcome) {
    case Outcome::kRepresentable:
      return "representable";
    case Outcome::kNotRepresentable:
      return "not-representable";
    case Outcome::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

void ValidateSearch(const LabeledGraph& g, const SearchConfig& cfg) {
  if (cfg.max_copies < 1 || cfg.max_copies > kMaxCopies) {
    throw std::invalid_argument("max_copies must be 1, 2 or 3");
  }
  if (g.order() > kMaxSearchOrder) {
    throw std::invalid_argument("search supports graphs with at most " +
                                std::to_string(kMaxSearchOrder) + " vertices");
  }
  if (!cfg.fixed_labeling && g.order() > kMaxAllLabelingsOrder) {
    throw std::invalid_argument("searching all labelings supports at most " +
                                std::to_string(kMaxAllLabelingsOrder) + " vertices");
  }
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
}

std::vector<Labeling> LabelingsToSearch(const LabeledGraph& g,
                                        bool use_automorphism_reduction) {
  const int n = g.order();
  std::vector<Labeling> automorphisms;
  if (use_automorphism_reduction) automorphisms = Automorphisms(g);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<Labeling> out;
  do {
    Labeling sigma(image);
    const bool representative = std::all_of(
        automorphisms.begin(), automorphisms.end(),
        [&](const Labeling& alpha) { return !(sigma.After(alpha) < sigma); });
    if (representative) out.push_back(std::move(sigma));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

SearchReport SearchFixed(const LabeledGraph& g, const SearchConfig& cfg) {
  ValidateSearch(g, cfg);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t budget = cfg.node_budget.value_or(kUnlimited);
  FixedRun run = WordSearcher(g, cfg, budget, CancelCheck{}).Run();

  SearchReport report;
  report.graph = g;
  report.max_copies = cfg.max_copies;
  report.fixed_labeling = true;
  report.labelings_total = 1;
  report.stats.labelings_tried = 1;
  const Labeling identity = Labeling::Identity(g.order());
  if (run.budget_exceeded) {
    report.outcome = Outcome::kBudgetExceeded;
    report.stats.nodes_visited = budget;
  } else {
    report.stats.nodes_visited = run.nodes;
    report.stats.words_tested = run.words_tested;
    report.labelings_searched = 1;
    report.outcome =
        run.witnesses.empty() ? Outcome::kNotRepresentable : Outcome::kRepresentable;
  }
  if (report.outcome != Outcome::kBudgetExceeded) {
    for (Word& w : run.witnesses) {
      Witness witness{identity, std::move(w)};
      CheckSoundness(g, witness);
      if (!report.witness) report.witness = witness;
      if (cfg.find_all) report.all_witnesses.push_back(std::move(witness));
    }
  }
  report.stats.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

SearchReport SearchAllLabelings(const LabeledGraph& g, const SearchConfig& cfg) {
  ValidateSearch(g, cfg);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Labeling> labelings =
      LabelingsToSearch(g, cfg.use_automorphism_reduction);
  const std::size_t total = labelings.size();
  const std::uint64_t budget = cfg.node_budget.value_or(kUnlimited);

  struct Slot {
    bool done = false;
    FixedRun run;
  };
  std::vector<Slot> slots(total);
  std::mutex mu;
  // Guarded by mu: labelings [0, merged) are folded into the totals below.
  std::size_t merged = 0;
  std::uint64_t merged_nodes = 0;
  std::uint64_t merged_words = 0;
  std::optional<std::size_t> decisive;
  Outcome decisive_outcome = Outcome::kNotRepresentable;
  std::vector<Witness> found;
  std::exception_ptr failure;

  // Labelings with a larger index than this cannot affect the report.
  std::atomic<std::size_t> stop_index{kNoStop};
  std::atomic<std::size_t> next_index{0};

  auto lower_stop = [&](std::size_t i) {
    std::size_t cur = stop_index.load();
    while (i < cur && !stop_index.compare_exchange_weak(cur, i)) {
    }
  };

  // Folds finished labelings in index order, exactly as a serial run would
  // have consumed them.
  auto merge_locked = [&] {
    while (!decisive && merged < total && slots[merged].done) {
      FixedRun& r = slots[merged].run;
      if (r.budget_exceeded || merged_nodes + r.nodes > budget) {
        decisive = merged;
        decisive_outcome = Outcome::kBudgetExceeded;
        break;
      }
      merged_nodes += r.nodes;
      merged_words += r.words_tested;
      for (Word& w : r.witnesses) found.push_back({labelings[merged], std::move(w)});
      if (!found.empty() && !cfg.find_all) {
        decisive = merged;
        decisive_outcome = Outcome::kRepresentable;
        ++merged;
        break;
      }
      r = FixedRun{};
      ++merged;
    }
    if (decisive) lower_stop(*decisive);
  };

  auto worker = [&] {
    try {
      while (true) {
        const std::size_t i = next_index.fetch_add(1);
        if (i >= total) return;
        if (i > stop_index.load()) continue;
        std::uint64_t cap;
        {
          std::lock_guard lock(mu);
          cap = budget == kUnlimited ? kUnlimited : budget - merged_nodes;
        }
        FixedRun run = WordSearcher(Relabel(g, labelings[i]), cfg, cap,
                                    CancelCheck{&stop_index, i})
                           .Run();
        std::lock_guard lock(mu);
        const bool witnessed = !run.witnesses.empty();
        slots[i].run = std::move(run);
        slots[i].done = true;
        if (witnessed && !cfg.find_all) lower_stop(i);
        merge_locked();
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      lower_stop(0);
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.workers), std::max<std::size_t>(total, 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SearchReport report;
  report.graph = g;
  report.max_copies = cfg.max_copies;
  report.fixed_labeling = false;
  report.automorphism_reduced = cfg.use_automorphism_reduction;
  report.labelings_total = Factorial(g.order());
  report.stats.words_tested = merged_words;
  if (decisive && decisive_outcome == Outcome::kBudgetExceeded) {
    report.outcome = Outcome::kBudgetExceeded;
    report.stats.nodes_visited = budget;
    report.stats.labelings_tried = *decisive + 1;
    report.labelings_searched = *decisive;
  } else {
    report.stats.nodes_visited = merged_nodes;
    report.stats.labelings_tried = merged;
    report.labelings_searched = merged;
    report.outcome = found.empty() ? Outcome::kNotRepresentable : Outcome::kRepresentable;
    for (const Witness& w : found) CheckSoundness(g, w);
    if (!found.empty()) report.witness = found.front();
    if (cfg.find_all) report.all_witnesses = std::move(found);
  }
  report.stats.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

SearchReport Search(const LabeledGraph& g, const SearchConfig& cfg) {
  return cfg.fixed_labeling ? SearchFixed(g, cfg) : SearchAllLabelings(g, cfg);
}

std::vector<ScanEntry> ScanOrder(int n, const SearchConfig& cfg) {
  const std::vector<LabeledGraph> graphs = EnumerateGraphs(n, /*isolate_free=*/true);
  std::vector<ScanEntry> entries(graphs.size());
  SearchConfig per_graph = cfg;
  per_graph.workers = 1;
  per_graph.fixed_labeling = false;

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t i = next.fetch_add(1); i < graphs.size(); i = next.fetch_add(1)) {
        entries[i] = ScanEntry{graphs[i], SearchAllLabelings(graphs[i], per_graph)};
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      next.store(graphs.size());
    }
  };
  const std::size_t workers = std::min<std::size_t>(
      static_cast<std::size_t>(std::max(cfg.workers, 1)), std::max<std::size_t>(graphs.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return entries;
}

}  // namespace rep132
