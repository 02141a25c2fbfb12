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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "rep132/circle.h"
#include "rep132/constructions.h"
#include "rep132/graph.h"
#include "rep132/io.h"
#include "rep132/representation.h"
#include "rep132/word.h"

namespace rep132::cli {
namespace {

// Orders above which the all-labelings search and the scan need an explicit
// opt-in because they run for hours.
constexpr int kLongSearchOrder = 7;
constexpr int kLongScanOrder = 6;

std::string EdgeList(const LabeledGraph& g) {
  if (g.edges().empty()) return "(none)";
  std::ostringstream os;
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : " ") << e.u << "-" << e.v;
    first = false;
  }
  return os.str();
}

std::string Joined(const std::vector<int>& values, std::string_view sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? sep : "") << values[i];
  return os.str();
}

std::string LabelingText(const Labeling& sigma) {
  return "[" + Joined(std::vector<int>(sigma.image().begin(), sigma.image().end()), " ") + "]";
}

std::string ViolationText(const Violation& v) {
  std::string text(ToString(v.reason));
  if (v.pair) text += " " + std::to_string(v.pair->u) + "-" + std::to_string(v.pair->v);
  return text;
}

// "-" writes to `out`.
void Emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path == "-") {
    out << contents;
  } else {
    WriteFileOrThrow(path, contents);
  }
}

struct SearchFlags {
  int max_copies = 2;
  int workers = 1;
  std::uint64_t budget = kDefaultNodeBudget;
  bool reduce = false;
  bool long_running = false;

  void Register(CLI::App* cmd) {
    cmd->add_option("--max-copies", max_copies, "Occurrences allowed per letter (1-3)")
        ->check(CLI::Range(1, 3));
    cmd->add_option("--workers", workers, "Worker threads (default $REP132_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget", budget, "Node budget per graph; 0 = unlimited");
    cmd->add_flag("--reduce-automorphisms", reduce,
                  "Search one labeling per automorphism coset");
    cmd->add_flag("--long-running", long_running, "Allow searches that may take hours");
  }

  SearchConfig Config() const {
    SearchConfig cfg;
    cfg.max_copies = max_copies;
    cfg.workers = workers;
    cfg.use_automorphism_reduction = reduce;
    cfg.node_budget = budget == 0 ? std::nullopt : std::optional<std::uint64_t>(budget);
    return cfg;
  }
};

int CheckWord(const std::string& text, const std::string& pattern_text,
              const std::string& graph_path, std::ostream& out) {
  const Word w = Word::Parse(text);
  const Pattern p = Pattern::Parse(pattern_text);
  out << "word: " << w << "\n";
  out << "reduced: " << Reduce(w) << "\n";
  const std::vector<Letter> alphabet = w.Alphabet();
  out << "alphabet: {" << Joined(alphabet, ", ") << "}\n";
  out << "occurrences:";
  for (Letter x : alphabet) out << " " << x << ":" << Occurrences(w, x);
  out << "\n";
  if (const auto hit = ContainsPattern(w, p)) {
    std::vector<int> values;
    std::vector<int> positions;
    for (std::size_t i : *hit) {
      values.push_back(w[i]);
      positions.push_back(static_cast<int>(i) + 1);
    }
    out << p.ToString() << "-avoiding: no, witness " << Joined(values, ",") << " at positions "
        << Joined(positions, ",") << "\n";
  } else {
    out << p.ToString() << "-avoiding: yes\n";
  }
  const bool contiguous =
      alphabet.empty() || alphabet.back() == static_cast<Letter>(alphabet.size());
  if (!contiguous) {
    out << "graph: none (alphabet is not {1..n})\n";
  } else {
    const LabeledGraph g = GraphFromWord(w);
    if (g.order() == 1) {
      out << "graph: single vertex\n";
    } else {
      out << "graph: " << g.order() << " vertices\n";
    }
    out << "edges: " << EdgeList(g) << "\n";
  }
  if (!graph_path.empty()) {
    const LabeledGraph g = ParseGraphFile(ReadFileOrThrow(graph_path));
    const RepresentationCheck check = Represents(w, g);
    out << "represents " << graph_path << ": " << (check.verdict ? "yes" : "no");
    if (check.first_violation) out << " (" << ViolationText(*check.first_violation) << ")";
    out << "\n";
    out << "132-representant: " << (Is132Representant(w, g) ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int RepresentTree(const std::string& path, std::ostream& out) {
  const RootedTree input = ParseTreeFile(ReadFileOrThrow(path));
  RootedTree tree = input;
  if (!input.IsPreorderLabeled()) {
    const Labeling sigma = PreorderLabeling(input);
    out << "relabeled to pre-order:";
    for (int v = 1; v <= input.order(); ++v) out << " " << v << "->" << sigma(v);
    out << "\n";
    tree = PreorderLabel(input);
  }
  out << TreeRepresentant(tree) << "\n";
  return kExitOk;
}

int RepresentComplete(int n, bool enumerate, std::optional<int> length_bound,
                      std::ostream& out) {
  if (n < 1) throw std::invalid_argument("complete graphs need n >= 1");
  if (!enumerate) {
    std::vector<Letter> identity(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) identity[i] = i + 1;
    out << Word(identity) << "\n";
    return kExitOk;
  }
  const KnRepertoire rep = KnEnumerate(n, length_bound);
  for (const auto& [kind, words] : rep.words) {
    out << "case " << ToString(kind) << " (" << words.size() << "):\n";
    for (const Word& w : words) out << "  " << w << "\n";
  }
  out << "total: " << rep.total << "\n";
  if (n >= 3) {
    const BigInt expected = KnCount(n);
    out << "kn_count: " << expected << " (" << (expected == rep.total ? "match" : "MISMATCH")
        << ")\n";
  }
  return kExitOk;
}

void PrintReport(const SearchReport& r, std::ostream& out) {
  out << "graph: " << r.graph.order() << " vertices, edges " << EdgeList(r.graph) << "\n";
  out << "outcome: " << ToString(r.outcome) << "\n";
  if (r.witness) {
    out << "labeling: " << LabelingText(r.witness->labeling) << "\n";
    out << "witness: " << r.witness->word << "\n";
  }
  if (!r.all_witnesses.empty()) {
    out << "witnesses (" << r.all_witnesses.size() << "):\n";
    for (const Witness& w : r.all_witnesses) {
      out << "  " << w.word;
      if (!r.fixed_labeling) out << "  labeling " << LabelingText(w.labeling);
      out << "\n";
    }
  }
  out << "labelings searched: " << r.labelings_searched << " of " << r.labelings_total
      << (r.automorphism_reduced ? " (automorphism-reduced)" : "") << ", max copies "
      << r.max_copies << "\n";
  const double seconds = std::chrono::duration<double>(r.stats.wall_time).count();
  out << "stats: nodes " << r.stats.nodes_visited << ", words " << r.stats.words_tested
      << ", labelings " << r.stats.labelings_tried << ", " << std::fixed
      << std::setprecision(3) << seconds << " s\n";
  out.unsetf(std::ios::floatfield);
}

int SearchCommand(const std::string& path, bool fixed, bool all, const SearchFlags& flags,
                  const std::string& json_path, std::ostream& out) {
  const LabeledGraph g = ParseGraphFile(ReadFileOrThrow(path));
  if (!fixed && g.order() > kLongSearchOrder && !flags.long_running) {
    throw std::invalid_argument("searching every labeling of a graph with more than " +
                                std::to_string(kLongSearchOrder) +
                                " vertices can take hours; pass --long-running");
  }
  SearchConfig cfg = flags.Config();
  cfg.fixed_labeling = fixed;
  cfg.find_all = all;
  const SearchReport report = Search(g, cfg);
  PrintReport(report, out);
  if (!json_path.empty()) Emit(json_path, ReportToJson(report), out);
  return ExitCode(report.outcome);
}

int ScanCommand(int order, const SearchFlags& flags, const std::string& json_path,
                const std::string& dot_dir, std::ostream& out) {
  if (order > kLongScanOrder && !flags.long_running) {
    throw std::invalid_argument("scanning order " + std::to_string(order) +
                                " can take days; pass --long-running");
  }
  const auto start = std::chrono::steady_clock::now();
  const std::vector<ScanEntry> scan = ScanOrder(order, flags.Config());
  const std::vector<CatalogEntry> catalog = BuildCatalog(scan);
  if (!dot_dir.empty()) std::filesystem::create_directories(dot_dir);
  std::size_t counts[3] = {0, 0, 0};
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const CatalogEntry& c = catalog[i];
    ++counts[static_cast<int>(c.outcome)];
    out << std::setw(4) << i + 1 << "  " << std::left << std::setw(18)
        << ToString(c.outcome) << std::right << "  " << EdgeList(c.graph);
    if (c.witness) {
      out << "  labeling " << LabelingText(*c.labeling) << "  word " << *c.witness
          << " (length " << c.WordLength() << (c.TwoUniform() ? ", 2-uniform" : "") << ")";
    }
    out << "\n";
    if (!dot_dir.empty()) {
      const LabeledGraph drawn = c.labeling ? Relabel(c.graph, *c.labeling) : c.graph;
      std::ostringstream name;
      name << "order" << order << "_" << std::setw(4) << std::setfill('0') << i + 1 << ".dot";
      WriteFileOrThrow((std::filesystem::path(dot_dir) / name.str()).string(),
                       ToDot(drawn, c.witness));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << "classes: " << catalog.size() << ", representable: " << counts[0]
      << ", not representable: " << counts[1] << ", budget exceeded: " << counts[2] << "\n";
  if (order == 6) {
    const LabeledGraph w5 = CanonicalForm(Wheel(5));
    bool w5_not = false;
    for (const CatalogEntry& c : catalog) {
      if (c.graph == w5) w5_not = c.outcome == Outcome::kNotRepresentable;
    }
    out << "W5 not representable: " << (w5_not ? "yes" : "no") << "\n";
    out << "W5 is the only non-representable class found: "
        << (w5_not && counts[1] == 1 ? "yes" : "no")
        << (counts[2] > 0 ? " (some classes exceeded the budget)" : "") << "\n";
  }
  out << "time: " << std::fixed << std::setprecision(1) << seconds << " s\n";
  out.unsetf(std::ios::floatfield);
  if (!json_path.empty()) Emit(json_path, ScanToJson(order, scan), out);
  return kExitOk;
}

int CircleCommand(const std::string& path, const std::string& dot_path, std::ostream& out) {
  const LabeledGraph g = ParseGraphFile(ReadFileOrThrow(path));
  const std::optional<ChordDiagram> d = CircleWitness(g);
  if (!d) {
    out << "not a circle graph\n";
    if (!dot_path.empty()) Emit(dot_path, ToDot(g), out);
    return kExitNotRepresentable;
  }
  if (IntersectionGraph(*d) != g) throw std::logic_error("chord witness fails verification");
  out << "word: " << d->AsWord() << "\n";
  out << "endpoints: " << Joined(d->endpoints(), " ") << "\n";
  out << "chords:";
  for (int x = 1; x <= d->chords(); ++x) {
    const auto [a, b] = d->Chord(x);
    out << " " << x << "=(" << a + 1 << "," << b + 1 << ")";
  }
  out << "\n";
  if (!dot_path.empty()) Emit(dot_path, ToDot(g, d->AsWord(), *d), out);
  return kExitOk;
}

}  // namespace

int ExitCode(Outcome outcome) {
  switch (outcome) {
    case Outcome::kRepresentable:
      return kExitOk;
    case Outcome::kNotRepresentable:
      return kExitNotRepresentable;
    case Outcome::kBudgetExceeded:
      return kExitBudgetExceeded;
  }
  return kExitError;
}

int DefaultWorkers() {
  const char* env = std::getenv("REP132_WORKERS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 1 || value > 1024) return 1;
  return static_cast<int>(value);
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"132-avoiding word representation of graphs", "rep132"};
  app.require_subcommand(1);

  std::string word_text, pattern_text = "132", graph_path;
  auto* check = app.add_subcommand("check-word", "Analyse a word");
  check->add_option("word", word_text, "Digits (e.g. 43451251) or dot-separated letters")
      ->required();
  check->add_option("--pattern", pattern_text, "Pattern to test (132, 123, 21, ...)");
  check->add_option("--graph", graph_path, "Graph file to check the word against");

  auto* represent = app.add_subcommand("represent", "Constructive representants");
  represent->require_subcommand(1);
  std::string tree_path;
  int family_n = 0;
  bool enumerate = false;
  std::optional<int> length_bound;
  auto* tree = represent->add_subcommand("tree", "Tree from a tree file");
  tree->add_option("treefile", tree_path)->required();
  auto* path = represent->add_subcommand("path", "Path 1-2-...-n");
  path->add_option("n", family_n)->required();
  auto* cycle = represent->add_subcommand("cycle", "Cycle 1-2-...-n-1");
  cycle->add_option("n", family_n)->required();
  auto* complete = represent->add_subcommand("complete", "Complete graph K_n");
  complete->add_option("n", family_n)->required();
  complete->add_flag("--enumerate", enumerate, "List every representant by case");
  complete->add_option("--length-bound", length_bound, "Word length cap (needed for n <= 2)");

  std::string search_path, json_path;
  bool fixed = false, all = false;
  SearchFlags flags;
  flags.workers = DefaultWorkers();
  auto* search = app.add_subcommand("search", "Decide 132-representability");
  search->add_option("graphfile", search_path)->required();
  search->add_flag("--fixed", fixed, "Keep the given labeling");
  search->add_flag("--all", all, "Collect every witness");
  search->add_option("--json", json_path, "Write the JSON report here ('-' = stdout)");
  flags.Register(search);

  int order = 0;
  std::string dot_dir;
  auto* scan = app.add_subcommand("scan", "Search every isolate-free graph of an order");
  scan->add_option("--order", order, "Number of vertices")->required()->check(CLI::Range(0, 7));
  scan->add_option("--json", json_path, "Write the JSON catalog here ('-' = stdout)");
  scan->add_option("--dot-dir", dot_dir, "Write one DOT file per class here");
  flags.Register(scan);

  std::string circle_path, dot_path;
  auto* circle = app.add_subcommand("circle-witness", "Find a chord diagram");
  circle->add_option("graphfile", circle_path)->required();
  circle->add_option("--dot", dot_path, "Write DOT with the witness ('-' = stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return CheckWord(word_text, pattern_text, graph_path, out);
    if (tree->parsed()) return RepresentTree(tree_path, out);
    if (path->parsed()) {
      out << PathRepresentant(family_n) << "\n";
      return kExitOk;
    }
    if (cycle->parsed()) {
      out << CycleRepresentant(family_n) << "\n";
      return kExitOk;
    }
    if (complete->parsed()) return RepresentComplete(family_n, enumerate, length_bound, out);
    if (search->parsed()) return SearchCommand(search_path, fixed, all, flags, json_path, out);
    if (scan->parsed()) return ScanCommand(order, flags, json_path, dot_dir, out);
    if (circle->parsed()) return CircleCommand(circle_path, dot_path, out);
  } catch (const std::exception& e) {
    err << "rep132: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace rep132::cli
