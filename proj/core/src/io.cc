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

#include "rep132/io.h"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "rep132/representation.h"

namespace rep132 {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Fail(std::string_view what, int line, std::string_view why) {
  throw std::invalid_argument(std::string(what) + ", line " + std::to_string(line) +
                              ": " + std::string(why));
}

// Splits into lines with '#' comments removed; blank lines are dropped but
// line numbers are kept for messages.
std::vector<std::pair<int, std::vector<std::string>>> Tokenize(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string t; words >> t;) tokens.push_back(t);
    if (!tokens.empty()) out.emplace_back(number, std::move(tokens));
  }
  return out;
}

int ToInt(const std::string& token, std::string_view what, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    Fail(what, line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) Fail(what, line, "expected an integer, got '" + token + "'");
  return value;
}

int ParseHeader(const std::vector<std::pair<int, std::vector<std::string>>>& lines,
                std::string_view what) {
  if (lines.empty()) Fail(what, 0, "missing 'n <count>' header");
  const auto& [line, tokens] = lines.front();
  if (tokens.size() != 2 || tokens[0] != "n") Fail(what, line, "expected 'n <count>'");
  const int n = ToInt(tokens[1], what, line);
  if (n < 0) Fail(what, line, "vertex count must be non-negative");
  return n;
}

Json GraphJson(const LabeledGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

Json LabelingJson(const Labeling& sigma) {
  return Json(std::vector<int>(sigma.image().begin(), sigma.image().end()));
}

Json StatsJson(const SearchStats& s) {
  return Json{{"nodes_visited", s.nodes_visited},
              {"words_tested", s.words_tested},
              {"labelings_tried", s.labelings_tried}};
}

Json ReportJson(const SearchReport& r) {
  Json j;
  j["graph"] = GraphJson(r.graph);
  j["outcome"] = std::string(ToString(r.outcome));
  if (r.witness) {
    j["witness"] = r.witness->word.ToString();
    j["labeling"] = LabelingJson(r.witness->labeling);
  }
  if (!r.all_witnesses.empty()) {
    Json all = Json::array();
    for (const Witness& w : r.all_witnesses) {
      all.push_back({{"labeling", LabelingJson(w.labeling)}, {"word", w.word.ToString()}});
    }
    j["witnesses"] = std::move(all);
  }
  j["certificate"] = Json{{"labelings_searched", r.labelings_searched},
                          {"labelings_total", r.labelings_total},
                          {"automorphism_reduced", r.automorphism_reduced},
                          {"max_copies", r.max_copies},
                          {"fixed_labeling", r.fixed_labeling}};
  j["stats"] = StatsJson(r.stats);
  return j;
}

}  // namespace

LabeledGraph ParseGraphFile(std::string_view text) {
  constexpr std::string_view kWhat = "graph file";
  const auto lines = Tokenize(text);
  const int n = ParseHeader(lines, kWhat);
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line, tokens] = lines[i];
    if (tokens.size() != 2) Fail(kWhat, line, "expected 'u v'");
    const int u = ToInt(tokens[0], kWhat, line);
    const int v = ToInt(tokens[1], kWhat, line);
    if (!(1 <= u && u < v && v <= n)) {
      Fail(kWhat, line, "edge must satisfy 1 <= u < v <= " + std::to_string(n));
    }
    if (!seen.insert({u, v}).second) Fail(kWhat, line, "duplicate edge");
    edges.push_back({u, v});
  }
  return LabeledGraph(n, std::move(edges));
}

std::string FormatGraphFile(const LabeledGraph& g) {
  std::ostringstream os;
  os << "n " << g.order() << "\n";
  for (const Edge& e : g.edges()) os << e.u << " " << e.v << "\n";
  return os.str();
}

RootedTree ParseTreeFile(std::string_view text) {
  constexpr std::string_view kWhat = "tree file";
  const auto lines = Tokenize(text);
  const int n = ParseHeader(lines, kWhat);
  if (lines.size() < 2) Fail(kWhat, lines.front().first, "missing 'root <label>'");
  const auto& [root_line, root_tokens] = lines[1];
  if (root_tokens.size() != 2 || root_tokens[0] != "root") {
    Fail(kWhat, root_line, "expected 'root <label>'");
  }
  const int root = ToInt(root_tokens[1], kWhat, root_line);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& [line, tokens] = lines[i];
    if (tokens.size() != 2) Fail(kWhat, line, "expected 'parent child'");
    pairs.emplace_back(ToInt(tokens[0], kWhat, line), ToInt(tokens[1], kWhat, line));
  }
  return RootedTree(n, root, pairs);
}

std::string FormatTreeFile(const RootedTree& t) {
  std::ostringstream os;
  os << "n " << t.order() << "\nroot " << t.root() << "\n";
  for (const auto& [p, c] : t.ParentChildPairs()) os << p << " " << c << "\n";
  return os.str();
}

std::string ToDot(const LabeledGraph& g, const std::optional<Word>& witness,
                  const std::optional<ChordDiagram>& diagram) {
  std::ostringstream os;
  if (witness) os << "// witness: " << witness->ToString() << "\n";
  if (diagram) {
    os << "// chord endpoints:";
    for (Letter x : diagram->endpoints()) os << " " << x;
    os << "\n";
  }
  os << "graph G {\n";
  for (int v = 1; v <= g.order(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

LabeledGraph ParseDot(std::string_view text) {
  constexpr std::string_view kWhat = "DOT";
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  std::set<int> nodes;
  std::vector<Edge> edges;
  bool opened = false;
  while (std::getline(in, line)) {
    ++number;
    if (const auto c = line.find("//"); c != std::string::npos) line.resize(c);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string t; words >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens[0] == "graph" || tokens[0] == "strict") {
      opened = true;
      continue;
    }
    if (tokens[0] == "}") continue;
    if (!opened) Fail(kWhat, number, "statement before 'graph {'");
    std::string stmt;
    for (const auto& t : tokens) stmt += t;
    if (!stmt.empty() && stmt.back() == ';') stmt.pop_back();
    if (const auto dash = stmt.find("--"); dash != std::string::npos) {
      const int u = ToInt(stmt.substr(0, dash), kWhat, number);
      const int v = ToInt(stmt.substr(dash + 2), kWhat, number);
      edges.push_back({u, v});
      nodes.insert(u);
      nodes.insert(v);
    } else {
      nodes.insert(ToInt(stmt, kWhat, number));
    }
  }
  const int n = nodes.empty() ? 0 : *nodes.rbegin();
  if (static_cast<int>(nodes.size()) != n || (n > 0 && *nodes.begin() != 1)) {
    Fail(kWhat, number, "node names must be exactly 1..n");
  }
  return LabeledGraph(n, std::move(edges));
}

std::string GraphToJson(const LabeledGraph& g) { return GraphJson(g).dump(); }

LabeledGraph GraphFromJson(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    }
    return LabeledGraph(j.at("n").get<int>(), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
}

std::string ChordDiagramToJson(const ChordDiagram& d) {
  return Json{{"chords", d.chords()}, {"endpoints", d.endpoints()}}.dump();
}

std::vector<CatalogEntry> BuildCatalog(const std::vector<ScanEntry>& scan) {
  std::vector<CatalogEntry> out;
  out.reserve(scan.size());
  for (const ScanEntry& e : scan) {
    CatalogEntry c{e.graph, e.report.outcome, std::nullopt, std::nullopt};
    if (e.report.witness) {
      c.labeling = e.report.witness->labeling;
      c.witness = e.report.witness->word;
      if (!Is132Representant(*c.witness, Relabel(c.graph, *c.labeling))) {
        throw std::logic_error("catalog witness fails verification for " +
                               c.graph.DebugString());
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string ReportToJson(const SearchReport& report) {
  return ReportJson(report).dump(2) + "\n";
}

std::string ScanToJson(int order, const std::vector<ScanEntry>& scan) {
  Json entries = Json::array();
  std::size_t representable = 0, not_representable = 0, exceeded = 0;
  Json non_representable = Json::array();
  for (const CatalogEntry& c : BuildCatalog(scan)) {
    Json e;
    e["graph"] = GraphJson(c.graph);
    e["outcome"] = std::string(ToString(c.outcome));
    if (c.witness) {
      e["witness"] = c.witness->ToString();
      e["labeling"] = LabelingJson(*c.labeling);
      e["word_length"] = c.WordLength();
      e["two_uniform"] = c.TwoUniform();
    }
    entries.push_back(std::move(e));
    switch (c.outcome) {
      case Outcome::kRepresentable:
        ++representable;
        break;
      case Outcome::kNotRepresentable:
        ++not_representable;
        non_representable.push_back(GraphJson(c.graph));
        break;
      case Outcome::kBudgetExceeded:
        ++exceeded;
        break;
    }
  }
  for (std::size_t i = 0; i < scan.size(); ++i) {
    entries[i]["stats"] = StatsJson(scan[i].report.stats);
  }
  Json summary{{"classes", scan.size()},
               {"representable", representable},
               {"not_representable", not_representable},
               {"budget_exceeded", exceeded},
               {"non_representable_graphs", std::move(non_representable)}};
  if (order == 6) {
    const LabeledGraph w5 = CanonicalForm(Wheel(5));
    bool only_w5 = not_representable == 1;
    bool w5_listed = false;
    for (const ScanEntry& e : scan) {
      if (e.graph == w5) w5_listed = e.report.outcome == Outcome::kNotRepresentable;
    }
    summary["wheel5_not_representable"] = w5_listed;
    summary["wheel5_only_not_representable"] = only_w5 && w5_listed;
  }
  Json j{{"order", order}, {"entries", std::move(entries)}, {"summary", std::move(summary)}};
  return j.dump(2) + "\n";
}

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteFileOrThrow(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << contents;
}

}  // namespace rep132
