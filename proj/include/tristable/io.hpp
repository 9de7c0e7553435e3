// Copyright 2026 The tristable Authors.
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

// Text formats. Instances:
//
//   3GSM n              then 3n lines (women, men, dogs): n^2 pair indices, best first
//   3PSA players        then one line per player: C(players-1, 2) pair indices, best first
//   3DM m               then one line per edge: w x y (1-based)
//   3SATB vars clauses B  then one line per clause: signed 1-based literals
//
// Pair indices are 0-based, as in core.hpp. Solutions:
//
//   FAMILIES n k        then k lines: woman man dog (1-based)
//   TRIPLES players k   then k lines: u v w (1-based)
//   MATCHING k          then k lines: edge number (1-based)
//   ASSIGNMENT vars     then one line of signed literals, one per variable
//
// Every kind has a JSON mirror, {"kind": "3GSM", ...}. Readers accept either;
// a document starting with '{' is JSON. Lines starting with '#' are comments.

#ifndef TRISTABLE_IO_HPP
#define TRISTABLE_IO_HPP

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tristable/core.hpp"
#include "tristable/reductions.hpp"

namespace tristable::io {

using Json = nlohmann::json;

enum class Format { Text, Json };

using Instance = std::variant<GsmInstance, PsaInstance, DmInstance, SatBFormula>;

namespace detail {

/// Non-comment lines split into integer tokens, plus the header keyword.
class TokenReader {
 public:
  explicit TokenReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      const auto start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      lines_.push_back({number, line});
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  int line_number() const { return pos_ < lines_.size() ? lines_[pos_].first : lines_.empty() ? 0 : lines_.back().first; }

  /// Header: keyword followed by integers.
  std::pair<std::string, std::vector<std::int64_t>> header() {
    if (done()) fail(ErrorKind::ParseError, "empty document");
    std::istringstream in(lines_[pos_].second);
    std::string keyword;
    in >> keyword;
    auto values = parse_ints(in);
    ++pos_;
    return {keyword, values};
  }

  std::vector<std::int64_t> ints() {
    if (done()) fail(ErrorKind::ParseError, "unexpected end of input");
    std::istringstream in(lines_[pos_].second);
    auto values = parse_ints(in);
    ++pos_;
    return values;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, "line " + std::to_string(line_number()) + ": " + what);
  }

 private:
  std::vector<std::int64_t> parse_ints(std::istringstream& in) const {
    std::vector<std::int64_t> values;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) error("not an integer: '" + tok + "'");
      values.push_back(v);
    }
    return values;
  }

  std::vector<std::pair<int, std::string>> lines_;
  std::size_t pos_ = 0;
};

inline std::vector<int> to_ints(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

inline void expect_count(const TokenReader& r, std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    r.error(std::string(what) + ": expected " + std::to_string(want) + " values, got " + std::to_string(got));
  }
}

inline std::string join(const std::vector<int>& v, int add = 0) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i] + add);
  }
  return out;
}

inline bool looks_like_json(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  return start != std::string::npos && text[start] == '{';
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

template <class T>
T json_get(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    fail(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

inline void expect_kind(const Json& j, const char* kind) {
  const auto k = json_get<std::string>(j, "kind");
  if (k != kind) fail(ErrorKind::ParseError, "expected kind " + std::string(kind) + ", got " + k);
}

}  // namespace detail

// --- Instances ---------------------------------------------------------------

inline std::string write_text(const GsmInstance& inst) {
  std::string out = "3GSM " + std::to_string(inst.size()) + "\n";
  for (const auto& table : inst.preference_lists()) {
    for (const auto& row : table) out += detail::join(row) + "\n";
  }
  return out;
}

inline std::string write_text(const PsaInstance& inst) {
  std::string out = "3PSA " + std::to_string(inst.player_count()) + "\n";
  for (const auto& row : inst.preference_lists()) out += detail::join(row) + "\n";
  return out;
}

inline std::string write_text(const DmInstance& dm) {
  std::string out = "3DM " + std::to_string(dm.m()) + "\n";
  for (const DmEdge& e : dm.edges()) {
    out += std::to_string(e.w + 1) + " " + std::to_string(e.x + 1) + " " + std::to_string(e.y + 1) + "\n";
  }
  return out;
}

inline std::string write_text(const SatBFormula& f) {
  std::string out = "3SATB " + std::to_string(f.var_count()) + " " + std::to_string(f.clause_count()) + " " +
                    std::to_string(f.bound()) + "\n";
  for (const auto& clause : f.clauses()) {
    std::string line;
    for (const Literal& lit : clause) {
      if (!line.empty()) line += ' ';
      line += std::to_string(lit.negated ? -(lit.var + 1) : lit.var + 1);
    }
    out += line + "\n";
  }
  return out;
}

inline Json to_json(const GsmInstance& inst) {
  const auto lists = inst.preference_lists();
  return {{"kind", "3GSM"}, {"n", inst.size()}, {"women", lists[0]}, {"men", lists[1]}, {"dogs", lists[2]}};
}

inline Json to_json(const PsaInstance& inst) {
  return {{"kind", "3PSA"}, {"players", inst.player_count()}, {"lists", inst.preference_lists()}};
}

inline Json to_json(const DmInstance& dm) {
  Json edges = Json::array();
  for (const DmEdge& e : dm.edges()) edges.push_back({e.w + 1, e.x + 1, e.y + 1});
  return {{"kind", "3DM"}, {"m", dm.m()}, {"degreeBounded3", dm.degree_bounded3()}, {"edges", edges}};
}

inline Json to_json(const SatBFormula& f) {
  Json clauses = Json::array();
  for (const auto& clause : f.clauses()) {
    Json c = Json::array();
    for (const Literal& lit : clause) c.push_back(lit.negated ? -(lit.var + 1) : lit.var + 1);
    clauses.push_back(c);
  }
  return {{"kind", "3SATB"}, {"vars", f.var_count()}, {"B", f.bound()}, {"clauses", clauses}};
}

inline std::string write_instance(const Instance& inst, Format format = Format::Text) {
  return std::visit(
      [&](const auto& x) { return format == Format::Text ? write_text(x) : to_json(x).dump() + "\n"; }, inst);
}

namespace detail {

inline std::vector<Literal> parse_clause(const std::vector<std::int64_t>& lits) {
  std::vector<Literal> clause;
  for (std::int64_t v : lits) {
    if (v == 0) fail(ErrorKind::ParseError, "literal 0");
    clause.push_back({static_cast<int>((v < 0 ? -v : v) - 1), v < 0});
  }
  return clause;
}

inline DmInstance make_dm(int m, const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<DmEdge> edges;
  std::vector<int> degree(static_cast<std::size_t>(3) * std::max(m, 0), 0);
  bool bounded = true;
  for (const auto& r : rows) {
    if (r.size() != 3) fail(ErrorKind::ParseError, "edge needs 3 indices");
    for (int c = 0; c < 3; ++c) {
      if (r[c] < 1 || r[c] > m) fail(ErrorKind::IndexOutOfRange, "edge index " + std::to_string(r[c]));
      if (++degree[c * m + r[c] - 1] > 3) bounded = false;
    }
    edges.push_back({static_cast<int>(r[0] - 1), static_cast<int>(r[1] - 1), static_cast<int>(r[2] - 1)});
  }
  return DmInstance::create(m, std::move(edges), bounded);
}

inline Instance instance_from_json(const Json& j) {
  const auto kind = json_get<std::string>(j, "kind");
  if (kind == "3GSM") {
    std::array<GsmInstance::RankTable, 3> lists{json_get<GsmInstance::RankTable>(j, "women"),
                                                json_get<GsmInstance::RankTable>(j, "men"),
                                                json_get<GsmInstance::RankTable>(j, "dogs")};
    return GsmInstance::from_preference_lists(json_get<int>(j, "n"), lists);
  }
  if (kind == "3PSA") {
    return PsaInstance::from_preference_lists(json_get<int>(j, "players"),
                                              json_get<PsaInstance::RankTable>(j, "lists"));
  }
  if (kind == "3DM") {
    return make_dm(json_get<int>(j, "m"), json_get<std::vector<std::vector<std::int64_t>>>(j, "edges"));
  }
  if (kind == "3SATB") {
    std::vector<std::vector<Literal>> clauses;
    for (const auto& c : json_get<std::vector<std::vector<std::int64_t>>>(j, "clauses")) {
      clauses.push_back(parse_clause(c));
    }
    return SatBFormula::create(json_get<int>(j, "vars"), json_get<int>(j, "B"), std::move(clauses));
  }
  fail(ErrorKind::ParseError, "unknown instance kind '" + kind + "'");
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
  if (detail::looks_like_json(text)) return detail::instance_from_json(detail::parse_json(text));
  detail::TokenReader r(text);
  const auto [keyword, head] = r.header();
  auto need = [&](std::size_t count) {
    if (head.size() != count) r.error(keyword + " header needs " + std::to_string(count) + " numbers");
  };
  Instance result = GsmInstance::from_ranks(1, {{{{0}}, {{0}}, {{0}}}});
  if (keyword == "3GSM") {
    need(1);
    const int n = static_cast<int>(head[0]);
    if (n < 1) r.error("n must be positive");
    std::array<GsmInstance::RankTable, 3> lists;
    for (auto& table : lists) {
      for (int p = 0; p < n; ++p) {
        auto row = r.ints();
        detail::expect_count(r, row.size(), static_cast<std::size_t>(n) * n, "preference list");
        table.push_back(detail::to_ints(row));
      }
    }
    result = GsmInstance::from_preference_lists(n, lists);
  } else if (keyword == "3PSA") {
    need(1);
    const int players = static_cast<int>(head[0]);
    if (players < 3 || players % 3 != 0) {
      fail(ErrorKind::PlayerCountNotMultipleOf3, std::to_string(players) + " players");
    }
    PsaInstance::RankTable lists;
    for (int u = 0; u < players; ++u) {
      auto row = r.ints();
      detail::expect_count(r, row.size(), choose(players - 1, 2), "preference list");
      lists.push_back(detail::to_ints(row));
    }
    result = PsaInstance::from_preference_lists(players, lists);
  } else if (keyword == "3DM") {
    need(1);
    std::vector<std::vector<std::int64_t>> rows;
    while (!r.done()) rows.push_back(r.ints());
    result = detail::make_dm(static_cast<int>(head[0]), rows);
  } else if (keyword == "3SATB") {
    need(3);
    std::vector<std::vector<Literal>> clauses;
    for (std::int64_t j = 0; j < head[1]; ++j) clauses.push_back(detail::parse_clause(r.ints()));
    result = SatBFormula::create(static_cast<int>(head[0]), static_cast<int>(head[2]), std::move(clauses));
  } else {
    r.error("unknown instance kind '" + keyword + "'");
  }
  if (!r.done()) r.error("trailing content");
  return result;
}

template <class T>
T parse_as(const std::string& text) {
  Instance inst = parse_instance(text);
  if (auto* p = std::get_if<T>(&inst)) return std::move(*p);
  fail(ErrorKind::ParseError, "document holds a different instance kind");
}

// --- Solutions ---------------------------------------------------------------

inline std::string write_text(const Submarriage& s) {
  std::string out = "FAMILIES " + std::to_string(s.size()) + " " + std::to_string(s.family_count()) + "\n";
  for (const Family& f : s.families()) {
    out += std::to_string(f.woman + 1) + " " + std::to_string(f.man + 1) + " " + std::to_string(f.dog + 1) + "\n";
  }
  return out;
}

inline std::string write_text(const Submatching& s) {
  std::string out = "TRIPLES " + std::to_string(s.player_count()) + " " + std::to_string(s.triple_count()) + "\n";
  for (const Triple& t : s.triples()) out += detail::join({t.members.begin(), t.members.end()}, 1) + "\n";
  return out;
}

inline Json to_json(const Submarriage& s) {
  Json fams = Json::array();
  for (const Family& f : s.families()) fams.push_back({f.woman + 1, f.man + 1, f.dog + 1});
  return {{"kind", "FAMILIES"}, {"n", s.size()}, {"families", fams}};
}

inline Json to_json(const Submatching& s) {
  Json ts = Json::array();
  for (const Triple& t : s.triples()) ts.push_back({t.members[0] + 1, t.members[1] + 1, t.members[2] + 1});
  return {{"kind", "TRIPLES"}, {"players", s.player_count()}, {"triples", ts}};
}

inline std::string write_matching(const std::vector<int>& edges, Format format = Format::Text) {
  if (format == Format::Json) {
    Json ids = Json::array();
    for (int e : edges) ids.push_back(e + 1);
    return Json{{"kind", "MATCHING"}, {"edges", ids}}.dump() + "\n";
  }
  std::string out = "MATCHING " + std::to_string(edges.size()) + "\n";
  for (int e : edges) out += std::to_string(e + 1) + "\n";
  return out;
}

inline std::string write_assignment(const std::vector<bool>& a, Format format = Format::Text) {
  std::vector<int> lits;
  for (std::size_t i = 0; i < a.size(); ++i) lits.push_back(a[i] ? static_cast<int>(i) + 1 : -static_cast<int>(i) - 1);
  if (format == Format::Json) return Json{{"kind", "ASSIGNMENT"}, {"literals", lits}}.dump() + "\n";
  return "ASSIGNMENT " + std::to_string(a.size()) + "\n" + detail::join(lits) + "\n";
}

template <class Solution>
std::string write_solution(const Solution& s, Format format = Format::Text) {
  return format == Format::Text ? write_text(s) : to_json(s).dump() + "\n";
}

namespace detail {

template <class Make>
auto read_rows(const std::string& text, const char* keyword, const char* json_field, std::size_t width, Make make) {
  std::int64_t size = 0;
  std::vector<std::vector<std::int64_t>> rows;
  if (looks_like_json(text)) {
    const Json j = parse_json(text);
    expect_kind(j, keyword);
    size = json_get<std::int64_t>(j, std::string(keyword) == "FAMILIES" ? "n" : "players");
    rows = json_get<std::vector<std::vector<std::int64_t>>>(j, json_field);
  } else {
    TokenReader r(text);
    const auto [kw, head] = r.header();
    if (kw != keyword || head.size() != 2) r.error(std::string("expected header '") + keyword + " size count'");
    size = head[0];
    for (std::int64_t i = 0; i < head[1]; ++i) rows.push_back(r.ints());
    if (!r.done()) r.error("trailing content");
  }
  for (auto& row : rows) {
    if (row.size() != width) fail(ErrorKind::ParseError, std::string(keyword) + " row needs 3 indices");
    for (auto& v : row) {
      if (v < 1 || v > size) fail(ErrorKind::IndexOutOfRange, "index " + std::to_string(v));
      --v;
    }
  }
  return make(static_cast<int>(size), rows);
}

}  // namespace detail

inline Submarriage parse_submarriage(const std::string& text) {
  return detail::read_rows(text, "FAMILIES", "families", 3, [](int n, const auto& rows) {
    std::vector<Family> fams;
    for (const auto& r : rows) fams.push_back({static_cast<int>(r[0]), static_cast<int>(r[1]), static_cast<int>(r[2])});
    return Submarriage::from_families(n, std::move(fams));
  });
}

inline Submatching parse_submatching(const std::string& text) {
  return detail::read_rows(text, "TRIPLES", "triples", 3, [](int players, const auto& rows) {
    std::vector<Triple> ts;
    for (const auto& r : rows) {
      ts.push_back(Triple::of(static_cast<int>(r[0]), static_cast<int>(r[1]), static_cast<int>(r[2])));
    }
    return Submatching::from_triples(players, std::move(ts));
  });
}

inline std::vector<int> parse_matching(const std::string& text) {
  std::vector<std::int64_t> ids;
  if (detail::looks_like_json(text)) {
    const Json j = detail::parse_json(text);
    detail::expect_kind(j, "MATCHING");
    ids = detail::json_get<std::vector<std::int64_t>>(j, "edges");
  } else {
    detail::TokenReader r(text);
    const auto [kw, head] = r.header();
    if (kw != "MATCHING" || head.size() != 1) r.error("expected header 'MATCHING count'");
    while (!r.done()) {
      for (std::int64_t v : r.ints()) ids.push_back(v);
    }
    if (static_cast<std::int64_t>(ids.size()) != head[0]) r.error("edge count does not match header");
  }
  std::vector<int> out;
  for (std::int64_t v : ids) {
    if (v < 1) fail(ErrorKind::IndexOutOfRange, "edge " + std::to_string(v));
    out.push_back(static_cast<int>(v - 1));
  }
  return out;
}

inline std::vector<bool> parse_assignment(const std::string& text, int vars) {
  std::vector<std::int64_t> lits;
  if (detail::looks_like_json(text)) {
    const Json j = detail::parse_json(text);
    detail::expect_kind(j, "ASSIGNMENT");
    lits = detail::json_get<std::vector<std::int64_t>>(j, "literals");
  } else {
    detail::TokenReader r(text);
    const auto [kw, head] = r.header();
    if (kw != "ASSIGNMENT" || head.size() != 1) r.error("expected header 'ASSIGNMENT vars'");
    while (!r.done()) {
      for (std::int64_t v : r.ints()) lits.push_back(v);
    }
  }
  std::vector<bool> a(vars, false);
  std::vector<bool> seen(vars, false);
  for (std::int64_t v : lits) {
    const std::int64_t var = (v < 0 ? -v : v) - 1;
    if (var < 0 || var >= vars) fail(ErrorKind::IndexOutOfRange, "literal " + std::to_string(v));
    if (seen[var]) fail(ErrorKind::ParseError, "variable " + std::to_string(var + 1) + " assigned twice");
    seen[var] = true;
    a[var] = v > 0;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    fail(ErrorKind::DimensionMismatch, "assignment does not cover every variable");
  }
  return a;
}

/// Labeled vertex and edge listing of a reduction. Informational: the layout is
/// a deterministic function of the formula, so decoding rebuilds it.
inline std::string write_layout(const ReductionLayout& L) {
  static constexpr const char* kClass = "WXY";
  std::string out = "# K=" + std::to_string(L.rings) + " height=" + std::to_string(L.tree_height) + "\n";
  out += "VERTICES " + std::to_string(L.vertices.size()) + "\n";
  for (const LayoutVertex& v : L.vertices) {
    out += v.label() + " " + kClass[v.cls] + std::to_string(v.index + 1) + "\n";
  }
  out += "EDGES " + std::to_string(L.edges.size()) + "\n";
  for (std::size_t e = 0; e < L.edges.size(); ++e) {
    const LayoutEdge& edge = L.edges[e];
    out += std::to_string(e + 1) + " " + std::string(to_string(edge.kind));
    for (int v : edge.vertices) out += " " + L.vertices[v].label();
    out += "\n";
  }
  return out;
}

// --- Files -------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << content;
}

}  // namespace tristable::io

#endif  // TRISTABLE_IO_HPP
