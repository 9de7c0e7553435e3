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

// The tristable command line. run() is the whole program; tools/tristable.cpp
// only forwards argv and the standard streams.
//
// Exit codes: 0 success, 1 a verification reported FAIL, 2 bad input or
// usage, 3 refused because an exact solver limit or budget was exceeded.

#ifndef TRISTABLE_CLI_HPP
#define TRISTABLE_CLI_HPP

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tristable/approx.hpp"
#include "tristable/exact.hpp"
#include "tristable/generators.hpp"
#include "tristable/io.hpp"
#include "tristable/reductions.hpp"
#include "tristable/stability.hpp"

namespace tristable::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kTooLarge = 3 };

/// One row of a report: one (instance, algorithm) pair.
struct Record {
  std::string family;
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::string algorithm;
  std::uint64_t stab = 0;
  std::uint64_t ins = 0;
  std::optional<std::int64_t> bound;
  std::optional<double> runtime_ms;
};

enum class ReportFormat { Table, Json, Csv };

inline io::Json to_json(const Record& r) {
  io::Json j{{"family", r.family}, {"n", r.n}, {"algorithm", r.algorithm}, {"stab", r.stab}, {"ins", r.ins}};
  j["seed"] = r.seed ? io::Json(*r.seed) : io::Json(nullptr);
  j["bound"] = r.bound ? io::Json(*r.bound) : io::Json(nullptr);
  j["runtimeMs"] = r.runtime_ms ? io::Json(*r.runtime_ms) : io::Json(nullptr);
  return j;
}

/// Table: aligned columns. Json: one object per line. Csv: header plus rows.
inline void write_records(std::ostream& out, const std::vector<Record>& records, ReportFormat format) {
  auto opt = [](const auto& v) {
    std::ostringstream s;
    if (v) s << *v;
    return s.str();
  };
  if (format == ReportFormat::Json) {
    for (const Record& r : records) out << to_json(r).dump() << "\n";
    return;
  }
  if (format == ReportFormat::Csv) {
    out << "family,n,seed,algorithm,stab,ins,bound,runtimeMs\n";
    for (const Record& r : records) {
      out << r.family << "," << r.n << "," << opt(r.seed) << "," << r.algorithm << "," << r.stab << "," << r.ins
          << "," << opt(r.bound) << "," << opt(r.runtime_ms) << "\n";
    }
    return;
  }
  std::vector<std::vector<std::string>> rows{{"family", "n", "seed", "algorithm", "stab", "ins", "bound", "ms"}};
  for (const Record& r : records) {
    rows.push_back({r.family, std::to_string(r.n), opt(r.seed), r.algorithm, std::to_string(r.stab),
                    std::to_string(r.ins), opt(r.bound), opt(r.runtime_ms)});
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c] + std::string(width[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
}

/// "5", "3..12" or "2,4,6".
inline std::vector<int> parse_n_spec(const std::string& spec) {
  std::vector<int> out;
  try {
    if (const auto dots = spec.find(".."); dots != std::string::npos) {
      const int lo = std::stoi(spec.substr(0, dots));
      const int hi = std::stoi(spec.substr(dots + 2));
      for (int n = lo; n <= hi; ++n) out.push_back(n);
    } else {
      std::stringstream s(spec);
      std::string part;
      while (std::getline(s, part, ',')) out.push_back(std::stoi(part));
    }
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "bad --n value '" + spec + "'");
  }
  if (out.empty()) fail(ErrorKind::ParseError, "empty --n value");
  return out;
}

namespace detail {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

inline std::string triple_line(const std::array<int, 3>& t) {
  return std::to_string(t[0] + 1) + " " + std::to_string(t[1] + 1) + " " + std::to_string(t[2] + 1);
}

}  // namespace detail

class Program {
 public:
  Program(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Three-gender stable marriage and three-person stable assignment toolkit", "tristable"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all");
    std::string format = "table";
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();

    setup_gen(app);
    setup_stab(app);
    setup_amsm(app);
    setup_asa(app);
    setup_exact(app);
    setup_reduce(app);
    setup_bench(app);
    setup_verify(app);

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kInvalid;
    }
    format_ = format == "json" ? ReportFormat::Json : format == "csv" ? ReportFormat::Csv : ReportFormat::Table;
    try {
      return action_();
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      return e.kind() == ErrorKind::InstanceTooLarge || e.kind() == ErrorKind::Timeout ? kTooLarge : kInvalid;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return kInvalid;
    }
  }

 private:
  // Writes to -o if given, else to stdout.
  void emit(const std::optional<std::string>& path, const std::string& content) {
    if (path) {
      io::write_file(*path, content);
    } else {
      out_ << content;
    }
  }

  io::Format file_format() const { return json_files_ ? io::Format::Json : io::Format::Text; }

  void report(const Record& r) { write_records(out_, {r}, format_); }

  void add_common_output(CLI::App* sub) {
    sub->add_option("-o,--output", output_, "Output file (default stdout)");
    sub->add_flag("--json", json_files_, "Write instance and solution files as JSON");
  }

  // gen ----------------------------------------------------------------------

  void setup_gen(CLI::App& app) {
    auto* sub = app.add_subcommand("gen", "Generate an instance");
    sub->add_option("family", family_, "gadget2 | adversarial | random | random-psa | planted-3dm | embed | lift")
        ->required()
        ->check(CLI::IsMember({"gadget2", "adversarial", "random", "random-psa", "planted-3dm", "embed", "lift"}));
    sub->add_option("--n", n_, "Players per gender (m for planted-3dm)");
    sub->add_option("--seed", seed_, "Random seed");
    sub->add_option("--extra", extra_, "Extra random edges for planted-3dm")->capture_default_str();
    sub->add_option("--in", input_, "Source instance for embed and lift");
    add_common_output(sub);
    sub->callback([this] { action_ = [this] { return gen(); }; });
  }

  int gen() {
    auto need_input = [&] {
      if (!input_) fail(ErrorKind::ParseError, "gen " + family_ + " needs --in");
      return io::parse_instance(io::read_file(*input_));
    };
    auto need_n = [&] {
      if (!n_) fail(ErrorKind::ParseError, "gen " + family_ + " needs --n");
      return *n_;
    };
    io::Instance inst = gen_gadget2();
    if (family_ == "adversarial") {
      inst = gen_adversarial(need_n());
    } else if (family_ == "random") {
      inst = gen_random(need_n(), seed_);
    } else if (family_ == "random-psa") {
      inst = gen_random_psa(3 * need_n(), seed_);
    } else if (family_ == "planted-3dm") {
      inst = gen_random_3dm_planted(need_n(), extra_, seed_);
    } else if (family_ == "embed") {
      inst = embed_3dm(std::get<DmInstance>(need_input())).instance;
    } else if (family_ == "lift") {
      const io::Instance src = need_input();
      const auto* g = std::get_if<GsmInstance>(&src);
      if (!g) fail(ErrorKind::ParseError, "lift needs a 3GSM instance");
      inst = lift_gsm_to_psa(*g);
    }
    emit(output_, io::write_instance(inst, file_format()));
    return kOk;
  }

  // stab ---------------------------------------------------------------------

  void setup_stab(CLI::App& app) {
    auto* sub = app.add_subcommand("stab", "Count stable and unstable triples of a solution");
    sub->add_option("instance", instance_path_)->required();
    sub->add_option("solution", solution_path_)->required();
    sub->add_flag("--list", list_, "Print every unstable triple");
    sub->callback([this] { action_ = [this] { return stab(); }; });
  }

  int stab() {
    const io::Instance inst = io::parse_instance(io::read_file(instance_path_));
    const std::string sol = io::read_file(solution_path_);
    StabilityReport r;
    if (const auto* g = std::get_if<GsmInstance>(&inst)) {
      const Submarriage s = io::parse_submarriage(sol);
      if (s.size() != g->size()) fail(ErrorKind::DimensionMismatch, "solution size differs from instance size");
      r = stability_report_gsm(*g, s, list_);
    } else if (const auto* p = std::get_if<PsaInstance>(&inst)) {
      const Submatching s = io::parse_submatching(sol);
      if (s.player_count() != p->player_count()) {
        fail(ErrorKind::DimensionMismatch, "solution size differs from instance size");
      }
      r = stability_report_psa(*p, s, list_);
    } else {
      fail(ErrorKind::ParseError, "stab needs a 3GSM or 3PSA instance");
    }
    if (format_ == ReportFormat::Json) {
      io::Json j{{"stab", r.stab}, {"ins", r.ins}, {"universe", r.universe()}};
      if (r.unstable) j["unstable"] = *r.unstable;
      out_ << j.dump() << "\n";
    } else if (format_ == ReportFormat::Csv) {
      out_ << "stab,ins,universe\n" << r.stab << "," << r.ins << "," << r.universe() << "\n";
    } else {
      out_ << "stab=" << r.stab << " ins=" << r.ins << "\n";
      if (r.unstable) {
        for (const auto& t : *r.unstable) out_ << detail::triple_line(t) << "\n";
      }
    }
    return kOk;
  }

  // amsm / asa ----------------------------------------------------------------

  void setup_amsm(CLI::App& app) {
    auto* sub = app.add_subcommand("amsm", "Greedy 4/9-approximation for 3GSM");
    sub->add_option("instance", instance_path_)->required();
    add_common_output(sub);
    sub->callback([this] { action_ = [this] { return run_amsm(); }; });
  }

  int run_amsm() {
    const auto inst = io::parse_as<GsmInstance>(io::read_file(instance_path_));
    const detail::Timer timer;
    const AmsmResult res = amsm(inst);
    const double ms = timer.ms();
    emit(output_, io::write_solution(res.marriage.as_submarriage(), file_format()));
    solver_report("amsm", inst.size(), res.report, amsm_ins_bound(inst.size()), ms);
    return kOk;
  }

  void setup_asa(CLI::App& app) {
    auto* sub = app.add_subcommand("asa", "Greedy 4/9-approximation for 3PSA");
    sub->add_option("instance", instance_path_)->required();
    add_common_output(sub);
    sub->callback([this] { action_ = [this] { return run_asa(); }; });
  }

  int run_asa() {
    const auto inst = io::parse_as<PsaInstance>(io::read_file(instance_path_));
    const detail::Timer timer;
    const AsaResult res = asa(inst);
    const double ms = timer.ms();
    emit(output_, io::write_solution(res.matching, file_format()));
    solver_report("asa", inst.n(), res.report, asa_ins_bound(inst.n()), ms);
    return kOk;
  }

  void solver_report(const std::string& algorithm, int n, const StabilityReport& r, std::optional<std::int64_t> bound,
                     double ms) {
    if (format_ == ReportFormat::Table) {
      out_ << "stab=" << r.stab << " ins=" << r.ins;
      if (bound) out_ << " bound=" << *bound;
      out_ << "\n";
      return;
    }
    report({"file", n, std::nullopt, algorithm, r.stab, r.ins, bound, timing_ ? std::optional(ms) : std::nullopt});
  }

  // exact --------------------------------------------------------------------

  void setup_exact(CLI::App& app) {
    auto* sub = app.add_subcommand("exact", "Exact optimum by exhaustive search");
    sub->add_option("instance", instance_path_)->required();
    sub->add_option("--mode", mode_, "msm | mss (ignored for 3DM)")
        ->check(CLI::IsMember({"msm", "mss"}))
        ->capture_default_str();
    sub->add_option("--limit", limit_, "Size limit (n for 3GSM, players for 3PSA, node budget for 3DM)");
    sub->add_flag("--force", force_, "Lift the size limit to the instance size");
    add_common_output(sub);
    sub->callback([this] { action_ = [this] { return exact(); }; });
  }

  int exact() {
    const io::Instance inst = io::parse_instance(io::read_file(instance_path_));
    const bool msm = mode_ == "msm";
    const detail::Timer timer;
    if (const auto* g = std::get_if<GsmInstance>(&inst)) {
      const int limit = force_ ? g->size() : static_cast<int>(limit_.value_or(msm ? kMsmDefaultLimit : kMssDefaultLimit));
      if (msm) {
        const MsmResult r = msm_opt(*g, limit);
        const double ms = timer.ms();
        emit(output_, io::write_solution(r.marriage.as_submarriage(), file_format()));
        const auto total = static_cast<std::uint64_t>(g->size()) * g->size() * g->size();
        exact_report("msm", g->size(), r.stab, total - r.stab, r.candidates, ms);
      } else {
        const MssResult r = mss_opt(*g, limit);
        const double ms = timer.ms();
        emit(output_, io::write_solution(r.submarriage, file_format()));
        const StabilityReport rep = stability_report_gsm(*g, r.submarriage);
        exact_report("mss", g->size(), rep.stab, rep.ins, r.candidates, ms, r.size);
      }
    } else if (const auto* p = std::get_if<PsaInstance>(&inst)) {
      const int limit = force_ ? p->player_count() : static_cast<int>(limit_.value_or(-1));
      const PsaOptResult r = psa_opt(*p, msm ? PsaMode::Msm : PsaMode::Mss, limit);
      const double ms = timer.ms();
      emit(output_, io::write_solution(r.solution, file_format()));
      const StabilityReport rep = stability_report_psa(*p, r.solution);
      exact_report(msm ? "psa-msm" : "psa-mss", p->n(), rep.stab, rep.ins, r.candidates, ms,
                   msm ? std::nullopt : std::optional<std::size_t>(r.value));
    } else if (const auto* dm = std::get_if<DmInstance>(&inst)) {
      const std::uint64_t budget =
          force_ ? std::numeric_limits<std::uint64_t>::max()
                 : limit_ ? static_cast<std::uint64_t>(*limit_) : kMax3dmDefaultBudget;
      const Max3dmResult r = max_3dm(*dm, budget);
      emit(output_, io::write_matching(r.edges, file_format()));
      if (format_ == ReportFormat::Table) {
        out_ << "size=" << r.size << " uncovered=" << uncovered_count(*dm, r.edges) << " nodes=" << r.nodes << "\n";
      } else if (format_ == ReportFormat::Json) {
        out_ << io::Json{{"algorithm", "max3dm"}, {"m", dm->m()}, {"size", r.size},
                         {"uncovered", uncovered_count(*dm, r.edges)}, {"nodes", r.nodes}}
                    .dump()
             << "\n";
      } else {
        out_ << "algorithm,m,size,uncovered,nodes\nmax3dm," << dm->m() << "," << r.size << ","
             << uncovered_count(*dm, r.edges) << "," << r.nodes << "\n";
      }
    } else {
      fail(ErrorKind::ParseError, "exact needs a 3GSM, 3PSA or 3DM instance");
    }
    return kOk;
  }

  void exact_report(const std::string& algorithm, int n, std::uint64_t stab, std::uint64_t ins,
                    std::uint64_t candidates, double ms, std::optional<std::size_t> size = std::nullopt) {
    if (format_ == ReportFormat::Table) {
      out_ << "stab=" << stab << " ins=" << ins;
      if (size) out_ << " size=" << *size;
      out_ << " candidates=" << candidates << "\n";
      return;
    }
    report({"file", n, std::nullopt, algorithm, stab, ins, std::nullopt, timing_ ? std::optional(ms) : std::nullopt});
  }

  // reduce -------------------------------------------------------------------

  void setup_reduce(CLI::App& app) {
    auto* sub = app.add_subcommand("reduce", "3SAT-B to 3DM-3 reduction");
    sub->require_subcommand(1);
    auto* sat = sub->add_subcommand("sat3dm", "Build the tripled 3DM-3 instance of a formula");
    sat->add_option("formula", instance_path_)->required();
    sat->add_option("--layout", layout_path_, "Write the labeled vertex and edge listing here");
    add_common_output(sat);
    sat->callback([this] { action_ = [this] { return reduce_sat3dm(); }; });

    auto* enc = sub->add_subcommand("encode", "Matching of a truth assignment");
    enc->add_option("formula", instance_path_)->required();
    enc->add_option("assignment", solution_path_)->required();
    add_common_output(enc);
    enc->callback([this] { action_ = [this] { return reduce_encode(); }; });

    auto* dec = sub->add_subcommand("decode", "Truth assignment of a matching");
    dec->add_option("formula", instance_path_)->required();
    dec->add_option("matching", solution_path_)->required();
    dec->add_flag("--symmetrize", symmetrize_, "Copy the largest copy's edges to all copies first");
    add_common_output(dec);
    dec->callback([this] { action_ = [this] { return reduce_decode(); }; });
  }

  int reduce_sat3dm() {
    const auto formula = io::parse_as<SatBFormula>(io::read_file(instance_path_));
    const Reduction red = sat_to_3dm3(formula);
    emit(output_, io::write_instance(red.instance, file_format()));
    if (layout_path_) io::write_file(*layout_path_, io::write_layout(red.layout));
    return kOk;
  }

  int reduce_encode() {
    const auto formula = io::parse_as<SatBFormula>(io::read_file(instance_path_));
    const auto assignment = io::parse_assignment(io::read_file(solution_path_), formula.var_count());
    const Reduction red = sat_to_3dm3(formula);
    const auto matching = assignment_to_matching(formula, red.layout, assignment);
    emit(output_, io::write_matching(matching, file_format()));
    return kOk;
  }

  int reduce_decode() {
    const auto formula = io::parse_as<SatBFormula>(io::read_file(instance_path_));
    const Reduction red = sat_to_3dm3(formula);
    auto matching = io::parse_matching(io::read_file(solution_path_));
    for (int e : matching) {
      if (e >= static_cast<int>(red.instance.edge_count())) fail(ErrorKind::IndexOutOfRange, "edge " + std::to_string(e + 1));
    }
    if (!red.instance.is_matching(matching)) fail(ErrorKind::NonCanonicalMatching, "edges are not disjoint");
    if (symmetrize_) matching = symmetrize_matching(red.layout, matching);
    const auto assignment = decode_matching_to_assignment(formula, red.layout, matching);
    emit(output_, io::write_assignment(assignment, file_format()));
    return kOk;
  }

  // bench --------------------------------------------------------------------

  void setup_bench(CLI::App& app) {
    auto* sub = app.add_subcommand("bench", "Run algorithms over an instance family and report");
    sub->add_option("--family", family_, "gadget2 | adversarial | random | random-psa")
        ->check(CLI::IsMember({"gadget2", "adversarial", "random", "random-psa"}))
        ->capture_default_str();
    sub->add_option("--n", n_spec_, "Sizes: 5, 3..12 or 2,4,6")->required();
    sub->add_option("--seed", seed_, "First seed")->capture_default_str();
    sub->add_option("--seeds", seeds_, "Number of seeds per size")->capture_default_str();
    sub->add_option("--algorithms", algorithms_, "Comma-separated: amsm, msm (3GSM); asa, psa-msm (3PSA)")
        ->delimiter(',');
    sub->add_option("--limit", limit_, "Exact solver size limit");
    sub->add_flag("--force", force_, "Run exact solvers above their size limit");
    sub->add_flag("--timing", timing_, "Fill in runtimeMs (output is then not reproducible)");
    sub->callback([this] { action_ = [this] { return bench(); }; });
  }

  int bench() {
    const bool psa = family_ == "random-psa";
    if (algorithms_.empty()) algorithms_ = psa ? std::vector<std::string>{"asa"} : std::vector<std::string>{"amsm"};
    for (const auto& a : algorithms_) {
      const bool ok = psa ? (a == "asa" || a == "psa-msm") : (a == "amsm" || a == "msm");
      if (!ok) fail(ErrorKind::ParseError, "algorithm '" + a + "' does not apply to family " + family_);
    }
    const bool seeded = family_ == "random" || family_ == "random-psa";
    std::vector<Record> records;
    for (int n : parse_n_spec(n_spec_)) {
      const int seed_count = seeded ? seeds_ : 1;
      for (int s = 0; s < seed_count; ++s) {
        const std::uint64_t seed = seed_ + static_cast<std::uint64_t>(s);
        const std::optional<std::uint64_t> seed_field = seeded ? std::optional(seed) : std::nullopt;
        if (psa) {
          const PsaInstance inst = gen_random_psa(3 * n, seed);
          for (const auto& a : algorithms_) {
            if (a == "asa") {
              const detail::Timer t;
              const AsaResult r = asa(inst);
              records.push_back(record(n, seed_field, a, r.report, asa_ins_bound(n), t.ms()));
            } else if (within_limit(a, 3 * n, kPsaMsmDefaultLimit)) {
              const detail::Timer t;
              const PsaOptResult r = psa_opt(inst, PsaMode::Msm, 3 * n);
              records.push_back(record(n, seed_field, a, stability_report_psa(inst, r.solution), std::nullopt, t.ms()));
            }
          }
        } else {
          const GsmInstance inst = family_ == "gadget2"       ? gen_gadget2()
                                   : family_ == "adversarial" ? gen_adversarial(n)
                                                              : gen_random(n, seed);
          const int size = inst.size();
          for (const auto& a : algorithms_) {
            if (a == "amsm") {
              const detail::Timer t;
              const AmsmResult r = amsm(inst);
              records.push_back(record(size, seed_field, a, r.report, amsm_ins_bound(size), t.ms()));
            } else if (within_limit(a, size, kMsmDefaultLimit)) {
              const detail::Timer t;
              const MsmResult r = msm_opt(inst, size);
              const auto total = static_cast<std::uint64_t>(size) * size * size;
              records.push_back(record(size, seed_field, a, {r.stab, total - r.stab, std::nullopt}, std::nullopt, t.ms()));
            }
          }
        }
      }
    }
    write_records(out_, records, format_);
    return kOk;
  }

  bool within_limit(const std::string& algorithm, int size, int default_limit) {
    const auto limit = static_cast<int>(limit_.value_or(default_limit));
    if (force_ || size <= limit) return true;
    err_ << "skipped " << algorithm << " at size " << size << " (limit " << limit << ", use --force)\n";
    return false;
  }

  Record record(int n, std::optional<std::uint64_t> seed, const std::string& algorithm, const StabilityReport& r,
                std::optional<std::int64_t> bound, double ms) const {
    return {family_, n, seed, algorithm, r.stab, r.ins, bound, timing_ ? std::optional(ms) : std::nullopt};
  }

  // verify -------------------------------------------------------------------

  void setup_verify(CLI::App& app) {
    auto* sub = app.add_subcommand("verify", "Check a property of an instance family and print PASS or FAIL");
    sub->add_option("--family", family_, "gadget2 | adversarial | amsm | embed | kann")
        ->required()
        ->check(CLI::IsMember({"gadget2", "adversarial", "amsm", "embed", "kann"}));
    sub->add_option("--n", n_, "Size (m for embed)");
    sub->add_option("--seed", seed_, "Random seed")->capture_default_str();
    sub->add_option("--in", input_, "Formula file for kann");
    sub->add_option("--limit", limit_, "Exact solver size limit");
    sub->add_flag("--force", force_, "Run exact solvers above their size limit");
    sub->callback([this] { action_ = [this] { return verify(); }; });
  }

  int verdict(bool ok, const std::string& what) {
    out_ << (ok ? "PASS " : "FAIL ") << what << "\n";
    return ok ? kOk : kVerifyFailed;
  }

  /// Minimum instability over all (n!)^2 marriages.
  std::uint64_t min_ins(const GsmInstance& inst) {
    const int limit = force_ ? inst.size() : static_cast<int>(limit_.value_or(kMsmDefaultLimit));
    const MsmResult r = msm_opt(inst, limit);
    return static_cast<std::uint64_t>(inst.size()) * inst.size() * inst.size() - r.stab;
  }

  int verify() {
    if (family_ == "gadget2") {
      const std::uint64_t least = min_ins(gen_gadget2());
      return verdict(least >= 1, "gadget2 min-ins=" + std::to_string(least) + " >= 1 over 4 marriages");
    }
    if (family_ == "kann") return verify_kann();
    if (!n_) fail(ErrorKind::ParseError, "verify " + family_ + " needs --n");
    const int n = *n_;
    if (family_ == "adversarial") {
      const std::uint64_t least = min_ins(gen_adversarial(n));
      const auto need = static_cast<std::uint64_t>(ceil_div(std::int64_t{n} * n * n, 128));
      return verdict(least >= need, "adversarial n=" + std::to_string(n) + " min-ins=" + std::to_string(least) +
                                        " >= " + std::to_string(need));
    }
    if (family_ == "amsm") {
      const AmsmResult r = amsm(gen_random(n, seed_));
      int violations = 0;
      for (const AmsmStep& s : r.steps) {
        if (static_cast<std::int64_t>(s.stable_set_size) < amsm_step_lower_bound(s.remaining)) ++violations;
      }
      const bool ok = violations == 0 && static_cast<std::int64_t>(r.report.ins) <= amsm_ins_bound(n);
      return verdict(ok, "amsm n=" + std::to_string(n) + " seed=" + std::to_string(seed_) +
                             " step-violations=" + std::to_string(violations) + " ins=" +
                             std::to_string(r.report.ins) + " <= " + std::to_string(amsm_ins_bound(n)));
    }
    if (family_ == "embed") {
      const DmInstance dm = gen_random_3dm_planted(n, n, seed_);
      const Embedding emb = embed_3dm(dm);
      const Max3dmResult pm = max_3dm(dm);
      const Marriage w = witness_marriage(dm, emb.layout, pm.edges);
      const StabilityReport r = stability_report_gsm(emb.instance, w);
      return verdict(r.ins == 0, "embed m=" + std::to_string(n) + " seed=" + std::to_string(seed_) +
                                     " witness ins=" + std::to_string(r.ins) + " stab=" + std::to_string(r.stab));
    }
    fail(ErrorKind::ParseError, "unknown verify family '" + family_ + "'");
  }

  int verify_kann() {
    if (!input_) fail(ErrorKind::ParseError, "verify kann needs --in");
    const auto formula = io::parse_as<SatBFormula>(io::read_file(*input_));
    const Reduction red = sat_to_3dm3(formula);
    const Max3dmResult best = max_3dm(red.instance);
    const int opt = max_satisfiable(formula).first;
    const int uncovered = uncovered_count(red.instance, best.edges);
    const int expected = 6 * (formula.clause_count() - opt);
    return verdict(uncovered == expected, "kann uncovered=" + std::to_string(uncovered) + " expected=" +
                                              std::to_string(expected) + " opt=" + std::to_string(opt) + "/" +
                                              std::to_string(formula.clause_count()));
  }

  std::ostream& out_;
  std::ostream& err_;
  ReportFormat format_ = ReportFormat::Table;
  std::function<int()> action_;

  std::string family_ = "random";
  std::optional<int> n_;
  std::string n_spec_;
  std::uint64_t seed_ = 1;
  int seeds_ = 1;
  int extra_ = 0;
  std::optional<std::string> input_;
  std::optional<std::string> output_;
  std::optional<std::string> layout_path_;
  std::string instance_path_;
  std::string solution_path_;
  std::string mode_ = "msm";
  std::optional<std::int64_t> limit_;
  std::vector<std::string> algorithms_;
  bool json_files_ = false;
  bool list_ = false;
  bool force_ = false;
  bool timing_ = false;
  bool symmetrize_ = false;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return Program(out, err).run(argc, argv);
}

}  // namespace tristable::cli

#endif  // TRISTABLE_CLI_HPP
