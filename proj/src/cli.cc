/*
 * Copyright 2026 The seg-eval Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "segeval/cli.h"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "segeval/evaluate.h"
#include "segeval/ingest.h"
#include "segeval/report.h"

namespace segeval {
namespace {

constexpr const char* kFormats = R"(File formats (whitespace separated, '#' comments, times in seconds):
  qrel:     <query> Q0 <video> <start> <end> <relevance>
            relevance is an integer; > 0 is relevant, <= 0 judged non-relevant
  ranking:  <query> Q0 <video> <start> <end> <rank> <score> <run_tag>
            results are ordered by descending score, ties in file order

Exit codes: 0 ok, 2 usage or unreadable file, 3 malformed input,
            4 no query both judged and retrieved, 5 warning under --strict)";

struct Options {
  std::string qrel_path;
  std::string run_path;
  double bin_size = 60.0;
  std::string bin_rule = "start";
  double tolerance = 10.0;
  std::vector<int> precision_cutoffs{5, 10, 20};
  std::vector<int> judged_cutoffs{10, 20, 30};
  bool per_query = false;
  std::string format = "tsv";
  bool strict = false;
  unsigned jobs = 1;
};

std::string ShortNumber(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string JoinInts(const std::vector<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  Options opt;
  CLI::App app{"Segment-based retrieval evaluation under overlap, binned and "
               "tolerance-to-irrelevance relevance models.",
               "seg-eval"};
  app.add_option("qrel", opt.qrel_path, "Relevance judgments")->required();
  app.add_option("ranking", opt.run_path, "System results")->required();
  app.add_option("--bin-size", opt.bin_size, "Bin width in seconds (_bin)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--bin-rule", opt.bin_rule,
                 "Relevant bins: 'start' = bin of a judgment's start time, "
                 "'extent' = every bin a judgment overlaps")
      ->capture_default_str()
      ->check(CLI::IsMember({"start", "extent"}));
  app.add_option("--tolerance", opt.tolerance,
                 "Watched window in seconds (_tol)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--precision-cutoffs", opt.precision_cutoffs,
                 "Comma-separated cutoffs for P_n")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--judged-cutoffs", opt.judged_cutoffs,
                 "Comma-separated cutoffs for Judged_n")
      ->delimiter(',')
      ->capture_default_str();
  app.add_flag("-q,--per-query", opt.per_query,
               "Also print one block per query before the 'all' rows");
  app.add_option("--format", opt.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"tsv", "json"}));
  app.add_flag("--strict", opt.strict, "Treat warnings as errors");
  app.add_option("-j,--jobs", opt.jobs,
                 "Worker threads for scoring (0 = all cores)")
      ->capture_default_str();
  app.footer(kFormats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "seg-eval: error: " << e.what() << "\n";
    return kExitUsage;
  }

  EvalConfig cfg;
  cfg.bin.bin_size = opt.bin_size;
  cfg.bin.rule = opt.bin_rule == "extent" ? BinRule::kExtent : BinRule::kStart;
  cfg.tolerance.window = opt.tolerance;
  cfg.cutoffs.precision = opt.precision_cutoffs;
  cfg.cutoffs.judged = opt.judged_cutoffs;
  try {
    Validate(cfg.cutoffs);
  } catch (const std::invalid_argument& e) {
    err << "seg-eval: error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ifstream qrel_in(opt.qrel_path);
  if (!qrel_in) {
    err << "seg-eval: error: cannot open qrel file '" << opt.qrel_path << "'\n";
    return kExitUsage;
  }
  std::ifstream run_in(opt.run_path);
  if (!run_in) {
    err << "seg-eval: error: cannot open ranking file '" << opt.run_path
        << "'\n";
    return kExitUsage;
  }

  JudgmentPool pool;
  std::vector<RankedList> runs;
  try {
    pool = ParseQrel(qrel_in);
  } catch (const ParseError& e) {
    err << "seg-eval: error: " << opt.qrel_path << ": " << e.what() << "\n";
    return kExitParse;
  }
  try {
    runs = ParseRun(run_in);
  } catch (const ParseError& e) {
    err << "seg-eval: error: " << opt.run_path << ": " << e.what() << "\n";
    return kExitParse;
  }

  Evaluation evaluation;
  try {
    evaluation = Evaluate(pool, runs, cfg, opt.jobs);
  } catch (const NoEvaluableQueriesError& e) {
    err << "seg-eval: error: " << e.what() << "\n";
    return kExitNoQueries;
  }
  if (opt.strict && !evaluation.warnings.empty()) {
    err << "seg-eval: error: " << evaluation.warnings.front() << "\n";
    return kExitStrict;
  }
  for (const std::string& warning : evaluation.warnings) {
    err << "seg-eval: warning: " << warning << "\n";
  }

  const ReportHeader header = {
      {"bin_size", ShortNumber(cfg.bin.bin_size)},
      {"bin_rule", opt.bin_rule},
      {"tolerance", ShortNumber(cfg.tolerance.window)},
      {"precision_cutoffs", JoinInts(cfg.cutoffs.precision)},
      {"judged_cutoffs", JoinInts(cfg.cutoffs.judged)},
  };
  const auto rows = BuildRows(evaluation, cfg.cutoffs, opt.per_query);
  out << Render(rows, opt.format == "json" ? Format::kJson : Format::kTsv,
                header);
  out.flush();
  return kExitOk;
}

}  // namespace segeval
