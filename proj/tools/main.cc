// Copyright 2026 The Horizon Authors
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

#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "spdlog/sinks/stdout_color_sinks.h"
#include "spdlog/spdlog.h"

namespace {

using horizon::tools::CommonArgs;
using horizon::tools::QueryArgs;

struct Flags {
  std::string config_path;
  std::string corpus;
  std::string out;
  std::string backend;
  std::optional<std::uint64_t> seed;
  std::optional<double> alpha;
  std::optional<double> tau;
  std::optional<int> window;
  bool verbose = false;
};

void AddCommonFlags(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config_path, "JSON configuration file");
  app->add_option("--corpus", f.corpus, "Corpus directory or documents .jsonl file");
  app->add_option("--out", f.out, "Output file or directory");
  app->add_option("--backend", f.backend, "Reasoning backend")
      ->check(CLI::IsMember({"oracle", "http"}));
  app->add_option("--seed", f.seed, "Random seed");
  app->add_option("--alpha", f.alpha, "Keyword weight in chunk scoring");
  app->add_option("--tau", f.tau, "Focus threshold");
  app->add_option("--window", f.window, "Chunk window in sentences");
  app->add_flag("-v,--verbose", f.verbose, "Debug logging");
}

CommonArgs Resolve(const Flags& f) {
  CommonArgs c;
  c.config = f.config_path.empty() ? horizon::service::Config()
                                   : horizon::service::Config::LoadFile(f.config_path);
  c.config.ApplyProcessEnvironment();
  if (!f.backend.empty()) c.config.backend.kind = f.backend;
  if (f.seed) c.config.seed = *f.seed;
  if (f.alpha) c.config.extraction.alpha = *f.alpha;
  if (f.tau) c.config.extraction.tau = *f.tau;
  if (f.window) c.config.extraction.window = *f.window;
  c.config.Validate();
  c.corpus = f.corpus;
  c.out = f.out;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_st("horizon"));
  spdlog::set_level(spdlog::level::warn);

  CLI::App app{"Query-aware content expiration"};
  app.require_subcommand(1);
  Flags flags;
  QueryArgs query;
  bool include_rankings = false;
  std::string save_corpus;

  auto* extract = app.add_subcommand("extract", "List the focused chunks for a query");
  auto* infer = app.add_subcommand("infer", "Infer the expiration threshold for a query");
  for (auto* sub : {extract, infer}) {
    AddCommonFlags(sub, flags);
    sub->add_option("--query", query.query, "Query text")->required();
    sub->add_option("--search-time", query.search_time, "Search day, YYYY-MM-DD");
  }
  auto* eval = app.add_subcommand("eval", "Offline evaluation against the 30-day baseline");
  AddCommonFlags(eval, flags);
  eval->add_flag("--rankings", include_rankings, "Include ranked lists in report.json");
  eval->add_option("--save-corpus", save_corpus, "Write the evaluated corpus to a directory");
  auto* cache_build = app.add_subcommand("cache-build", "Precompute thresholds into a cache file");
  AddCommonFlags(cache_build, flags);
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  AddCommonFlags(serve, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? horizon::tools::kExitOk : horizon::tools::kExitUsage;
  }
  if (flags.verbose) spdlog::set_level(spdlog::level::debug);
  if (serve->parsed()) spdlog::set_level(flags.verbose ? spdlog::level::debug : spdlog::level::info);

  try {
    const CommonArgs common = Resolve(flags);
    if (extract->parsed()) return horizon::tools::RunExtract(common, query, std::cout);
    if (infer->parsed()) return horizon::tools::RunInfer(common, query, std::cout);
    if (eval->parsed()) return horizon::tools::RunEval(common, include_rankings, save_corpus, std::cout);
    if (cache_build->parsed()) return horizon::tools::RunCacheBuild(common, std::cout);
    return horizon::tools::RunServe(common);
  } catch (const horizon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return horizon::tools::ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return horizon::tools::kExitData;
  }
}
