// Copyright 2026 The csm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// csm run  - benchmark algorithms over a graph, a stream and a query set
// csm gen  - stream sampling, relabeling and query extraction

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csm/graph_io.h"
#include "csm/harness.h"
#include "csm/query.h"
#include "csm/strategy_factory.h"
#include "csm/workload.h"

namespace {

uint64_t effective_seed(uint64_t flag) {
  if (const char* env = std::getenv("CSM_SEED")) return std::strtoull(env, nullptr, 10);
  return flag;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw csm::Error("cannot write " + path);
  return out;
}

struct RunArgs {
  std::string graph, stream, report, semantics = "homo";
  std::vector<std::string> queries, algos;
  double time_limit = 60;
  uint64_t max_results = 0;
  double hard_threshold = 1e9;
  int root = -1;
  size_t memory_cap = 10'000'000;
};

int run(const RunArgs& a) {
  csm::IdMap ids;
  csm::LabeledGraph g = csm::load_graph(a.graph, &ids);
  csm::UpdateStream stream = a.stream.empty() ? csm::UpdateStream{} : csm::load_stream(a.stream, ids);

  csm::BenchmarkConfig cfg;
  cfg.semantics = a.semantics == "iso" ? csm::Semantics::kIsomorphism : csm::Semantics::kHomomorphism;
  cfg.time_limit_s = a.time_limit;
  cfg.max_results = a.max_results;
  cfg.hard_unsolved_results = a.hard_threshold;
  cfg.options.memory_cap = a.memory_cap;
  if (a.root >= 0) cfg.options.root = static_cast<csm::QVertex>(a.root);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!a.report.empty()) {
    file = open_out(a.report);
    out = &file;
  }
  csm::write_csv_header(*out);
  int failures = 0;
  for (const std::string& path : a.queries) {
    const csm::QueryGraph q = csm::QueryGraph::load(path);
    const std::string id = std::filesystem::path(path).stem().string();
    for (const std::string& algo : a.algos) {
      try {
        csm::write_csv_row(*out, csm::run_query(id, q, g, stream, algo, cfg));
      } catch (const csm::CapabilityError& e) {
        std::cerr << "skip " << id << " / " << algo << ": " << e.what() << "\n";
        ++failures;
      }
    }
  }
  return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous subgraph matching engine"};
  app.require_subcommand(1);

  RunArgs ra;
  auto* run_cmd = app.add_subcommand("run", "Run algorithms and write a metrics CSV");
  run_cmd->add_option("--graph", ra.graph, "Initial data graph")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--stream", ra.stream, "Update stream")->check(CLI::ExistingFile);
  run_cmd->add_option("--query", ra.queries, "Query file (repeatable)")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--algo", ra.algos, "Algorithms")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember(csm::strategy_names()));
  run_cmd->add_option("--semantics", ra.semantics)->check(CLI::IsMember({"homo", "iso"}));
  run_cmd->add_option("--time-limit", ra.time_limit, "Seconds of online processing per run");
  run_cmd->add_option("--max-results", ra.max_results, "Stop each update after N results (0: all)");
  run_cmd->add_option("--hard-threshold", ra.hard_threshold, "Result count below which unsolved is hard");
  run_cmd->add_option("--root", ra.root, "Force the index root query vertex");
  run_cmd->add_option("--memory-cap", ra.memory_cap, "Tuple cap for cached join results");
  run_cmd->add_option("--report", ra.report, "CSV output (default stdout)");

  auto* gen = app.add_subcommand("gen", "Generate workloads");
  gen->require_subcommand(1);
  uint64_t seed = 1;
  std::string graph_in;

  auto* gen_stream = gen->add_subcommand("stream", "Split a graph into initial graph and stream");
  double rate = 0.1;
  std::string mode = "suffix", op = "insert", out_graph, out_stream;
  gen_stream->add_option("--graph", graph_in)->required()->check(CLI::ExistingFile);
  gen_stream->add_option("--rate", rate, "Fraction of edges in the stream");
  gen_stream->add_option("--mode", mode)->check(CLI::IsMember({"suffix", "random"}));
  gen_stream->add_option("--op", op)->check(CLI::IsMember({"insert", "delete"}));
  gen_stream->add_option("--seed", seed);
  gen_stream->add_option("--out-graph", out_graph)->required();
  gen_stream->add_option("--out-stream", out_stream)->required();

  auto* gen_labels = gen->add_subcommand("labels", "Relabel vertices");
  size_t label_count = 4;
  std::string dist = "uniform", out_labeled;
  gen_labels->add_option("--graph", graph_in)->required()->check(CLI::ExistingFile);
  gen_labels->add_option("--labels", label_count)->check(CLI::PositiveNumber);
  gen_labels->add_option("--dist", dist)->check(CLI::IsMember({"uniform", "linear", "zipf", "zipfian"}));
  gen_labels->add_option("--seed", seed);
  gen_labels->add_option("--out", out_labeled)->required();

  auto* gen_queries = gen->add_subcommand("queries", "Extract queries by random walks");
  std::string shape = "tree", out_dir;
  size_t size = 4, count = 10;
  gen_queries->add_option("--graph", graph_in)->required()->check(CLI::ExistingFile);
  gen_queries->add_option("--shape", shape)->check(CLI::IsMember({"tree", "sparse", "dense", "path", "star", "cycle"}));
  gen_queries->add_option("--size", size);
  gen_queries->add_option("--count", count);
  gen_queries->add_option("--seed", seed);
  gen_queries->add_option("--out-dir", out_dir)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return run(ra);
    const uint64_t s = effective_seed(seed);
    if (gen_stream->parsed()) {
      csm::GraphFile f = csm::read_graph_file(graph_in);
      auto sampled = csm::sample_stream(f.vertex_labels, f.edges, rate,
                                        mode == "random" ? csm::SampleMode::kRandom : csm::SampleMode::kSuffix,
                                        op == "delete" ? csm::Op::kDelete : csm::Op::kInsert, s);
      auto g_out = open_out(out_graph);
      csm::write_graph(g_out, sampled.initial);
      auto s_out = open_out(out_stream);
      csm::write_stream(s_out, sampled.stream);
    } else if (gen_labels->parsed()) {
      csm::GraphFile f = csm::read_graph_file(graph_in);
      auto labels = csm::assign_labels(f.vertex_labels.size(), label_count, *csm::parse_distribution(dist), s);
      auto out = open_out(out_labeled);
      csm::write_graph(out, labels, f.edges);
    } else if (gen_queries->parsed()) {
      csm::LabeledGraph g = csm::load_graph(graph_in);
      auto queries = csm::extract_queries(g, *csm::parse_shape(shape), size, count, s);
      std::filesystem::create_directories(out_dir);
      for (size_t i = 0; i < queries.size(); ++i) {
        auto out = open_out((std::filesystem::path(out_dir) / (shape + "_" + std::to_string(i) + ".txt")).string());
        csm::write_graph(out, queries[i].to_graph());
      }
      std::cerr << queries.size() << " of " << count << " queries extracted\n";
    }
  } catch (const csm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
