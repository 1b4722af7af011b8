// Batch CLI for corona constructions, tree classification, and the
// exhaustive equivalence sweep.
//
// Exit codes: 0 success (PASS for verify), 1 negative result or FAIL,
// 2 input parse error, 3 invalid partition, 4 input is not a tree,
// 5 precondition or bound violation.

#include <atomic>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "corona/characterize.hpp"
#include "corona/corona_ops.hpp"
#include "corona/domination.hpp"
#include "corona/io.hpp"
#include "corona/sampling.hpp"
#include "corona/subdivision.hpp"
#include "corona/tree_enum.hpp"

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitParse = 2;
constexpr int kExitPartition = 3;
constexpr int kExitNotTree = 4;
constexpr int kExitPrecondition = 5;

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  int open(const std::string& path) {
    if (path.empty()) return 0;
    file.open(path);
    if (!file) {
      std::cerr << "error: cannot open output file " << path << '\n';
      return kExitParse;
    }
    stream = &file;
    return 0;
  }
  std::ostream& out() { return *stream; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_corona(const std::string& graph_path, const std::string& partition_path,
               const std::string& format, const std::string& output_path) {
  corona::Graph g;
  corona::NeighborhoodPartition p;
  try {
    g = corona::parse_edge_list_file(graph_path);
    p = corona::parse_partition_json(read_file(partition_path), g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  if (auto violation = corona::validate_partition(g, p)) {
    std::cerr << "error: invalid partition: " << *violation << '\n';
    return kExitPartition;
  }
  corona::CoronaGraph product = corona::general_corona(g, p);
  Output output;
  if (int rc = output.open(output_path)) return rc;
  if (format == "json")
    output.out() << corona::corona_to_json(product) << '\n';
  else if (format == "dot")
    output.out() << corona::to_dot(product.graph, "corona");
  else
    output.out() << corona::to_edge_list_text(product.graph);
  return 0;
}

int load_tree(const std::string& path, corona::Graph& t) {
  try {
    t = corona::parse_edge_list_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  if (!corona::is_tree(t)) {
    std::cerr << "error: input graph is not a tree\n";
    return kExitNotTree;
  }
  return 0;
}

int run_classify(const std::string& graph_path, int max_k,
                 const std::string& output_path) {
  corona::Graph t;
  if (int rc = load_tree(graph_path, t)) return rc;
  if (t.n < 3) {
    std::cerr << "error: classification requires at least 3 vertices\n";
    return kExitPrecondition;
  }
  std::optional<int> sd = corona::subdivision_number(t, max_k);
  if (!sd) {
    std::cerr << "error: subdivision number exceeds " << max_k << '\n';
    return kExitNegative;
  }
  Output output;
  if (int rc = output.open(output_path)) return rc;
  output.out() << 'S' << *sd << " sd=" << *sd << '\n';
  return 0;
}

int run_recognize(const std::string& graph_path,
                  const std::string& output_path) {
  corona::Graph t;
  if (int rc = load_tree(graph_path, t)) return rc;
  if (t.n < 3) {
    std::cerr << "error: recognition requires at least 3 vertices\n";
    return kExitPrecondition;
  }
  Output output;
  if (int rc = output.open(output_path)) return rc;
  auto witness = corona::recognize_general_corona(t);
  if (!witness) {
    output.out() << "not a general corona\n";
    return kExitNegative;
  }
  output.out() << corona::witness_to_json(*witness) << '\n';
  return 0;
}

int run_verify(int n_max, int jobs, const std::string& output_path) {
  if (n_max < 3 || n_max > 20) {
    std::cerr << "error: --n-max must be in 3..20\n";
    return kExitPrecondition;
  }
  if (jobs < 1) {
    std::cerr << "error: --jobs must be positive\n";
    return kExitPrecondition;
  }
  Output output;
  if (int rc = output.open(output_path)) return rc;

  corona::FamilyClosure closure(n_max);
  bool pass = true;
  std::ostringstream summary;
  long total = 0;
  for (int n = 3; n <= n_max; ++n) {
    long trees = 0, members = 0;
    corona::TreeStream stream(n);
    bool drained = false;
    while (!drained) {
      std::vector<corona::Graph> batch;
      batch.reserve(256);
      while (batch.size() < 256) {
        auto t = stream.next();
        if (!t) {
          drained = true;
          break;
        }
        batch.push_back(std::move(*t));
      }
      std::vector<corona::ClassReport> reports(batch.size());
      if (jobs == 1) {
        for (std::size_t i = 0; i < batch.size(); ++i)
          reports[i] = corona::verify_equivalences(batch[i], closure);
      } else {
        std::atomic<std::size_t> cursor{0};
        auto work = [&] {
          for (std::size_t i; (i = cursor.fetch_add(1)) < batch.size();)
            reports[i] = corona::verify_equivalences(batch[i], closure);
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(work);
        for (auto& worker : pool) worker.join();
      }
      for (const auto& report : reports) {
        output.out() << corona::report_to_json_line(report) << '\n';
        pass = pass && corona::report_consistent(report);
        ++trees;
        if (report.cond_sd3) ++members;
      }
    }
    total += trees;
    summary << (n > 3 ? "," : "") << "{\"n\":" << n << ",\"trees\":" << trees
            << ",\"s3\":" << members << "}";
  }
  output.out() << "{\"summary\":[" << summary.str() << "],\"total\":" << total
               << ",\"pass\":" << (pass ? "true" : "false") << "}\n";
  return pass ? 0 : kExitNegative;
}

int run_enumerate(int n, const std::string& format,
                  const std::string& output_path) {
  if (n < 1 || n > 20) {
    std::cerr << "error: --n must be in 1..20\n";
    return kExitPrecondition;
  }
  Output output;
  if (int rc = output.open(output_path)) return rc;
  corona::TreeStream stream(n);
  bool first = true;
  while (auto t = stream.next()) {
    if (!first) output.out() << '\n';
    first = false;
    if (format == "dot")
      output.out() << corona::to_dot(*t);
    else
      output.out() << corona::to_edge_list_text(*t);
  }
  return 0;
}

int run_selfcheck(std::uint64_t seed, int count, int n_max,
                  const std::string& output_path) {
  if (n_max < 2 || n_max > 10) {
    std::cerr << "error: --n-max must be in 2..10 for selfcheck\n";
    return kExitPrecondition;
  }
  Output output;
  if (int rc = output.open(output_path)) return rc;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(2, n_max);
  for (int round = 0; round < count; ++round) {
    corona::Graph base = corona::random_tree(order(rng), rng);
    corona::NeighborhoodPartition p = corona::random_partition(base, rng);
    corona::CoronaGraph c = corona::general_corona(base, p);
    int block_total = 0;
    for (const auto& family : p.blocks)
      block_total += static_cast<int>(family.size());
    corona::Graph product = c.graph;
    product.tags.clear();

    auto fail = [&](const std::string& what) {
      output.out() << "selfcheck FAIL at case " << round << ": " << what
                   << " (seed=" << seed << ")\n";
      return kExitNegative;
    };
    if (c.graph.n != base.n + block_total || c.graph.m != base.m + block_total)
      return fail("counting identity");
    corona::VertexSet ext = corona::external_vertices(c);
    if (!corona::is_dominating(c.graph, ext)) return fail("Ext dominating");
    if (!corona::is_2packing(c.graph, ext)) return fail("Ext 2-packing");
    corona::VertexSet leaf_set = corona::leaves(c.graph);
    if (!std::includes(ext.begin(), ext.end(), leaf_set.begin(),
                       leaf_set.end()))
      return fail("Ext contains leaves");
    if (corona::domination_number(c.graph) != base.n)
      return fail("gamma equals base order");
    auto witness = corona::recognize_general_corona(product);
    if (!witness || !corona::verify_witness(product, *witness).ok)
      return fail("recognition round trip");
  }
  output.out() << "selfcheck: " << count
               << " random coronas, all invariants hold (seed=" << seed
               << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"general corona toolkit"};
  app.require_subcommand(1);

  std::string graph_path, partition_path, output_path;
  std::string format = "text";
  int n_max = 12, max_k = 3, jobs = 1, n = 1, count = 200;
  std::uint64_t seed = 1;

  CLI::App* corona_cmd =
      app.add_subcommand("corona", "build a general corona from files");
  corona_cmd->add_option("graph", graph_path, "edge-list file")->required();
  corona_cmd->add_option("partition", partition_path, "partition JSON file")
      ->required();
  corona_cmd->add_option("--format", format, "text|json|dot");
  corona_cmd->add_option("--output", output_path, "write to file");

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "domination subdivision class of a tree");
  classify_cmd->add_option("graph", graph_path, "edge-list file")->required();
  classify_cmd->add_option("--max-k", max_k, "search bound (default 3)");
  classify_cmd->add_option("--output", output_path, "write to file");

  CLI::App* recognize_cmd =
      app.add_subcommand("recognize", "corona witness of a tree, if any");
  recognize_cmd->add_option("graph", graph_path, "edge-list file")->required();
  recognize_cmd->add_option("--output", output_path, "write to file");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "equivalence sweep over all trees with 3 <= n <= n-max");
  verify_cmd->add_option("--n-max", n_max, "largest order (3..20)");
  verify_cmd->add_option("--jobs", jobs, "worker count (1 = sequential)");
  verify_cmd->add_option("--output", output_path, "write to file");

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "stream all free trees on n vertices");
  enumerate_cmd->add_option("--n", n, "order (1..20)")->required();
  enumerate_cmd->add_option("--format", format, "edgelist|dot");
  enumerate_cmd->add_option("--output", output_path, "write to file");

  CLI::App* selfcheck_cmd = app.add_subcommand(
      "selfcheck", "randomized invariant checks on random coronas");
  selfcheck_cmd->add_option("--seed", seed, "RNG seed");
  selfcheck_cmd->add_option("--count", count, "number of cases");
  int selfcheck_n_max = 10;
  selfcheck_cmd->add_option("--n-max", selfcheck_n_max,
                            "largest base order (2..10)");
  selfcheck_cmd->add_option("--output", output_path, "write to file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (corona_cmd->parsed())
      return run_corona(graph_path, partition_path, format, output_path);
    if (classify_cmd->parsed())
      return run_classify(graph_path, max_k, output_path);
    if (recognize_cmd->parsed()) return run_recognize(graph_path, output_path);
    if (verify_cmd->parsed()) return run_verify(n_max, jobs, output_path);
    if (enumerate_cmd->parsed()) return run_enumerate(n, format, output_path);
    if (selfcheck_cmd->parsed())
      return run_selfcheck(seed, count, selfcheck_n_max, output_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return 0;
}
