#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "wittkit/pipeline.hpp"

namespace {

using wittkit::Json;

Json load_input_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file: " + path);
  try {
    Json j;
    f >> j;
    return j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

void emit(const Json& report, bool pretty) {
  if (pretty) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << report.dump() << "\n";
  }
}

struct CommonFlags {
  std::string input_path;
  int n_max = 10;
  long search_bound = 10000;
  bool n_max_set = false;
  bool search_bound_set = false;
};

wittkit::ProblemInput read_problem(const CommonFlags& flags) {
  wittkit::ProblemInput in = wittkit::parse_input(load_input_file(flags.input_path));
  if (flags.n_max_set) in.options.n_max = flags.n_max;
  if (flags.search_bound_set) in.options.search_bound = flags.search_bound;
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Witt decompositions and families of maximal totally "
               "isotropic subspaces of rational quadratic spaces, with "
               "certified height bounds"};
  app.require_subcommand(1);
  bool pretty = false;

  CommonFlags flags;
  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    cmd->add_flag("--pretty,!--json", pretty, "human-readable JSON (default: compact)");
    if (needs_input) cmd->add_option("--input", flags.input_path, "problem JSON file")->required();
    cmd->add_option("--n-max", flags.n_max, "largest family index n")
        ->each([&](const std::string&) { flags.n_max_set = true; });
    cmd->add_option("--search-bound", flags.search_bound, "isotropic search bound")
        ->each([&](const std::string&) { flags.search_bound_set = true; });
  };

  CLI::App* analyze = app.add_subcommand("analyze", "space invariants and heights");
  add_common(analyze, true);
  CLI::App* witt = app.add_subcommand("witt", "Witt decomposition with height-bound checks");
  add_common(witt, true);
  CLI::App* fam = app.add_subcommand("family", "isotropic-subspace family construction and verification");
  add_common(fam, true);
  CLI::App* verify = app.add_subcommand("verify", "full pipeline: analyze + witt + bounds + family");
  add_common(verify, true);

  CLI::App* consts = app.add_subcommand("constants", "evaluate the bound constants");
  int c_n = 3, c_l = 3, c_omega = 1, c_r = 3, c_j = 1;
  std::string field_spec;
  consts->add_option("--N", c_n, "ambient dimension")->required();
  consts->add_option("--L", c_l, "space dimension")->required();
  consts->add_option("--omega", c_omega, "witt index")->required();
  consts->add_option("--r", c_r, "rank")->required();
  consts->add_option("--J", c_j, "anisotropic dimension")->required();
  consts->add_option("--field", field_spec, "number field parameters d,disc,r1,r2,wK (default: rationals)");
  consts->add_flag("--pretty,!--json", pretty, "human-readable JSON (default: compact)");

  CLI::App* corpus = app.add_subcommand("corpus", "seeded random corpus run");
  unsigned long seed = 42;
  int corpus_size = 50;
  corpus->add_option("--seed", seed, "corpus seed");
  corpus->add_option("--corpus-size", corpus_size, "number of instances");
  add_common(corpus, false);

  CLI11_PARSE(app, argc, argv);

  try {
    Json report;
    if (*analyze) {
      report = wittkit::run_analyze(read_problem(flags));
    } else if (*witt) {
      report = wittkit::run_witt(read_problem(flags));
    } else if (*fam) {
      report = wittkit::run_family(read_problem(flags));
    } else if (*verify) {
      report = wittkit::run_verify(read_problem(flags));
    } else if (*consts) {
      wittkit::constants::FieldParams params = wittkit::constants::FieldParams::rationals();
      if (!field_spec.empty()) {
        std::vector<std::string> parts;
        std::stringstream ss(field_spec);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(item);
        if (parts.size() != 5) throw std::invalid_argument("--field expects d,disc,r1,r2,wK");
        params.degree = std::stoi(parts[0]);
        params.disc_abs = wittkit::Int(parts[1]);
        params.real_embeddings = std::stoi(parts[2]);
        params.complex_pairs = std::stoi(parts[3]);
        params.roots_of_unity = std::stoi(parts[4]);
      }
      report = wittkit::run_constants(c_n, c_l, c_omega, c_r, c_j, params);
    } else if (*corpus) {
      wittkit::RunOptions options;
      options.seed = seed;
      options.corpus_size = corpus_size;
      if (flags.n_max_set) options.n_max = flags.n_max;
      if (flags.search_bound_set) options.search_bound = flags.search_bound;
      report = wittkit::run_corpus(options);
    }
    emit(report, pretty);
    return wittkit::report_passed(report) ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
