#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "wittkit/constants.hpp"
#include "wittkit/family.hpp"
#include "wittkit/quadspace.hpp"

namespace wittkit {

using Json = nlohmann::ordered_json;

struct RunOptions {
  int n_max = 10;
  long search_bound = 10000;
  unsigned long seed = 42;
  int corpus_size = 50;
};

/// Parsed problem instance: ambient Gram matrix plus an optional subspace
/// basis (absent means the whole space).
struct ProblemInput {
  size_t ambient = 0;
  Mat gram;
  std::optional<Mat> basis;  // N x L, columns are basis vectors
  RunOptions options;
};

ProblemInput parse_input(const Json& j);
Json input_to_json(const ProblemInput& in);
QuadraticSpace make_space(const ProblemInput& in);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json mat_rows_to_json(const Mat& m);
Json subspace_to_json(const Subspace& s);
Json witt_to_json(const WittDecomposition& w);
Json bounds_to_json(const DecompositionBounds& b);
Json family_to_json(const family::BuildResult& built, const family::FamilyReport& report);

/// lambda, rank, witt index and the instance heights.
Json run_analyze(const ProblemInput& in);
/// Decomposition plus its height-bound checks.
Json run_witt(const ProblemInput& in);
/// Full family pipeline; "supported" is false (without failing) when the
/// instance has rank < 3 or witt index 0.
Json run_family(const ProblemInput& in);
/// Everything: analyze + witt + bounds + family.
Json run_verify(const ProblemInput& in);

Json run_constants(int ambient, int space_dim, int witt_index, int rank, int aniso_dim,
                   const constants::FieldParams& params);

/// Deterministic pseudo-random instance stream for corpus runs. The raw
/// engine output is reduced by hand so streams are identical across
/// platforms.
class CorpusRng {
 public:
  explicit CorpusRng(unsigned long seed) : state_(seed) {}
  unsigned long next();
  long uniform(long lo, long hi);
  Rat rational(long num_bound, long den_bound);

 private:
  unsigned long long state_;
};

/// One seeded corpus instance: random symmetric Gram with bounded entries,
/// occasionally a proper subspace.
ProblemInput corpus_instance(CorpusRng& rng, int id, const RunOptions& base);

/// Runs the family pipeline over a seeded corpus and aggregates pass rates.
/// Deterministic: identical seeds produce byte-identical reports.
Json run_corpus(const RunOptions& options);

/// True when the report's hard checks all passed (exit-code contract).
bool report_passed(const Json& report);

}  // namespace wittkit
