#include "wittkit/pipeline.hpp"

#include <algorithm>

#include "wittkit/heights.hpp"
#include "wittkit/smallbasis.hpp"

namespace wittkit {

namespace {

Mat mat_from_rows_json(const Json& j, size_t rows, size_t cols, const std::string& what) {
  if (!j.is_array() || j.size() != rows) {
    throw std::invalid_argument(what + " must be an array of " + std::to_string(rows) + " rows");
  }
  Mat m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols) {
      throw std::invalid_argument(what + " row " + std::to_string(i) + " must have " +
                                  std::to_string(cols) + " entries");
    }
    for (size_t k = 0; k < cols; ++k) {
      m.at(i, k) = parse_rational(row[k].get<std::string>());
    }
  }
  return m;
}

}  // namespace

ProblemInput parse_input(const Json& j) {
  ProblemInput in;
  if (!j.contains("N") || !j["N"].is_number_integer()) {
    throw std::invalid_argument("input needs an integer field N");
  }
  long n = j["N"].get<long>();
  if (n < 1) throw std::invalid_argument("N must be positive");
  in.ambient = static_cast<size_t>(n);
  if (!j.contains("gram")) throw std::invalid_argument("input needs a gram matrix");
  in.gram = mat_from_rows_json(j["gram"], in.ambient, in.ambient, "gram");
  if (!in.gram.is_symmetric()) throw std::invalid_argument("gram matrix must be symmetric");
  if (j.contains("subspace_basis") && !j["subspace_basis"].is_null()) {
    const Json& cols = j["subspace_basis"];
    if (!cols.is_array() || cols.empty()) {
      throw std::invalid_argument("subspace_basis must be a nonempty array of columns");
    }
    std::vector<Vec> columns;
    for (const Json& col : cols) {
      if (!col.is_array() || col.size() != in.ambient) {
        throw std::invalid_argument("subspace_basis columns must have N entries");
      }
      Vec v(in.ambient);
      for (size_t i = 0; i < in.ambient; ++i) v[i] = parse_rational(col[i].get<std::string>());
      columns.push_back(v);
    }
    Mat basis = Mat::from_columns(columns);
    if (rank(basis) != basis.cols()) throw std::invalid_argument("subspace basis is rank deficient");
    in.basis = basis;
  }
  if (j.contains("options")) {
    const Json& o = j["options"];
    if (o.contains("n_max")) in.options.n_max = o["n_max"].get<int>();
    if (o.contains("search_bound")) in.options.search_bound = o["search_bound"].get<long>();
    if (o.contains("seed")) in.options.seed = o["seed"].get<unsigned long>();
    if (o.contains("corpus_size")) in.options.corpus_size = o["corpus_size"].get<int>();
  }
  if (in.options.n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (in.options.search_bound < 1) throw std::invalid_argument("search_bound must be >= 1");
  return in;
}

Json input_to_json(const ProblemInput& in) {
  Json j;
  j["N"] = in.ambient;
  j["gram"] = mat_rows_to_json(in.gram);
  if (in.basis) {
    Json cols = Json::array();
    for (size_t c = 0; c < in.basis->cols(); ++c) cols.push_back(vec_to_json(in.basis->column(c)));
    j["subspace_basis"] = cols;
  }
  j["options"] = {{"n_max", in.options.n_max}, {"search_bound", in.options.search_bound}};
  return j;
}

QuadraticSpace make_space(const ProblemInput& in) {
  Subspace s = in.basis ? Subspace(in.ambient, *in.basis) : Subspace::full(in.ambient);
  return QuadraticSpace(in.gram, std::move(s));
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const Rat& c : v) out.push_back(rat_to_string(c));
  return out;
}

Vec vec_from_json(const Json& j) {
  Vec out;
  for (const Json& c : j) out.push_back(parse_rational(c.get<std::string>()));
  return out;
}

Json mat_rows_to_json(const Mat& m) {
  Json out = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

Json subspace_to_json(const Subspace& s) {
  Json j;
  j["ambient"] = s.ambient();
  Json cols = Json::array();
  for (size_t c = 0; c < s.dim(); ++c) cols.push_back(vec_to_json(s.basis().column(c)));
  j["basis"] = cols;
  j["height_sq"] = rat_to_string(s.height_sq());
  j["height_upper"] = UpperReal::from_sqrt_rat(s.height_sq()).upper_string();
  return j;
}

Json witt_to_json(const WittDecomposition& w) {
  Json j;
  j["lambda"] = w.radical_dim();
  j["witt_index"] = w.witt_index();
  j["aniso_dim"] = w.aniso_dim();
  j["rank"] = w.rank();
  j["radical"] = subspace_to_json(w.radical);
  Json pairs = Json::array();
  for (const HyperbolicPair& p : w.pairs) {
    pairs.push_back({{"x", vec_to_json(p.x)}, {"y", vec_to_json(p.y)}});
  }
  j["pairs"] = pairs;
  Json aniso = Json::array();
  for (const Vec& u : w.anisotropic) aniso.push_back(vec_to_json(u));
  j["anisotropic"] = aniso;
  j["certification"] = {{"kind", to_string(w.certificate.kind)},
                        {"bound", w.certificate.bound},
                        {"detail", w.certificate.detail},
                        {"search_bound_used", w.search_bound_used}};
  return j;
}

namespace {

Json bound_check_to_json(const BoundCheck& b) {
  return Json{{"lhs_sq", rat_to_string(b.lhs_sq)},
              {"rhs_sq_upper", b.rhs_sq.upper_string()},
              {"pass", b.pass}};
}

}  // namespace

Json bounds_to_json(const DecompositionBounds& b) {
  Json j;
  j["radical_bound"] = bound_check_to_json(b.radical_bound);
  if (b.component_bound) j["component_bound"] = bound_check_to_json(*b.component_bound);
  Json pairs = Json::array();
  for (const auto& [xb, yb] : b.pair_bounds) {
    pairs.push_back({{"x", bound_check_to_json(xb)}, {"y", bound_check_to_json(yb)}});
  }
  j["pair_bounds"] = pairs;
  j["pass"] = b.all_pass;
  return j;
}

Json family_to_json(const family::BuildResult& built, const family::FamilyReport& report) {
  Json j;
  j["mode"] = family::to_string(built.spec.mode);
  Json members = Json::array();
  for (const family::MemberResult& r : report.members) {
    const family::Member& m = built.members[r.member_index];
    Json e;
    if (built.spec.mode == family::Mode::SinglePlane) {
      e["indices"] = {{"n", m.n}, {"k", m.index.first}};
    } else if (m.index == std::pair<int, int>{0, 0}) {
      e["indices"] = {{"n", m.n}, {"completion", true}};
    } else {
      e["indices"] = {{"n", m.n}, {"i", m.index.first}, {"j", m.index.second}};
    }
    Json span = Json::array();
    for (const Vec& v : m.spanning) span.push_back(vec_to_json(v));
    e["spanning"] = span;
    e["basis"] = subspace_to_json(m.subspace)["basis"];
    e["height_sq"] = rat_to_string(m.height_sq);
    e["height_upper"] = UpperReal::from_sqrt_rat(m.height_sq).upper_string();
    e["bound_rhs_upper"] = r.bound_rhs_upper;
    e["bound_rhs_sq_upper"] = r.bound_rhs_sq_upper;
    e["isotropic"] = r.isotropic;
    e["dimension_ok"] = r.dimension_ok;
    e["bound_ok"] = r.bound_ok;
    e["chain_diagnostic_ok"] = r.chain_diagnostic_ok;
    e["pass"] = r.pass;
    members.push_back(e);
  }
  j["members"] = members;
  j["distinct_subspaces"] = report.distinct_subspaces;

  Json pw = Json::array();
  for (const family::PairwiseResult& p : report.pairwise) {
    pw.push_back({{"a", p.first}, {"b", p.second}, {"dim", p.dim}, {"in_range", p.in_range}});
  }
  j["pairwise"] = pw;

  Json spans = Json::array();
  for (const auto& [n, ok] : report.spanning) spans.push_back({{"n", n}, {"spans", ok}});
  j["spanning"] = spans;

  bool rescaled = false;
  for (const Rat& c : built.spec.rescalings) {
    if (c != 1) rescaled = true;
  }
  if (rescaled) {
    Json rs = Json::array();
    for (const Rat& c : built.spec.rescalings) rs.push_back(rat_to_string(c));
    j["pair_rescalings"] = rs;
  }
  j["table_diagnostics_clean"] = report.table_diagnostics_clean;
  j["pass"] = report.pass;
  return j;
}

Json run_analyze(const ProblemInput& in) {
  QuadraticSpace q = make_space(in);
  SearchOptions opts;
  opts.search_bound = in.options.search_bound;
  WittDecomposition w = witt_decompose(q, opts);
  Json j;
  j["input"] = input_to_json(in);
  j["lambda"] = w.radical_dim();
  j["rank"] = w.rank();
  j["witt_index"] = w.witt_index();
  j["gram_height"] = rat_to_string(*matrix_height(q.gram).value);
  j["space_height_sq"] = rat_to_string(q.space.height_sq());
  j["space_height_upper"] = UpperReal::from_sqrt_rat(q.space.height_sq()).upper_string();
  j["pass"] = true;
  return j;
}

Json run_witt(const ProblemInput& in) {
  QuadraticSpace q = make_space(in);
  SearchOptions opts;
  opts.search_bound = in.options.search_bound;
  WittDecomposition w = witt_decompose(q, opts);
  DecompositionBounds b = check_decomposition_bounds(w, q);
  Json j;
  j["input"] = input_to_json(in);
  j["witt"] = witt_to_json(w);
  j["bounds"] = bounds_to_json(b);
  j["pass"] = b.all_pass;
  return j;
}

Json run_family(const ProblemInput& in) {
  QuadraticSpace q = make_space(in);
  SearchOptions opts;
  opts.search_bound = in.options.search_bound;
  WittDecomposition w = witt_decompose(q, opts);
  Json j;
  j["input"] = input_to_json(in);
  j["witt"] = witt_to_json(w);
  if (w.rank() < 3 || w.witt_index() < 1) {
    j["family"] = {{"supported", false},
                   {"reason", w.rank() < 3 ? "rank < 3" : "witt index 0"}};
    j["pass"] = true;
    return j;
  }
  std::vector<int> n_range;
  for (int n = 1; n <= in.options.n_max; ++n) n_range.push_back(n);
  family::BuildResult built = family::build_family(q, w, n_range);
  family::BoundContext ctx = family::BoundContext::make(q, w);
  family::FamilyReport report = family::verify_family(built, q, w, ctx);
  Json fam = family_to_json(built, report);
  fam["supported"] = true;
  j["family"] = fam;
  j["pass"] = report.pass;
  return j;
}

Json run_verify(const ProblemInput& in) {
  QuadraticSpace q = make_space(in);
  SearchOptions opts;
  opts.search_bound = in.options.search_bound;
  WittDecomposition w = witt_decompose(q, opts);
  DecompositionBounds b = check_decomposition_bounds(w, q);
  Json j;
  j["input"] = input_to_json(in);
  j["analyze"] = {{"lambda", w.radical_dim()},
                  {"rank", w.rank()},
                  {"witt_index", w.witt_index()},
                  {"gram_height", rat_to_string(*matrix_height(q.gram).value)},
                  {"space_height_sq", rat_to_string(q.space.height_sq())}};
  j["witt"] = witt_to_json(w);
  j["bounds"] = bounds_to_json(b);
  bool pass = b.all_pass;
  if (w.rank() >= 3 && w.witt_index() >= 1) {
    std::vector<int> n_range;
    for (int n = 1; n <= in.options.n_max; ++n) n_range.push_back(n);
    family::BuildResult built = family::build_family(q, w, n_range);
    family::BoundContext ctx = family::BoundContext::make(q, w);
    family::FamilyReport report = family::verify_family(built, q, w, ctx);
    Json fam = family_to_json(built, report);
    fam["supported"] = true;
    j["family"] = fam;
    pass = pass && report.pass;
  } else {
    j["family"] = {{"supported", false},
                   {"reason", w.rank() < 3 ? "rank < 3" : "witt index 0"}};
  }
  j["pass"] = pass;
  return j;
}

Json run_constants(int ambient, int space_dim, int witt_index, int rank, int aniso_dim,
                   const constants::FieldParams& params) {
  params.validate();
  Json j;
  j["params"] = {{"degree", params.degree},
                 {"disc_abs", params.disc_abs.get_str()},
                 {"real_embeddings", params.real_embeddings},
                 {"complex_pairs", params.complex_pairs},
                 {"roots_of_unity", params.roots_of_unity}};
  j["invariants"] = {{"N", ambient}, {"L", space_dim}, {"omega", witt_index}, {"r", rank}, {"J", aniso_dim}};

  auto entry = [](const UpperReal& u) {
    Json e;
    if (u.exact()) e["exact"] = rat_to_string(*u.exact());
    if (!u.exact() && u.exact_square()) e["exact_sq"] = rat_to_string(*u.exact_square());
    e["upper"] = u.upper_string();
    return e;
  };

  j["alpha"] = rat_to_string(constants::alpha_exponent(witt_index, rank));
  j["beta"] = rat_to_string(constants::beta_exponent(witt_index));
  j["eta"] = constants::eta_factor(space_dim, rank).get_str();
  auto [p1, p2] = constants::auxiliary_powers(witt_index);
  j["p1"] = rat_to_string(p1);
  j["p2"] = rat_to_string(p2);
  j["C"] = Json::object();
  if (aniso_dim >= 1) j["C"] = entry(constants::const_C(aniso_dim, params));
  j["A2"] = entry(constants::const_A(2, params));
  j["B1"] = entry(constants::const_B(1, params));
  j["BL"] = entry(constants::const_B(space_dim, params));
  if (rank >= 1) j["Br"] = entry(constants::const_B(rank, params));
  j["G"] = entry(constants::const_G(params));
  j["script_G"] = entry(constants::script_G(ambient, space_dim, witt_index, params));
  j["member_prefactor"] = entry(constants::member_prefactor(ambient, witt_index, aniso_dim, params));
  j["member_constant"] =
      entry(constants::member_constant(ambient, witt_index, space_dim, rank, aniso_dim, params));
  j["pass"] = true;
  return j;
}

unsigned long CorpusRng::next() {
  // splitmix64; fixed here so corpus streams never depend on library
  // implementation details.
  state_ += 0x9e3779b97f4a7c15ULL;
  unsigned long long z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return static_cast<unsigned long>(z ^ (z >> 31));
}

long CorpusRng::uniform(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<unsigned long>(hi - lo + 1));
}

Rat CorpusRng::rational(long num_bound, long den_bound) {
  return frac(uniform(-num_bound, num_bound), uniform(1, den_bound));
}

ProblemInput corpus_instance(CorpusRng& rng, int id, const RunOptions& base) {
  (void)id;
  ProblemInput in;
  in.options = base;
  while (true) {
    size_t n = static_cast<size_t>(rng.uniform(3, 6));
    Mat g(n, n);
    long kind = rng.uniform(0, 11);
    if (kind <= 1) {
      // Degenerate form: a regular block on a coordinate subset, zero
      // elsewhere, coordinates shuffled; the radical has dimension >= n - k.
      size_t k = static_cast<size_t>(rng.uniform(1, static_cast<long>(n) - 1));
      std::vector<size_t> perm(n);
      for (size_t i = 0; i < n; ++i) perm[i] = i;
      for (size_t i = n; i-- > 1;) std::swap(perm[i], perm[static_cast<size_t>(rng.uniform(0, static_cast<long>(i)))]);
      bool nonzero = false;
      for (size_t i = 0; i < k; ++i) {
        for (size_t j = i; j < k; ++j) {
          Rat v = rng.rational(9, 4);
          g.at(perm[i], perm[j]) = v;
          g.at(perm[j], perm[i]) = v;
          if (v != 0) nonzero = true;
        }
      }
      if (!nonzero) continue;
    } else if (kind == 2 && n >= 4) {
      // Split form: hyperbolic blocks plus a diagonal tail, coordinates
      // shuffled by a permutation (entry bounds are preserved exactly).
      size_t blocks = static_cast<size_t>(rng.uniform(2, static_cast<long>(n / 2)));
      std::vector<size_t> perm(n);
      for (size_t i = 0; i < n; ++i) perm[i] = i;
      for (size_t i = n; i-- > 1;) std::swap(perm[i], perm[static_cast<size_t>(rng.uniform(0, static_cast<long>(i)))]);
      for (size_t b = 0; b < blocks; ++b) {
        Rat a = 0;
        while (a == 0) a = rng.rational(9, 4);
        g.at(perm[2 * b], perm[2 * b + 1]) = a;
        g.at(perm[2 * b + 1], perm[2 * b]) = a;
      }
      for (size_t i = 2 * blocks; i < n; ++i) {
        g.at(perm[i], perm[i]) = rng.rational(9, 4);
      }
    } else {
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
          Rat v = rng.rational(9, 4);
          g.at(i, j) = v;
          g.at(j, i) = v;
        }
      }
    }
    if (g.is_zero()) continue;
    in.ambient = n;
    in.gram = g;
    in.basis.reset();
    if (rng.uniform(0, 9) < 3 && n >= 3) {
      size_t l = static_cast<size_t>(rng.uniform(2, static_cast<long>(n) - 1));
      std::vector<Vec> cols;
      for (size_t c = 0; c < l; ++c) {
        Vec v(n);
        for (size_t i = 0; i < n; ++i) v[i] = Rat(rng.uniform(-3, 3));
        cols.push_back(v);
      }
      Mat basis = Mat::from_columns(cols);
      if (rank(basis) != l) continue;
      QuadraticSpace probe(g, Subspace(n, basis));
      if (restrict_gram(probe).is_zero()) continue;  // rank 0 instances are untestable
      in.basis = basis;
    }
    return in;
  }
}

Json run_corpus(const RunOptions& options) {
  if (options.corpus_size < 0) throw std::invalid_argument("corpus size must be >= 0");
  CorpusRng rng(options.seed);
  Json instances = Json::array();
  int family_supported = 0, family_passed = 0, bounds_passed = 0;
  for (int id = 0; id < options.corpus_size; ++id) {
    ProblemInput in = corpus_instance(rng, id, options);
    QuadraticSpace q = make_space(in);
    SearchOptions opts;
    opts.search_bound = in.options.search_bound;
    WittDecomposition w = witt_decompose(q, opts);
    DecompositionBounds b = check_decomposition_bounds(w, q);
    Json e;
    e["id"] = id;
    e["N"] = in.ambient;
    e["L"] = q.space.dim();
    e["lambda"] = w.radical_dim();
    e["rank"] = w.rank();
    e["witt_index"] = w.witt_index();
    e["aniso_dim"] = w.aniso_dim();
    e["certificate"] = to_string(w.certificate.kind);
    e["bounds_pass"] = b.all_pass;
    if (b.all_pass) ++bounds_passed;
    if (w.rank() >= 3 && w.witt_index() >= 1) {
      std::vector<int> n_range;
      for (int n = 1; n <= options.n_max; ++n) n_range.push_back(n);
      family::BuildResult built = family::build_family(q, w, n_range);
      family::BoundContext ctx = family::BoundContext::make(q, w);
      family::FamilyReport report = family::verify_family(built, q, w, ctx);
      e["family_supported"] = true;
      e["family_pass"] = report.pass;
      e["distinct_subspaces"] = report.distinct_subspaces;
      ++family_supported;
      if (report.pass) ++family_passed;
    } else {
      e["family_supported"] = false;
    }
    instances.push_back(e);
  }
  Json j;
  j["seed"] = options.seed;
  j["corpus_size"] = options.corpus_size;
  j["instances"] = instances;
  j["bounds_passed"] = bounds_passed;
  j["family_supported"] = family_supported;
  j["family_passed"] = family_passed;
  j["pass"] = bounds_passed == options.corpus_size && family_passed == family_supported;
  return j;
}

bool report_passed(const Json& report) {
  return report.contains("pass") && report["pass"].is_boolean() && report["pass"].get<bool>();
}

}  // namespace wittkit
