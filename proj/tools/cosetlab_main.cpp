// cosetlab: command-line front end for the double-coset library.
//
// Output is machine-first: every command emits JSON (one object, or one
// object per line for sampling commands); --pretty switches to indented
// JSON. Randomized commands take --seed, fall back to COSETLAB_SEED, and
// otherwise derive a seed and print it, so every run is reproducible.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cosetlab/bruhat.hpp"
#include "cosetlab/ctab.hpp"
#include "cosetlab/group_oracle.hpp"
#include "cosetlab/hyperoct.hpp"
#include "cosetlab/mallows.hpp"
#include "cosetlab/recipes.hpp"
#include "cosetlab/statlab.hpp"

using json = nlohmann::ordered_json;
using namespace cosetlab;

namespace {

bool g_pretty = false;

void emit(const json& j) {
  if (g_pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// Resolve the seed: explicit flag, then COSETLAB_SEED, then the OS entropy
// source. The resolved value is always reported in the output.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("COSETLAB_SEED"))
    return std::strtoull(env, nullptr, 10);
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) | rd();
}

std::vector<long long> parse_int_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const long long v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer list: " + s);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

Partition parse_partition(const std::string& s) {
  return Partition(parse_int_list(s));
}

std::vector<int> parse_position_set(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (long long v : parse_int_list(s)) out.push_back(static_cast<int>(v));
  return out;
}

// CSV of integer rows, one table row per line. Blank lines are skipped.
std::vector<std::vector<long long>> read_csv_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<std::vector<long long>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    rows.push_back(parse_int_list(line));
    if (rows.back().size() != rows.front().size())
      throw std::invalid_argument("ragged rows in " + path);
  }
  if (rows.empty()) throw std::invalid_argument("no data rows in " + path);
  return rows;
}

double chi2_of_counts(const std::vector<std::vector<long long>>& counts) {
  const std::size_t nrows = counts.size(), ncols = counts.front().size();
  std::vector<double> row_sum(nrows, 0), col_sum(ncols, 0);
  double n = 0;
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) {
      row_sum[i] += static_cast<double>(counts[i][j]);
      col_sum[j] += static_cast<double>(counts[i][j]);
      n += static_cast<double>(counts[i][j]);
    }
  double stat = 0;
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) {
      const double expect = row_sum[i] * col_sum[j] / n;
      const double d = static_cast<double>(counts[i][j]) - expect;
      stat += d * d / expect;
    }
  return stat;
}

json matrix_json(const FqMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

FqMatrix matrix_from_json(const FieldPtr& field, const std::string& text) {
  const json rows = json::parse(text);
  const int n = static_cast<int>(rows.size());
  FqMatrix m(field, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
      throw std::invalid_argument("matrix rows must form a square array");
    for (int j = 0; j < n; ++j) {
      const int v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v < 0 || v >= field->q())
        throw std::invalid_argument("matrix entry outside 0..q-1");
      m.set(i, j, v);
    }
  }
  return m;
}

json table_json(const ContingencyTable& t) {
  json rows = json::array();
  for (int i = 0; i < t.I(); ++i) {
    json row = json::array();
    for (int j = 0; j < t.J(); ++j) row.push_back(t.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json partition_json(const Partition& lam) {
  return json(lam.parts());
}

// ---- mallows --------------------------------------------------------------

void register_mallows(CLI::App& app) {
  auto* cmd = app.add_subcommand("mallows", "Mallows measure on S_n");
  cmd->require_subcommand(1);

  {
    auto* pmf = cmd->add_subcommand("pmf", "Exact probability of one word");
    auto word = std::make_shared<std::string>();
    auto q = std::make_shared<int>(2);
    pmf->add_option("--word", *word, "permutation in one-line notation")->required();
    pmf->add_option("--q", *q, "q >= 2");
    pmf->callback([word, q] {
      const Permutation w = Permutation::parse(*word);
      const MallowsModel model(w.size(), *q);
      const ExactProb p = mallows_pmf(model, w);
      emit({{"command", "mallows pmf"},
            {"word", w.to_string()},
            {"q", *q},
            {"inversions", w.inversions()},
            {"pmf", rat_str(p.value())},
            {"pmf_double", p.to_double()}});
    });
  }

  {
    auto* sample = cmd->add_subcommand("sample", "Draw words from the measure");
    auto n = std::make_shared<int>();
    auto q = std::make_shared<int>(2);
    auto count = std::make_shared<int>(1);
    auto seed = std::make_shared<std::optional<std::uint64_t>>();
    auto hist_csv = std::make_shared<std::string>();
    sample->add_option("--n", *n, "word length")->required();
    sample->add_option("--q", *q, "q >= 2");
    sample->add_option("--count", *count, "number of draws");
    sample->add_option("--seed", *seed, "seed (default: COSETLAB_SEED or entropy)");
    sample->add_option("--hist-csv", *hist_csv,
                       "write the inversion-count histogram to this CSV file");
    sample->callback([n, q, count, seed, hist_csv] {
      const std::uint64_t s = resolve_seed(*seed);
      const MallowsModel model(*n, *q);
      Rng rng(s);
      emit({{"command", "mallows sample"}, {"n", *n}, {"q", *q}, {"seed", s}});
      std::map<long long, long long> hist;
      for (int i = 0; i < *count; ++i) {
        const Permutation w = mallows_sample(model, rng);
        ++hist[w.inversions()];
        emit({{"word", w.to_string()}, {"inversions", w.inversions()}});
      }
      if (!hist_csv->empty()) {
        std::ofstream out(*hist_csv);
        if (!out) throw std::invalid_argument("cannot write " + *hist_csv);
        out << "inversions,count\n";
        for (const auto& [inv, c] : hist) out << inv << "," << c << "\n";
      }
    });
  }

  {
    auto* dp = cmd->add_subcommand("descent-prob", "Exact descent-set probabilities");
    auto n = std::make_shared<int>();
    auto q = std::make_shared<int>(2);
    auto set = std::make_shared<std::string>();
    dp->add_option("--n", *n, "word length")->required();
    dp->add_option("--q", *q, "q >= 2");
    dp->add_option("--set", *set, "positions, e.g. 1,3 (empty = empty set)");
    dp->callback([n, q, set] {
      const MallowsModel model(*n, *q);
      const std::vector<int> positions = parse_position_set(*set);
      const ExactProb subset = descent_subset_prob(model, positions);
      const ExactProb exact = descent_set_exact_prob(model, positions);
      const DescentMoments m = descent_moments(model);
      emit({{"command", "mallows descent-prob"},
            {"n", *n},
            {"q", *q},
            {"set", positions},
            {"prob_contains", rat_str(subset.value())},
            {"prob_exactly", rat_str(exact.value())},
            {"mean_descents", rat_str(m.mean)},
            {"variance_exact", rat_str(descent_variance_exact(model))}});
    });
  }
}

// ---- glnq -----------------------------------------------------------------

void register_glnq(CLI::App& app) {
  auto* cmd = app.add_subcommand("glnq", "Bruhat cells of GL_n(F_q)");
  cmd->require_subcommand(1);

  {
    auto* sample = cmd->add_subcommand("sample", "Uniform invertible matrices");
    auto n = std::make_shared<int>();
    auto q = std::make_shared<int>();
    auto method = std::make_shared<std::string>("pak");
    auto count = std::make_shared<int>(1);
    auto seed = std::make_shared<std::optional<std::uint64_t>>();
    sample->add_option("--n", *n)->required();
    sample->add_option("--q", *q)->required();
    sample->add_option("--method", *method, "pak | rejection")
        ->check(CLI::IsMember({"pak", "rejection"}));
    sample->add_option("--count", *count);
    sample->add_option("--seed", *seed);
    sample->callback([n, q, method, count, seed] {
      const std::uint64_t s = resolve_seed(*seed);
      Rng rng(s);
      emit({{"command", "glnq sample"},
            {"n", *n},
            {"q", *q},
            {"method", *method},
            {"seed", s}});
      for (int i = 0; i < *count; ++i) {
        if (*method == "pak") {
          const FqMatrix m = sample_uniform_pak(*n, *q, rng);
          emit({{"matrix", matrix_json(m)},
                {"cell", bruhat_cell(m).to_string()}});
        } else {
          const RejectionSample rs = sample_uniform_rejection(*n, *q, rng);
          emit({{"matrix", matrix_json(rs.matrix)},
                {"cell", bruhat_cell(rs.matrix).to_string()},
                {"attempts", rs.attempts}});
        }
      }
    });
  }

  {
    auto* bruhat = cmd->add_subcommand("bruhat", "Decompose A = B1 P(w) B2");
    auto q = std::make_shared<int>();
    auto matrix = std::make_shared<std::string>();
    bruhat->add_option("--q", *q)->required();
    bruhat->add_option("--matrix", *matrix,
                       "JSON rows of field-element codes, e.g. [[1,0],[1,1]]")
        ->required();
    bruhat->callback([q, matrix] {
      const FieldPtr field = FqField::make(*q);
      const FqMatrix a = matrix_from_json(field, *matrix);
      const BruhatFactorization bf = bruhat_decompose(a);
      emit({{"command", "glnq bruhat"},
            {"q", *q},
            {"cell", bf.cell.to_string()},
            {"inversions", bf.cell.inversions()},
            {"b1", matrix_json(bf.b1)},
            {"b2", matrix_json(bf.b2)},
            {"elimination_ops", bf.elimination_ops},
            {"cell_size",
             bruhat_cell_size(a.n(), *q, bf.cell).convert_to<std::string>()}});
    });
  }

  {
    auto* cells = cmd->add_subcommand("cells", "The cell table of GL_n(F_q)");
    auto n = std::make_shared<int>();
    auto q = std::make_shared<int>();
    cells->add_option("--n", *n)->required();
    cells->add_option("--q", *q)->required();
    cells->callback([n, q] {
      json rows = json::array();
      BigInt total = 0;
      for_each_permutation(*n, [&](const Permutation& w) {
        const BigInt size = bruhat_cell_size(*n, *q, w);
        total += size;
        rows.push_back({{"word", w.to_string()},
                        {"inversions", w.inversions()},
                        {"cell_size", size.convert_to<std::string>()}});
      });
      emit({{"command", "glnq cells"},
            {"n", *n},
            {"q", *q},
            {"borel_order", borel_order(*n, *q).convert_to<std::string>()},
            {"gl_order", gl_order(*n, *q).convert_to<std::string>()},
            {"total_of_cells", total.convert_to<std::string>()},
            {"cells", std::move(rows)}});
    });
  }
}

// ---- hyperoct -------------------------------------------------------------

void register_hyperoct(CLI::App& app) {
  auto* cmd = app.add_subcommand("hyperoct", "Hyperoctahedral cosets of S_2n");
  cmd->require_subcommand(1);

  {
    auto* map = cmd->add_subcommand("map", "Coset partition of a word in S_2n");
    auto word = std::make_shared<std::string>();
    map->add_option("--word", *word)->required();
    map->callback([word] {
      const Permutation sigma = Permutation::parse(*word);
      const Partition lam = coset_partition(sigma);
      std::vector<long long> mult(lam.multiplicities());
      mult.erase(mult.begin());  // drop the unused index 0
      emit({{"command", "hyperoct map"},
            {"word", sigma.to_string()},
            {"partition", partition_json(lam)},
            {"multiplicities", mult},
            {"coset_size", hyperoct_coset_size(lam).convert_to<std::string>()}});
    });
  }

  {
    auto* sizes = cmd->add_subcommand("sizes", "All coset sizes for one n");
    auto n = std::make_shared<int>();
    sizes->add_option("--n", *n)->required();
    sizes->callback([n] {
      const EwensModel model(*n, Rational(1, 2));
      json rows = json::array();
      BigInt total = 0;
      for (const Partition& lam : all_partitions(*n)) {
        const BigInt size = hyperoct_coset_size(lam);
        total += size;
        rows.push_back({{"partition", partition_json(lam)},
                        {"coset_size", size.convert_to<std::string>()},
                        {"ewens_half_pmf", rat_str(ewens_pmf(model, lam).value())}});
      }
      emit({{"command", "hyperoct sizes"},
            {"n", *n},
            {"hyperoct_order", hyperoct_order(*n).convert_to<std::string>()},
            {"total_of_cosets", total.convert_to<std::string>()},
            {"factorial_2n", factorial(2 * *n).convert_to<std::string>()},
            {"cosets", std::move(rows)}});
    });
  }

  {
    auto* poisson = cmd->add_subcommand("poissonize", "NB(1/2,1-t)-mixed draws");
    auto t = std::make_shared<std::string>("1/2");
    auto count = std::make_shared<int>(1);
    auto seed = std::make_shared<std::optional<std::uint64_t>>();
    poisson->add_option("--t", *t, "rational in (0,1), e.g. 1/2");
    poisson->add_option("--count", *count);
    poisson->add_option("--seed", *seed);
    poisson->callback([t, count, seed] {
      const Rational tval(*t);
      const std::uint64_t s = resolve_seed(*seed);
      Rng rng(s);
      emit({{"command", "hyperoct poissonize"}, {"t", rat_str(tval)}, {"seed", s}});
      for (int i = 0; i < *count; ++i) {
        const PoissonizedDraw d = poissonization_sample(tval, rng);
        emit({{"n", d.n}, {"multiplicities", d.a}});
      }
    });
  }
}

// ---- ctab -----------------------------------------------------------------

void register_ctab(CLI::App& app) {
  auto* cmd = app.add_subcommand("ctab", "Contingency tables / parabolic cosets");
  cmd->require_subcommand(1);

  {
    auto* map = cmd->add_subcommand("map", "Table of a permutation");
    auto word = std::make_shared<std::string>();
    auto rows = std::make_shared<std::string>();
    auto cols = std::make_shared<std::string>();
    map->add_option("--word", *word)->required();
    map->add_option("--rows", *rows, "row margins, e.g. 3,2")->required();
    map->add_option("--cols", *cols, "column margins, e.g. 2,2,1")->required();
    map->callback([word, rows, cols] {
      const MarginSpec margins(parse_partition(*rows), parse_partition(*cols));
      const Permutation sigma = Permutation::parse(*word);
      const ContingencyTable t = table_of_permutation(sigma, margins);
      emit({{"command", "ctab map"},
            {"word", sigma.to_string()},
            {"table", table_json(t)},
            {"pmf", rat_str(fisher_yates_pmf(t).value())},
            {"coset_size", ct_coset_size(t).convert_to<std::string>()},
            {"min_length_rep", min_length_rep(t).to_string()},
            {"chi2", chi2_stat(t)}});
    });
  }

  {
    auto* sample = cmd->add_subcommand("sample", "Fisher-Yates table draws");
    auto rows = std::make_shared<std::string>();
    auto cols = std::make_shared<std::string>();
    auto count = std::make_shared<int>(1);
    auto seed = std::make_shared<std::optional<std::uint64_t>>();
    sample->add_option("--rows", *rows)->required();
    sample->add_option("--cols", *cols)->required();
    sample->add_option("--count", *count);
    sample->add_option("--seed", *seed);
    sample->callback([rows, cols, count, seed] {
      const MarginSpec margins(parse_partition(*rows), parse_partition(*cols));
      const std::uint64_t s = resolve_seed(*seed);
      Rng rng(s);
      emit({{"command", "ctab sample"},
            {"rows", margins.rows.parts()},
            {"cols", margins.cols.parts()},
            {"seed", s}});
      for (int i = 0; i < *count; ++i) {
        const ContingencyTable t = fy_sample(margins, rng);
        emit({{"table", table_json(t)},
              {"chi2", chi2_stat(t)},
              {"zeros", t.zero_count()}});
      }
    });
  }

  {
    auto* chi2 = cmd->add_subcommand("chi2", "Chi-squared statistic of a CSV table");
    auto path = std::make_shared<std::string>();
    chi2->add_option("--table", *path, "CSV file, one row of counts per line")
        ->required();
    chi2->callback([path] {
      const auto counts = read_csv_table(*path);
      const double stat = chi2_of_counts(counts);
      const int dof = (static_cast<int>(counts.size()) - 1) *
                      (static_cast<int>(counts.front().size()) - 1);
      emit({{"command", "ctab chi2"},
            {"table", *path},
            {"chi2", stat},
            {"dof", dof},
            {"p_value", chi_squared_sf(stat, dof)}});
    });
  }

  {
    auto* zeros = cmd->add_subcommand("zeros", "Monte Carlo zero-count experiment");
    auto I = std::make_shared<int>();
    auto J = std::make_shared<int>();
    auto r = std::make_shared<long long>();
    auto c = std::make_shared<long long>();
    auto samples = std::make_shared<long long>(50000);
    auto seed = std::make_shared<std::optional<std::uint64_t>>();
    auto workers = std::make_shared<int>(0);
    zeros->add_option("--I", *I, "number of rows")->required();
    zeros->add_option("--J", *J, "number of columns")->required();
    zeros->add_option("--r", *r, "constant row sum")->required();
    zeros->add_option("--c", *c, "constant column sum")->required();
    zeros->add_option("--samples", *samples);
    zeros->add_option("--seed", *seed);
    zeros->add_option("--workers", *workers, "0 = hardware concurrency");
    zeros->callback([I, J, r, c, samples, seed, workers] {
      if (static_cast<long long>(*I) * *r != static_cast<long long>(*J) * *c)
        throw std::invalid_argument("margins must balance: I*r == J*c");
      const std::uint64_t s = resolve_seed(*seed);
      const ZerosResult res = zeros_experiment(
          *I, *r, std::vector<long long>(static_cast<std::size_t>(*J), *c),
          *samples, s, *workers);
      json hist = json::object();
      for (const auto& [z, n] : res.histogram) hist[std::to_string(z)] = n;
      emit({{"command", "ctab zeros"},
            {"I", *I},
            {"J", *J},
            {"r", *r},
            {"c", *c},
            {"samples", *samples},
            {"seed", s},
            {"histogram", std::move(hist)},
            {"mean", res.mean},
            {"beta", res.beta},
            {"tv_to_poisson", res.tv_to_poisson}});
    });
  }

  {
    auto* en = cmd->add_subcommand("enumerate", "All tables with given margins");
    auto rows = std::make_shared<std::string>();
    auto cols = std::make_shared<std::string>();
    en->add_option("--rows", *rows)->required();
    en->add_option("--cols", *cols)->required();
    en->callback([rows, cols] {
      const MarginSpec margins(parse_partition(*rows), parse_partition(*cols));
      json out = json::array();
      BigInt total = 0;
      Rational mass = 0;
      for (const ContingencyTable& t : all_tables(margins)) {
        const BigInt size = ct_coset_size(t);
        total += size;
        mass += fisher_yates_pmf(t).value();
        out.push_back({{"table", table_json(t)},
                       {"coset_size", size.convert_to<std::string>()},
                       {"pmf", rat_str(fisher_yates_pmf(t).value())},
                       {"min_length_rep", min_length_rep(t).to_string()}});
      }
      emit({{"command", "ctab enumerate"},
            {"rows", margins.rows.parts()},
            {"cols", margins.cols.parts()},
            {"num_tables", out.size()},
            {"total_of_cosets", total.convert_to<std::string>()},
            {"total_pmf", rat_str(mass)},
            {"tables", std::move(out)}});
    });
  }
}

// ---- oracle ---------------------------------------------------------------

void register_oracle(CLI::App& app) {
  auto* cmd = app.add_subcommand("oracle", "Brute-force double-coset checks");
  cmd->require_subcommand(1);

  auto* verify = cmd->add_subcommand(
      "verify", "Verify the coset identities and the induced law for a family");
  auto family = std::make_shared<std::string>();
  auto n = std::make_shared<int>(2);
  auto q = std::make_shared<int>(2);
  auto rows = std::make_shared<std::string>("3,2");
  auto cols = std::make_shared<std::string>("2,2,1");
  verify->add_option("--family", *family, "mallows | ewens | fisher-yates")
      ->required()
      ->check(CLI::IsMember({"mallows", "ewens", "fisher-yates"}));
  verify->add_option("--n", *n, "mallows: matrix size; ewens: half the degree");
  verify->add_option("--q", *q, "mallows only");
  verify->add_option("--rows", *rows, "fisher-yates row margins");
  verify->add_option("--cols", *cols, "fisher-yates column margins");
  verify->callback([family, n, q, rows, cols] {
    json report{{"command", "oracle verify"}, {"family", *family}};
    bool pass = true;
    json induced = json::array();

    const auto note_identities = [&report, &pass](const auto& r) {
      report["identities"] = {{"intersection_formula", r.intersection_formula},
                              {"coset_sum", r.coset_sum},
                              {"fixed_point_count", r.fixed_point_count},
                              {"num_cosets", r.num_cosets}};
      pass = pass && r.intersection_formula && r.coset_sum && r.fixed_point_count;
    };

    if (*family == "mallows") {
      std::vector<FqMatrix> gl;
      for_each_gl(*n, *q, [&](const FqMatrix& m) { gl.push_back(m); });
      const FieldPtr field = FqField::make(*q);
      const SmallGroup<FqMatrix> g(gl, FqMatrix::identity(field, *n));
      std::vector<FqMatrix> borel;
      for (const FqMatrix& m : gl)
        if (m.is_lower_triangular()) borel.push_back(m);
      note_identities(g.verify_identities(borel, borel));
      const MallowsModel model(*n, *q);
      for (const auto& [w, mass] : g.induced_distribution<Permutation>(
               borel, borel, [](const FqMatrix& m) { return bruhat_cell(m); })) {
        const Rational want = mallows_pmf(model, w).value();
        pass = pass && mass == want;
        induced.push_back({{"cell", w.to_string()},
                           {"mass", rat_str(mass)},
                           {"model_pmf", rat_str(want)}});
      }
    } else if (*family == "ewens") {
      const auto g = symmetric_group(2 * *n);
      const auto b = matching_group(*n);
      note_identities(g.verify_identities(b, b));
      const EwensModel model(*n, Rational(1, 2));
      for (const auto& [lam, mass] : g.induced_distribution<Partition>(
               b, b, [](const Permutation& w) { return coset_partition(w); })) {
        const Rational want = ewens_pmf(model, lam).value();
        pass = pass && mass == want;
        induced.push_back({{"partition", partition_json(lam)},
                           {"mass", rat_str(mass)},
                           {"model_pmf", rat_str(want)}});
      }
    } else {
      const MarginSpec margins(parse_partition(*rows), parse_partition(*cols));
      const int deg = static_cast<int>(margins.n());
      const auto g = symmetric_group(deg);
      // The column-margin parabolic acts on values (left of sigma), the
      // row-margin parabolic on positions (right); that order keeps the
      // table constant on each double coset.
      const auto h = parabolic_subgroup(margins.cols.parts());
      const auto k = parabolic_subgroup(margins.rows.parts());
      note_identities(g.verify_identities(h, k));
      for (const auto& [t, mass] : g.induced_distribution<ContingencyTable>(
               h, k, [&](const Permutation& w) {
                 return table_of_permutation(w, margins);
               })) {
        const Rational want = fisher_yates_pmf(t).value();
        pass = pass && mass == want;
        induced.push_back(
            {{"table", table_json(t)},
             {"coset_size", ct_coset_size(t).convert_to<std::string>()},
             {"mass", rat_str(mass)},
             {"model_pmf", rat_str(want)}});
      }
    }
    report["induced"] = std::move(induced);
    report["pass"] = pass;
    emit(report);
    if (!pass) throw std::domain_error("oracle verification failed");
  });
}

// ---- reproduce ------------------------------------------------------------

void register_reproduce(CLI::App& app, int& exit_code) {
  auto* cmd = app.add_subcommand(
      "reproduce", "Re-run one named verification recipe, or all of them");
  auto name = std::make_shared<std::string>();
  auto seed = std::make_shared<std::optional<std::uint64_t>>();
  auto fixture = std::make_shared<std::string>();
  std::string choices;
  for (const std::string& r : recipe_names()) choices += r + " ";
  cmd->add_option("name", *name, "recipe name or 'all' (" + choices + ")")
      ->required();
  cmd->add_option("--seed", *seed, "default 12345, the documented gate seed");
  cmd->add_option("--fixture", *fixture,
                  "table1-chi2 only: CSV file to use instead of the bundled counts");
  cmd->callback([name, seed, fixture, &exit_code] {
    // Recipes default to the fixed gate seed, not entropy: the published
    // pass/fail ledger refers to this seed.
    std::uint64_t s = 12345;
    if (*seed)
      s = **seed;
    else if (const char* env = std::getenv("COSETLAB_SEED"))
      s = std::strtoull(env, nullptr, 10);
    std::vector<std::string> names;
    if (*name == "all")
      names = recipe_names();
    else
      names.push_back(*name);
    bool all_pass = true;
    for (const std::string& recipe : names) {
      bool fixture_ok = true;
      if (recipe == "table1-chi2" && !fixture->empty()) {
        // The bundled counts are the ground truth; a fixture file must match.
        fixture_ok = read_csv_table(*fixture) == table1_counts();
      }
      const CriterionResult r = run_recipe(recipe, s);
      const bool pass = r.pass && fixture_ok;
      all_pass = all_pass && pass;
      json j{{"recipe", recipe},
             {"criterion", r.id},
             {"seed", s},
             {"pass", pass},
             {"details", r.details}};
      if (!fixture_ok) j["fixture_mismatch"] = *fixture;
      emit(j);
    }
    exit_code = all_pass ? 0 : 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double-coset decompositions: Bruhat cells, hyperoctahedral "
               "cosets, and contingency tables, with exact laws and samplers"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "indent JSON output");

  int exit_code = 0;
  register_mallows(app);
  register_glnq(app);
  register_hyperoct(app);
  register_ctab(app);
  register_reproduce(app, exit_code);
  register_oracle(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
