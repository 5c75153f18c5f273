#include "cosetlab/ctab.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cosetlab/statlab.hpp"

namespace cosetlab {

MarginSpec::MarginSpec(Partition rows_, Partition cols_)
    : rows(std::move(rows_)), cols(std::move(cols_)) {
  if (rows.empty() || cols.empty())
    throw std::invalid_argument("MarginSpec: empty margins");
  if (rows.n() != cols.n())
    throw std::invalid_argument("MarginSpec: row and column sums differ");
}

ContingencyTable::ContingencyTable(MarginSpec margins, std::vector<long long> entries)
    : margins_(std::move(margins)), entries_(std::move(entries)) {
  const int I = margins_.I(), J = margins_.J();
  if (entries_.size() != static_cast<std::size_t>(I) * J)
    throw std::invalid_argument("ContingencyTable: entry count mismatch");
  for (long long v : entries_)
    if (v < 0) throw std::invalid_argument("ContingencyTable: negative entry");
  for (int i = 0; i < I; ++i) {
    long long s = 0;
    for (int j = 0; j < J; ++j) s += entries_[static_cast<std::size_t>(i) * J + j];
    if (s != margins_.rows.part(i))
      throw std::invalid_argument("ContingencyTable: row sum violates margins");
  }
  for (int j = 0; j < J; ++j) {
    long long s = 0;
    for (int i = 0; i < I; ++i) s += entries_[static_cast<std::size_t>(i) * J + j];
    if (s != margins_.cols.part(j))
      throw std::invalid_argument("ContingencyTable: column sum violates margins");
  }
}

long long ContingencyTable::zero_count() const {
  return std::count(entries_.begin(), entries_.end(), 0LL);
}

namespace {

// col_block[v-1] = index j of the column block containing value v
// (values 1..mu_1 are block 0, the next mu_2 are block 1, ...).
std::vector<int> column_block_of_value(const Partition& mu) {
  std::vector<int> block;
  for (int j = 0; j < mu.num_parts(); ++j)
    block.insert(block.end(), static_cast<std::size_t>(mu.part(j)), j);
  return block;
}

}  // namespace

ContingencyTable table_of_permutation(const Permutation& sigma,
                                      const MarginSpec& margins) {
  if (sigma.size() != margins.n())
    throw std::invalid_argument("table_of_permutation: size mismatch");
  const int I = margins.I(), J = margins.J();
  const auto block = column_block_of_value(margins.cols);
  std::vector<long long> t(static_cast<std::size_t>(I) * J, 0);
  int pos = 1;
  for (int i = 0; i < I; ++i)
    for (long long step = 0; step < margins.rows.part(i); ++step, ++pos)
      ++t[static_cast<std::size_t>(i) * J + block[sigma(pos) - 1]];
  return ContingencyTable(margins, std::move(t));
}

ExactProb fisher_yates_pmf(const ContingencyTable& t) {
  BigInt num = 1;
  for (long long p : t.margins().rows.parts()) num *= factorial(static_cast<int>(p));
  for (long long p : t.margins().cols.parts()) num *= factorial(static_cast<int>(p));
  BigInt den = factorial(static_cast<int>(t.n()));
  for (long long v : t.entries()) den *= factorial(static_cast<int>(v));
  return ExactProb(num, den);
}

BigInt ct_coset_size(const ContingencyTable& t) {
  const Rational size =
      fisher_yates_pmf(t).value() * Rational(factorial(static_cast<int>(t.n())));
  if (boost::multiprecision::denominator(size) != 1)
    throw std::logic_error("ct_coset_size: non-integral size");
  return boost::multiprecision::numerator(size);
}

ContingencyTable fy_sample(const MarginSpec& margins, Rng& rng) {
  // A uniform shuffle of the urn contents, cut into column blocks, is the
  // same law as sequential draws without replacement.
  const int I = margins.I(), J = margins.J();
  std::vector<int> urn;
  urn.reserve(static_cast<std::size_t>(margins.n()));
  for (int i = 0; i < I; ++i)
    urn.insert(urn.end(), static_cast<std::size_t>(margins.rows.part(i)), i);
  std::shuffle(urn.begin(), urn.end(), rng);
  std::vector<long long> t(static_cast<std::size_t>(I) * J, 0);
  std::size_t pos = 0;
  for (int j = 0; j < J; ++j)
    for (long long step = 0; step < margins.cols.part(j); ++step, ++pos)
      ++t[static_cast<std::size_t>(urn[pos]) * J + j];
  return ContingencyTable(margins, std::move(t));
}

std::vector<double> independence_table(const MarginSpec& margins) {
  const int I = margins.I(), J = margins.J();
  const double n = static_cast<double>(margins.n());
  std::vector<double> star(static_cast<std::size_t>(I) * J);
  for (int i = 0; i < I; ++i)
    for (int j = 0; j < J; ++j)
      star[static_cast<std::size_t>(i) * J + j] =
          static_cast<double>(margins.rows.part(i)) * margins.cols.part(j) / n;
  return star;
}

double chi2_stat(const ContingencyTable& t) {
  const auto star = independence_table(t.margins());
  double stat = 0;
  for (std::size_t k = 0; k < star.size(); ++k) {
    const double d = static_cast<double>(t.entries()[k]) - star[k];
    stat += d * d / star[k];
  }
  return stat;
}

double l1_to_independence(const ContingencyTable& t) {
  const auto star = independence_table(t.margins());
  double l1 = 0;
  for (std::size_t k = 0; k < star.size(); ++k)
    l1 += std::fabs(static_cast<double>(t.entries()[k]) - star[k]);
  return l1;
}

CovModel::CovModel(std::vector<double> alpha_, std::vector<double> beta_)
    : alpha(std::move(alpha_)), beta(std::move(beta_)) {
  auto check = [](const std::vector<double>& v, const char* name) {
    double s = 0;
    for (double x : v) {
      if (x <= 0 || x >= 1)
        throw std::invalid_argument(std::string("CovModel: ") + name +
                                    " entries must lie in (0,1)");
      s += x;
    }
    if (std::fabs(s - 1.0) > 1e-9)
      throw std::invalid_argument(std::string("CovModel: ") + name +
                                  " must sum to 1");
  };
  check(alpha, "alpha");
  check(beta, "beta");
}

CovModel CovModel::of(const MarginSpec& margins) {
  const double n = static_cast<double>(margins.n());
  std::vector<double> a, b;
  for (long long p : margins.rows.parts()) a.push_back(p / n);
  for (long long p : margins.cols.parts()) b.push_back(p / n);
  return CovModel(std::move(a), std::move(b));
}

std::vector<double> clt_covariance(const CovModel& model) {
  const int I = static_cast<int>(model.alpha.size());
  const int J = static_cast<int>(model.beta.size());
  auto a_cov = [&](int i, int k) {
    return (i == k ? model.alpha[i] : 0.0) - model.alpha[i] * model.alpha[k];
  };
  auto b_cov = [&](int j, int l) {
    return (j == l ? model.beta[j] : 0.0) - model.beta[j] * model.beta[l];
  };
  std::vector<double> sigma(static_cast<std::size_t>(I) * J * I * J);
  for (int i = 0; i < I; ++i)
    for (int j = 0; j < J; ++j)
      for (int k = 0; k < I; ++k)
        for (int l = 0; l < J; ++l)
          sigma[(static_cast<std::size_t>(i) * J + j) * I * J + k * J + l] =
              a_cov(i, k) * b_cov(j, l);
  return sigma;
}

namespace {

// In-place symmetric-positive-definite inverse and determinant via Gaussian
// elimination with partial pivoting; k is desk-scale.
double invert_dense(std::vector<double>& m, int k, std::vector<double>& inv) {
  inv.assign(static_cast<std::size_t>(k) * k, 0.0);
  for (int i = 0; i < k; ++i) inv[static_cast<std::size_t>(i) * k + i] = 1.0;
  double det = 1.0;
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    for (int r = col + 1; r < k; ++r)
      if (std::fabs(m[static_cast<std::size_t>(r) * k + col]) >
          std::fabs(m[static_cast<std::size_t>(pivot) * k + col]))
        pivot = r;
    if (m[static_cast<std::size_t>(pivot) * k + col] == 0.0)
      throw std::domain_error("coset_size_approx: singular reduced covariance");
    if (pivot != col) {
      for (int j = 0; j < k; ++j) {
        std::swap(m[static_cast<std::size_t>(col) * k + j],
                  m[static_cast<std::size_t>(pivot) * k + j]);
        std::swap(inv[static_cast<std::size_t>(col) * k + j],
                  inv[static_cast<std::size_t>(pivot) * k + j]);
      }
      det = -det;
    }
    const double p = m[static_cast<std::size_t>(col) * k + col];
    det *= p;
    for (int j = 0; j < k; ++j) {
      m[static_cast<std::size_t>(col) * k + j] /= p;
      inv[static_cast<std::size_t>(col) * k + j] /= p;
    }
    for (int r = 0; r < k; ++r) {
      if (r == col) continue;
      const double f = m[static_cast<std::size_t>(r) * k + col];
      if (f == 0.0) continue;
      for (int j = 0; j < k; ++j) {
        m[static_cast<std::size_t>(r) * k + j] -=
            f * m[static_cast<std::size_t>(col) * k + j];
        inv[static_cast<std::size_t>(r) * k + j] -=
            f * inv[static_cast<std::size_t>(col) * k + j];
      }
    }
  }
  return det;
}

}  // namespace

double coset_size_approx(const ContingencyTable& t, const CovModel& model) {
  const int I = t.I(), J = t.J();
  const int k = (I - 1) * (J - 1);
  const double n = static_cast<double>(t.n());
  // Standardized entries with the last row and column dropped.
  std::vector<double> z(static_cast<std::size_t>(k));
  for (int i = 0; i < I - 1; ++i)
    for (int j = 0; j < J - 1; ++j)
      z[static_cast<std::size_t>(i) * (J - 1) + j] =
          std::sqrt(n) * (t.at(i, j) / n - model.alpha[i] * model.beta[j]);
  // Corresponding block of the covariance.
  const auto full = clt_covariance(model);
  std::vector<double> sigma(static_cast<std::size_t>(k) * k);
  auto reduced_index = [&](int i, int j) { return i * (J - 1) + j; };
  for (int i = 0; i < I - 1; ++i)
    for (int j = 0; j < J - 1; ++j)
      for (int p = 0; p < I - 1; ++p)
        for (int q = 0; q < J - 1; ++q)
          sigma[static_cast<std::size_t>(reduced_index(i, j)) * k +
                reduced_index(p, q)] =
              full[(static_cast<std::size_t>(i) * J + j) * I * J + p * J + q];
  std::vector<double> inv;
  const double det = invert_dense(sigma, k, inv);
  double quad = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      quad += z[i] * inv[static_cast<std::size_t>(i) * k + j] * z[j];
  double log_nfact = std::lgamma(n + 1.0);
  const double log_value = log_nfact - 0.5 * k * std::log(2.0 * M_PI * n) -
                           0.5 * std::log(det) - 0.5 * quad;
  return std::exp(log_value);
}

Permutation min_length_rep(const ContingencyTable& t) {
  const int I = t.I(), J = t.J();
  // next available (smallest unused) value within each column block
  std::vector<long long> next(J), end(J);
  long long start = 1;
  for (int j = 0; j < J; ++j) {
    next[j] = start;
    start += t.margins().cols.part(j);
    end[j] = start;
  }
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(t.n()));
  for (int i = 0; i < I; ++i)
    for (int j = 0; j < J; ++j)
      for (long long c = 0; c < t.at(i, j); ++c) {
        if (next[j] >= end[j]) throw std::logic_error("min_length_rep: block exhausted");
        word.push_back(static_cast<int>(next[j]++));
      }
  return Permutation(std::move(word));
}

MajorizationOrder prec_compare(const ContingencyTable& a, const ContingencyTable& b) {
  if (!(a.margins() == b.margins()))
    throw std::invalid_argument("prec_compare: margin mismatch");
  return majorizes(a.entries(), b.entries());
}

bool schur_check(const ContingencyTable& a, const ContingencyTable& b) {
  switch (prec_compare(a, b)) {
    case MajorizationOrder::Less:
      return fisher_yates_pmf(a).value() > fisher_yates_pmf(b).value();
    case MajorizationOrder::Greater:
      return fisher_yates_pmf(a).value() < fisher_yates_pmf(b).value();
    case MajorizationOrder::Equal:
    case MajorizationOrder::Incomparable:
      return true;
  }
  return true;
}

namespace {

struct TableEnumerator {
  const MarginSpec& margins;
  const std::function<void(const ContingencyTable&)>& fn;
  std::uint64_t cap;
  std::uint64_t emitted = 0;
  std::vector<long long> entries;
  std::vector<long long> col_left;

  // Fill row i, then recurse; prune when the remaining column capacity
  // cannot absorb the remaining row totals.
  void fill_row(int i) {
    const int I = margins.I();
    if (i == I) {
      if (++emitted > cap)
        throw std::length_error(
            "for_each_table: table count exceeds the enumeration cap");
      fn(ContingencyTable(margins, entries));
      return;
    }
    fill_cell(i, 0, margins.rows.part(i));
  }

  void fill_cell(int i, int j, long long row_left) {
    const int J = margins.J();
    if (j == J) {
      if (row_left == 0) fill_row(i + 1);
      return;
    }
    // Feasibility: remaining cells of this row can hold at most the sum of
    // remaining column capacities.
    long long later_capacity = 0;
    for (int jj = j + 1; jj < J; ++jj) later_capacity += col_left[jj];
    const long long lo = std::max(0LL, row_left - later_capacity);
    const long long hi = std::min(row_left, col_left[j]);
    for (long long v = lo; v <= hi; ++v) {
      entries[static_cast<std::size_t>(i) * J + j] = v;
      col_left[j] -= v;
      fill_cell(i, j + 1, row_left - v);
      col_left[j] += v;
    }
    entries[static_cast<std::size_t>(i) * J + j] = 0;
  }
};

}  // namespace

void for_each_table(const MarginSpec& margins,
                    const std::function<void(const ContingencyTable&)>& fn,
                    const EnumLimits& limits) {
  TableEnumerator e{margins, fn, limits.max_table_count, 0,
                    std::vector<long long>(
                        static_cast<std::size_t>(margins.I()) * margins.J(), 0),
                    margins.cols.parts()};
  e.fill_row(0);
}

std::vector<ContingencyTable> all_tables(const MarginSpec& margins,
                                         const EnumLimits& limits) {
  std::vector<ContingencyTable> out;
  for_each_table(margins, [&](const ContingencyTable& t) { out.push_back(t); },
                 limits);
  return out;
}

ZerosResult zeros_experiment(int I, long long r, const std::vector<long long>& col_sums,
                             long long samples, std::uint64_t seed, int workers) {
  if (I < 1 || r < 1 || samples < 1)
    throw std::invalid_argument("zeros_experiment: positive I, r, samples required");
  std::vector<long long> rows(static_cast<std::size_t>(I), r);
  const MarginSpec margins{Partition(std::move(rows)),
                           Partition(std::vector<long long>(col_sums))};
  const double n = static_cast<double>(margins.n());

  if (workers <= 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<int>(std::min<long long>(workers, samples));

  auto run_shard = [&margins](std::uint64_t shard_seed, long long count) {
    Rng rng(shard_seed);
    std::map<long long, long long> hist;
    for (long long s = 0; s < count; ++s)
      ++hist[fy_sample(margins, rng).zero_count()];
    return hist;
  };

  std::vector<std::future<std::map<long long, long long>>> futures;
  const long long base = samples / workers, extra = samples % workers;
  for (int w = 0; w < workers; ++w)
    futures.push_back(std::async(std::launch::async, run_shard,
                                 seed + static_cast<std::uint64_t>(w),
                                 base + (w < extra ? 1 : 0)));

  ZerosResult result;
  for (auto& f : futures)
    for (const auto& [zeros, count] : f.get()) result.histogram[zeros] += count;

  double sum = 0;
  for (const auto& [zeros, count] : result.histogram)
    sum += static_cast<double>(zeros) * count;
  result.mean = sum / static_cast<double>(samples);

  double beta = 0;
  for (long long c : col_sums)
    beta += std::pow(1.0 - static_cast<double>(c) / n, n / I);
  result.beta = beta * I;

  const long long max_z = result.histogram.empty() ? 0 : result.histogram.rbegin()->first;
  std::vector<long long> observed(static_cast<std::size_t>(max_z) + 1, 0);
  std::vector<double> reference(static_cast<std::size_t>(max_z) + 1, 0.0);
  double covered = 0;
  for (long long z = 0; z <= max_z; ++z) {
    auto it = result.histogram.find(z);
    observed[static_cast<std::size_t>(z)] = it == result.histogram.end() ? 0 : it->second;
    reference[static_cast<std::size_t>(z)] = poisson_pmf(z, result.beta);
    covered += reference[static_cast<std::size_t>(z)];
  }
  result.tv_to_poisson = tv_distance(observed, reference, 1.0 - covered);
  return result;
}

}  // namespace cosetlab
