#include "schur/coefficients.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "schur/characters.hpp"
#include "schur/error.hpp"
#include "schur/numeric.hpp"

namespace schur {

namespace {

// Backtracking enumeration of Littlewood-Richardson fillings. Cells are
// visited in reverse reading order (rows top to bottom, right to left within
// a row), which makes the lattice condition checkable prefix by prefix.
class LrCounter {
public:
  LrCounter(const Partition& la, const Partition& mu, const Partition& nu)
      : la_(la), mu_(mu), nu_(nu), m_(nu.rows()) {
    fill_.resize(static_cast<std::size_t>(la.rows()));
    for (int i = 0; i < la.rows(); ++i)
      fill_[static_cast<std::size_t>(i)].resize(
          static_cast<std::size_t>(la.part(i)), 0);
    counts_.assign(static_cast<std::size_t>(m_) + 1, 0);
    for (int i = 0; i < la.rows(); ++i)
      for (int j = la.part(i) - 1; j >= mu.part(i); --j)
        cells_.emplace_back(i, j);
  }

  long long count() {
    total_ = 0;
    dfs(0);
    return total_;
  }

private:
  void dfs(std::size_t idx) {
    if (idx == cells_.size()) {
      ++total_;
      return;
    }
    auto [i, j] = cells_[idx];
    int hi = m_;
    if (j + 1 < la_.part(i))
      hi = std::min(hi, fill_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)]);
    int lo = 1;
    if (i > 0 && j >= mu_.part(i - 1) && j < la_.part(i - 1))
      lo = fill_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1;
    for (int v = lo; v <= hi; ++v) {
      std::size_t sv = static_cast<std::size_t>(v);
      if (counts_[sv] >= nu_.part(v - 1)) continue;       // content exceeded
      if (v >= 2 && counts_[sv] >= counts_[sv - 1]) continue;  // lattice word
      ++counts_[sv];
      fill_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      dfs(idx + 1);
      --counts_[sv];
    }
  }

  const Partition& la_;
  const Partition& mu_;
  const Partition& nu_;
  int m_;
  std::vector<std::vector<int>> fill_;
  std::vector<int> counts_;
  std::vector<std::pair<int, int>> cells_;
  long long total_ = 0;
};

std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>, long long>
    g_lr_cache;
std::mutex g_lr_mutex;

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu) {
  if (mu.weight() + nu.weight() != lambda.weight())
    throw ArgumentError("factor weights must add up to |" + lambda.to_string() +
                        "|");
  if (!lambda.contains(mu)) return 0;
  if (!lambda.contains(nu)) return 0;  // nu fits inside lambda whenever lr > 0
  {
    std::lock_guard<std::mutex> lock(g_lr_mutex);
    auto it = g_lr_cache.find({lambda.parts(), mu.parts(), nu.parts()});
    if (it != g_lr_cache.end()) return it->second;
  }
  long long value = LrCounter(lambda, mu, nu).count();
  std::lock_guard<std::mutex> lock(g_lr_mutex);
  g_lr_cache.emplace(std::make_tuple(lambda.parts(), mu.parts(), nu.parts()),
                     value);
  return value;
}

long long lr_multi(const Partition& lambda, const std::vector<Partition>& mus) {
  int total = 0;
  for (const Partition& mu : mus) total += mu.weight();
  if (total != lambda.weight())
    throw ArgumentError("factor weights must add up to |" + lambda.to_string() +
                        "|");
  if (mus.empty()) return lambda.empty() ? 1 : 0;
  if (mus.size() == 1) return lambda == mus[0] ? 1 : 0;
  std::vector<Partition> head(mus.begin(), mus.end() - 1);
  const Partition& last = mus.back();
  int rest = lambda.weight() - last.weight();
  long long sum = 0;
  for (const Partition& kappa : partitions_of(rest, std::max(rest, kDefaultWeightCap))) {
    long long outer = lr_coefficient(lambda, kappa, last);
    if (outer == 0) continue;
    sum += outer * lr_multi(kappa, head);
  }
  return sum;
}

long long kronecker_coefficient(const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
  if (lambda.weight() != mu.weight() || lambda.weight() != nu.weight())
    throw ArgumentError("Kronecker coefficients require equal weights");
  int n = lambda.weight();
  Integer sum = 0;
  for (const Partition& rho : partitions_of(n, std::max(n, kDefaultWeightCap))) {
    Integer term = class_size(rho);
    term *= static_cast<long>(character_value(lambda, rho));
    term *= static_cast<long>(character_value(mu, rho));
    term *= static_cast<long>(character_value(nu, rho));
    sum += term;
  }
  Integer q, r;
  Integer den = factorial(n);
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), den.get_mpz_t());
  if (r != 0 || q < 0)
    throw Error("internal: Kronecker inner product is not a nonnegative integer");
  return to_int64(q, "Kronecker coefficient");
}

std::string Decomposition::rule_name() const {
  switch (rule) {
    case Rule::SchurOfSum: return "schur-of-sum";
    case Rule::SchurOfTensor: return "schur-of-tensor";
    case Rule::PairProduct: return "pair-product";
  }
  return "";
}

namespace {

Decomposition collect_pairs(
    Decomposition::Rule rule,
    std::map<std::pair<Partition, Partition>, long long, RevLexPairLess> terms) {
  Decomposition out;
  out.rule = rule;
  for (auto& [key, mult] : terms) {
    if (mult == 0) continue;
    out.terms.push_back({key.first, key.second, mult});
  }
  return out;
}

}  // namespace

Decomposition decompose_schur_of_sum(const Partition& lambda, int cap) {
  int n = lambda.weight();
  if (n > cap)
    throw SizeLimitError("partition weight " + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(cap));
  std::map<std::pair<Partition, Partition>, long long, RevLexPairLess> terms;
  for (int a = 0; a <= n; ++a)
    for (const Partition& mu : partitions_of(a, cap))
      for (const Partition& nu : partitions_of(n - a, cap))
        terms[{mu, nu}] = lr_coefficient(lambda, mu, nu);
  return collect_pairs(Decomposition::Rule::SchurOfSum, std::move(terms));
}

Decomposition decompose_schur_of_tensor(const Partition& lambda, int cap) {
  int n = lambda.weight();
  if (n > cap)
    throw SizeLimitError("partition weight " + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(cap));
  std::map<std::pair<Partition, Partition>, long long, RevLexPairLess> terms;
  for (const Partition& mu : partitions_of(n, cap))
    for (const Partition& nu : partitions_of(n, cap))
      terms[{mu, nu}] = kronecker_coefficient(mu, nu, lambda);
  return collect_pairs(Decomposition::Rule::SchurOfTensor, std::move(terms));
}

Decomposition decompose_pair_product(const Partition& mu, const Partition& nu,
                                     int cap) {
  int n = mu.weight() + nu.weight();
  if (n > cap)
    throw SizeLimitError("partition weight " + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(cap));
  std::map<std::pair<Partition, Partition>, long long, RevLexPairLess> terms;
  for (const Partition& lambda : partitions_of(n, cap))
    terms[{lambda, Partition()}] = lr_coefficient(lambda, mu, nu);
  return collect_pairs(Decomposition::Rule::PairProduct, std::move(terms));
}

}  // namespace schur
