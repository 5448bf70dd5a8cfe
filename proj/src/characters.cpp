#include "schur/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "schur/error.hpp"

namespace schur {

Integer class_size(const CycleType& rho) {
  Integer denom = 1;
  int run = 0;
  for (int i = 0; i < rho.rows(); ++i) {
    denom *= rho.part(i);
    run = (i > 0 && rho.part(i) == rho.part(i - 1)) ? run + 1 : 1;
    denom *= run;
  }
  Integer num = factorial(rho.weight());
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
  if (r != 0) throw Error("internal: class size not integral");
  return q;
}

namespace {

// Beta numbers lambda_k + (rows-1-k). Removing a border strip of length r
// moves one bead b down to b-r; the strip height is the number of beads
// strictly between the two positions.
std::vector<int> beta_set(const Partition& la) {
  int m = la.rows();
  std::vector<int> beta(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k)
    beta[static_cast<std::size_t>(k)] = la.part(k) + (m - 1 - k);
  return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  int m = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int k = 0; k < m; ++k) {
    int p = beta[static_cast<std::size_t>(k)] - (m - 1 - k);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

long long mn_recurse(const Partition& la, const std::vector<int>& rho);

std::map<std::pair<std::vector<int>, std::vector<int>>, long long> g_char_cache;
std::mutex g_char_mutex;

long long mn_value(const Partition& la, std::vector<int> rho_rest) {
  if (la.empty()) return 1;
  if (rho_rest.empty()) throw Error("internal: cycle type exhausted early");
  {
    std::lock_guard<std::mutex> lock(g_char_mutex);
    auto it = g_char_cache.find({la.parts(), rho_rest});
    if (it != g_char_cache.end()) return it->second;
  }
  long long value = mn_recurse(la, rho_rest);
  std::lock_guard<std::mutex> lock(g_char_mutex);
  g_char_cache.emplace(std::make_pair(la.parts(), std::move(rho_rest)), value);
  return value;
}

long long mn_recurse(const Partition& la, const std::vector<int>& rho) {
  int r = rho.front();
  std::vector<int> rest(rho.begin() + 1, rho.end());
  std::vector<int> beta = beta_set(la);
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++height;
    std::vector<int> nb = beta;
    nb[i] = target;
    long long sub = mn_value(partition_from_beta(std::move(nb)), rest);
    total += (height % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

long long character_value(const Partition& lambda, const CycleType& rho) {
  if (lambda.weight() != rho.weight())
    throw ArgumentError("character argument has the wrong weight: |" +
                        lambda.to_string() + "| != |" + rho.to_string() + "|");
  return mn_value(lambda, rho.parts());
}

long long irrep_dimension(const Partition& lambda) {
  if (lambda.empty())
    throw ArgumentError("irrep dimension requires a nonempty partition");
  Partition conj = lambda.transposed();
  Integer hooks = 1;
  for (int i = 0; i < lambda.rows(); ++i)
    for (int j = 0; j < lambda.part(i); ++j)
      hooks *= (lambda.part(i) - j) + (conj.part(j) - i) - 1;
  Integer q, r;
  Integer num = factorial(lambda.weight());
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), hooks.get_mpz_t());
  if (r != 0) throw Error("internal: hook length formula not integral");
  return to_int64(q, "irrep dimension");
}

Rational class_function_inner_product(
    int n, const std::function<Rational(const CycleType&)>& f,
    const std::function<Rational(const CycleType&)>& g) {
  Rational sum = 0;
  for (const Partition& rho : partitions_of(n, std::max(n, kDefaultWeightCap)))
    sum += Rational(class_size(rho)) * f(rho) * g(rho);
  return sum / Rational(factorial(n));
}

Rational character_inner_product(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw ArgumentError("characters of different degrees have no inner product");
  int n = lambda.weight();
  auto as_rational = [](long long v) { return Rational(static_cast<long>(v)); };
  return class_function_inner_product(
      n,
      [&](const CycleType& rho) { return as_rational(character_value(lambda, rho)); },
      [&](const CycleType& rho) { return as_rational(character_value(mu, rho)); });
}

CharacterTable character_table(int n, int cap) {
  CharacterTable table;
  table.n = n;
  table.labels = partitions_of(n, cap);
  table.sizes.reserve(table.labels.size());
  for (const Partition& rho : table.labels) table.sizes.push_back(class_size(rho));
  table.values.reserve(table.labels.size());
  for (const Partition& la : table.labels) {
    std::vector<long long> row;
    row.reserve(table.labels.size());
    for (const Partition& rho : table.labels)
      row.push_back(character_value(la, rho));
    table.values.push_back(std::move(row));
  }
  return table;
}

}  // namespace schur
