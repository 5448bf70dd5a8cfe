#include "schur/super_space.hpp"

#include <algorithm>
#include <map>

#include "schur/error.hpp"

namespace schur {

namespace {

void check_power_cap(int dim, int n, long long cap) {
  Integer size = 1;
  for (int k = 0; k < n; ++k) {
    size *= dim;
    if (size > static_cast<long>(cap))
      throw SizeLimitError("tensor power dimension " + std::to_string(dim) + "^" +
                           std::to_string(n) + " exceeds the cap of " +
                           std::to_string(cap));
  }
}

long long power(int base, int exp) {
  long long out = 1;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

// (-1)^#{k<l : sigma(k)>sigma(l), parity[k] and parity[l]} as +1/-1.
int koszul_sign(const Permutation& sigma, const std::vector<bool>& parity) {
  int n = sigma.size();
  int count = 0;
  for (int k = 0; k < n; ++k) {
    if (!parity[static_cast<std::size_t>(k)]) continue;
    for (int l = k + 1; l < n; ++l)
      if (parity[static_cast<std::size_t>(l)] && sigma(k) > sigma(l)) ++count;
  }
  return (count % 2 == 0) ? 1 : -1;
}

std::vector<bool> tuple_parities(const SuperVectorSpace& space,
                                 const std::vector<int>& tuple) {
  std::vector<bool> parity(tuple.size());
  for (std::size_t k = 0; k < tuple.size(); ++k)
    parity[k] = space.parity(tuple[k]);
  return parity;
}

void permute_tuple(const Permutation& sigma, const std::vector<int>& tuple,
                   std::vector<int>& out) {
  for (std::size_t k = 0; k < tuple.size(); ++k)
    out[static_cast<std::size_t>(sigma(static_cast<int>(k)))] = tuple[k];
}

}  // namespace

QMatrix permutation_action(const SuperVectorSpace& space, const Permutation& sigma,
                           long long cap) {
  int n = sigma.size();
  int dim = space.total();
  check_power_cap(dim, n, cap);
  long long size = power(dim, n);
  QMatrix out(static_cast<int>(size), static_cast<int>(size));
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  for (long long col = 0; col < size; ++col) {
    // Decode the column index into a tuple, first factor most significant.
    long long rest = col;
    for (int k = n - 1; k >= 0; --k) {
      tuple[static_cast<std::size_t>(k)] = static_cast<int>(rest % dim);
      rest /= dim;
    }
    permute_tuple(sigma, tuple, image);
    long long row = 0;
    for (int k = 0; k < n; ++k) row = row * dim + image[static_cast<std::size_t>(k)];
    int sign = koszul_sign(sigma, tuple_parities(space, tuple));
    out.at(static_cast<int>(row), static_cast<int>(col)) = sign;
  }
  return out;
}

QMatrix apply_element(const SuperVectorSpace& space, const GroupAlgebraElement& a,
                      long long cap) {
  int n = a.degree();
  int dim = space.total();
  check_power_cap(dim, n, cap);
  long long size = power(dim, n);
  QMatrix out(static_cast<int>(size), static_cast<int>(size));
  for (const auto& [sigma, coeff] : a.terms()) {
    QMatrix action = permutation_action(space, sigma, cap);
    out = out + action.scaled(coeff);
  }
  return out;
}

GradedRank schur_dimension(const SuperVectorSpace& space, const Partition& lambda,
                           long long cap, int sym_cap) {
  int n = lambda.weight();
  int dim = space.total();
  if (n == 0) return {1, 0};
  if (dim == 0) return {0, 0};
  check_power_cap(dim, n, cap);
  GroupAlgebraElement c = young_symmetrizer(lambda, sym_cap);

  GradedRank out;
  // Walk multiset orbits: nondecreasing tuples over {0..dim-1}.
  std::vector<int> multiset(static_cast<std::size_t>(n), 0);
  while (true) {
    // All distinct arrangements of the multiset, in lexicographic order.
    std::vector<std::vector<int>> arrangements;
    std::map<std::vector<int>, int> index;
    std::vector<int> arr = multiset;
    do {
      index.emplace(arr, static_cast<int>(arrangements.size()));
      arrangements.push_back(arr);
    } while (std::next_permutation(arr.begin(), arr.end()));

    int m = static_cast<int>(arrangements.size());
    QMatrix block(m, m);
    std::vector<int> image(static_cast<std::size_t>(n), 0);
    for (int col = 0; col < m; ++col) {
      const std::vector<int>& tuple = arrangements[static_cast<std::size_t>(col)];
      std::vector<bool> parity = tuple_parities(space, tuple);
      for (const auto& [sigma, coeff] : c.terms()) {
        permute_tuple(sigma, tuple, image);
        int row = index.at(image);
        Rational value = coeff;
        if (koszul_sign(sigma, parity) < 0) value = -value;
        block.at(row, col) += value;
      }
    }
    int r = rank_of(block);
    int block_parity = 0;
    for (int v : multiset) block_parity ^= space.parity(v) ? 1 : 0;
    if (block_parity == 0)
      out.even += r;
    else
      out.odd += r;

    // Next nondecreasing tuple.
    int k = n - 1;
    while (k >= 0 && multiset[static_cast<std::size_t>(k)] == dim - 1) --k;
    if (k < 0) break;
    int v = multiset[static_cast<std::size_t>(k)] + 1;
    for (int j = k; j < n; ++j) multiset[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

bool vanishes_by_rectangle(const SuperVectorSpace& space, const Partition& lambda) {
  return lambda.contains(
      Partition::rectangle(space.even_dim + 1, space.odd_dim + 1));
}

}  // namespace schur
