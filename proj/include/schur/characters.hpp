#pragma once

#include <functional>
#include <vector>

#include "schur/numeric.hpp"
#include "schur/partition.hpp"

namespace schur {

/// Conjugacy classes of the symmetric group are indexed by cycle types,
/// which are partitions of the group degree.
using CycleType = Partition;

/// Number of permutations of cycle type rho: n! / prod(k^m_k * m_k!).
Integer class_size(const CycleType& rho);

/// Irreducible character chi^lambda evaluated on the class rho.
/// Requires |lambda| == |rho|. Values are exact integers.
long long character_value(const Partition& lambda, const CycleType& rho);

/// Dimension of the irreducible representation V_lambda, by the hook length
/// formula n! / prod(hooks); the division is checked to be exact.
/// Requires a nonempty lambda.
long long irrep_dimension(const Partition& lambda);

/// (1/n!) sum over classes of class_size(rho) * f(rho) * g(rho).
Rational class_function_inner_product(
    int n, const std::function<Rational(const CycleType&)>& f,
    const std::function<Rational(const CycleType&)>& g);

/// Inner product of two irreducible characters; requires equal weights.
Rational character_inner_product(const Partition& lambda, const Partition& mu);

/// Full character table of the symmetric group of degree n. Rows and columns
/// both run over partitions of n in reverse-lexicographic order.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> labels;               // row and column labels
  std::vector<Integer> sizes;                  // class sizes, by column
  std::vector<std::vector<long long>> values;  // values[row][col]
};

CharacterTable character_table(int n, int cap = kDefaultWeightCap);

}  // namespace schur
