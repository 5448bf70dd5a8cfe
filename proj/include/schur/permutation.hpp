#pragma once

#include <compare>
#include <string>
#include <vector>

#include "schur/partition.hpp"

namespace schur {

/// A permutation of {0, ..., n-1} in one-line notation. Composition follows
/// (s*t)(i) = s(t(i)): the right factor acts first. Display is 1-based.
class Permutation {
public:
  Permutation() = default;

  /// Validates that images is a bijection on {0, .., n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// +1 or -1.
  int sign() const;

  /// Cycle lengths, sorted decreasingly; fixed points contribute parts 1.
  Partition cycle_type() const;

  /// Disjoint cycles of length >= 2, each starting at its smallest element,
  /// cycles ordered by that element. 0-based values.
  std::vector<std::vector<int>> cycles() const;

  /// "(1 2)(3 5 4)" with 1-based entries; the identity prints "e".
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

/// All n! permutations in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace schur
