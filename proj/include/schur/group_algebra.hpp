#pragma once

#include <map>
#include <string>

#include "schur/numeric.hpp"
#include "schur/partition.hpp"
#include "schur/permutation.hpp"

namespace schur {

/// Default cap on the symmetric group degree for symmetrizer construction.
inline constexpr int kDefaultSymmetrizerCap = 7;

/// An element of the rational group algebra Q[S_n]: a finite formal sum of
/// permutations with rational coefficients. Zero coefficients are never
/// stored. Multiplication is the bilinear extension of composition.
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(int n);
  static GroupAlgebraElement identity(int n);

  int degree() const { return n_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  Rational coefficient(const Permutation& p) const;
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Permutation& p, const Rational& c);

  GroupAlgebraElement operator+(const GroupAlgebraElement& rhs) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& rhs) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& rhs) const;
  GroupAlgebraElement scaled(const Rational& c) const;
  bool operator==(const GroupAlgebraElement& rhs) const = default;

  /// "1/3*e + 1/3*(1 2) - 1/3*(1 3) - 1/3*(1 3 2)", terms in lexicographic
  /// one-line order of the permutations.
  std::string to_string() const;

private:
  int n_ = 0;
  std::map<Permutation, Rational> terms_;
};

/// Row group of the row-major canonical tableau of lambda: all permutations
/// preserving each row of {1..n} filled row by row.
std::vector<Permutation> canonical_row_group(const Partition& lambda);

/// Column group of the same tableau.
std::vector<Permutation> canonical_column_group(const Partition& lambda);

/// Young symmetrizer c_lambda = (dim V_lambda / n!) * a_lambda * b_lambda,
/// where a sums the row group and b sums the column group with signs.
/// The result is an exact idempotent. Throws SizeLimitError past the cap.
GroupAlgebraElement young_symmetrizer(const Partition& lambda,
                                      int cap = kDefaultSymmetrizerCap);

}  // namespace schur
