#pragma once

#include "schur/group_algebra.hpp"
#include "schur/matrix.hpp"
#include "schur/partition.hpp"

namespace schur {

/// Default cap on the dimension of a tensor power handled densely.
inline constexpr long long kDefaultDimCap = 4096;

/// A finite dimensional super vector space Q^(p|q): basis vectors
/// 0 .. p-1 are even, p .. p+q-1 are odd.
struct SuperVectorSpace {
  int even_dim = 0;
  int odd_dim = 0;

  int total() const { return even_dim + odd_dim; }
  bool parity(int basis_index) const { return basis_index >= even_dim; }
};

/// Sign-graded dimension of a subspace of a tensor power.
struct GradedRank {
  long long even = 0;
  long long odd = 0;
  long long total() const { return even + odd; }
  bool operator==(const GradedRank&) const = default;
};

/// Matrix of sigma acting on V^(x)n over the lexicographic tensor basis
/// (first factor most significant). Moving two odd factors past each other
/// contributes -1: the entry sign is (-1)^#{k<l : sigma(k)>sigma(l), both
/// factors odd}. Throws SizeLimitError when total()^n exceeds the cap.
QMatrix permutation_action(const SuperVectorSpace& space, const Permutation& sigma,
                           long long cap = kDefaultDimCap);

/// Linear extension of permutation_action to group algebra elements.
QMatrix apply_element(const SuperVectorSpace& space, const GroupAlgebraElement& a,
                      long long cap = kDefaultDimCap);

/// Graded dimension of the image of the Young symmetrizer c_lambda on
/// V^(x)|lambda|, i.e. of the Schur functor value S_lambda(V). Computed
/// exactly, block by block over multiset orbits of the basis (the
/// symmetric group action never leaves a block, and blocks have at most
/// n! arrangements, so the dense cap is never needed in one piece).
GradedRank schur_dimension(const SuperVectorSpace& space, const Partition& lambda,
                           long long cap = kDefaultDimCap,
                           int sym_cap = kDefaultSymmetrizerCap);

/// The rectangle criterion: S_lambda(Q^(p|q)) = 0 exactly when lambda
/// contains the (p+1) x (q+1) rectangle.
bool vanishes_by_rectangle(const SuperVectorSpace& space, const Partition& lambda);

}  // namespace schur
