#pragma once

#include <string>
#include <vector>

#include "schur/partition.hpp"

namespace schur {

/// Littlewood-Richardson coefficient [V_lambda : V_mu, V_nu], computed by
/// counting skew tableaux of shape lambda/mu and content nu whose reverse
/// reading word is a lattice word. Requires |mu| + |nu| == |lambda|.
long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu);

/// Multi-factor coefficient [V_lambda : V_mu1, ..., V_mur] by iterated
/// two-factor expansion. The empty factor list requires lambda empty.
long long lr_multi(const Partition& lambda, const std::vector<Partition>& mus);

/// Kronecker coefficient: multiplicity of V_lambda in V_mu (x) V_nu, via the
/// character inner product. Symmetric in all three arguments.
/// Requires equal weights.
long long kronecker_coefficient(const Partition& lambda, const Partition& mu,
                                const Partition& nu);

/// A multiplicity list produced by one of the three decomposition rules.
/// Keys are listed in reverse-lexicographic order. Pair-keyed rules fill
/// both key slots; the product rule leaves `second` empty.
struct Decomposition {
  enum class Rule { SchurOfSum, SchurOfTensor, PairProduct };

  struct Term {
    Partition first;
    Partition second;
    long long multiplicity = 0;
  };

  Rule rule = Rule::SchurOfSum;
  std::vector<Term> terms;

  bool pair_keyed() const { return rule != Rule::PairProduct; }
  std::string rule_name() const;
};

/// S_lambda(V + W) = sum over (mu, nu) of lr(lambda; mu, nu) S_mu (x) S_nu.
Decomposition decompose_schur_of_sum(const Partition& lambda,
                                     int cap = kDefaultWeightCap);

/// S_lambda(V (x) W) = sum over (mu, nu) of kron(mu, nu, lambda) S_mu (x) S_nu.
Decomposition decompose_schur_of_tensor(const Partition& lambda,
                                        int cap = kDefaultWeightCap);

/// S_mu (x) S_nu = sum over lambda of lr(lambda; mu, nu) S_lambda.
Decomposition decompose_pair_product(const Partition& mu, const Partition& nu,
                                     int cap = kDefaultWeightCap);

}  // namespace schur
