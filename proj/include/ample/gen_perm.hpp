#pragma once

// Generalized permutations mu[U; f_1, ..., f_n; pi] and generalized 2-cycles
// delta_{U; g}. A generalized permutation moves f_i(U) onto f_{pi(i)}(U) by
// f_{pi(i)} f_i^{-1} and fixes the rest of the space.

#include "ample/element.hpp"

#include <vector>

namespace ample {

/// Data of a generalized permutation. The images f_i(U) must be pairwise
/// disjoint; the constructor rejects anything else.
class GenPermSpec {
 public:
  GenPermSpec(ClopenSet u, std::vector<TfgElement> maps, Permutation pi);

  const ClopenSet& u() const { return u_; }
  const std::vector<TfgElement>& maps() const { return maps_; }
  const Permutation& pi() const { return pi_; }

  /// Same U and maps with another permutation.
  GenPermSpec with_permutation(Permutation pi) const;

  friend bool operator==(const GenPermSpec&, const GenPermSpec&) = default;

 private:
  ClopenSet u_;
  std::vector<TfgElement> maps_;
  Permutation pi_;
};

/// delta_{U; g}: swaps U and g(U). Requires g(U) disjoint from U.
class TwoCycleSpec {
 public:
  TwoCycleSpec(ClopenSet u, TfgElement g);

  const ClopenSet& u() const { return u_; }
  const TfgElement& g() const { return g_; }

  friend bool operator==(const TwoCycleSpec&, const TwoCycleSpec&) = default;

 private:
  ClopenSet u_;
  TfgElement g_;
};

TfgElement realize(const GenPermSpec& spec);
TfgElement realize_two_cycle(const TwoCycleSpec& spec);

/// Checks realize(pi * sigma) == realize(pi) * realize(sigma) exactly.
bool check_perm_hom(const GenPermSpec& spec, const Permutation& pi, const Permutation& sigma);

/// mu[U; h f_1, ..., h f_n; pi], which realizes h g h^{-1}.
GenPermSpec conjugate_spec(const TfgElement& h, const GenPermSpec& spec);
/// mu[h^{-1}(U); f_1 h, ..., f_n h; pi], which realizes the same element.
GenPermSpec reparameterize_spec(const TfgElement& h, const GenPermSpec& spec);

/// Splits delta_{U; g} along a clopen partition of U. Empty parts are dropped.
std::vector<TwoCycleSpec> split_two_cycle(const TwoCycleSpec& spec,
                                          const std::vector<ClopenSet>& parts);

/// Decomposes a torsion element into commuting generalized permutations
/// mu[V_k; id, g, ..., g^{k-1}; (0 1 ... k-1)], one per period k >= 2, where
/// V_k holds the lowest-residue cylinder of every residue cycle of length k.
std::vector<GenPermSpec> torsion_to_genperms(const TfgElement& g);

/// Ordered 2-cycles whose left-to-right product realizes spec; every
/// transposition (i j) becomes delta_{f_i(U); f_j f_i^{-1}}.
std::vector<TwoCycleSpec> genperm_to_two_cycles(const GenPermSpec& spec);

}  // namespace ample
