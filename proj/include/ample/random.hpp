#pragma once

// Seeded generators for property tests and self-tests. Draws depend only on
// the seed: the engine is mt19937_64 and bounded draws use rejection
// sampling, so sequences are identical across standard libraries.

#include "ample/element.hpp"
#include "ample/gen_perm.hpp"

#include <cstdint>
#include <random>

namespace ample {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n), n > 0.
  Integer below(Integer n);
  /// Uniform in [lo, hi].
  Integer range(Integer lo, Integer hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(static_cast<Integer>(i)))]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Depth in [0, max_depth] whose table stays small.
int random_depth(Rng& rng, const BaseSequence& base, int max_depth);
Permutation random_permutation(Rng& rng, std::size_t n);

ClopenSet random_clopen(Rng& rng, const BaseSequence& base, int max_depth);
ClopenSet random_nonempty_clopen(Rng& rng, const BaseSequence& base, int max_depth);

/// Random residue permutation with carries in [-carry_bound, carry_bound].
TfgElement random_element(Rng& rng, const BaseSequence& base, int max_depth, Integer carry_bound = 2);
/// Element supported in u, at a depth between u.depth() and max_depth.
TfgElement random_supported(Rng& rng, const ClopenSet& u, int max_depth, Integer carry_bound = 2);
/// Finite-order element: carries sum to zero along every residue cycle.
TfgElement random_torsion(Rng& rng, const BaseSequence& base, int max_depth, Integer carry_bound = 2);
/// Index-zero element supported in u.
TfgElement random_index_zero(Rng& rng, const ClopenSet& u, int max_depth, Integer carry_bound = 2);
/// Conjugate h f^{+-1} h^{-1} of the odometer, hence a minimal element.
TfgElement random_minimal(Rng& rng, const BaseSequence& base, int max_depth);

/// Generalized permutation over u with n maps whose images are disjoint.
GenPermSpec random_genperm(Rng& rng, const BaseSequence& base, int max_depth, std::size_t n);

/// Eventually periodic point, aligned with the base period.
Point random_point(Rng& rng, const BaseSequence& base);

}  // namespace ample
