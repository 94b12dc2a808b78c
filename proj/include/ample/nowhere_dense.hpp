#pragma once

// Nested clopen sets u_0 = X ⊇ u_1 ⊇ ... around the point 0, each stage
// carrying two 2-cycles f1_n = delta_{u_n; g_n} and f2_n = delta_{u_n; h_n}.
// For a word omega over {1, 2} the group generated by f^(omega_n)_n keeps a
// Cantor set Y_omega invariant; the checks below certify its finite-depth
// truncations.
//
// Words w over {0, 1, 2} of length n name the stage sets
// V^(w) = f^(w_1)_1 f^(w_2)_2 ... f^(w_n)_n (u_n), with f^(0) the identity.

#include "ample/element.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ample {

struct NDStage {
  ClopenSet u;
  TfgElement g;
  TfgElement h;
  /// Usually delta_{u; g} and delta_{u; h}; tests may substitute other
  /// involutions to build degenerate constructions.
  TfgElement f1;
  TfgElement f2;
};

/// Stage with f1 = delta_{u; g} and f2 = delta_{u; h}.
NDStage make_stage(ClopenSet u, TfgElement g, TfgElement h);

struct NDConstruction {
  BaseSequence base;
  std::vector<NDStage> stages;
};

/// Word over {1, 2}.
class OmegaWord {
 public:
  explicit OmegaWord(std::string letters);
  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  int operator[](std::size_t i) const { return letters_[i] - '0'; }

 private:
  std::string letters_;
};

/// All 2^n words over {1, 2} of length n, in lexicographic order.
std::vector<OmegaWord> all_omega_words(std::size_t n);

/// Stage n uses the smallest depth d_n > d_{n-1} with K_{d_n} >= 3 K_{d_{n-1}},
/// u_n = {0 mod K_{d_n}}, g_n = f^{a K_{d_{n-1}}} and h_n = f^{b K_{d_{n-1}}}
/// for distinct a, b in [1, K_{d_n} / K_{d_{n-1}}). Seed 0 takes a = 1, b = 2;
/// other seeds draw a and b.
NDConstruction build_construction(const BaseSequence& base, std::size_t stages, std::uint64_t seed = 0);

/// f^(letter)_stage for letter 0, 1 or 2 (stage counted from 1).
const TfgElement& stage_generator(const NDConstruction& c, std::size_t stage, int letter);

/// V^(w) for a word w over {0, 1, 2} with |w| <= number of stages, built from
/// delta_{u_n; g_n} and delta_{u_n; h_n} rather than the stored f1, f2.
ClopenSet stage_image(const NDConstruction& c, const std::vector<int>& word);

struct InvariantReport {
  bool nested = true;
  bool contains_base_point = true;
  bool disjoint_images = true;
  bool proper = true;
  bool single_cylinders = true;
  bool involutions = true;
  bool ok() const {
    return nested && contains_base_point && disjoint_images && proper && single_cylinders && involutions;
  }
};

/// Nesting, x0 ∈ u_n, disjointness of u_n, g_n(u_n), h_n(u_n) inside u_{n-1}
/// with a nonempty remainder, V^(w) a single cylinder of depth >= |w|, and
/// f1_n, f2_n involutions supported in u_{n-1}.
InvariantReport check_construction_invariants(const NDConstruction& c);

/// Union of V^(w) over the words with w_n ∈ {0, omega_n}. Uses the first
/// |omega| stages; throws DomainError if omega is longer than the construction.
ClopenSet y_cover(const NDConstruction& c, const OmegaWord& omega);

/// Every admissible V^(w), |w| < |omega|, keeps a nonempty part outside its
/// two admissible children.
bool check_nowhere_dense(const NDConstruction& c, const OmegaWord& omega);

/// Every generator f^(omega_n)_n maps y_cover(c, omega) onto itself.
bool check_generators_preserve_cover(const NDConstruction& c, const OmegaWord& omega);

/// Order of <f^(omega_1)_1, ..., f^(omega_n)_n> by closure; n <= 4.
Integer truncated_group_order(const NDConstruction& c, const OmegaWord& omega, std::size_t n,
                              std::size_t cap = 1 << 20);

/// Order of the group generated by the first n flip maps on {0,1}^n, where
/// the k-th map flips letter k of words starting with k-1 zeros.
Integer gamma_model_order(std::size_t n);

/// The orbit of 0 under the generators meets every admissible V^(w),
/// |w| = |omega|.
bool check_minimality_on_y(const NDConstruction& c, const OmegaWord& omega);

}  // namespace ample
