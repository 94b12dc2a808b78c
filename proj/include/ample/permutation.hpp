#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace ample {

/// Permutation of {0, ..., n-1}. Composition follows the function
/// convention: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Validates that images is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<std::int64_t> images);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::int64_t a, std::int64_t b);
  /// The cycle points[0] -> points[1] -> ... -> points.back() -> points[0].
  static Permutation cycle(std::size_t n, const std::vector<std::int64_t>& points);

  std::size_t size() const { return images_.size(); }
  std::int64_t operator()(std::int64_t i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int64_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Cycles of length >= 2, each starting at its smallest point; ordered by
  /// that smallest point.
  std::vector<std::vector<std::int64_t>> cycles(bool include_fixed = false) const;
  std::int64_t order() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::int64_t> images_;
};

/// Transposition word for p: t_1 * t_2 * ... * t_k == p, each cycle
/// (a_1 ... a_m) written as (a_1 a_2)(a_2 a_3)...(a_{m-1} a_m).
std::vector<std::pair<std::int64_t, std::int64_t>> transposition_word(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace ample
