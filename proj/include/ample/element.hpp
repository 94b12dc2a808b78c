#pragma once

// Elements of the ample group generated by the odometer f(x) = x + 1.
//
// Every element g acts as g(x) = x + n(x mod K_d) for a cocycle table n over
// the depth-d residues. The table is kept at the smallest depth that
// represents g, so two elements are equal exactly when their canonical tables
// are equal.

#include "ample/cantor.hpp"
#include "ample/permutation.hpp"

#include <optional>
#include <vector>

namespace ample {

/// Dense tables above this many entries are rejected with ResourceError.
inline constexpr Integer kMaxTableSize = Integer{1} << 24;

class TfgElement {
 public:
  /// Validates table size and bijectivity, then canonicalizes.
  TfgElement(BaseSequence base, int depth, std::vector<Integer> cocycle);

  static TfgElement identity(const BaseSequence& base);
  /// The odometer f raised to the power k (depth 0, constant cocycle k).
  static TfgElement odometer_power(const BaseSequence& base, Integer k);

  const BaseSequence& base() const { return base_; }
  int depth() const { return depth_; }
  const std::vector<Integer>& cocycle() const { return cocycle_; }

  bool is_identity() const { return depth_ == 0 && cocycle_[0] == 0; }
  /// Cocycle value on a residue taken at depth d >= depth().
  Integer value_at(Integer residue) const {
    return cocycle_[static_cast<std::size_t>(residue % modulus_)];
  }
  /// Cocycle table refined to depth d >= depth().
  std::vector<Integer> cocycle_at(int d) const;
  /// Induced permutation of the depth-d residues, d >= depth().
  Permutation residue_permutation(int d) const;

  friend bool operator==(const TfgElement&, const TfgElement&);

 private:
  void canonicalize();

  BaseSequence base_;
  int depth_ = 0;
  Integer modulus_ = 1;
  std::vector<Integer> cocycle_;
};

struct TfgElementHash {
  std::size_t operator()(const TfgElement& g) const noexcept;
};

/// Residue permutation plus integer carries: n(w) = sigma(w) - w + K_d c(w).
struct WreathForm {
  BaseSequence base;
  int depth = 0;
  Permutation sigma;
  std::vector<Integer> carry;
};

/// Finite order, or nullopt for elements of infinite order.
struct OrderResult {
  std::optional<Integer> order;
  bool is_finite() const { return order.has_value(); }
  friend bool operator==(const OrderResult&, const OrderResult&) = default;
};

TfgElement odometer(const BaseSequence& base);

/// compose(g, h) acts as x -> g(h(x)).
TfgElement compose(const TfgElement& g, const TfgElement& h);
/// Left-to-right product: compose(e[0], compose(e[1], ...)).
TfgElement product(const std::vector<TfgElement>& elements, const BaseSequence& base);
TfgElement inverse(const TfgElement& g);
TfgElement power(const TfgElement& g, Integer k);

Point apply_to_point(const TfgElement& g, const Point& x);
ClopenSet image_of_clopen(const TfgElement& g, const ClopenSet& u);
ClopenSet preimage_of_clopen(const TfgElement& g, const ClopenSet& u);
ClopenSet support(const TfgElement& g);

/// Index map: the mean of the cocycle. Sends f to 1.
Integer index(const TfgElement& g);

/// Wreath form at the element's own depth, or at a finer depth.
WreathForm wreath_form(const TfgElement& g, std::optional<int> depth = std::nullopt);
TfgElement lift(const WreathForm& w);

/// Finite iff every sigma-cycle has zero carry sum; the order is then the lcm
/// of the cycle lengths. A finite answer is confirmed by exact composition.
OrderResult order(const TfgElement& g);

}  // namespace ample
