#pragma once

// Factorizations of elements supported in U1 ∪ U2 into elements supported in
// U1 or in U2, with certificates that can be re-checked independently.

#include "ample/element.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ample {

/// g = f_u^k h where f_u is the first-return element of u and k = index(g).
struct CosetReduction {
  Integer k = 0;
  TfgElement h;
};

CosetReduction coset_reduce(const TfgElement& g, const ClopenSet& u);

/// input = compose(t2, t1) with t1 and t2 of finite order.
struct TorsionFactorization {
  TfgElement input;
  TfgElement t1;
  TfgElement t2;
  Integer order1 = 1;
  Integer order2 = 1;
};

/// Writes an index-zero element as a product of two torsion elements. In the
/// wreath form (sigma, c) over the residues of w, t1 = (pi, c) for the
/// ascending full cycle pi of those residues and t2 = (sigma pi^{-1}, 0).
/// Both factors are supported in w. Torsion inputs return (h, identity).
TorsionFactorization factor_kernel(const TfgElement& h,
                                   const std::optional<ClopenSet>& w = std::nullopt);

enum class Tag { U1, U2 };

std::string to_string(Tag tag);

struct Factor {
  Tag tag;
  TfgElement element;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// target = compose(factors[0], compose(factors[1], ...)).
struct Certificate {
  TfgElement target;
  ClopenSet u1;
  ClopenSet u2;
  std::vector<Factor> factors;
};

Certificate decompose_local(const TfgElement& g, const ClopenSet& u1, const ClopenSet& u2);

/// Exact check of the tag supports and of the recomposition.
bool verify_certificate(const Certificate& c);

}  // namespace ample
