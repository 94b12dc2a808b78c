#pragma once

#include "ample/element.hpp"

#include <map>
#include <vector>

namespace ample {

/// Kakutani-Rokhlin partition of (u, g). towers[k] lists the levels
/// W_{k,1}, ..., W_{k,k} of the tower of height k; g maps each level onto
/// the next one and the top level back into u.
struct KRPartition {
  ClopenSet u;
  TfgElement g;
  /// Points whose forward and backward g-orbits both visit u. This is the
  /// whole space whenever g acts minimally (for instance g = f).
  ClopenSet recurrent;
  std::map<Integer, std::vector<ClopenSet>> towers;
};

KRPartition build_kr(const ClopenSet& u, const TfgElement& g);

/// u minus g^{-1}(u): points of u leaving u in one step.
ClopenSet exit_set(const ClopenSet& u, const TfgElement& g);
/// g^{-1}(u) minus u: points outside u entering u in one step.
ClopenSet entrance_set(const ClopenSet& u, const TfgElement& g);

/// Involution e with e(exit_set) = entrance_set: g^{k-1} on every ground
/// level W_{k,1}, g^{1-k} on every top level W_{k,k}, identity elsewhere.
TfgElement parity_exchange(const ClopenSet& u, const TfgElement& g);

struct FirstReturn {
  /// First-return map of f to u, extended by the identity.
  TfgElement f_u;
  /// Product of the tower cycles mu[W_{k,1}; id, f, ..., f^{k-1}; (1 ... k)].
  TfgElement h_u;
};

/// f = f_u h_u for the odometer f and nonempty u.
FirstReturn first_return(const ClopenSet& u);

/// Partition of X into the f^n-minimal pieces: the residue classes modulo
/// p = lim gcd(n, K_d). Each piece is a clopen set.
std::vector<ClopenSet> minimal_power_partition(const BaseSequence& base, Integer n);

/// Finite-depth minimality certificate: inside every piece, the f^n-orbit of
/// each depth-D cylinder visits every depth-D cylinder of the piece and the
/// piece is f^n-invariant. D is raised to the piece depth if smaller.
bool certify_minimal_pieces(const std::vector<ClopenSet>& pieces, Integer n, int test_depth = 6);

}  // namespace ample
