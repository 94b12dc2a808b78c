#pragma once

// Orbits of finite point sets, realization of finite permutations by group
// elements, and maximality of stabilizers of finite sets. The finite model
// is a permutation group on {0, ..., n-1}; its ample group is the product of
// the symmetric groups of its orbits.

#include "ample/element.hpp"

#include <optional>
#include <vector>

namespace ample {

/// Pairwise distinct points over one base. May be empty.
class FinitePointSet {
 public:
  FinitePointSet() = default;
  explicit FinitePointSet(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::vector<Point> points_;
};

enum class StabilizerKind { Maximal, IndexTwoInPartitionStabilizer, NotMaximal, WholeGroup, ReducesTo };

const char* to_string(StabilizerKind kind);

struct StabilizerClass {
  StabilizerKind kind = StabilizerKind::Maximal;
  /// Orbit decomposition of Y. For point sets these are indices into Y, for
  /// the finite model the points themselves.
  std::vector<std::vector<Integer>> orbits;
  /// For ReducesTo: the strict subset Y1 with St(Y) = St(Y1), same encoding.
  std::vector<Integer> reduced;
};

/// x - y is an integer, i.e. x and y lie in one odometer orbit.
bool same_orbit(const Point& x, const Point& y);

std::vector<std::vector<Integer>> orbit_decomposition(const FinitePointSet& y);

/// Every orbit of the ample group on the Cantor set is infinite, so St(Y) is
/// maximal exactly when Y lies in one orbit.
StabilizerClass classify_finite_stabilizer(const FinitePointSet& y);

/// Element acting on y by y[i] -> y[pi(i)] and fixing every point of z. Built
/// as a product of 2-cycles delta_{C; f^m} on cylinders separating y ∪ z.
TfgElement realize_permutation(const FinitePointSet& y, const Permutation& pi,
                               const FinitePointSet& z);

/// True iff the permutation action of the generators on the parts is
/// transitive. Throws DomainError if the parts do not partition the space or
/// a generator does not permute them.
bool partition_action_transitive(const std::vector<TfgElement>& generators,
                                 const std::vector<ClopenSet>& parts);

inline constexpr std::size_t kMaxModelSize = 8;

struct FiniteModel {
  std::size_t n = 0;
  std::vector<Permutation> generators;
};

/// Validates n <= kMaxModelSize and the generator sizes.
void validate_model(const FiniteModel& model);

/// Breadth-first closure; throws ResourceError past cap elements.
std::vector<Permutation> subgroup_closure(const std::vector<Permutation>& generators,
                                          std::size_t n, std::size_t cap = 40320);

/// Orbits of the generated group on {0, ..., n-1}, each sorted, ordered by
/// smallest point.
std::vector<std::vector<Integer>> model_orbits(const FiniteModel& model);

/// Case analysis by orbit counting for a nonempty subset y of {0, ..., n-1}.
StabilizerClass classify_model_stabilizer(const FiniteModel& model, const std::vector<Integer>& y);

struct FiniteOracleReport {
  StabilizerClass verdict;
  Integer group_order = 0;
  Integer stabilizer_order = 0;
  bool brute_maximal = false;
  bool brute_whole = false;
  /// Stabilizer of the partition {Y, O \ Y} when Y lies inside one orbit O.
  std::optional<Integer> partition_stabilizer_order;
  std::optional<bool> partition_stabilizer_maximal;
  bool agree = false;
};

/// Classifier verdict next to a brute-force maximality test by subgroup
/// closure in the ample group of the model.
FiniteOracleReport finite_oracle_maximality(const FiniteModel& model, const std::vector<Integer>& y);

struct FinitePropertyEReport {
  Integer generated_order = 0;
  Integer expected_order = 0;
  bool holds = false;
};

/// Compares <Sym(u1) ∪ Sym(u2)> with Sym(u1 ∪ u2) inside Sym(n).
FinitePropertyEReport finite_property_e(std::size_t n, const std::vector<Integer>& u1,
                                        const std::vector<Integer>& u2);

}  // namespace ample
