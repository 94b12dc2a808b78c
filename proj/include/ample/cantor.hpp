#pragma once

// Cantor set presented as the mixed-radix adic integers of an eventually
// periodic radix sequence. Digits are least-significant first: a point with
// digits x_0, x_1, ... is the adic integer x_0 + x_1 K_1 + x_2 K_2 + ...,
// where K_d is the product of the first d radices. A cylinder of depth d is a
// residue class modulo K_d.

#include <boost/rational.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace ample {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;

inline constexpr int kDefaultDepthLimit = 24;

/// Eventually periodic radix sequence. Cheap to copy; the radix data is
/// shared and immutable.
class BaseSequence {
 public:
  /// Constant radix sequence (2 gives the dyadic odometer).
  explicit BaseSequence(Integer radix = 2);
  BaseSequence(std::vector<Integer> pre_period, std::vector<Integer> period);

  const std::vector<Integer>& pre_period() const;
  const std::vector<Integer>& period() const;

  Integer radix(int i) const;
  /// K_d. Throws ResourceError when K_d does not fit in 64 bits.
  Integer modulus(int d) const;
  /// Index from which the radix sequence is purely periodic.
  int periodic_start() const { return static_cast<int>(pre_period().size()); }
  int period_length() const { return static_cast<int>(period().size()); }

  /// Largest depth accepted by element and clopen constructors. Not part of
  /// the value: two bases with different limits compare equal.
  int depth_limit() const { return depth_limit_; }
  BaseSequence with_depth_limit(int limit) const;
  /// Throws ResourceError if d exceeds the depth limit or K_d overflows.
  void check_depth(int d) const;

  friend bool operator==(const BaseSequence& a, const BaseSequence& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
  int depth_limit_ = kDefaultDepthLimit;
};

struct Cylinder {
  int depth = 0;
  Integer residue = 0;
  friend bool operator==(const Cylinder&, const Cylinder&) = default;
};

/// Finite union of cylinders, stored at one common depth in canonical form.
class ClopenSet {
 public:
  /// Validates residues, sorts them and canonicalizes.
  ClopenSet(BaseSequence base, int depth, std::vector<Integer> residues);

  static ClopenSet empty(const BaseSequence& base);
  static ClopenSet full(const BaseSequence& base);
  static ClopenSet cylinder(const BaseSequence& base, Cylinder c);

  const BaseSequence& base() const { return base_; }
  int depth() const { return depth_; }
  const std::vector<Integer>& residues() const { return residues_; }

  bool is_empty() const { return residues_.empty(); }
  bool is_full() const { return depth_ == 0 && residues_.size() == 1; }
  /// Residues of the same set at depth d >= depth().
  std::vector<Integer> residues_at(int d) const;
  /// Membership test for a residue taken at any depth d >= depth().
  bool contains_residue(int d, Integer residue) const;

  friend bool operator==(const ClopenSet&, const ClopenSet&);

 private:
  void canonicalize();

  BaseSequence base_;
  int depth_ = 0;
  std::vector<Integer> residues_;
};

enum class SetOp { Union, Intersection, Difference, Complement };

ClopenSet clopen_algebra(const ClopenSet& a, const ClopenSet& b, SetOp op);
ClopenSet unite(const ClopenSet& a, const ClopenSet& b);
ClopenSet intersect(const ClopenSet& a, const ClopenSet& b);
ClopenSet difference(const ClopenSet& a, const ClopenSet& b);
ClopenSet complement(const ClopenSet& a);
bool is_subset(const ClopenSet& a, const ClopenSet& b);
bool are_disjoint(const ClopenSet& a, const ClopenSet& b);

/// Haar measure: each depth-d cylinder has mass 1/K_d.
Rational measure(const ClopenSet& u);

/// Eventually periodic point, kept with minimal pre-period and period.
class Point {
 public:
  Point(BaseSequence base, std::vector<Integer> pre_digits,
        std::vector<Integer> period_digits);

  static Point zero(const BaseSequence& base);
  static Point from_integer(const BaseSequence& base, Integer n);

  const BaseSequence& base() const { return base_; }
  const std::vector<Integer>& pre_digits() const { return pre_; }
  const std::vector<Integer>& period_digits() const { return period_; }
  Integer digit(std::size_t i) const;

  /// Integer value if the point lies in the orbit of 0 (eventually all zero
  /// or eventually all maximal digits), nullopt otherwise.
  std::optional<Integer> to_integer() const;

  friend bool operator==(const Point&, const Point&);

 private:
  BaseSequence base_;
  std::vector<Integer> pre_;
  std::vector<Integer> period_;
};

Cylinder cylinder_of(const Point& x, int d);
bool contains(const ClopenSet& u, const Point& x);

Point add(const Point& x, const Point& y);
Point negate(const Point& x);
Point subtract(const Point& x, const Point& y);
Point add_integer(const Point& x, Integer n);

/// Smallest depth at which all the given points lie in distinct cylinders.
int separating_depth(const std::vector<Point>& points);

}  // namespace ample
