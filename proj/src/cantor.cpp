#include "ample/cantor.hpp"

#include "ample/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace ample {

struct BaseSequence::Data {
  std::vector<Integer> pre;
  std::vector<Integer> period;
  // K_0, K_1, ... up to the last modulus representable in 64 bits.
  std::vector<Integer> moduli;
};

BaseSequence::BaseSequence(Integer radix) : BaseSequence({}, {radix}) {}

BaseSequence::BaseSequence(std::vector<Integer> pre_period,
                           std::vector<Integer> period) {
  if (period.empty()) throw DomainError("radix period must be nonempty");
  for (Integer r : pre_period)
    if (r < 2) throw DomainError("every radix must be at least 2");
  for (Integer r : period)
    if (r < 2) throw DomainError("every radix must be at least 2");

  auto data = std::make_shared<Data>();
  data->pre = std::move(pre_period);
  data->period = std::move(period);
  data->moduli.push_back(1);
  for (std::size_t i = 0;; ++i) {
    Integer r = i < data->pre.size()
                    ? data->pre[i]
                    : data->period[(i - data->pre.size()) % data->period.size()];
    Integer next;
    if (__builtin_mul_overflow(data->moduli.back(), r, &next)) break;
    data->moduli.push_back(next);
  }
  data_ = std::move(data);
}

const std::vector<Integer>& BaseSequence::pre_period() const { return data_->pre; }
const std::vector<Integer>& BaseSequence::period() const { return data_->period; }

Integer BaseSequence::radix(int i) const {
  const auto& pre = data_->pre;
  const auto& per = data_->period;
  auto idx = static_cast<std::size_t>(i);
  return idx < pre.size() ? pre[idx] : per[(idx - pre.size()) % per.size()];
}

Integer BaseSequence::modulus(int d) const {
  if (d < 0) throw DomainError("negative depth");
  if (static_cast<std::size_t>(d) >= data_->moduli.size())
    throw ResourceError("modulus at depth " + std::to_string(d) +
                        " exceeds 64-bit range");
  return data_->moduli[static_cast<std::size_t>(d)];
}

BaseSequence BaseSequence::with_depth_limit(int limit) const {
  if (limit < 0) throw DomainError("negative depth limit");
  BaseSequence copy = *this;
  copy.depth_limit_ = limit;
  return copy;
}

void BaseSequence::check_depth(int d) const {
  if (d < 0) throw DomainError("negative depth");
  if (d > depth_limit_)
    throw ResourceError("depth " + std::to_string(d) + " exceeds depth limit " +
                        std::to_string(depth_limit_));
  (void)modulus(d);
}

bool operator==(const BaseSequence& a, const BaseSequence& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->pre == b.data_->pre && a.data_->period == b.data_->period;
}

// ---------------------------------------------------------------------------
// ClopenSet

ClopenSet::ClopenSet(BaseSequence base, int depth, std::vector<Integer> residues)
    : base_(std::move(base)), depth_(depth), residues_(std::move(residues)) {
  base_.check_depth(depth_);
  const Integer k = base_.modulus(depth_);
  std::sort(residues_.begin(), residues_.end());
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (residues_[i] < 0 || residues_[i] >= k)
      throw DomainError("residue " + std::to_string(residues_[i]) +
                        " out of range at depth " + std::to_string(depth_));
    if (i > 0 && residues_[i] == residues_[i - 1])
      throw DomainError("duplicate residue " + std::to_string(residues_[i]));
  }
  canonicalize();
}

void ClopenSet::canonicalize() {
  if (residues_.empty()) {
    depth_ = 0;
    return;
  }
  std::vector<Integer> parents;
  while (depth_ > 0) {
    const Integer kp = base_.modulus(depth_ - 1);
    const auto r = static_cast<std::size_t>(base_.radix(depth_ - 1));
    if (residues_.size() % r != 0) break;
    parents.clear();
    parents.reserve(residues_.size());
    for (Integer s : residues_) parents.push_back(s % kp);
    std::sort(parents.begin(), parents.end());
    bool complete = true;
    for (std::size_t i = 0; i < parents.size() && complete; i += r)
      complete = parents[i] == parents[i + r - 1];
    if (!complete) break;
    parents.erase(std::unique(parents.begin(), parents.end()), parents.end());
    residues_.swap(parents);
    --depth_;
  }
}

ClopenSet ClopenSet::empty(const BaseSequence& base) { return ClopenSet(base, 0, {}); }

ClopenSet ClopenSet::full(const BaseSequence& base) { return ClopenSet(base, 0, {0}); }

ClopenSet ClopenSet::cylinder(const BaseSequence& base, Cylinder c) {
  return ClopenSet(base, c.depth, {c.residue});
}

std::vector<Integer> ClopenSet::residues_at(int d) const {
  if (d < depth_) throw DomainError("cannot coarsen a clopen set below its depth");
  base_.check_depth(d);
  const Integer k = base_.modulus(depth_);
  const Integer copies = base_.modulus(d) / k;
  std::vector<Integer> out;
  out.reserve(residues_.size() * static_cast<std::size_t>(copies));
  for (Integer j = 0; j < copies; ++j)
    for (Integer s : residues_) out.push_back(s + j * k);
  std::sort(out.begin(), out.end());
  return out;
}

bool ClopenSet::contains_residue(int d, Integer residue) const {
  if (d < depth_) throw DomainError("residue depth below clopen depth");
  return std::binary_search(residues_.begin(), residues_.end(),
                            residue % base_.modulus(depth_));
}

bool operator==(const ClopenSet& a, const ClopenSet& b) {
  return a.base_ == b.base_ && a.depth_ == b.depth_ && a.residues_ == b.residues_;
}

ClopenSet clopen_algebra(const ClopenSet& a, const ClopenSet& b, SetOp op) {
  if (op == SetOp::Complement) return complement(a);
  if (!(a.base() == b.base())) throw DomainError("clopen sets over different bases");
  const int d = std::max(a.depth(), b.depth());
  const auto ra = a.residues_at(d);
  const auto rb = b.residues_at(d);
  std::vector<Integer> out;
  switch (op) {
    case SetOp::Union:
      std::set_union(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(out));
      break;
    case SetOp::Intersection:
      std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(),
                            std::back_inserter(out));
      break;
    case SetOp::Difference:
      std::set_difference(ra.begin(), ra.end(), rb.begin(), rb.end(),
                          std::back_inserter(out));
      break;
    case SetOp::Complement:
      break;
  }
  return ClopenSet(a.base(), d, std::move(out));
}

ClopenSet unite(const ClopenSet& a, const ClopenSet& b) {
  return clopen_algebra(a, b, SetOp::Union);
}
ClopenSet intersect(const ClopenSet& a, const ClopenSet& b) {
  return clopen_algebra(a, b, SetOp::Intersection);
}
ClopenSet difference(const ClopenSet& a, const ClopenSet& b) {
  return clopen_algebra(a, b, SetOp::Difference);
}

ClopenSet complement(const ClopenSet& a) {
  const Integer k = a.base().modulus(a.depth());
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(k) - a.residues().size());
  auto it = a.residues().begin();
  for (Integer r = 0; r < k; ++r) {
    if (it != a.residues().end() && *it == r) {
      ++it;
      continue;
    }
    out.push_back(r);
  }
  return ClopenSet(a.base(), a.depth(), std::move(out));
}

bool is_subset(const ClopenSet& a, const ClopenSet& b) {
  return difference(a, b).is_empty();
}

bool are_disjoint(const ClopenSet& a, const ClopenSet& b) {
  return intersect(a, b).is_empty();
}

Rational measure(const ClopenSet& u) {
  return Rational(static_cast<Integer>(u.residues().size()),
                  u.base().modulus(u.depth()));
}

// ---------------------------------------------------------------------------
// Point

namespace {

std::size_t lcm_size(std::size_t a, std::size_t b) { return std::lcm(a, b); }

void minimize(std::vector<Integer>& pre, std::vector<Integer>& period) {
  const std::size_t p = period.size();
  for (std::size_t q = 1; q < p; ++q) {
    if (p % q != 0) continue;
    bool periodic = true;
    for (std::size_t i = q; i < p && periodic; ++i) periodic = period[i] == period[i % q];
    if (periodic) {
      period.resize(q);
      break;
    }
  }
  while (!pre.empty() && pre.back() == period.back()) {
    pre.pop_back();
    std::rotate(period.begin(), period.end() - 1, period.end());
  }
}

// Span after which the digit/radix pairs of the given points repeat with the
// returned cycle length.
struct Window {
  std::size_t start;
  std::size_t cycle;
};

Window joint_window(const BaseSequence& base, std::initializer_list<const Point*> pts) {
  std::size_t start = static_cast<std::size_t>(base.periodic_start());
  std::size_t cycle = static_cast<std::size_t>(base.period_length());
  for (const Point* p : pts) {
    start = std::max(start, p->pre_digits().size());
    cycle = lcm_size(cycle, p->period_digits().size());
  }
  return {start, cycle};
}

Point add_with_carry(const Point& x, const Point& y, Integer carry) {
  const BaseSequence& base = x.base();
  if (!(base == y.base())) throw DomainError("points over different bases");
  const Window w = joint_window(base, {&x, &y});
  std::vector<Integer> out;
  auto step = [&](std::size_t i) {
    const Integer r = base.radix(static_cast<int>(i));
    const Integer s = x.digit(i) + y.digit(i) + carry;
    out.push_back(s % r);
    carry = s / r;
  };
  for (std::size_t i = 0; i < w.start; ++i) step(i);
  std::map<Integer, std::size_t> cycle_start;
  for (std::size_t cyc = 0;; ++cyc) {
    auto [it, fresh] = cycle_start.emplace(carry, out.size());
    if (!fresh) {
      std::vector<Integer> pre(out.begin(), out.begin() + static_cast<long>(it->second));
      std::vector<Integer> per(out.begin() + static_cast<long>(it->second), out.end());
      return Point(base, std::move(pre), std::move(per));
    }
    const std::size_t offset = w.start + cyc * w.cycle;
    for (std::size_t j = 0; j < w.cycle; ++j) step(offset + j);
  }
}

Point digit_complement(const Point& x) {
  const BaseSequence& base = x.base();
  const Window w = joint_window(base, {&x});
  std::vector<Integer> pre, per;
  for (std::size_t i = 0; i < w.start; ++i)
    pre.push_back(base.radix(static_cast<int>(i)) - 1 - x.digit(i));
  for (std::size_t i = w.start; i < w.start + w.cycle; ++i)
    per.push_back(base.radix(static_cast<int>(i)) - 1 - x.digit(i));
  return Point(base, std::move(pre), std::move(per));
}

}  // namespace

Point::Point(BaseSequence base, std::vector<Integer> pre_digits,
             std::vector<Integer> period_digits)
    : base_(std::move(base)), pre_(std::move(pre_digits)), period_(std::move(period_digits)) {
  if (period_.empty()) throw DomainError("point period must be nonempty");
  const Window w = joint_window(base_, {this});
  for (std::size_t i = 0; i < w.start + w.cycle; ++i) {
    const Integer d = digit(i);
    if (d < 0 || d >= base_.radix(static_cast<int>(i)))
      throw DomainError("digit " + std::to_string(d) + " at index " + std::to_string(i) +
                        " out of range for radix " +
                        std::to_string(base_.radix(static_cast<int>(i))));
  }
  minimize(pre_, period_);
}

Point Point::zero(const BaseSequence& base) { return Point(base, {}, {0}); }

Point Point::from_integer(const BaseSequence& base, Integer n) {
  if (n < 0) {
    if (n == std::numeric_limits<Integer>::min())
      throw DomainError("integer out of representable range");
    return negate(from_integer(base, -n));
  }
  std::vector<Integer> digits;
  for (int i = 0; n > 0; ++i) {
    const Integer r = base.radix(i);
    digits.push_back(n % r);
    n /= r;
  }
  return Point(base, std::move(digits), {0});
}

Integer Point::digit(std::size_t i) const {
  return i < pre_.size() ? pre_[i] : period_[(i - pre_.size()) % period_.size()];
}

std::optional<Integer> Point::to_integer() const {
  if (std::all_of(period_.begin(), period_.end(), [](Integer d) { return d == 0; })) {
    Integer value = 0;
    for (std::size_t i = 0; i < pre_.size(); ++i) {
      Integer term;
      if (__builtin_mul_overflow(pre_[i], base_.modulus(static_cast<int>(i)), &term) ||
          __builtin_add_overflow(value, term, &value))
        throw ResourceError("integer value exceeds 64-bit range");
    }
    return value;
  }
  const Window w = joint_window(base_, {this});
  for (std::size_t i = pre_.size(); i < w.start + w.cycle; ++i)
    if (digit(i) != base_.radix(static_cast<int>(i)) - 1) return std::nullopt;
  auto positive = negate(*this).to_integer();
  return -*positive;
}

bool operator==(const Point& a, const Point& b) {
  return a.base_ == b.base_ && a.pre_ == b.pre_ && a.period_ == b.period_;
}

Cylinder cylinder_of(const Point& x, int d) {
  if (d < 0) throw DomainError("negative depth");
  Integer residue = 0;
  for (int i = 0; i < d; ++i)
    residue += x.digit(static_cast<std::size_t>(i)) * x.base().modulus(i);
  (void)x.base().modulus(d);
  return {d, residue};
}

bool contains(const ClopenSet& u, const Point& x) {
  if (!(u.base() == x.base())) throw DomainError("point and set over different bases");
  return u.contains_residue(u.depth(), cylinder_of(x, u.depth()).residue);
}

Point add(const Point& x, const Point& y) { return add_with_carry(x, y, 0); }

Point negate(const Point& x) {
  return add_with_carry(digit_complement(x), Point::zero(x.base()), 1);
}

Point subtract(const Point& x, const Point& y) { return add(x, negate(y)); }

Point add_integer(const Point& x, Integer n) {
  if (n == 0) return x;
  return add(x, Point::from_integer(x.base(), n));
}

int separating_depth(const std::vector<Point>& points) {
  std::size_t depth = 0;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const Point& x = points[a];
      const Point& y = points[b];
      const std::size_t span = std::max(x.pre_digits().size(), y.pre_digits().size()) +
                               lcm_size(x.period_digits().size(), y.period_digits().size());
      std::size_t i = 0;
      while (i < span && x.digit(i) == y.digit(i)) ++i;
      if (i == span) throw DomainError("points are not distinct");
      depth = std::max(depth, i + 1);
    }
  }
  return static_cast<int>(depth);
}

}  // namespace ample
