#include "ample/element.hpp"

#include "ample/error.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ample {

namespace {

Integer floor_mod(Integer a, Integer m) {
  const Integer r = a % m;
  return r < 0 ? r + m : r;
}

Integer checked_table_size(const BaseSequence& base, int d) {
  base.check_depth(d);
  const Integer k = base.modulus(d);
  if (k > kMaxTableSize)
    throw ResourceError("cocycle table at depth " + std::to_string(d) + " would have " +
                        std::to_string(k) + " entries");
  return k;
}

void require_same_base(const BaseSequence& a, const BaseSequence& b) {
  if (!(a == b)) throw DomainError("elements over different bases");
}

}  // namespace

TfgElement::TfgElement(BaseSequence base, int depth, std::vector<Integer> cocycle)
    : base_(std::move(base)), depth_(depth), cocycle_(std::move(cocycle)) {
  modulus_ = checked_table_size(base_, depth_);
  if (static_cast<Integer>(cocycle_.size()) != modulus_)
    throw DomainError("cocycle table at depth " + std::to_string(depth_) + " needs " +
                      std::to_string(modulus_) + " entries, got " +
                      std::to_string(cocycle_.size()));
  std::vector<char> hit(cocycle_.size(), 0);
  for (Integer w = 0; w < modulus_; ++w) {
    const auto target = static_cast<std::size_t>(floor_mod(w + cocycle_[static_cast<std::size_t>(w)], modulus_));
    if (hit[target])
      throw DomainError("cocycle does not induce a bijection of depth-" +
                        std::to_string(depth_) + " cylinders");
    hit[target] = 1;
  }
  canonicalize();
}

void TfgElement::canonicalize() {
  while (depth_ > 0) {
    const Integer kp = base_.modulus(depth_ - 1);
    bool constant = true;
    for (Integer w = kp; w < modulus_ && constant; ++w)
      constant = cocycle_[static_cast<std::size_t>(w)] == cocycle_[static_cast<std::size_t>(w % kp)];
    if (!constant) break;
    cocycle_.resize(static_cast<std::size_t>(kp));
    modulus_ = kp;
    --depth_;
  }
}

TfgElement TfgElement::identity(const BaseSequence& base) { return TfgElement(base, 0, {0}); }

TfgElement TfgElement::odometer_power(const BaseSequence& base, Integer k) {
  return TfgElement(base, 0, {k});
}

std::vector<Integer> TfgElement::cocycle_at(int d) const {
  if (d < depth_) throw DomainError("cannot coarsen an element below its canonical depth");
  const Integer k = checked_table_size(base_, d);
  std::vector<Integer> out(static_cast<std::size_t>(k));
  for (Integer w = 0; w < k; ++w) out[static_cast<std::size_t>(w)] = value_at(w);
  return out;
}

Permutation TfgElement::residue_permutation(int d) const {
  if (d < depth_) throw DomainError("cannot coarsen an element below its canonical depth");
  const Integer k = checked_table_size(base_, d);
  std::vector<Integer> images(static_cast<std::size_t>(k));
  for (Integer w = 0; w < k; ++w) images[static_cast<std::size_t>(w)] = floor_mod(w + value_at(w), k);
  return Permutation(std::move(images));
}

bool operator==(const TfgElement& a, const TfgElement& b) {
  return a.depth_ == b.depth_ && a.cocycle_ == b.cocycle_ && a.base_ == b.base_;
}

std::size_t TfgElementHash::operator()(const TfgElement& g) const noexcept {
  std::size_t h = static_cast<std::size_t>(g.depth()) * 0x9e3779b97f4a7c15ULL;
  for (Integer v : g.cocycle()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
  return h;
}

TfgElement odometer(const BaseSequence& base) { return TfgElement::odometer_power(base, 1); }

TfgElement compose(const TfgElement& g, const TfgElement& h) {
  require_same_base(g.base(), h.base());
  const int d = std::max(g.depth(), h.depth());
  const Integer k = checked_table_size(g.base(), d);
  std::vector<Integer> table(static_cast<std::size_t>(k));
  for (Integer w = 0; w < k; ++w) {
    const Integer nh = h.value_at(w);
    table[static_cast<std::size_t>(w)] = nh + g.value_at(floor_mod(w + nh, k));
  }
  return TfgElement(g.base(), d, std::move(table));
}

TfgElement product(const std::vector<TfgElement>& elements, const BaseSequence& base) {
  TfgElement acc = TfgElement::identity(base);
  for (auto it = elements.rbegin(); it != elements.rend(); ++it) acc = compose(*it, acc);
  return acc;
}

TfgElement inverse(const TfgElement& g) {
  const Integer k = g.base().modulus(g.depth());
  std::vector<Integer> table(static_cast<std::size_t>(k));
  for (Integer w = 0; w < k; ++w) {
    const Integer n = g.cocycle()[static_cast<std::size_t>(w)];
    table[static_cast<std::size_t>(floor_mod(w + n, k))] = -n;
  }
  return TfgElement(g.base(), g.depth(), std::move(table));
}

TfgElement power(const TfgElement& g, Integer k) {
  if (k < 0) return power(inverse(g), -k);
  TfgElement result = TfgElement::identity(g.base());
  TfgElement square = g;
  while (k > 0) {
    if (k & 1) result = compose(result, square);
    k >>= 1;
    if (k > 0) square = compose(square, square);
  }
  return result;
}

Point apply_to_point(const TfgElement& g, const Point& x) {
  require_same_base(g.base(), x.base());
  return add_integer(x, g.value_at(cylinder_of(x, g.depth()).residue));
}

ClopenSet image_of_clopen(const TfgElement& g, const ClopenSet& u) {
  require_same_base(g.base(), u.base());
  const int d = std::max(g.depth(), u.depth());
  const Integer k = g.base().modulus(d);
  std::vector<Integer> image;
  for (Integer r : u.residues_at(d)) image.push_back(floor_mod(r + g.value_at(r), k));
  return ClopenSet(u.base(), d, std::move(image));
}

ClopenSet preimage_of_clopen(const TfgElement& g, const ClopenSet& u) {
  return image_of_clopen(inverse(g), u);
}

ClopenSet support(const TfgElement& g) {
  std::vector<Integer> moved;
  for (std::size_t w = 0; w < g.cocycle().size(); ++w)
    if (g.cocycle()[w] != 0) moved.push_back(static_cast<Integer>(w));
  return ClopenSet(g.base(), g.depth(), std::move(moved));
}

Integer index(const TfgElement& g) {
  const Integer k = g.base().modulus(g.depth());
  const Integer sum = std::accumulate(g.cocycle().begin(), g.cocycle().end(), Integer{0});
  if (sum % k != 0)
    throw std::logic_error("cocycle sum not divisible by modulus; element is corrupted");
  return sum / k;
}

WreathForm wreath_form(const TfgElement& g, std::optional<int> depth) {
  const int d = depth.value_or(g.depth());
  WreathForm w{g.base(), d, g.residue_permutation(d), {}};
  const Integer k = g.base().modulus(d);
  w.carry.resize(static_cast<std::size_t>(k));
  for (Integer r = 0; r < k; ++r) {
    const Integer shift = g.value_at(r) - (w.sigma(r) - r);
    w.carry[static_cast<std::size_t>(r)] = shift / k;
  }
  return w;
}

TfgElement lift(const WreathForm& w) {
  const Integer k = checked_table_size(w.base, w.depth);
  if (static_cast<Integer>(w.sigma.size()) != k || static_cast<Integer>(w.carry.size()) != k)
    throw DomainError("wreath form tables do not match depth " + std::to_string(w.depth));
  std::vector<Integer> table(static_cast<std::size_t>(k));
  for (Integer r = 0; r < k; ++r)
    table[static_cast<std::size_t>(r)] = w.sigma(r) - r + k * w.carry[static_cast<std::size_t>(r)];
  return TfgElement(w.base, w.depth, std::move(table));
}

OrderResult order(const TfgElement& g) {
  const WreathForm w = wreath_form(g);
  Integer result = 1;
  for (const auto& cyc : w.sigma.cycles(true)) {
    Integer carry_sum = 0;
    for (Integer r : cyc) carry_sum += w.carry[static_cast<std::size_t>(r)];
    if (carry_sum != 0) return {std::nullopt};
    result = std::lcm(result, static_cast<Integer>(cyc.size()));
  }
  if (!power(g, result).is_identity())
    throw std::logic_error("torsion criterion disagrees with exact composition");
  return {result};
}

}  // namespace ample
