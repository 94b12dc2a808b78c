#include "ample/random.hpp"

#include <limits>

namespace ample {

namespace {

constexpr Integer kMaxRandomTable = 4096;

TfgElement lift_random(Rng& rng, const BaseSequence& base, int d, const Permutation& sigma,
                       const std::vector<char>& active, Integer carry_bound) {
  std::vector<Integer> carry(sigma.size(), 0);
  for (std::size_t r = 0; r < carry.size(); ++r)
    if (active[r]) carry[r] = rng.range(-carry_bound, carry_bound);
  return lift({base, d, sigma, std::move(carry)});
}

// Permutation of [0, k) that shuffles the residues listed in `moving` among
// themselves and fixes the rest.
Permutation shuffle_within(Rng& rng, Integer k, const std::vector<Integer>& moving) {
  std::vector<Integer> images(static_cast<std::size_t>(k));
  for (Integer r = 0; r < k; ++r) images[static_cast<std::size_t>(r)] = r;
  std::vector<Integer> targets = moving;
  rng.shuffle(targets);
  for (std::size_t i = 0; i < moving.size(); ++i) images[static_cast<std::size_t>(moving[i])] = targets[i];
  return Permutation(std::move(images));
}

}  // namespace

Integer Rng::below(Integer n) {
  const auto bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<Integer>(x % bound);
}

int random_depth(Rng& rng, const BaseSequence& base, int max_depth) {
  int top = 0;
  while (top < max_depth && base.modulus(top + 1) <= kMaxRandomTable) ++top;
  return static_cast<int>(rng.range(0, top));
}

Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<Integer> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Integer>(i);
  rng.shuffle(images);
  return Permutation(std::move(images));
}

ClopenSet random_clopen(Rng& rng, const BaseSequence& base, int max_depth) {
  const int d = random_depth(rng, base, max_depth);
  std::vector<Integer> residues;
  for (Integer r = 0; r < base.modulus(d); ++r)
    if (rng.coin()) residues.push_back(r);
  return ClopenSet(base, d, std::move(residues));
}

ClopenSet random_nonempty_clopen(Rng& rng, const BaseSequence& base, int max_depth) {
  for (;;) {
    ClopenSet u = random_clopen(rng, base, max_depth);
    if (!u.is_empty()) return u;
  }
}

TfgElement random_element(Rng& rng, const BaseSequence& base, int max_depth, Integer carry_bound) {
  const int d = random_depth(rng, base, max_depth);
  const auto k = static_cast<std::size_t>(base.modulus(d));
  return lift_random(rng, base, d, random_permutation(rng, k), std::vector<char>(k, 1), carry_bound);
}

TfgElement random_supported(Rng& rng, const ClopenSet& u, int max_depth, Integer carry_bound) {
  const BaseSequence& base = u.base();
  int d = u.depth();
  if (d < max_depth) d = std::max(d, random_depth(rng, base, max_depth));
  const Integer k = base.modulus(d);
  const auto moving = u.residues_at(d);
  std::vector<char> active(static_cast<std::size_t>(k), 0);
  for (Integer r : moving) active[static_cast<std::size_t>(r)] = 1;
  return lift_random(rng, base, d, shuffle_within(rng, k, moving), active, carry_bound);
}

TfgElement random_torsion(Rng& rng, const BaseSequence& base, int max_depth, Integer carry_bound) {
  const int d = random_depth(rng, base, max_depth);
  const auto k = static_cast<std::size_t>(base.modulus(d));
  const Permutation sigma = random_permutation(rng, k);
  std::vector<Integer> carry(k, 0);
  for (const auto& cycle : sigma.cycles(true)) {
    Integer sum = 0;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
      carry[static_cast<std::size_t>(cycle[i])] = rng.range(-carry_bound, carry_bound);
      sum += carry[static_cast<std::size_t>(cycle[i])];
    }
    carry[static_cast<std::size_t>(cycle.back())] = -sum;
  }
  return lift({base, d, sigma, std::move(carry)});
}

TfgElement random_index_zero(Rng& rng, const ClopenSet& u, int max_depth, Integer carry_bound) {
  const BaseSequence& base = u.base();
  int d = u.depth();
  if (d < max_depth) d = std::max(d, random_depth(rng, base, max_depth));
  const Integer k = base.modulus(d);
  const auto moving = u.residues_at(d);
  std::vector<Integer> carry(static_cast<std::size_t>(k), 0);
  Integer sum = 0;
  for (std::size_t i = 0; i + 1 < moving.size(); ++i) {
    carry[static_cast<std::size_t>(moving[i])] = rng.range(-carry_bound, carry_bound);
    sum += carry[static_cast<std::size_t>(moving[i])];
  }
  if (!moving.empty()) carry[static_cast<std::size_t>(moving.back())] = -sum;
  return lift({base, d, shuffle_within(rng, k, moving), std::move(carry)});
}

TfgElement random_minimal(Rng& rng, const BaseSequence& base, int max_depth) {
  const TfgElement h = random_element(rng, base, max_depth, 1);
  const TfgElement f = TfgElement::odometer_power(base, rng.coin() ? 1 : -1);
  return compose(h, compose(f, inverse(h)));
}

GenPermSpec random_genperm(Rng& rng, const BaseSequence& base, int max_depth, std::size_t n) {
  int d = random_depth(rng, base, max_depth);
  while (base.modulus(d) < static_cast<Integer>(n)) ++d;
  const Integer k = base.modulus(d);
  const Integer m = rng.range(1, k / static_cast<Integer>(n));

  std::vector<Integer> all(static_cast<std::size_t>(k));
  for (Integer r = 0; r < k; ++r) all[static_cast<std::size_t>(r)] = r;
  std::vector<Integer> u = all;
  rng.shuffle(u);
  u.resize(static_cast<std::size_t>(m));
  std::vector<char> in_u(static_cast<std::size_t>(k), 0);
  for (Integer r : u) in_u[static_cast<std::size_t>(r)] = 1;

  std::vector<Integer> pool = all;
  rng.shuffle(pool);
  std::vector<TfgElement> maps;
  for (std::size_t i = 0; i < n; ++i) {
    // Send u onto the i-th block of the pool, the rest of the residues onto
    // the complement of that block, both in random order.
    std::vector<Integer> block(pool.begin() + static_cast<long>(i * m),
                               pool.begin() + static_cast<long>((i + 1) * m));
    std::vector<char> in_block(static_cast<std::size_t>(k), 0);
    for (Integer r : block) in_block[static_cast<std::size_t>(r)] = 1;
    std::vector<Integer> rest_targets;
    for (Integer r = 0; r < k; ++r)
      if (!in_block[static_cast<std::size_t>(r)]) rest_targets.push_back(r);
    rng.shuffle(rest_targets);
    std::vector<Integer> images(static_cast<std::size_t>(k));
    std::size_t bi = 0, ri = 0;
    for (Integer r = 0; r < k; ++r)
      images[static_cast<std::size_t>(r)] = in_u[static_cast<std::size_t>(r)] ? block[bi++] : rest_targets[ri++];
    maps.push_back(lift_random(rng, base, d, Permutation(std::move(images)),
                               std::vector<char>(static_cast<std::size_t>(k), 1), 1));
  }
  return GenPermSpec(ClopenSet(base, d, std::move(u)), std::move(maps), random_permutation(rng, n));
}

Point random_point(Rng& rng, const BaseSequence& base) {
  if (rng.below(4) == 0) return Point::from_integer(base, rng.range(-50, 50));
  const std::size_t pre_len = static_cast<std::size_t>(base.periodic_start() + rng.range(0, 3));
  const std::size_t period_len = static_cast<std::size_t>(base.period_length() * rng.range(1, 3));
  std::vector<Integer> pre, period;
  for (std::size_t i = 0; i < pre_len; ++i) pre.push_back(rng.below(base.radix(static_cast<int>(i))));
  for (std::size_t i = 0; i < period_len; ++i)
    period.push_back(rng.below(base.radix(static_cast<int>(pre_len + i))));
  return Point(base, std::move(pre), std::move(period));
}

}  // namespace ample
