#pragma once

// Independent reference computations for the unit tests. Everything here works
// on raw digit lists, cocycle tables and integer points; nothing calls back
// into the library's arithmetic. Integers are dense in the Cantor space and a
// depth-d element acts on the integer x by x + n(x mod K_d), so agreement on a
// full window of residues decides equality of maps.

#include "ample/cantor.hpp"
#include "ample/element.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline Int radix(const std::vector<Int>& pre, const std::vector<Int>& period, int i) {
  if (i < static_cast<int>(pre.size())) return pre[static_cast<std::size_t>(i)];
  return period[static_cast<std::size_t>(i - static_cast<int>(pre.size())) % period.size()];
}

inline Int modulus(const std::vector<Int>& pre, const std::vector<Int>& period, int d) {
  Int k = 1;
  for (int i = 0; i < d; ++i) k *= radix(pre, period, i);
  return k;
}

inline Int modulus(const ample::BaseSequence& b, int d) { return modulus(b.pre_period(), b.period(), d); }

inline Int mod(Int x, Int k) { return ((x % k) + k) % k; }

// A map of the integers given by a depth and a cocycle table.
struct Map {
  Int k = 1;
  std::vector<Int> n{0};
  Int operator()(Int x) const { return x + n[static_cast<std::size_t>(mod(x, k))]; }
};

inline Map map_of(const ample::TfgElement& g) {
  return Map{modulus(g.base(), g.depth()), g.cocycle()};
}

// Inverse image of x under a translation-by-cocycle map that is a bijection.
inline Int preimage(const Map& g, Int x) {
  for (Int r = 0; r < g.k; ++r) {
    const Int y = x - g.n[static_cast<std::size_t>(r)];
    if (mod(y, g.k) == r) return y;
  }
  return x;
}

// Pointwise comparison on integers [lo, lo + K_depth) for the given window depth.
inline bool same_on_window(const std::function<Int(Int)>& a, const std::function<Int(Int)>& b, Int window,
                           Int lo = 0) {
  for (Int x = lo; x < lo + window; ++x)
    if (a(x) != b(x)) return false;
  return true;
}

// Residue membership test for a clopen set given as (depth, residues).
struct Set {
  Int k = 1;
  std::set<Int> residues;
  bool contains(Int x) const { return residues.count(mod(x, k)) > 0; }
};

inline Set set_of(const ample::ClopenSet& u) {
  return Set{modulus(u.base(), u.depth()), {u.residues().begin(), u.residues().end()}};
}

// Residues mod window of the integers of [0, window) that satisfy pred.
inline std::vector<Int> residues_where(Int window, const std::function<bool(Int)>& pred) {
  std::vector<Int> out;
  for (Int x = 0; x < window; ++x)
    if (pred(x)) out.push_back(x);
  return out;
}

// Hand-rolled generator of raw elements: a random residue permutation at some
// depth plus random carries, turned into a cocycle n(r) = sigma(r) - r + K c(r).
struct Generator {
  std::mt19937_64 engine;
  explicit Generator(std::uint64_t seed) : engine(seed) {}

  Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(engine); }

  std::vector<Int> shuffled(Int k) {
    std::vector<Int> p(static_cast<std::size_t>(k));
    for (Int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = i;
    std::shuffle(p.begin(), p.end(), engine);
    return p;
  }

  ample::TfgElement element(const ample::BaseSequence& b, int max_depth, Int carry = 2) {
    const int d = static_cast<int>(uniform(0, max_depth));
    const Int k = modulus(b, d);
    const auto sigma = shuffled(k);
    std::vector<Int> n(static_cast<std::size_t>(k));
    for (Int r = 0; r < k; ++r)
      n[static_cast<std::size_t>(r)] = sigma[static_cast<std::size_t>(r)] - r + k * uniform(-carry, carry);
    return ample::TfgElement(b, d, n);
  }

  // Zero carries: every residue cycle closes up, so the element has finite order.
  ample::TfgElement torsion(const ample::BaseSequence& b, int max_depth) {
    const int d = static_cast<int>(uniform(0, max_depth));
    const Int k = modulus(b, d);
    const auto sigma = shuffled(k);
    std::vector<Int> n(static_cast<std::size_t>(k));
    for (Int r = 0; r < k; ++r) n[static_cast<std::size_t>(r)] = sigma[static_cast<std::size_t>(r)] - r;
    return ample::TfgElement(b, d, n);
  }

  ample::ClopenSet clopen(const ample::BaseSequence& b, int max_depth, bool nonempty = false) {
    for (;;) {
      const int d = static_cast<int>(uniform(0, max_depth));
      const Int k = modulus(b, d);
      std::vector<Int> r;
      for (Int i = 0; i < k; ++i)
        if (uniform(0, 1)) r.push_back(i);
      if (!nonempty || !r.empty()) return ample::ClopenSet(b, d, r);
    }
  }
};

// Order of a map computed by iterating it on a full residue window until every
// point returns; gives up (returns 0) past the bound.
inline Int iterate_order(const Map& g, Int window, Int bound) {
  Int l = 1;
  for (Int x = 0; x < window; ++x) {
    Int y = g(x), steps = 1;
    while (y != x && steps <= bound) y = g(y), ++steps;
    if (y != x) return 0;
    l = std::lcm(l, steps);
  }
  return l;
}

// Sum of the cocycle divided by the modulus, as a rational compared by cross
// multiplication by callers.
inline Int cocycle_sum(const ample::TfgElement& g) {
  Int s = 0;
  for (Int v : g.cocycle()) s += v;
  return s;
}

}  // namespace oracle
