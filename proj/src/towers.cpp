#include "ample/towers.hpp"

#include "ample/error.hpp"
#include "ample/gen_perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ample {

namespace {

// Residue-level return structure of (u, g) at the joint depth. Return times
// are constant on depth-d cylinders because membership in u is decided by the
// depth-d residue and g permutes depth-d cylinders.
struct TowerWalk {
  int depth = 0;
  Permutation sigma;
  // (ground residue, return time) for every depth-d residue in u.
  std::vector<std::pair<Integer, Integer>> grounds;
};

TowerWalk walk_towers(const ClopenSet& u, const TfgElement& g) {
  if (u.is_empty()) throw DomainError("Kakutani-Rokhlin partition needs a nonempty set");
  if (!(u.base() == g.base())) throw DomainError("set and element over different bases");
  TowerWalk walk;
  walk.depth = std::max(u.depth(), g.depth());
  walk.sigma = g.residue_permutation(walk.depth);
  const Integer k = u.base().modulus(walk.depth);
  std::vector<char> in_u(static_cast<std::size_t>(k), 0);
  const auto ground = u.residues_at(walk.depth);
  for (Integer r : ground) in_u[static_cast<std::size_t>(r)] = 1;
  for (Integer r : ground) {
    Integer s = walk.sigma(r);
    Integer height = 1;
    while (!in_u[static_cast<std::size_t>(s)]) {
      s = walk.sigma(s);
      ++height;
    }
    walk.grounds.emplace_back(r, height);
  }
  return walk;
}

}  // namespace

KRPartition build_kr(const ClopenSet& u, const TfgElement& g) {
  const TowerWalk walk = walk_towers(u, g);
  std::map<Integer, std::vector<std::vector<Integer>>> levels;
  std::vector<Integer> recurrent;
  for (auto [r, height] : walk.grounds) {
    auto& tower = levels[height];
    tower.resize(static_cast<std::size_t>(height));
    Integer s = r;
    for (Integer l = 0; l < height; ++l) {
      tower[static_cast<std::size_t>(l)].push_back(s);
      recurrent.push_back(s);
      s = walk.sigma(s);
    }
  }
  KRPartition kr{u, g, ClopenSet(u.base(), walk.depth, std::move(recurrent)), {}};
  for (auto& [height, tower] : levels) {
    auto& out = kr.towers[height];
    for (auto& level : tower) out.emplace_back(u.base(), walk.depth, std::move(level));
  }
  return kr;
}

ClopenSet exit_set(const ClopenSet& u, const TfgElement& g) {
  return difference(u, preimage_of_clopen(g, u));
}

ClopenSet entrance_set(const ClopenSet& u, const TfgElement& g) {
  return difference(preimage_of_clopen(g, u), u);
}

TfgElement parity_exchange(const ClopenSet& u, const TfgElement& g) {
  if (u.is_empty()) return TfgElement::identity(g.base());
  const TowerWalk walk = walk_towers(u, g);
  const Integer k = u.base().modulus(walk.depth);
  std::vector<Integer> table(static_cast<std::size_t>(k), 0);
  for (auto [r, height] : walk.grounds) {
    if (height < 2) continue;
    Integer s = r;
    Integer shift = 0;
    for (Integer step = 1; step < height; ++step) {
      shift += g.value_at(s);
      s = walk.sigma(s);
    }
    table[static_cast<std::size_t>(r)] = shift;
    table[static_cast<std::size_t>(s)] = -shift;
  }
  return TfgElement(u.base(), walk.depth, std::move(table));
}

FirstReturn first_return(const ClopenSet& u) {
  const BaseSequence& base = u.base();
  const TfgElement f = odometer(base);
  const KRPartition kr = build_kr(u, f);
  const Integer k = base.modulus(u.depth());

  std::vector<Integer> table(static_cast<std::size_t>(k), 0);
  for (const auto& [height, levels] : kr.towers)
    for (Integer r : levels.front().residues_at(u.depth())) table[static_cast<std::size_t>(r)] = height;
  TfgElement f_u(base, u.depth(), std::move(table));

  TfgElement h_u = TfgElement::identity(base);
  for (const auto& [height, levels] : kr.towers) {
    if (height < 2) continue;
    std::vector<TfgElement> maps;
    std::vector<Integer> points;
    for (Integer i = 0; i < height; ++i) {
      maps.push_back(TfgElement::odometer_power(base, i));
      points.push_back(i);
    }
    GenPermSpec cycle(levels.front(), std::move(maps),
                      Permutation::cycle(static_cast<std::size_t>(height), points));
    h_u = compose(h_u, realize(cycle));
  }
  if (!(compose(f_u, h_u) == f))
    throw std::logic_error("first-return factorization does not recompose to f");
  return {std::move(f_u), std::move(h_u)};
}

std::vector<ClopenSet> minimal_power_partition(const BaseSequence& base, Integer n) {
  if (n == 0) throw DomainError("power must be nonzero");
  const unsigned __int128 m = n < 0 ? static_cast<unsigned __int128>(-(n + 1)) + 1
                                    : static_cast<unsigned __int128>(n);
  auto gcd128 = [](unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      auto t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  // gcd(n, K_d) is nondecreasing in d and saturates once every prime power
  // of n that the periodic radices can supply has been absorbed.
  const int horizon = base.periodic_start() + base.period_length() * 65;
  unsigned __int128 g = 1;
  unsigned __int128 best = 1;
  int best_depth = 0;
  for (int d = 0; d < horizon; ++d) {
    g = gcd128(m, g * static_cast<unsigned __int128>(base.radix(d)));
    if (g > best) {
      best = g;
      best_depth = d + 1;
    }
  }
  const auto p = static_cast<Integer>(best);
  base.check_depth(best_depth);
  const Integer k = base.modulus(best_depth);
  std::vector<ClopenSet> pieces;
  for (Integer c = 0; c < p; ++c) {
    std::vector<Integer> residues;
    for (Integer r = c; r < k; r += p) residues.push_back(r);
    pieces.emplace_back(base, best_depth, std::move(residues));
  }
  return pieces;
}

bool certify_minimal_pieces(const std::vector<ClopenSet>& pieces, Integer n, int test_depth) {
  for (const auto& piece : pieces) {
    if (piece.is_empty()) return false;
    const int d = std::max(test_depth, piece.depth());
    const Integer k = piece.base().modulus(d);
    const auto residues = piece.residues_at(d);
    const Integer step = ((n % k) + k) % k;
    for (Integer start : residues) {
      std::vector<Integer> orbit;
      Integer s = start;
      do {
        orbit.push_back(s);
        s = (s + step) % k;
      } while (s != start && orbit.size() <= residues.size());
      std::sort(orbit.begin(), orbit.end());
      if (orbit != residues) return false;
    }
  }
  return true;
}

}  // namespace ample
