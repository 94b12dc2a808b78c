#include "ample/stabilizers.hpp"

#include "ample/error.hpp"
#include "ample/gen_perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

namespace ample {

FinitePointSet::FinitePointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!(points_[i].base() == points_.front().base()))
      throw DomainError("points over different bases");
    for (std::size_t j = 0; j < i; ++j)
      if (points_[i] == points_[j]) throw DomainError("points of a finite set must be distinct");
  }
}

const char* to_string(StabilizerKind kind) {
  switch (kind) {
    case StabilizerKind::Maximal: return "Maximal";
    case StabilizerKind::IndexTwoInPartitionStabilizer: return "IndexTwoInPartitionStabilizer";
    case StabilizerKind::NotMaximal: return "NotMaximal";
    case StabilizerKind::WholeGroup: return "WholeGroup";
    case StabilizerKind::ReducesTo: return "ReducesTo";
  }
  return "?";
}

bool same_orbit(const Point& x, const Point& y) {
  if (!(x.base() == y.base())) throw DomainError("points over different bases");
  return subtract(x, y).to_integer().has_value();
}

std::vector<std::vector<Integer>> orbit_decomposition(const FinitePointSet& y) {
  std::vector<std::vector<Integer>> orbits;
  for (std::size_t i = 0; i < y.size(); ++i) {
    auto it = std::find_if(orbits.begin(), orbits.end(), [&](const auto& orbit) {
      return same_orbit(y[static_cast<std::size_t>(orbit.front())], y[i]);
    });
    if (it == orbits.end())
      orbits.push_back({static_cast<Integer>(i)});
    else
      it->push_back(static_cast<Integer>(i));
  }
  return orbits;
}

StabilizerClass classify_finite_stabilizer(const FinitePointSet& y) {
  if (y.empty()) throw DomainError("stabilizer classification needs a nonempty set");
  StabilizerClass out;
  out.orbits = orbit_decomposition(y);
  out.kind = out.orbits.size() == 1 ? StabilizerKind::Maximal : StabilizerKind::NotMaximal;
  return out;
}

TfgElement realize_permutation(const FinitePointSet& y, const Permutation& pi,
                               const FinitePointSet& z) {
  if (pi.size() != y.size())
    throw DomainError("permutation size does not match the point set");
  std::vector<Point> all = y.points();
  for (const Point& p : z.points()) {
    if (!y.empty() && !(p.base() == y[0].base())) throw DomainError("points over different bases");
    if (std::find(y.points().begin(), y.points().end(), p) != y.points().end())
      throw DomainError("the moved and fixed point sets intersect");
    all.push_back(p);
  }
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!same_orbit(y[static_cast<std::size_t>(pi(static_cast<Integer>(i)))], y[i]))
      throw DomainError("permutation moves a point to another orbit");
  if (y.empty()) {
    if (z.empty()) throw DomainError("cannot infer the base from two empty sets");
    return TfgElement::identity(z[0].base());
  }
  const BaseSequence& base = y[0].base();
  const int d = separating_depth(all);
  TfgElement result = TfgElement::identity(base);
  const auto word = transposition_word(pi);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto [a, b] = *it;
    const Point& from = y[static_cast<std::size_t>(a)];
    const Integer m = *subtract(y[static_cast<std::size_t>(b)], from).to_integer();
    const TwoCycleSpec delta(ClopenSet::cylinder(base, cylinder_of(from, d)),
                             TfgElement::odometer_power(base, m));
    result = compose(realize_two_cycle(delta), result);
  }
  return result;
}

bool partition_action_transitive(const std::vector<TfgElement>& generators,
                                 const std::vector<ClopenSet>& parts) {
  if (parts.empty()) throw DomainError("empty partition");
  const BaseSequence& base = parts.front().base();
  ClopenSet covered = ClopenSet::empty(base);
  for (const auto& p : parts) {
    if (p.is_empty()) throw DomainError("partition has an empty part");
    if (!are_disjoint(covered, p)) throw DomainError("parts are not pairwise disjoint");
    covered = unite(covered, p);
  }
  if (!covered.is_full()) throw DomainError("parts do not cover the space");

  const std::size_t k = parts.size();
  std::vector<std::vector<std::size_t>> moves(k);
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    for (std::size_t i = 0; i < k; ++i) {
      const ClopenSet image = image_of_clopen(generators[gi], parts[i]);
      auto it = std::find(parts.begin(), parts.end(), image);
      if (it == parts.end())
        throw DomainError("generator " + std::to_string(gi) + " does not map part " +
                          std::to_string(i) + " onto a part");
      moves[i].push_back(static_cast<std::size_t>(it - parts.begin()));
    }
  }
  // Generators permute a finite set, so forward reachability is symmetric.
  std::vector<char> seen(k, 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j : moves[i])
      if (!seen[j]) {
        seen[j] = 1;
        ++reached;
        queue.push_back(j);
      }
  }
  return reached == k;
}

void validate_model(const FiniteModel& model) {
  if (model.n == 0 || model.n > kMaxModelSize)
    throw ResourceError("finite model size must lie in [1, " + std::to_string(kMaxModelSize) + "]");
  for (const auto& g : model.generators)
    if (g.size() != model.n) throw DomainError("generator size does not match the model");
}

std::vector<Permutation> subgroup_closure(const std::vector<Permutation>& generators,
                                          std::size_t n, std::size_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements{Permutation::identity(n)};
  seen.insert(elements.front());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = g * elements[head];
      if (seen.insert(next).second) {
        if (elements.size() >= cap) throw ResourceError("subgroup closure exceeds its cap");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

std::vector<std::vector<Integer>> model_orbits(const FiniteModel& model) {
  validate_model(model);
  std::vector<Integer> parent(model.n);
  std::iota(parent.begin(), parent.end(), Integer{0});
  auto find = [&](Integer i) {
    while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)];
    return i;
  };
  for (const auto& g : model.generators)
    for (std::size_t i = 0; i < model.n; ++i) {
      const Integer a = find(static_cast<Integer>(i));
      const Integer b = find(g(static_cast<Integer>(i)));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::vector<std::vector<Integer>> orbits;
  std::vector<Integer> slot(model.n, -1);
  for (std::size_t i = 0; i < model.n; ++i) {
    const auto root = static_cast<std::size_t>(find(static_cast<Integer>(i)));
    if (slot[root] < 0) {
      slot[root] = static_cast<Integer>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(slot[root])].push_back(static_cast<Integer>(i));
  }
  return orbits;
}

namespace {

std::vector<Integer> validated_subset(const FiniteModel& model, std::vector<Integer> y) {
  std::sort(y.begin(), y.end());
  if (std::adjacent_find(y.begin(), y.end()) != y.end()) throw DomainError("repeated point in subset");
  for (Integer p : y)
    if (p < 0 || p >= static_cast<Integer>(model.n)) throw DomainError("subset point out of range");
  return y;
}

bool contains_point(const std::vector<Integer>& sorted, Integer p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

// Adjacent transpositions along each block generate the product of the
// symmetric groups of the blocks.
std::vector<Permutation> block_generators(std::size_t n, const std::vector<std::vector<Integer>>& blocks) {
  std::vector<Permutation> gens;
  for (const auto& block : blocks)
    for (std::size_t i = 1; i < block.size(); ++i)
      gens.push_back(Permutation::transposition(n, block[i - 1], block[i]));
  return gens;
}

bool maps_set_onto(const Permutation& g, const std::vector<Integer>& from, const std::vector<Integer>& to) {
  return std::all_of(from.begin(), from.end(), [&](Integer p) { return contains_point(to, g(p)); });
}

using PermSet = std::unordered_set<Permutation, PermutationHash>;

// H is maximal in G iff H != G and <H, g> = G for one representative g of
// every double coset HgH outside H.
bool is_maximal(const std::vector<Permutation>& group, const std::vector<Permutation>& sub,
                const std::vector<Permutation>& sub_generators, std::size_t n) {
  if (sub.size() == group.size()) return false;
  const PermSet in_sub(sub.begin(), sub.end());
  PermSet handled;
  for (const auto& g : group) {
    if (in_sub.count(g) || handled.count(g)) continue;
    auto gens = sub_generators;
    gens.push_back(g);
    if (subgroup_closure(gens, n).size() != group.size()) return false;
    for (const auto& a : sub)
      for (const auto& b : sub) handled.insert(a * g * b);
  }
  return true;
}

}  // namespace

StabilizerClass classify_model_stabilizer(const FiniteModel& model, const std::vector<Integer>& y_in) {
  const auto orbits = model_orbits(model);
  const auto y = validated_subset(model, y_in);
  if (y.empty()) throw DomainError("stabilizer classification needs a nonempty set");

  StabilizerClass out;
  std::vector<Integer> partial;
  std::size_t touched = 0;
  std::size_t full = 0;
  const std::vector<Integer>* partial_orbit = nullptr;
  for (const auto& orbit : orbits) {
    std::vector<Integer> part;
    for (Integer p : orbit)
      if (contains_point(y, p)) part.push_back(p);
    if (part.empty()) continue;
    ++touched;
    if (part.size() == orbit.size()) {
      ++full;
    } else {
      partial.insert(partial.end(), part.begin(), part.end());
      partial_orbit = &orbit;
    }
    out.orbits.push_back(std::move(part));
  }
  if (full == touched) {
    out.kind = StabilizerKind::WholeGroup;
  } else if (full > 0) {
    out.kind = StabilizerKind::ReducesTo;
    std::sort(partial.begin(), partial.end());
    out.reduced = partial;
  } else if (touched > 1) {
    out.kind = StabilizerKind::NotMaximal;
  } else if (2 * y.size() == partial_orbit->size()) {
    out.kind = StabilizerKind::IndexTwoInPartitionStabilizer;
  } else {
    out.kind = StabilizerKind::Maximal;
  }
  return out;
}

FiniteOracleReport finite_oracle_maximality(const FiniteModel& model, const std::vector<Integer>& y_in) {
  FiniteOracleReport report;
  report.verdict = classify_model_stabilizer(model, y_in);
  const auto y = validated_subset(model, y_in);
  const auto orbits = model_orbits(model);
  const std::size_t n = model.n;

  const auto group = subgroup_closure(block_generators(n, orbits), n);
  auto stabilizer_blocks = [&](const std::vector<Integer>& set) {
    std::vector<std::vector<Integer>> blocks;
    for (const auto& orbit : orbits) {
      std::vector<Integer> in, out;
      for (Integer p : orbit) (contains_point(set, p) ? in : out).push_back(p);
      if (!in.empty()) blocks.push_back(in);
      if (!out.empty()) blocks.push_back(out);
    }
    return blocks;
  };
  const auto stab_gens = block_generators(n, stabilizer_blocks(y));
  const auto stab = subgroup_closure(stab_gens, n);
  report.group_order = static_cast<Integer>(group.size());
  report.stabilizer_order = static_cast<Integer>(stab.size());
  report.brute_whole = stab.size() == group.size();
  report.brute_maximal = is_maximal(group, stab, stab_gens, n);

  // Brute-force stabilizer as a filter over the whole group, to confirm the
  // block-generated subgroup really is St(Y).
  std::size_t filtered = 0;
  for (const auto& g : group) filtered += maps_set_onto(g, y, y);
  bool agree = filtered == stab.size();

  const auto& v = report.verdict;
  switch (v.kind) {
    case StabilizerKind::Maximal:
      agree = agree && report.brute_maximal;
      break;
    case StabilizerKind::NotMaximal:
      agree = agree && !report.brute_maximal && !report.brute_whole;
      break;
    case StabilizerKind::WholeGroup:
      agree = agree && report.brute_whole;
      break;
    case StabilizerKind::ReducesTo: {
      const auto reduced_elements = subgroup_closure(block_generators(n, stabilizer_blocks(v.reduced)), n);
      const PermSet reduced(reduced_elements.begin(), reduced_elements.end());
      agree = agree && reduced.size() == stab.size() &&
              std::all_of(stab.begin(), stab.end(), [&](const Permutation& g) { return reduced.count(g) > 0; });
      break;
    }
    case StabilizerKind::IndexTwoInPartitionStabilizer: {
      const auto orbit_it = std::find_if(orbits.begin(), orbits.end(),
                                         [&](const auto& o) { return contains_point(o, y.front()); });
      std::vector<Integer> rest;
      for (Integer p : *orbit_it)
        if (!contains_point(y, p)) rest.push_back(p);
      std::vector<Permutation> partition;
      for (const auto& g : group)
        if (maps_set_onto(g, y, y) || maps_set_onto(g, y, rest)) partition.push_back(g);
      // The partition stabilizer is generated by St(Y) and one element
      // exchanging Y with its complement in the orbit.
      auto gens = stab_gens;
      for (const auto& g : partition)
        if (maps_set_onto(g, y, rest)) {
          gens.push_back(g);
          break;
        }
      report.partition_stabilizer_order = static_cast<Integer>(partition.size());
      const bool partition_whole = partition.size() == group.size();
      report.partition_stabilizer_maximal = is_maximal(group, partition, gens, n);
      // When the partition stabilizer is the whole group, St(Y) has index 2
      // in it and is therefore maximal itself.
      agree = agree && partition.size() == 2 * stab.size() &&
              subgroup_closure(gens, n).size() == partition.size() &&
              (partition_whole ? report.brute_maximal
                               : !report.brute_maximal && *report.partition_stabilizer_maximal);
      break;
    }
  }
  report.agree = agree;
  return report;
}

FinitePropertyEReport finite_property_e(std::size_t n, const std::vector<Integer>& u1,
                                        const std::vector<Integer>& u2) {
  if (n == 0 || n > kMaxModelSize) throw ResourceError("finite model size out of range");
  FiniteModel model{n, {}};
  auto a = validated_subset(model, u1);
  auto b = validated_subset(model, u2);
  std::vector<Integer> both;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  auto gens = block_generators(n, {a});
  const auto more = block_generators(n, {b});
  gens.insert(gens.end(), more.begin(), more.end());
  FinitePropertyEReport report;
  report.generated_order = static_cast<Integer>(subgroup_closure(gens, n).size());
  report.expected_order = 1;
  for (std::size_t i = 2; i <= both.size(); ++i) report.expected_order *= static_cast<Integer>(i);
  report.holds = report.generated_order == report.expected_order;
  return report;
}

}  // namespace ample
