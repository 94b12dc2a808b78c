#include "ample/nowhere_dense.hpp"

#include "ample/error.hpp"
#include "ample/gen_perm.hpp"
#include "ample/random.hpp"

#include <deque>
#include <set>
#include <unordered_set>

namespace ample {

NDStage make_stage(ClopenSet u, TfgElement g, TfgElement h) {
  TfgElement f1 = realize_two_cycle(TwoCycleSpec(u, g));
  TfgElement f2 = realize_two_cycle(TwoCycleSpec(u, h));
  return {std::move(u), std::move(g), std::move(h), std::move(f1), std::move(f2)};
}

OmegaWord::OmegaWord(std::string letters) : letters_(std::move(letters)) {
  for (char ch : letters_)
    if (ch != '1' && ch != '2') throw DomainError("omega words use the letters 1 and 2 only");
}

std::vector<OmegaWord> all_omega_words(std::size_t n) {
  std::vector<OmegaWord> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::string s(n, '1');
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << (n - 1 - i))) s[i] = '2';
    out.emplace_back(std::move(s));
  }
  return out;
}

NDConstruction build_construction(const BaseSequence& base, std::size_t stages, std::uint64_t seed) {
  if (stages == 0) throw DomainError("construction needs at least one stage");
  Rng rng(seed);
  NDConstruction c{base, {}};
  int prev = 0;
  for (std::size_t n = 1; n <= stages; ++n) {
    const Integer k_prev = base.modulus(prev);
    int d = prev + 1;
    base.check_depth(d);
    while (base.modulus(d) < 3 * k_prev) base.check_depth(++d);
    const Integer ratio = base.modulus(d) / k_prev;
    Integer a = 1, b = 2;
    if (seed != 0) {
      a = rng.range(1, ratio - 1);
      do b = rng.range(1, ratio - 1);
      while (b == a);
    }
    c.stages.push_back(make_stage(ClopenSet::cylinder(base, {d, 0}),
                                  TfgElement::odometer_power(base, a * k_prev),
                                  TfgElement::odometer_power(base, b * k_prev)));
    prev = d;
  }
  return c;
}

const TfgElement& stage_generator(const NDConstruction& c, std::size_t stage, int letter) {
  if (stage == 0 || stage > c.stages.size()) throw DomainError("stage out of range");
  const NDStage& s = c.stages[stage - 1];
  switch (letter) {
    case 1: return s.f1;
    case 2: return s.f2;
    default: throw DomainError("generator letter must be 1 or 2");
  }
}

namespace {

ClopenSet previous_set(const NDConstruction& c, std::size_t stage) {
  return stage <= 1 ? ClopenSet::full(c.base) : c.stages[stage - 2].u;
}

// Admissible words of length n: letter i is 0 or omega_i.
std::vector<std::vector<int>> admissible_words(const OmegaWord& omega, std::size_t n) {
  std::vector<std::vector<int>> words{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words)
      for (int letter : {0, omega[i]}) {
        next.push_back(w);
        next.back().push_back(letter);
      }
    words = std::move(next);
  }
  return words;
}

std::vector<std::vector<int>> ternary_words(std::size_t n) {
  std::vector<std::vector<int>> words{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words)
      for (int letter : {0, 1, 2}) {
        next.push_back(w);
        next.back().push_back(letter);
      }
    words = std::move(next);
  }
  return words;
}

void require_length(const NDConstruction& c, const OmegaWord& omega) {
  if (omega.size() > c.stages.size())
    throw DomainError("omega word longer than the construction");
}

std::vector<TfgElement> omega_generators(const NDConstruction& c, const OmegaWord& omega, std::size_t n) {
  std::vector<TfgElement> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(stage_generator(c, i + 1, omega[i]));
  return gens;
}

}  // namespace

ClopenSet stage_image(const NDConstruction& c, const std::vector<int>& word) {
  if (word.size() > c.stages.size()) throw DomainError("word longer than the construction");
  ClopenSet v = word.empty() ? ClopenSet::full(c.base) : c.stages[word.size() - 1].u;
  for (std::size_t i = word.size(); i-- > 0;) {
    if (word[i] == 0) continue;
    if (word[i] != 1 && word[i] != 2) throw DomainError("stage words use the letters 0, 1 and 2");
    // Stage sets come from the defining 2-cycles even when a test has
    // substituted the generators f1, f2.
    const NDStage& s = c.stages[i];
    v = image_of_clopen(realize_two_cycle(TwoCycleSpec(s.u, word[i] == 1 ? s.g : s.h)), v);
  }
  return v;
}

InvariantReport check_construction_invariants(const NDConstruction& c) {
  InvariantReport report;
  const Point x0 = Point::zero(c.base);
  for (std::size_t n = 1; n <= c.stages.size(); ++n) {
    const NDStage& s = c.stages[n - 1];
    const ClopenSet prev = previous_set(c, n);
    const ClopenSet gu = image_of_clopen(s.g, s.u);
    const ClopenSet hu = image_of_clopen(s.h, s.u);
    report.nested = report.nested && !s.u.is_empty() && is_subset(s.u, prev);
    report.contains_base_point = report.contains_base_point && contains(s.u, x0);
    report.disjoint_images = report.disjoint_images && are_disjoint(s.u, gu) && are_disjoint(s.u, hu) &&
                             are_disjoint(gu, hu) && is_subset(gu, prev) && is_subset(hu, prev);
    report.proper = report.proper && !(unite(s.u, gu) == prev) && !(unite(s.u, hu) == prev);
    for (const TfgElement* f : {&s.f1, &s.f2})
      report.involutions = report.involutions && compose(*f, *f).is_identity() &&
                           is_subset(support(*f), prev);
    for (const auto& w : ternary_words(n)) {
      const ClopenSet v = stage_image(c, w);
      report.single_cylinders = report.single_cylinders && v.residues().size() == 1 &&
                                v.depth() >= static_cast<int>(n);
    }
  }
  return report;
}

ClopenSet y_cover(const NDConstruction& c, const OmegaWord& omega) {
  require_length(c, omega);
  ClopenSet cover = ClopenSet::empty(c.base);
  for (const auto& w : admissible_words(omega, omega.size())) cover = unite(cover, stage_image(c, w));
  return cover;
}

bool check_nowhere_dense(const NDConstruction& c, const OmegaWord& omega) {
  require_length(c, omega);
  for (std::size_t n = 0; n < omega.size(); ++n) {
    for (auto w : admissible_words(omega, n)) {
      const ClopenSet v = stage_image(c, w);
      w.push_back(0);
      const ClopenSet v0 = stage_image(c, w);
      w.back() = omega[n];
      const ClopenSet v1 = stage_image(c, w);
      if (difference(v, unite(v0, v1)).is_empty()) return false;
    }
  }
  return true;
}

bool check_generators_preserve_cover(const NDConstruction& c, const OmegaWord& omega) {
  const ClopenSet cover = y_cover(c, omega);
  for (const auto& g : omega_generators(c, omega, omega.size()))
    if (!(image_of_clopen(g, cover) == cover)) return false;
  return true;
}

Integer truncated_group_order(const NDConstruction& c, const OmegaWord& omega, std::size_t n,
                              std::size_t cap) {
  require_length(c, omega);
  if (n > omega.size()) throw DomainError("truncation longer than the omega word");
  if (n > 4) throw ResourceError("group closure is limited to four generators");
  const auto gens = omega_generators(c, omega, n);
  std::unordered_set<TfgElement, TfgElementHash> seen;
  std::vector<TfgElement> elements{TfgElement::identity(c.base)};
  seen.insert(elements.front());
  for (std::size_t head = 0; head < elements.size(); ++head)
    for (const auto& g : gens) {
      TfgElement next = compose(g, elements[head]);
      if (seen.insert(next).second) {
        if (elements.size() >= cap) throw ResourceError("group closure exceeds its cap");
        elements.push_back(std::move(next));
      }
    }
  return static_cast<Integer>(elements.size());
}

Integer gamma_model_order(std::size_t n) {
  if (n > 4) throw ResourceError("model closure is limited to four generators");
  const std::size_t points = std::size_t{1} << n;
  // Bit k-1 of a point holds letter k.
  std::vector<Permutation> gens;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Integer> images(points);
    const std::size_t prefix = (std::size_t{1} << (k - 1)) - 1;
    for (std::size_t p = 0; p < points; ++p)
      images[p] = static_cast<Integer>((p & prefix) == 0 ? p ^ (std::size_t{1} << (k - 1)) : p);
    gens.emplace_back(std::move(images));
  }
  std::unordered_set<Permutation, PermutationHash> seen{Permutation::identity(points)};
  std::deque<Permutation> queue{Permutation::identity(points)};
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation q = g * p;
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  return static_cast<Integer>(seen.size());
}

bool check_minimality_on_y(const NDConstruction& c, const OmegaWord& omega) {
  require_length(c, omega);
  const auto gens = omega_generators(c, omega, omega.size());
  std::set<Integer> seen{0};
  std::vector<Point> orbit{Point::zero(c.base)};
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const auto& g : gens) {
      Point next = apply_to_point(g, orbit[head]);
      if (seen.insert(*next.to_integer()).second) orbit.push_back(std::move(next));
    }
  for (const auto& w : admissible_words(omega, omega.size())) {
    const ClopenSet v = stage_image(c, w);
    bool hit = false;
    for (const Point& p : orbit)
      if (contains(v, p)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace ample
