#include "ample/gen_perm.hpp"

#include "ample/error.hpp"

#include <map>
#include <string>

namespace ample {

GenPermSpec::GenPermSpec(ClopenSet u, std::vector<TfgElement> maps, Permutation pi)
    : u_(std::move(u)), maps_(std::move(maps)), pi_(std::move(pi)) {
  if (maps_.empty()) throw DomainError("generalized permutation needs at least one map");
  if (pi_.size() != maps_.size())
    throw DomainError("permutation size " + std::to_string(pi_.size()) +
                      " does not match " + std::to_string(maps_.size()) + " maps");
  std::vector<ClopenSet> images;
  for (const auto& f : maps_) {
    if (!(f.base() == u_.base())) throw DomainError("maps and set over different bases");
    images.push_back(image_of_clopen(f, u_));
  }
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (!are_disjoint(images[i], images[j]))
        throw DomainError("images f_" + std::to_string(i) + "(U) and f_" + std::to_string(j) +
                          "(U) intersect");
}

GenPermSpec GenPermSpec::with_permutation(Permutation pi) const {
  return GenPermSpec(u_, maps_, std::move(pi));
}

TwoCycleSpec::TwoCycleSpec(ClopenSet u, TfgElement g) : u_(std::move(u)), g_(std::move(g)) {
  if (!(u_.base() == g_.base())) throw DomainError("set and map over different bases");
  if (!are_disjoint(u_, image_of_clopen(g_, u_)))
    throw DomainError("2-cycle requires g(U) disjoint from U");
}

TfgElement realize(const GenPermSpec& spec) {
  const BaseSequence& base = spec.u().base();
  int d = spec.u().depth();
  for (const auto& f : spec.maps()) d = std::max(d, f.depth());
  base.check_depth(d);
  const Integer k = base.modulus(d);
  std::vector<Integer> table(static_cast<std::size_t>(k), 0);
  const auto residues = spec.u().residues_at(d);
  for (std::size_t i = 0; i < spec.maps().size(); ++i) {
    const TfgElement& from = spec.maps()[i];
    const TfgElement& to = spec.maps()[static_cast<std::size_t>(spec.pi()(static_cast<Integer>(i)))];
    for (Integer r : residues) {
      const Integer nf = from.value_at(r);
      Integer x = (r + nf) % k;
      if (x < 0) x += k;
      table[static_cast<std::size_t>(x)] = to.value_at(r) - nf;
    }
  }
  return TfgElement(base, d, std::move(table));
}

TfgElement realize_two_cycle(const TwoCycleSpec& spec) {
  return realize(GenPermSpec(spec.u(), {TfgElement::identity(spec.u().base()), spec.g()},
                             Permutation::transposition(2, 0, 1)));
}

bool check_perm_hom(const GenPermSpec& spec, const Permutation& pi, const Permutation& sigma) {
  return realize(spec.with_permutation(pi * sigma)) ==
         compose(realize(spec.with_permutation(pi)), realize(spec.with_permutation(sigma)));
}

GenPermSpec conjugate_spec(const TfgElement& h, const GenPermSpec& spec) {
  std::vector<TfgElement> maps;
  for (const auto& f : spec.maps()) maps.push_back(compose(h, f));
  return GenPermSpec(spec.u(), std::move(maps), spec.pi());
}

GenPermSpec reparameterize_spec(const TfgElement& h, const GenPermSpec& spec) {
  std::vector<TfgElement> maps;
  for (const auto& f : spec.maps()) maps.push_back(compose(f, h));
  return GenPermSpec(preimage_of_clopen(h, spec.u()), std::move(maps), spec.pi());
}

std::vector<TwoCycleSpec> split_two_cycle(const TwoCycleSpec& spec,
                                          const std::vector<ClopenSet>& parts) {
  ClopenSet covered = ClopenSet::empty(spec.u().base());
  for (const auto& p : parts) {
    if (!are_disjoint(covered, p)) throw DomainError("parts are not pairwise disjoint");
    covered = unite(covered, p);
  }
  if (!(covered == spec.u())) throw DomainError("parts do not partition U");
  std::vector<TwoCycleSpec> out;
  for (const auto& p : parts)
    if (!p.is_empty()) out.emplace_back(p, spec.g());
  return out;
}

std::vector<GenPermSpec> torsion_to_genperms(const TfgElement& g) {
  const OrderResult ord = order(g);
  if (!ord.is_finite()) throw DomainError("element has infinite order");
  const WreathForm w = wreath_form(g);
  std::map<Integer, std::vector<Integer>> bases_by_period;
  for (const auto& cyc : w.sigma.cycles()) bases_by_period[static_cast<Integer>(cyc.size())].push_back(cyc.front());

  std::vector<GenPermSpec> out;
  for (auto& [k, bases] : bases_by_period) {
    std::vector<TfgElement> maps{TfgElement::identity(g.base())};
    for (Integer i = 1; i < k; ++i) maps.push_back(compose(g, maps.back()));
    std::vector<Integer> points(static_cast<std::size_t>(k));
    for (Integer i = 0; i < k; ++i) points[static_cast<std::size_t>(i)] = i;
    out.emplace_back(ClopenSet(g.base(), w.depth, std::move(bases)), std::move(maps),
                     Permutation::cycle(static_cast<std::size_t>(k), points));
  }
  return out;
}

std::vector<TwoCycleSpec> genperm_to_two_cycles(const GenPermSpec& spec) {
  std::vector<TwoCycleSpec> out;
  for (auto [i, j] : transposition_word(spec.pi())) {
    const TfgElement& fi = spec.maps()[static_cast<std::size_t>(i)];
    const TfgElement& fj = spec.maps()[static_cast<std::size_t>(j)];
    out.emplace_back(image_of_clopen(fi, spec.u()), compose(fj, inverse(fi)));
  }
  return out;
}

}  // namespace ample
