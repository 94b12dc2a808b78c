#include "ample/property_e.hpp"

#include "ample/error.hpp"
#include "ample/gen_perm.hpp"
#include "ample/towers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ample {

CosetReduction coset_reduce(const TfgElement& g, const ClopenSet& u) {
  if (u.is_empty()) throw DomainError("coset reduction needs a nonempty set");
  const Integer k = index(g);
  if (k == 0) return {0, g};
  const TfgElement f_u = first_return(u).f_u;
  return {k, compose(power(f_u, -k), g)};
}

TorsionFactorization factor_kernel(const TfgElement& h, const std::optional<ClopenSet>& w) {
  if (index(h) != 0) throw DomainError("kernel factorization needs an index-zero element");
  const BaseSequence& base = h.base();
  const ClopenSet region = w.value_or(ClopenSet::full(base));
  if (!(region.base() == base)) throw DomainError("element and set over different bases");
  if (!is_subset(support(h), region)) throw DomainError("element not supported in the given set");

  const OrderResult ord = order(h);
  if (ord.is_finite()) return {h, h, TfgElement::identity(base), *ord.order, 1};

  const int d = std::max(h.depth(), region.depth());
  const WreathForm form = wreath_form(h, d);
  const Integer k = base.modulus(d);
  const auto residues = region.residues_at(d);

  std::vector<Integer> cycle_images(static_cast<std::size_t>(k));
  for (Integer r = 0; r < k; ++r) cycle_images[static_cast<std::size_t>(r)] = r;
  for (std::size_t i = 0; i < residues.size(); ++i)
    cycle_images[static_cast<std::size_t>(residues[i])] = residues[(i + 1) % residues.size()];
  const Permutation pi(std::move(cycle_images));

  const TfgElement t1 = lift({base, d, pi, form.carry});
  const TfgElement t2 =
      lift({base, d, form.sigma * pi.inverse(), std::vector<Integer>(static_cast<std::size_t>(k), 0)});
  const OrderResult o1 = order(t1);
  const OrderResult o2 = order(t2);
  if (!o1.is_finite() || !o2.is_finite() || !(compose(t2, t1) == h))
    throw std::logic_error("kernel factorization failed its own check");
  return {h, t1, t2, *o1.order, *o2.order};
}

std::string to_string(Tag tag) { return tag == Tag::U1 ? "U1" : "U2"; }

namespace {

struct LocalWordBuilder {
  ClopenSet u1;
  ClopenSet u2;
  // u1 \ u2, u2 \ u1, u1 ∩ u2.
  std::vector<ClopenSet> parts;
  std::vector<Factor> word;

  LocalWordBuilder(const ClopenSet& a, const ClopenSet& b)
      : u1(a), u2(b), parts{difference(a, b), difference(b, a), intersect(a, b)} {}

  void emit(Tag tag, const TwoCycleSpec& delta) {
    word.push_back({tag, realize_two_cycle(delta)});
  }

  // delta_{B; g} with B inside u1 \ u2 and g(B) inside u2 \ u1, routed through
  // the overlap: (1 2) = (1 3)(3 2)(1 3).
  void emit_cross(const TwoCycleSpec& delta) {
    const BaseSequence& base = u1.base();
    const ClopenSet& overlap = parts[2];
    const int d3 = overlap.depth();
    const Integer target = overlap.residues().front();
    const Integer k3 = base.modulus(d3);
    const int d = std::max({u1.depth(), u2.depth(), delta.u().depth(), delta.g().depth(), d3});
    std::map<Integer, std::vector<Integer>> by_shift;
    for (Integer r : delta.u().residues_at(d)) by_shift[((target - r) % k3 + k3) % k3].push_back(r);
    for (auto& [j, residues] : by_shift) {
      const ClopenSet piece(base, d, std::move(residues));
      const TfgElement fj = TfgElement::odometer_power(base, j);
      const TwoCycleSpec into_overlap(piece, fj);
      const TwoCycleSpec across(image_of_clopen(fj, piece),
                                compose(delta.g(), TfgElement::odometer_power(base, -j)));
      emit(Tag::U1, into_overlap);
      emit(Tag::U2, across);
      emit(Tag::U1, into_overlap);
    }
  }

  void add_two_cycle(const TwoCycleSpec& delta) {
    for (std::size_t i = 0; i < 3; ++i) {
      const ClopenSet from = intersect(delta.u(), parts[i]);
      if (from.is_empty()) continue;
      for (std::size_t j = 0; j < 3; ++j) {
        const ClopenSet block = intersect(from, preimage_of_clopen(delta.g(), parts[j]));
        if (block.is_empty()) continue;
        const TwoCycleSpec piece(block, delta.g());
        const bool in_u1 = i != 1 && j != 1;
        const bool in_u2 = i != 0 && j != 0;
        if (in_u1) {
          emit(Tag::U1, piece);
        } else if (in_u2) {
          emit(Tag::U2, piece);
        } else if (i == 0) {
          emit_cross(piece);
        } else {
          emit_cross(TwoCycleSpec(image_of_clopen(delta.g(), block), inverse(delta.g())));
        }
      }
    }
  }

  void add_torsion(const TfgElement& t) {
    for (const auto& spec : torsion_to_genperms(t))
      for (const auto& delta : genperm_to_two_cycles(spec)) add_two_cycle(delta);
  }
};

bool supported_in(const TfgElement& g, const ClopenSet& u) { return is_subset(support(g), u); }

}  // namespace

Certificate decompose_local(const TfgElement& g, const ClopenSet& u1, const ClopenSet& u2) {
  if (!(u1.base() == g.base()) || !(u2.base() == g.base()))
    throw DomainError("element and sets over different bases");
  if (intersect(u1, u2).is_empty()) throw DomainError("U1 and U2 do not intersect");
  if (!supported_in(g, unite(u1, u2))) throw DomainError("support escapes U1 ∪ U2");

  Certificate cert{g, u1, u2, {}};
  if (g.is_identity()) return cert;
  // A single-factor answer is only returned when that factor is torsion or a
  // power of the first-return element of U1; other elements of a local group
  // go through the full pipeline.
  const bool torsion = order(g).is_finite();
  if (supported_in(g, u1) && (torsion || g == power(first_return(u1).f_u, index(g)))) {
    cert.factors.push_back({Tag::U1, g});
    return cert;
  }
  if (torsion && supported_in(g, u2)) {
    cert.factors.push_back({Tag::U2, g});
    return cert;
  }

  LocalWordBuilder builder(u1, u2);
  const CosetReduction reduced = coset_reduce(g, u1);
  if (reduced.k != 0)
    builder.word.push_back({Tag::U1, power(first_return(u1).f_u, reduced.k)});
  if (!reduced.h.is_identity()) {
    const TorsionFactorization tf = factor_kernel(reduced.h, unite(u1, u2));
    builder.add_torsion(tf.t2);
    builder.add_torsion(tf.t1);
  }
  cert.factors = std::move(builder.word);
  if (!verify_certificate(cert)) throw std::logic_error("local decomposition failed its own check");
  return cert;
}

bool verify_certificate(const Certificate& c) {
  TfgElement acc = TfgElement::identity(c.target.base());
  for (auto it = c.factors.rbegin(); it != c.factors.rend(); ++it) {
    if (!supported_in(it->element, it->tag == Tag::U1 ? c.u1 : c.u2)) return false;
    acc = compose(it->element, acc);
  }
  return acc == c.target;
}

}  // namespace ample
