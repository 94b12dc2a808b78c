#include "ample/selftest.hpp"

#include "ample/error.hpp"
#include "ample/gen_perm.hpp"
#include "ample/nowhere_dense.hpp"
#include "ample/property_e.hpp"
#include "ample/random.hpp"
#include "ample/stabilizers.hpp"
#include "ample/towers.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace ample {

namespace {

class Checker {
 public:
  explicit Checker(SuiteResult& result) : result_(result) {}

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }
  bool failed() const { return !result_.passed; }

 private:
  SuiteResult& result_;
};

std::vector<BaseSequence> test_bases() { return {BaseSequence(2), BaseSequence({2}, {3})}; }

std::string base_name(const BaseSequence& base) {
  return base.pre_period().empty() ? "base 2" : "base pre[2]period[3]";
}

TfgElement refine_and_rebuild(const TfgElement& g) {
  return TfgElement(g.base(), g.depth() + 1, g.cocycle_at(g.depth() + 1));
}

void group_laws(Checker& c, Rng& rng) {
  for (const auto& base : test_bases()) {
    const TfgElement id = TfgElement::identity(base);
    for (int i = 0; i < 1000 && !c.failed(); ++i) {
      const TfgElement a = random_element(rng, base, 6);
      const TfgElement b = random_element(rng, base, 6);
      const TfgElement e = random_element(rng, base, 6);
      const std::string where = base_name(base) + " triple " + std::to_string(i);
      c.check(compose(compose(a, b), e) == compose(a, compose(b, e)), "associativity, " + where);
      c.check(compose(a, id) == a && compose(id, a) == a, "identity law, " + where);
      c.check(compose(a, inverse(a)).is_identity() && compose(inverse(a), a).is_identity(),
              "inverse law, " + where);
      c.check(refine_and_rebuild(a) == a && TfgElement(base, a.depth(), a.cocycle()) == a,
              "canonical form idempotence, " + where);
      c.check(compose(a, b).depth() <= std::max(a.depth(), b.depth()), "depth closure, " + where);
      const Point x = random_point(rng, base);
      c.check(apply_to_point(compose(a, b), x) == apply_to_point(a, apply_to_point(b, x)),
              "composition agrees with pointwise action, " + where);
    }
  }
}

void index_suite(Checker& c, Rng& rng) {
  for (const auto& base : test_bases()) {
    c.check(index(odometer(base)) == 1, "I(f) = 1 over " + base_name(base));
    for (int i = 0; i < 1000 && !c.failed(); ++i) {
      const TfgElement a = random_element(rng, base, 5);
      const TfgElement b = random_element(rng, base, 5);
      const std::string where = base_name(base) + " pair " + std::to_string(i);
      c.check(index(compose(a, b)) == index(a) + index(b), "homomorphism, " + where);
      c.check(index(inverse(a)) == -index(a), "inverse, " + where);
    }
    for (int i = 0; i < 200 && !c.failed(); ++i) {
      const GenPermSpec spec = random_genperm(rng, base, 4, static_cast<std::size_t>(rng.range(1, 4)));
      c.check(index(realize(spec)) == 0, "generalized permutation of nonzero index, " + base_name(base));
      const TfgElement t = random_torsion(rng, base, 4);
      c.check(index(t) == 0, "torsion element of nonzero index, " + base_name(base));
    }
  }
}

void gen_perm_suite(Checker& c, Rng& rng) {
  const BaseSequence base2(2);
  const ClopenSet u = ClopenSet::cylinder(base2, {2, 0});
  const GenPermSpec spec3(u, {TfgElement::identity(base2), odometer(base2), TfgElement::odometer_power(base2, 2)},
                          Permutation::identity(3));
  std::vector<Permutation> s3;
  for (Integer a = 0; a < 3; ++a)
    for (Integer b = 0; b < 3; ++b)
      if (a != b) s3.push_back(Permutation({a, b, 3 - a - b}));
  std::size_t pairs = 0;
  for (const auto& p : s3)
    for (const auto& q : s3) {
      ++pairs;
      c.check(check_perm_hom(spec3, p, q), "homomorphism over S_3");
    }
  c.check(pairs == 36, "S_3 enumeration size");

  for (const auto& base : test_bases()) {
    for (int i = 0; i < 100 && !c.failed(); ++i) {
      const GenPermSpec spec = random_genperm(rng, base, 4, 4);
      c.check(check_perm_hom(spec, random_permutation(rng, 4), random_permutation(rng, 4)),
              "homomorphism over S_4, " + base_name(base));
    }
    for (int i = 0; i < 100 && !c.failed(); ++i) {
      const GenPermSpec spec = random_genperm(rng, base, 4, static_cast<std::size_t>(rng.range(2, 3)));
      const TfgElement h = random_element(rng, base, 4);
      const TfgElement g = realize(spec);
      c.check(realize(conjugate_spec(h, spec)) == compose(h, compose(g, inverse(h))),
              "conjugation identity, " + base_name(base));
      c.check(realize(reparameterize_spec(h, spec)) == g, "reparameterization identity, " + base_name(base));
    }
  }
}

void torsion_suite(Checker& c, Rng& rng) {
  for (int i = 0; i < 200 && !c.failed(); ++i) {
    const BaseSequence base = test_bases()[static_cast<std::size_t>(i % 2)];
    const TfgElement g = random_torsion(rng, base, 4);
    const auto specs = torsion_to_genperms(g);
    std::vector<TfgElement> parts;
    for (const auto& s : specs) parts.push_back(realize(s));
    const std::string where = base_name(base) + " element " + std::to_string(i);
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = a + 1; b < parts.size(); ++b) {
        c.check(are_disjoint(support(parts[a]), support(parts[b])), "overlapping supports, " + where);
        c.check(compose(parts[a], parts[b]) == compose(parts[b], parts[a]), "factors do not commute, " + where);
      }
    c.check(product(parts, base) == g, "factors do not recompose, " + where);
    for (const auto& s : specs) {
      std::vector<TfgElement> deltas;
      for (const auto& delta : genperm_to_two_cycles(s)) deltas.push_back(realize_two_cycle(delta));
      c.check(product(deltas, base) == realize(s), "2-cycle word does not recompose, " + where);
    }
  }
}

bool kr_invariants(const KRPartition& kr, bool minimal) {
  const BaseSequence& base = kr.u.base();
  ClopenSet covered = ClopenSet::empty(base);
  ClopenSet ground = ClopenSet::empty(base);
  const int d = std::max(kr.u.depth(), kr.g.depth());
  for (const auto& [height, levels] : kr.towers) {
    if (height > base.modulus(d) || static_cast<Integer>(levels.size()) != height) return false;
    for (std::size_t l = 0; l < levels.size(); ++l) {
      if (levels[l].is_empty() || !are_disjoint(covered, levels[l])) return false;
      covered = unite(covered, levels[l]);
      const ClopenSet image = image_of_clopen(kr.g, levels[l]);
      if (l + 1 < levels.size() ? !(image == levels[l + 1]) : !is_subset(image, kr.u)) return false;
    }
    ground = unite(ground, levels.front());
  }
  if (!(ground == kr.u) || !(covered == kr.recurrent)) return false;
  return !minimal || kr.recurrent.is_full();
}

void towers_suite(Checker& c, Rng& rng) {
  for (int i = 0; i < 100 && !c.failed(); ++i) {
    const BaseSequence base = test_bases()[static_cast<std::size_t>(i % 2)];
    const ClopenSet u = random_nonempty_clopen(rng, base, 5);
    const std::string where = base_name(base) + " pair " + std::to_string(i);
    c.check(kr_invariants(build_kr(u, random_minimal(rng, base, 4)), true), "KR invariants (minimal g), " + where);
    c.check(kr_invariants(build_kr(u, random_element(rng, base, 4)), false), "KR invariants (any g), " + where);
  }
  for (int i = 0; i < 50 && !c.failed(); ++i) {
    const BaseSequence base = test_bases()[static_cast<std::size_t>(i % 2)];
    const ClopenSet u = random_nonempty_clopen(rng, base, 5);
    const FirstReturn fr = first_return(u);
    const std::string where = base_name(base) + " set " + std::to_string(i);
    c.check(compose(fr.f_u, fr.h_u) == odometer(base), "f != f_U h_U, " + where);
    c.check(index(fr.f_u) == 1, "index(f_U) != 1, " + where);
    c.check(is_subset(support(fr.f_u), u), "f_U escapes U, " + where);
    c.check(order(fr.h_u).is_finite() && index(fr.h_u) == 0, "h_U not torsion, " + where);
  }
}

void parity_suite(Checker& c, Rng& rng) {
  for (int i = 0; i < 100 && !c.failed(); ++i) {
    const BaseSequence base = test_bases()[static_cast<std::size_t>(i % 2)];
    const ClopenSet u = random_clopen(rng, base, 4);
    const TfgElement g = i % 4 < 2 ? random_element(rng, base, 4) : random_minimal(rng, base, 4);
    const TfgElement e = parity_exchange(u, g);
    const ClopenSet out = exit_set(u, g);
    const ClopenSet in = entrance_set(u, g);
    const std::string where = base_name(base) + " pair " + std::to_string(i);
    c.check(image_of_clopen(e, out) == in, "e(U_out) != U_in, " + where);
    c.check(compose(e, e).is_identity(), "e is not an involution, " + where);
    c.check(is_subset(support(e), unite(out, in)), "e moves points outside U_out ∪ U_in, " + where);
  }
}

void property_e_suite(Checker& c, Rng& rng) {
  {
    const BaseSequence base(2);
    const ClopenSet u1(base, 2, {0, 1}), u2(base, 2, {1, 2});
    const Certificate cert = decompose_local(TfgElement(base, 2, {2, 0, -2, 0}), u1, u2);
    c.check(cert.factors.size() == 3 && cert.factors[0].tag == Tag::U1 && cert.factors[1].tag == Tag::U2 &&
                cert.factors[2].tag == Tag::U1 && cert.factors[0].element == TfgElement(base, 2, {1, -1, 0, 0}) &&
                cert.factors[1].element == TfgElement(base, 2, {0, 1, -1, 0}) &&
                cert.factors[2].element == cert.factors[0].element,
            "worked example certificate");
  }
  for (int i = 0; i < 500 && !c.failed(); ++i) {
    const BaseSequence base = test_bases()[static_cast<std::size_t>(i % 2)];
    ClopenSet u1 = random_nonempty_clopen(rng, base, 4);
    ClopenSet u2 = random_nonempty_clopen(rng, base, 4);
    while (intersect(u1, u2).is_empty()) u2 = random_nonempty_clopen(rng, base, 4);
    const TfgElement g = random_supported(rng, unite(u1, u2), 4);
    const std::string where = base_name(base) + " case " + std::to_string(i);
    const Certificate cert = decompose_local(g, u1, u2);
    c.check(verify_certificate(cert), "certificate does not verify, " + where);
    const TfgElement f1 = first_return(u1).f_u;
    Integer total = 0;
    for (const auto& f : cert.factors) {
      c.check(is_subset(support(f.element), f.tag == Tag::U1 ? u1 : u2), "factor escapes its tag, " + where);
      const Integer k = index(f.element);
      total += k;
      c.check(order(f.element).is_finite() || f.element == power(f1, k),
              "factor neither torsion nor a first-return power, " + where);
    }
    c.check(total == index(g), "index not conserved, " + where);
  }
}

void kernel_suite(Checker& c, Rng& rng) {
  for (int i = 0; i < 200 && !c.failed(); ++i) {
    const BaseSequence base = test_bases()[static_cast<std::size_t>(i % 2)];
    const bool restricted = i % 4 >= 2;
    const ClopenSet w = restricted ? random_nonempty_clopen(rng, base, 4) : ClopenSet::full(base);
    const TfgElement h = random_index_zero(rng, w, 4);
    const TorsionFactorization tf =
        restricted ? factor_kernel(h, w) : factor_kernel(h);
    const std::string where = base_name(base) + " element " + std::to_string(i);
    const OrderResult o1 = order(tf.t1), o2 = order(tf.t2);
    c.check(o1.is_finite() && o2.is_finite(), "factor of infinite order, " + where);
    c.check(o1.order == tf.order1 && o2.order == tf.order2, "recorded orders wrong, " + where);
    c.check(power(tf.t1, tf.order1).is_identity() && power(tf.t2, tf.order2).is_identity(),
            "recorded order does not annihilate, " + where);
    c.check(compose(tf.t2, tf.t1) == h, "factors do not recompose, " + where);
    c.check(is_subset(support(tf.t1), w) && is_subset(support(tf.t2), w), "factor escapes w, " + where);
  }
}

// Union of full residue cycles of g through a random selection of residues.
ClopenSet random_invariant_set(Rng& rng, const TfgElement& g) {
  const Permutation sigma = g.residue_permutation(g.depth());
  std::vector<Integer> residues;
  for (const auto& cycle : sigma.cycles(true))
    if (rng.coin()) residues.insert(residues.end(), cycle.begin(), cycle.end());
  return ClopenSet(g.base(), g.depth(), std::move(residues));
}

void measure_suite(Checker& c, Rng& rng) {
  std::size_t contractions = 0;
  for (int i = 0; i < 500 && !c.failed(); ++i) {
    const BaseSequence base = test_bases()[static_cast<std::size_t>(i % 2)];
    const TfgElement g = random_element(rng, base, 5);
    const ClopenSet u = i % 3 == 0 ? random_invariant_set(rng, g) : random_clopen(rng, base, 5);
    const ClopenSet v = random_clopen(rng, base, 5);
    const ClopenSet image = image_of_clopen(g, u);
    const std::string where = base_name(base) + " pair " + std::to_string(i);
    c.check(measure(image) == measure(u), "measure not preserved, " + where);
    c.check(measure(u) + measure(v) == measure(unite(u, v)) + measure(intersect(u, v)),
            "inclusion-exclusion, " + where);
    if (is_subset(image, u)) {
      ++contractions;
      c.check(image == u, "proper contraction, " + where);
    }
  }
  c.check(contractions > 0, "no image-inside-set cases exercised");
}

void finite_oracle_suite(Checker& c, Rng&) {
  for (std::size_t n = 3; n <= 6; ++n) {
    std::vector<Integer> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Integer>(i);
    const FiniteModel model{n, {Permutation::cycle(n, cycle), Permutation::transposition(n, 0, 1)}};
    for (std::size_t mask = 1; mask < (std::size_t{1} << n) && !c.failed(); ++mask) {
      std::vector<Integer> y;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) y.push_back(static_cast<Integer>(i));
      const FiniteOracleReport report = finite_oracle_maximality(model, y);
      c.check(report.agree, "classifier disagrees with closure, n=" + std::to_string(n) + " mask " +
                                std::to_string(mask));
    }
  }
  {
    const FiniteModel s4{4, {Permutation::cycle(4, {0, 1, 2, 3}), Permutation::transposition(4, 0, 1)}};
    const FiniteOracleReport half = finite_oracle_maximality(s4, {0, 1});
    c.check(half.verdict.kind == StabilizerKind::IndexTwoInPartitionStabilizer &&
                half.partition_stabilizer_order == Integer{8} && half.partition_stabilizer_maximal == true &&
                half.stabilizer_order == 4,
            "S_4 half-set stabilizer structure");
    const FiniteOracleReport point = finite_oracle_maximality(s4, {0});
    c.check(point.verdict.kind == StabilizerKind::Maximal && point.stabilizer_order == 6 && point.brute_maximal,
            "S_4 point stabilizer");
    const FiniteModel s2{2, {Permutation::transposition(2, 0, 1)}};
    const FiniteOracleReport two = finite_oracle_maximality(s2, {0});
    c.check(two.verdict.kind == StabilizerKind::IndexTwoInPartitionStabilizer &&
                two.partition_stabilizer_order == two.group_order,
            "S_2 partition stabilizer is the whole group");
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t subsets = std::size_t{1} << n;
    for (std::size_t a = 1; a < subsets && !c.failed(); ++a)
      for (std::size_t b = 1; b < subsets; ++b) {
        std::vector<Integer> u1, u2;
        for (std::size_t i = 0; i < n; ++i) {
          if (a & (std::size_t{1} << i)) u1.push_back(static_cast<Integer>(i));
          if (b & (std::size_t{1} << i)) u2.push_back(static_cast<Integer>(i));
        }
        const FinitePropertyEReport r = finite_property_e(n, u1, u2);
        if (a & b)
          c.check(r.holds, "finite Property E fails, n=" + std::to_string(n));
        else
          c.check(!r.holds, "finite Property E holds for disjoint sets, n=" + std::to_string(n));
      }
  }
}

void nowhere_dense_suite(Checker& c, Rng&) {
  for (const auto& base : test_bases()) {
    for (std::uint64_t seed : {0u, 7u}) {
      const NDConstruction nd = build_construction(base, 5, seed);
      const std::string where = base_name(base) + " seed " + std::to_string(seed);
      c.check(check_construction_invariants(nd).ok(), "construction invariants, " + where);
      for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<ClopenSet> covers;
        for (const auto& omega : all_omega_words(n)) {
          const std::string w = where + " omega " + omega.letters();
          c.check(check_nowhere_dense(nd, omega), "nowhere density, " + w);
          const ClopenSet cover = y_cover(nd, omega);
          const ClopenSet shorter = y_cover(nd, OmegaWord(omega.letters().substr(0, n - 1)));
          c.check(measure(cover) < measure(shorter), "cover measure does not decrease, " + w);
          c.check(check_generators_preserve_cover(nd, omega), "generator moves the cover, " + w);
          if (n <= 4) c.check(check_minimality_on_y(nd, omega), "orbit misses a stage cylinder, " + w);
          covers.push_back(cover);
        }
        for (std::size_t a = 0; a < covers.size(); ++a)
          for (std::size_t b = a + 1; b < covers.size(); ++b)
            c.check(!(covers[a] == covers[b]), "distinct omega words share a cover, " + where);
      }
      for (const auto& omega : all_omega_words(3)) {
        c.check(truncated_group_order(nd, omega, 0) == 1, "trivial truncation, " + where);
        c.check(truncated_group_order(nd, omega, 1) == 2, "single involution, " + where);
        const Integer o3 = truncated_group_order(nd, omega, 3);
        c.check(o3 > 1 && o3 <= Integer{1} << 20, "closure for three generators, " + where);
      }
    }
  }
}

void stabilizers_suite(Checker& c, Rng& rng) {
  const BaseSequence base2(2);
  c.check(classify_finite_stabilizer(FinitePointSet({Point::zero(base2), Point::from_integer(base2, 1)})).kind ==
              StabilizerKind::Maximal,
          "{0, 1} is maximal");
  c.check(classify_finite_stabilizer(FinitePointSet({Point::zero(base2), Point(base2, {}, {1, 0})})).kind ==
              StabilizerKind::NotMaximal,
          "{0, -1/3} is not maximal");
  for (int i = 0; i < 100 && !c.failed(); ++i) {
    const BaseSequence base = test_bases()[static_cast<std::size_t>(i % 2)];
    std::vector<Point> reps;
    for (Integer r = rng.range(1, 3); r > 0; --r) reps.push_back(random_point(rng, base));
    const std::size_t ny = static_cast<std::size_t>(rng.range(1, 4));
    const std::size_t nz = static_cast<std::size_t>(rng.range(0, static_cast<Integer>(6 - ny)));
    std::vector<Point> pts;
    while (pts.size() < ny + nz) {
      Point p = add_integer(reps[static_cast<std::size_t>(rng.below(static_cast<Integer>(reps.size())))],
                            rng.range(-6, 6));
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    const FinitePointSet y(std::vector<Point>(pts.begin(), pts.begin() + static_cast<long>(ny)));
    const FinitePointSet z(std::vector<Point>(pts.begin() + static_cast<long>(ny), pts.end()));
    std::vector<Integer> images(ny);
    for (auto orbit : orbit_decomposition(y)) {
      auto targets = orbit;
      rng.shuffle(targets);
      for (std::size_t k = 0; k < orbit.size(); ++k) images[static_cast<std::size_t>(orbit[k])] = targets[k];
    }
    const Permutation pi(images);
    const TfgElement g = realize_permutation(y, pi, z);
    const std::string where = base_name(base) + " instance " + std::to_string(i);
    for (std::size_t k = 0; k < ny; ++k)
      c.check(apply_to_point(g, y[k]) == y[static_cast<std::size_t>(pi(static_cast<Integer>(k)))],
              "point of Y sent to the wrong image, " + where);
    const int d = separating_depth(pts);
    for (std::size_t k = 0; k < nz; ++k) {
      c.check(apply_to_point(g, z[k]) == z[k], "point of Z moved, " + where);
      c.check(are_disjoint(support(g), ClopenSet::cylinder(base, cylinder_of(z[k], d))),
              "support meets the cylinder of a point of Z, " + where);
    }
  }
  std::vector<Point> pts;
  for (int i = 0; i < 100; ++i) pts.push_back(random_point(rng, test_bases()[0]));
  for (std::size_t a = 0; a < pts.size() && !c.failed(); ++a) {
    c.check(same_orbit(pts[a], pts[a]), "same_orbit not reflexive");
    for (std::size_t b = 0; b < pts.size(); ++b) {
      c.check(same_orbit(pts[a], pts[b]) == same_orbit(pts[b], pts[a]), "same_orbit not symmetric");
      if (b % 10 == 0)
        for (std::size_t e = 0; e < pts.size(); e += 7)
          if (same_orbit(pts[a], pts[b]) && same_orbit(pts[b], pts[e]))
            c.check(same_orbit(pts[a], pts[e]), "same_orbit not transitive");
    }
  }
}

using SuiteFn = void (*)(Checker&, Rng&);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table{
      {"group-laws", group_laws},       {"index", index_suite},
      {"gen-perm", gen_perm_suite},     {"torsion", torsion_suite},
      {"towers", towers_suite},         {"parity-exchange", parity_suite},
      {"property-e", property_e_suite}, {"kernel", kernel_suite},
      {"measure", measure_suite},       {"finite-oracle", finite_oracle_suite},
      {"nowhere-dense", nowhere_dense_suite}, {"stabilizers", stabilizers_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"group-laws", "index",       "gen-perm",      "torsion",
                                              "towers",     "parity-exchange", "property-e", "kernel",
                                              "measure",    "finite-oracle", "nowhere-dense", "stabilizers"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  const auto it = suite_table().find(name);
  if (it == suite_table().end()) throw std::invalid_argument("unknown suite: " + name);
  SuiteResult result{name, true, 0, {}};
  Rng rng(seed);
  Checker checker(result);
  try {
    it->second(checker, rng);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  if (result.passed) result.detail = std::to_string(result.checks) + " checks";
  return result;
}

}  // namespace ample
