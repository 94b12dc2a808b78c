#include "ample/error.hpp"
#include "ample/gen_perm.hpp"
#include "ample/property_e.hpp"
#include "ample/towers.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace ample;

namespace {

const BaseSequence kTwo(2);
const BaseSequence kTwoThree({2}, {3});
const TfgElement kF = odometer(kTwo);
const TfgElement kDelta(kTwo, 1, {1, -1});

// Random element supported in u: permutes the depth-d residues inside u.
TfgElement supported_in(oracle::Generator& gen, const ClopenSet& u, int depth) {
  const BaseSequence& b = u.base();
  const Integer k = oracle::modulus(b, depth);
  std::vector<Integer> inside;
  const oracle::Set su = oracle::set_of(u);
  for (Integer r = 0; r < k; ++r)
    if (su.contains(r)) inside.push_back(r);
  std::vector<Integer> n(static_cast<std::size_t>(k), 0);
  if (inside.empty()) return TfgElement::identity(b);
  // Random carries; a nonzero carry sum gives infinite order and nonzero index.
  auto perm = inside;
  std::shuffle(perm.begin(), perm.end(), gen.engine);
  for (std::size_t i = 0; i < inside.size(); ++i)
    n[static_cast<std::size_t>(inside[i])] = perm[i] - inside[i] + k * gen.uniform(-1, 1);
  return TfgElement(b, depth, n);
}

Certificate word(const TfgElement& target, const ClopenSet& u1, const ClopenSet& u2, std::vector<Factor> f) {
  return Certificate{target, u1, u2, std::move(f)};
}

}  // namespace

TEST_CASE("coset reduction examples") {
  const ClopenSet half(kTwo, 1, {0});
  const CosetReduction id = coset_reduce(TfgElement::identity(kTwo), half);
  CHECK(id.k == 0);
  CHECK(id.h.is_identity());
  const CosetReduction whole = coset_reduce(kF, ClopenSet::full(kTwo));
  CHECK(whole.k == 1);
  CHECK(whole.h.is_identity());
  const CosetReduction r = coset_reduce(kF, half);
  CHECK(r.k == 1);
  CHECK(r.h == inverse(kDelta));
  CHECK(index(r.h) == 0);
  CHECK_THROWS_AS(coset_reduce(kF, ClopenSet::empty(kTwo)), DomainError);
}

TEST_CASE("kernel factorization examples") {
  const TorsionFactorization id = factor_kernel(TfgElement::identity(kTwo));
  CHECK(id.t1.is_identity());
  CHECK(id.t2.is_identity());
  const TfgElement h(kTwo, 1, {2, -2});
  const TorsionFactorization tf = factor_kernel(h);
  CHECK(tf.t1 == TfgElement(kTwo, 1, {3, -3}));
  CHECK(tf.t2 == kDelta);
  CHECK(tf.order1 == 2);
  CHECK(tf.order2 == 2);
  CHECK(compose(tf.t2, tf.t1) == h);
  const TorsionFactorization torsion = factor_kernel(kDelta);
  CHECK(torsion.t1 == kDelta);
  CHECK(torsion.t2.is_identity());
  CHECK_THROWS_AS(factor_kernel(kF), DomainError);
  CHECK_THROWS_AS(factor_kernel(h, ClopenSet(kTwo, 1, {0})), DomainError);
}

TEST_CASE("local decomposition of the worked example") {
  const ClopenSet u1(kTwo, 2, {0, 1}), u2(kTwo, 2, {1, 2});
  const TfgElement g(kTwo, 2, {2, 0, -2, 0});
  const Certificate c = decompose_local(g, u1, u2);
  REQUIRE(c.factors.size() == 3);
  const TfgElement d1(kTwo, 2, {1, -1, 0, 0}), d2(kTwo, 2, {0, 1, -1, 0});
  CHECK(c.factors[0] == Factor{Tag::U1, d1});
  CHECK(c.factors[1] == Factor{Tag::U2, d2});
  CHECK(c.factors[2] == Factor{Tag::U1, d1});
  CHECK(product({d1, d2, d1}, kTwo) == g);
  CHECK(verify_certificate(c));
}

TEST_CASE("local decomposition edge cases") {
  const ClopenSet u1(kTwo, 2, {0, 1}), u2(kTwo, 2, {1, 2});
  CHECK(decompose_local(TfgElement::identity(kTwo), u1, u2).factors.empty());
  const TfgElement local(kTwo, 2, {1, -1, 0, 0});
  const Certificate c = decompose_local(local, u1, u2);
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0] == Factor{Tag::U1, local});
  const TfgElement f1 = first_return(u1).f_u;
  const Certificate p = decompose_local(power(f1, 3), u1, u2);
  REQUIRE(p.factors.size() == 1);
  CHECK(p.factors[0] == Factor{Tag::U1, power(f1, 3)});
  CHECK_THROWS_AS(decompose_local(local, ClopenSet(kTwo, 2, {0}), ClopenSet(kTwo, 2, {1})), DomainError);
  CHECK_THROWS_AS(decompose_local(kF, u1, u2), DomainError);
}

TEST_CASE("certificate verification rejects bad words") {
  const ClopenSet u1(kTwo, 2, {0, 1}), u2(kTwo, 2, {1, 2});
  const TfgElement g(kTwo, 2, {2, 0, -2, 0});
  const TfgElement d1(kTwo, 2, {1, -1, 0, 0}), d2(kTwo, 2, {0, 1, -1, 0});
  CHECK(verify_certificate(word(g, u1, u2, {{Tag::U1, d1}, {Tag::U2, d2}, {Tag::U1, d1}})));
  CHECK(!verify_certificate(word(g, u1, u2, {{Tag::U2, d1}, {Tag::U2, d2}, {Tag::U1, d1}})));
  CHECK(!verify_certificate(word(g, u1, u2, {{Tag::U1, d1}, {Tag::U1, d1}, {Tag::U2, d2}})));
  CHECK(verify_certificate(word(TfgElement::identity(kTwo), u1, u2, {})));
}

TEST_CASE("property: certificates recompose, respect tags and conserve the index") {
  oracle::Generator gen(41);
  for (int i = 0; i < 200; ++i) {
    const BaseSequence& b = i % 2 ? kTwoThree : kTwo;
    const ClopenSet u1 = gen.clopen(b, 3, true);
    ClopenSet u2 = gen.clopen(b, 3, true);
    while (intersect(u1, u2).is_empty()) u2 = gen.clopen(b, 3, true);
    const TfgElement g = supported_in(gen, unite(u1, u2), 3);
    const Certificate c = decompose_local(g, u1, u2);
    CHECK(verify_certificate(c));
    std::vector<TfgElement> elements;
    Integer total = 0;
    const TfgElement f1 = first_return(u1).f_u;
    for (const auto& f : c.factors) {
      elements.push_back(f.element);
      CHECK(is_subset(support(f.element), f.tag == Tag::U1 ? u1 : u2));
      const Integer k = index(f.element);
      total += k;
      if (order(f.element).is_finite()) {
        CHECK(k == 0);
      } else {
        CHECK(f.element == power(f1, k));
      }
    }
    CHECK(product(elements, b) == g);
    CHECK(total == index(g));
    if (order(g).is_finite() && !is_subset(support(g), u1) && !is_subset(support(g), u2))
      for (const auto& f : c.factors) CHECK(compose(f.element, f.element).is_identity());
  }
}

TEST_CASE("property: kernel factors are torsion and recompose") {
  oracle::Generator gen(42);
  for (int i = 0; i < 200; ++i) {
    const BaseSequence& b = i % 2 ? kTwoThree : kTwo;
    const ClopenSet w = gen.clopen(b, 3, true);
    TfgElement h = supported_in(gen, w, 3);
    h = compose(h, power(first_return(w).f_u, -index(h)));
    REQUIRE(index(h) == 0);
    const TorsionFactorization tf = factor_kernel(h, w);
    const Integer window = oracle::modulus(b, std::max({h.depth(), tf.t1.depth(), tf.t2.depth()}));
    CHECK(oracle::iterate_order(oracle::map_of(tf.t1), window, 4 * window) == tf.order1);
    CHECK(oracle::iterate_order(oracle::map_of(tf.t2), window, 4 * window) == tf.order2);
    CHECK(compose(tf.t2, tf.t1) == h);
    CHECK(is_subset(support(tf.t1), w));
    CHECK(is_subset(support(tf.t2), w));
  }
}
