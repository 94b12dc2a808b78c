#include "ample/error.hpp"
#include "ample/towers.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace ample;

namespace {

const BaseSequence kTwo(2);
const BaseSequence kTwoThree({2}, {3});
const TfgElement kF = odometer(kTwo);

// First time t >= 1 at which g^t(x) lands in u, or 0 if none within the bound.
Integer return_time(const oracle::Map& g, const oracle::Set& u, Integer x, Integer bound) {
  Integer y = x;
  for (Integer t = 1; t <= bound; ++t) {
    y = g(y);
    if (u.contains(y)) return t;
  }
  return 0;
}

// Hand-rolled minimal element: a conjugate h f^{+-1} h^{-1}.
TfgElement minimal_conjugate(oracle::Generator& gen, const BaseSequence& b) {
  const TfgElement h = gen.element(b, 3);
  const TfgElement f = TfgElement::odometer_power(b, gen.uniform(0, 1) ? 1 : -1);
  return compose(compose(h, f), inverse(h));
}

}  // namespace

TEST_CASE("KR towers examples") {
  const KRPartition halves = build_kr(ClopenSet(kTwo, 1, {0}), kF);
  REQUIRE(halves.towers.size() == 1);
  REQUIRE(halves.towers.count(2) == 1);
  CHECK(halves.towers.at(2)[0] == ClopenSet(kTwo, 1, {0}));
  CHECK(halves.towers.at(2)[1] == ClopenSet(kTwo, 1, {1}));

  const TfgElement g(kTwo, 2, {1, 1, -2, 0});
  const KRPartition whole = build_kr(ClopenSet::full(kTwo), g);
  REQUIRE(whole.towers.size() == 1);
  REQUIRE(whole.towers.count(1) == 1);
  CHECK(whole.towers.at(1)[0].is_full());

  const KRPartition quarter = build_kr(ClopenSet(kTwo, 2, {0}), kF);
  REQUIRE(quarter.towers.count(4) == 1);
  for (Integer l = 0; l < 4; ++l) CHECK(quarter.towers.at(4)[static_cast<std::size_t>(l)] == ClopenSet(kTwo, 2, {l}));
  CHECK(quarter.recurrent.is_full());
}

TEST_CASE("KR towers need a nonempty base") {
  CHECK_THROWS_AS(build_kr(ClopenSet::empty(kTwo), kF), DomainError);
}

TEST_CASE("parity exchange examples") {
  const ClopenSet half(kTwo, 1, {0});
  const TfgElement e0 = parity_exchange(half, TfgElement(kTwo, 2, {2, 0, -2, 0}));
  CHECK(e0.is_identity());
  CHECK(exit_set(half, kF) == half);
  CHECK(entrance_set(half, kF) == ClopenSet(kTwo, 1, {1}));
  CHECK(parity_exchange(half, kF) == TfgElement(kTwo, 1, {1, -1}));

  const ClopenSet u(kTwo, 2, {0, 1});
  const TfgElement g = TfgElement::odometer_power(kTwo, 2);
  const ClopenSet out = exit_set(u, g), in = entrance_set(u, g);
  CHECK(out == ClopenSet(kTwo, 2, {0, 1}));
  CHECK(in == ClopenSet(kTwo, 2, {2, 3}));
  const TfgElement e = parity_exchange(u, g);
  CHECK(image_of_clopen(e, out) == in);
  CHECK(compose(e, e).is_identity());
}

TEST_CASE("first return examples") {
  const FirstReturn whole = first_return(ClopenSet::full(kTwo));
  CHECK(whole.f_u == kF);
  CHECK(whole.h_u.is_identity());

  const FirstReturn half = first_return(ClopenSet(kTwo, 1, {0}));
  CHECK(half.f_u == TfgElement(kTwo, 1, {2, 0}));
  CHECK(half.h_u == TfgElement(kTwo, 1, {1, -1}));
  CHECK(compose(half.f_u, half.h_u) == kF);

  const FirstReturn quarter = first_return(ClopenSet(kTwo, 2, {0}));
  CHECK(quarter.f_u == TfgElement(kTwo, 2, {4, 0, 0, 0}));
  CHECK(index(quarter.f_u) == 1);
  CHECK_THROWS_AS(first_return(ClopenSet::empty(kTwo)), DomainError);
}

TEST_CASE("minimal power partition examples") {
  const auto one = minimal_power_partition(kTwo, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_full());
  const auto two = minimal_power_partition(kTwo, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == ClopenSet(kTwo, 1, {0}));
  CHECK(two[1] == ClopenSet(kTwo, 1, {1}));
  CHECK(certify_minimal_pieces(two, 2));
  const auto three = minimal_power_partition(kTwo, 3);
  REQUIRE(three.size() == 1);
  CHECK(three[0].is_full());
  // Base 2 then 3 repeating: f^6 splits into residues mod 6.
  const auto six = minimal_power_partition(kTwoThree, 6);
  CHECK(six.size() == 6);
  CHECK(certify_minimal_pieces(six, 6));
  CHECK(minimal_power_partition(kTwoThree, -4).size() == 2);
  CHECK_THROWS_AS(minimal_power_partition(kTwo, 0), DomainError);
  // The coarser partition {X} is not minimal for f^2.
  CHECK(!certify_minimal_pieces(one, 2));
}

TEST_CASE("property: first return agrees with walking the odometer") {
  oracle::Generator gen(31);
  for (int i = 0; i < 100; ++i) {
    const BaseSequence& b = i % 2 ? kTwoThree : kTwo;
    const ClopenSet u = gen.clopen(b, 4, true);
    const FirstReturn fr = first_return(u);
    const oracle::Set su = oracle::set_of(u);
    const oracle::Map fu = oracle::map_of(fr.f_u);
    const Integer window = oracle::modulus(b, u.depth());
    const oracle::Map f{1, {1}};
    bool ok = true;
    for (Integer x = -window; x < window; ++x)
      ok &= fu(x) == (su.contains(x) ? x + return_time(f, su, x, window) : x);
    CHECK(ok);
    CHECK(compose(fr.f_u, fr.h_u) == odometer(b));
    CHECK(index(fr.f_u) == 1);
    CHECK(order(fr.h_u).is_finite());
  }
}

TEST_CASE("property: KR towers agree with return times") {
  oracle::Generator gen(32);
  for (int i = 0; i < 100; ++i) {
    const BaseSequence& b = i % 2 ? kTwoThree : kTwo;
    const ClopenSet u = gen.clopen(b, 3, true);
    const TfgElement g = i % 3 ? gen.element(b, 3, 1) : minimal_conjugate(gen, b);
    const KRPartition kr = build_kr(u, g);
    const oracle::Set su = oracle::set_of(u);
    const oracle::Map mg = oracle::map_of(g);
    const Integer window = oracle::modulus(b, std::max(u.depth(), g.depth()) + 1);
    bool ok = true;
    for (Integer x = 0; x < window; ++x) {
      if (!su.contains(x)) continue;
      const Integer t = return_time(mg, su, x, 4 * window);
      if (t == 0 || !kr.towers.count(t)) {
        ok = false;
        continue;
      }
      const auto& levels = kr.towers.at(t);
      Integer y = x;
      for (Integer l = 0; l < t; ++l, y = mg(y)) ok &= oracle::set_of(levels[static_cast<std::size_t>(l)]).contains(y);
    }
    CHECK(ok);
    const TfgElement e = parity_exchange(u, g);
    CHECK(image_of_clopen(e, exit_set(u, g)) == entrance_set(u, g));
    CHECK(compose(e, e).is_identity());
  }
}

TEST_CASE("property: minimal power partitions certify") {
  for (Integer n = 1; n <= 12; ++n) {
    for (const BaseSequence& b : {kTwo, kTwoThree}) {
      const auto pieces = minimal_power_partition(b, n);
      CHECK(certify_minimal_pieces(pieces, n));
      ClopenSet all = ClopenSet::empty(b);
      for (const auto& p : pieces) {
        CHECK(are_disjoint(all, p));
        all = unite(all, p);
        CHECK(image_of_clopen(TfgElement::odometer_power(b, n), p) == p);
      }
      CHECK(all.is_full());
    }
  }
}
