#include "ample/error.hpp"
#include "ample/stabilizers.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace ample;

namespace {

const BaseSequence kTwo(2);
const BaseSequence kTwoThree({2}, {3});

Point at(Integer n) { return Point::from_integer(kTwo, n); }
const Point kThird(kTwo, {}, {1, 0});  // -1/3, outside the orbit of 0

// Orbit representatives with pairwise non-integer differences: 0, -1/3, -2/3.
const std::vector<Point> kOrbitSeeds{Point::zero(kTwo), kThird, Point(kTwo, {}, {0, 1})};

FinitePointSet points(std::vector<Point> p) { return FinitePointSet(std::move(p)); }

}  // namespace

TEST_CASE("orbit membership") {
  CHECK(same_orbit(at(0), at(1)));
  CHECK(same_orbit(kThird, kThird));
  CHECK(!same_orbit(at(0), kThird));
  CHECK(same_orbit(kThird, add_integer(kThird, -17)));
  CHECK_THROWS_AS(same_orbit(at(0), Point::zero(kTwoThree)), DomainError);
}

TEST_CASE("stabilizer classification examples") {
  CHECK(classify_finite_stabilizer(points({at(0), at(1)})).kind == StabilizerKind::Maximal);
  CHECK(classify_finite_stabilizer(points({at(0), kThird})).kind == StabilizerKind::NotMaximal);
  CHECK(classify_finite_stabilizer(points({at(0)})).kind == StabilizerKind::Maximal);
  const StabilizerClass c = classify_finite_stabilizer(points({at(0), kThird, at(5)}));
  CHECK(c.kind == StabilizerKind::NotMaximal);
  REQUIRE(c.orbits.size() == 2);
  CHECK(c.orbits[0] == std::vector<Integer>{0, 2});
  CHECK(c.orbits[1] == std::vector<Integer>{1});
  CHECK_THROWS_AS(points({at(3), at(3)}), DomainError);
}

TEST_CASE("realizing permutations of finite sets") {
  CHECK(realize_permutation(points({at(0), at(1)}), Permutation::identity(2), points({})).is_identity());
  const TfgElement swap = realize_permutation(points({at(0), at(1)}), Permutation({1, 0}), points({at(2)}));
  CHECK(swap == TfgElement(kTwo, 2, {1, -1, 0, 0}));
  CHECK(apply_to_point(swap, at(0)) == at(1));
  CHECK(apply_to_point(swap, at(1)) == at(0));
  CHECK(apply_to_point(swap, at(2)) == at(2));
  const TfgElement cyc = realize_permutation(points({at(0), at(1), at(2)}), Permutation({1, 2, 0}), points({}));
  CHECK(apply_to_point(cyc, at(0)) == at(1));
  CHECK(apply_to_point(cyc, at(1)) == at(2));
  CHECK(apply_to_point(cyc, at(2)) == at(0));
  CHECK(order(cyc).is_finite());
  // Points in different orbits cannot be exchanged.
  CHECK_THROWS_AS(realize_permutation(points({at(0), kThird}), Permutation({1, 0}), points({})), DomainError);
  CHECK_THROWS_AS(realize_permutation(points({at(0), at(1)}), Permutation({1, 0}), points({at(1)})), DomainError);
}

TEST_CASE("partition action transitivity") {
  CHECK(partition_action_transitive({}, {ClopenSet::full(kTwo)}));
  const std::vector<ClopenSet> halves{ClopenSet(kTwo, 1, {0}), ClopenSet(kTwo, 1, {1})};
  CHECK(partition_action_transitive({TfgElement(kTwo, 1, {1, -1})}, halves));
  CHECK(!partition_action_transitive({TfgElement::identity(kTwo)}, halves));
  CHECK_THROWS_AS(partition_action_transitive({odometer(kTwo)}, {ClopenSet(kTwo, 2, {0, 1}), ClopenSet(kTwo, 2, {2, 3})}),
                  DomainError);
}

TEST_CASE("finite oracle examples") {
  const FiniteModel s4{4, {Permutation::cycle(4, {0, 1, 2, 3}), Permutation::transposition(4, 0, 1)}};
  const FiniteOracleReport point = finite_oracle_maximality(s4, {0});
  CHECK(point.verdict.kind == StabilizerKind::Maximal);
  CHECK(point.group_order == 24);
  CHECK(point.stabilizer_order == 6);
  CHECK(point.brute_maximal);
  CHECK(point.agree);

  const FiniteOracleReport half = finite_oracle_maximality(s4, {0, 1});
  CHECK(half.verdict.kind == StabilizerKind::IndexTwoInPartitionStabilizer);
  CHECK(half.stabilizer_order == 4);
  CHECK(half.partition_stabilizer_order == Integer{8});
  CHECK(half.partition_stabilizer_maximal == true);
  CHECK(!half.brute_maximal);
  CHECK(half.agree);

  const FiniteModel s2{2, {Permutation::transposition(2, 0, 1)}};
  const FiniteOracleReport two = finite_oracle_maximality(s2, {0});
  CHECK(two.partition_stabilizer_order == two.group_order);
  CHECK(two.agree);

  const FiniteOracleReport whole = finite_oracle_maximality(s4, {0, 1, 2, 3});
  CHECK(whole.verdict.kind == StabilizerKind::WholeGroup);
  CHECK(whole.brute_whole);
  CHECK_THROWS_AS(validate_model(FiniteModel{9, {}}), ResourceError);
}

TEST_CASE("finite models with several orbits") {
  // S_2 x S_3 acting on {0,1} and {2,3,4}.
  const FiniteModel m{5, {Permutation::transposition(5, 0, 1), Permutation::cycle(5, {2, 3, 4}),
                          Permutation::transposition(5, 2, 3)}};
  CHECK(model_orbits(m).size() == 2);
  CHECK(subgroup_closure(m.generators, 5).size() == 12);
  CHECK(classify_model_stabilizer(m, {0, 2}).kind == StabilizerKind::NotMaximal);
  const StabilizerClass reduced = classify_model_stabilizer(m, {0, 1, 2});
  CHECK(reduced.kind == StabilizerKind::ReducesTo);
  CHECK(reduced.reduced == std::vector<Integer>{2});
  for (std::size_t mask = 1; mask < 32; ++mask) {
    std::vector<Integer> y;
    for (Integer i = 0; i < 5; ++i)
      if (mask & (std::size_t{1} << i)) y.push_back(i);
    CHECK(finite_oracle_maximality(m, y).agree);
  }
}

TEST_CASE("finite Property E") {
  const FinitePropertyEReport yes = finite_property_e(5, {0, 1, 2}, {2, 3});
  CHECK(yes.holds);
  CHECK(yes.generated_order == 24);
  CHECK(yes.expected_order == 24);
  const FinitePropertyEReport no = finite_property_e(5, {0, 1}, {2, 3});
  CHECK(!no.holds);
  CHECK(no.generated_order == 4);
}

TEST_CASE("property: classification follows integer differences") {
  oracle::Generator gen(51);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 5));
    std::vector<Point> pts;
    std::vector<Integer> seed_of;
    std::set<std::pair<Integer, Integer>> used;
    while (pts.size() < n) {
      const Integer s = gen.uniform(0, 2), k = gen.uniform(-6, 6);
      if (!used.insert({s, k}).second) continue;
      pts.push_back(add_integer(kOrbitSeeds[static_cast<std::size_t>(s)], k));
      seed_of.push_back(s);
    }
    const StabilizerClass c = classify_finite_stabilizer(FinitePointSet(pts));
    const std::set<Integer> seeds(seed_of.begin(), seed_of.end());
    CHECK((c.kind == StabilizerKind::Maximal) == (seeds.size() == 1));
    CHECK(c.orbits.size() == seeds.size());
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) CHECK(same_orbit(pts[a], pts[b]) == (seed_of[a] == seed_of[b]));
  }
}

TEST_CASE("property: realized permutations act as requested on integer points") {
  oracle::Generator gen(52);
  for (int i = 0; i < 200; ++i) {
    const BaseSequence& b = i % 2 ? kTwoThree : kTwo;
    const std::size_t ny = static_cast<std::size_t>(gen.uniform(1, 4));
    const std::size_t nz = static_cast<std::size_t>(gen.uniform(0, 6 - static_cast<Integer>(ny)));
    std::set<Integer> taken;
    std::vector<Integer> ys, zs;
    while (ys.size() < ny) {
      const Integer x = gen.uniform(-20, 20);
      if (taken.insert(x).second) ys.push_back(x);
    }
    while (zs.size() < nz) {
      const Integer x = gen.uniform(-20, 20);
      if (taken.insert(x).second) zs.push_back(x);
    }
    std::vector<Point> yp, zp;
    for (Integer x : ys) yp.push_back(Point::from_integer(b, x));
    for (Integer x : zs) zp.push_back(Point::from_integer(b, x));
    const Permutation pi(gen.shuffled(static_cast<Integer>(ny)));
    const TfgElement g = realize_permutation(FinitePointSet(yp), pi, FinitePointSet(zp));
    const oracle::Map mg = oracle::map_of(g);
    for (std::size_t a = 0; a < ny; ++a) CHECK(mg(ys[a]) == ys[static_cast<std::size_t>(pi(static_cast<Integer>(a)))]);
    for (Integer z : zs) CHECK(mg(z) == z);
    CHECK(order(g).is_finite());
  }
}
