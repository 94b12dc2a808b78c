#include "ample/error.hpp"
#include "ample/nowhere_dense.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace ample;

namespace {

const BaseSequence kTwo(2);
const BaseSequence kThree(3);
const BaseSequence kTwoThree({2}, {3});

// Membership of x in the cover Y_omega: some admissible word w (w_i in
// {0, omega_i}) has x in V^(w), i.e. the inverse word carries x into u_n.
bool cover_oracle(const NDConstruction& c, const std::string& omega, Integer x) {
  const std::size_t n = omega.size();
  const oracle::Set last = oracle::set_of(c.stages[n - 1].u);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Integer y = x;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      const NDStage& s = c.stages[i];
      y = oracle::map_of(omega[i] == '1' ? s.f1 : s.f2)(y);
    }
    if (last.contains(y)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("construction of the first stage") {
  const NDConstruction c = build_construction(kTwo, 1);
  REQUIRE(c.stages.size() == 1);
  CHECK(c.stages[0].u == ClopenSet(kTwo, 2, {0}));
  CHECK(c.stages[0].g == odometer(kTwo));
  CHECK(c.stages[0].h == TfgElement::odometer_power(kTwo, 2));
  CHECK(check_construction_invariants(c).ok());
  CHECK_THROWS_AS(build_construction(kTwo, 0), DomainError);
}

TEST_CASE("omega words") {
  CHECK(all_omega_words(2).size() == 4);
  CHECK(all_omega_words(0).size() == 1);
  CHECK_THROWS_AS(OmegaWord("13"), DomainError);
}

TEST_CASE("covers") {
  const NDConstruction none{kTwo, {}};
  CHECK(y_cover(none, OmegaWord("")).is_full());
  CHECK(check_nowhere_dense(none, OmegaWord("")));
  CHECK(check_minimality_on_y(none, OmegaWord("")));
  const NDConstruction one = build_construction(kTwo, 1);
  CHECK(y_cover(one, OmegaWord("1")) == ClopenSet(kTwo, 2, {0, 1}));
  CHECK(y_cover(one, OmegaWord("2")) == ClopenSet(kTwo, 2, {0, 2}));
  CHECK_THROWS_AS(y_cover(one, OmegaWord("12")), DomainError);
}

TEST_CASE("degenerate constructions") {
  // g = h: u and its two images fill the parent set, leaving no residual.
  const NDConstruction filled{kTwo, {make_stage(ClopenSet(kTwo, 1, {0}), odometer(kTwo), odometer(kTwo))}};
  CHECK(!check_construction_invariants(filled).proper);
  CHECK(!check_construction_invariants(filled).disjoint_images);
  CHECK(!check_nowhere_dense(filled, OmegaWord("1")));

  // Three disjoint sets covering the parent still leave a residual for each
  // omega letter.
  const NDConstruction thirds{kThree, {make_stage(ClopenSet(kThree, 1, {0}), odometer(kThree),
                                                  TfgElement::odometer_power(kThree, 2))}};
  CHECK(check_construction_invariants(thirds).ok());
  CHECK(check_nowhere_dense(thirds, OmegaWord("1")));

  NDConstruction missing = build_construction(kTwo, 2);
  missing.stages[1].f2 = TfgElement::identity(kTwo);
  CHECK(!check_minimality_on_y(missing, OmegaWord("12")));
  CHECK(check_minimality_on_y(build_construction(kTwo, 2), OmegaWord("12")));
}

TEST_CASE("truncated group orders") {
  const NDConstruction c = build_construction(kTwo, 3);
  CHECK(truncated_group_order(c, OmegaWord("111"), 0) == 1);
  CHECK(truncated_group_order(c, OmegaWord("111"), 1) == 2);
  const Integer two = truncated_group_order(c, OmegaWord("121"), 2);
  CHECK(two > 2);
  CHECK(two <= 384);  // |Z/2 wr S_4|
  CHECK(truncated_group_order(c, OmegaWord("121"), 3) >= two);
}

TEST_CASE("property: construction invariants and covers over all words") {
  for (const BaseSequence& b : {kTwo, kTwoThree}) {
    for (std::uint64_t seed : {0u, 5u}) {
      const NDConstruction c = build_construction(b, 4, seed);
      CHECK(check_construction_invariants(c).ok());
      const Integer window = oracle::modulus(b, c.stages.back().u.depth());
      for (std::size_t n = 1; n <= 4; ++n) {
        NDConstruction prefix{c.base, {c.stages.begin(), c.stages.begin() + static_cast<std::ptrdiff_t>(n)}};
        std::vector<ClopenSet> covers;
        for (const auto& w : all_omega_words(n)) {
          const ClopenSet y = y_cover(prefix, w);
          const oracle::Set sy = oracle::set_of(y);
          bool ok = true;
          for (Integer x = 0; x < window; ++x) ok &= sy.contains(x) == cover_oracle(prefix, w.letters(), x);
          CHECK(ok);
          CHECK(check_nowhere_dense(prefix, w));
          CHECK(check_generators_preserve_cover(prefix, w));
          for (const auto& other : covers) CHECK(!(other == y));
          covers.push_back(y);
        }
      }
    }
  }
}

TEST_CASE("property: cover measures strictly decrease along a word") {
  const NDConstruction c = build_construction(kTwoThree, 5);
  const std::string omega = "12211";
  Rational previous = 1;
  for (std::size_t n = 1; n <= omega.size(); ++n) {
    const NDConstruction prefix{c.base, {c.stages.begin(), c.stages.begin() + static_cast<std::ptrdiff_t>(n)}};
    const Rational m = measure(y_cover(prefix, OmegaWord(omega.substr(0, n))));
    CHECK(m < previous);
    previous = m;
  }
}
