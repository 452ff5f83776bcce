#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "rbd/goeritz.hpp"
#include "rbd/plumbing.hpp"
#include "rbd/spinc.hpp"

using namespace rbd;

namespace {

const IntMatrix kC53{{-3, 1, 0}, {1, -5, 1}, {0, 1, -2}};
const IntMatrix kWahl{{-4, 1, 1, 1}, {1, -3, 0, 0}, {1, 0, -3, 0}, {1, 0, 0, -3}};
const IntMatrix kMirror{{-5, 1, 2}, {1, -3, 1}, {2, 1, -5}};

}  // namespace

TEST_CASE("initial box sizes") {
  CHECK(enumerate_box(kC53, CharBox::preset(kC53, BoxPreset::Initial)).size() == 30);
  const auto wahl = enumerate_box(kWahl, CharBox::preset(kWahl, BoxPreset::Initial));
  CHECK(wahl.size() == 108);
  CHECK(wahl.front() == make_vector({-2, -1, -1, -1}));
  CHECK(wahl.back() == make_vector({4, 3, 3, 3}));
  const IntMatrix two{{-2}};
  CHECK(enumerate_box(two, CharBox{{{Integer(0), Integer(2)}}}) == std::vector<IntVector>{make_vector({0}), make_vector({2})});
}

TEST_CASE("box presets and parity") {
  const auto wide = CharBox::preset(kC53, BoxPreset::Wide);
  CHECK(wide.ranges[0] == std::pair<Integer, Integer>(-3, 3));
  const auto taut = CharBox::preset(kC53, BoxPreset::Taut);
  CHECK(taut.ranges[1] == std::pair<Integer, Integer>(-3, 3));
  CHECK(CharBox::preset(kC53, BoxPreset::Wide, 1).ranges[2] == std::pair<Integer, Integer>(-4, 4));
  for (const auto& k : enumerate_box(kC53, wide)) CHECK(oracle::characteristic(kC53, k));
  CHECK(parse_box_preset("taut") == BoxPreset::Taut);
  CHECK_THROWS_AS(parse_box_preset("round"), Error);
}

TEST_CASE("squares") {
  CHECK(SpincLattice(kC53).square(make_vector({1, 3, 0})) == -3);
  CHECK(SpincLattice(kWahl).square(make_vector({2, 1, 1, 1})) == -4);
  CHECK(SpincLattice(IntMatrix{{-1}}).square(make_vector({1})) == -1);
  try {
    SpincLattice(kC53).square(make_vector({0, 3, 0}));
    FAIL("expected NotCharacteristic");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCharacteristic);
  }
  CHECK_THROWS_AS(SpincLattice(IntMatrix{{-2, 2}, {2, -2}}), Error);
}

TEST_CASE("same class witnesses") {
  const SpincLattice nine(family_form(3, false));
  // Solving 2 I x = K' - K exactly gives the sum of all six spheres.
  const auto x = nine.same_class(make_vector({1, 1, 1, -2, -2, -2}), make_vector({1, 1, 1, 0, 0, 0}));
  REQUIRE(x);
  CHECK(*x == make_vector({-1, -1, -1, -1, -1, -1}));
  CHECK(nine.shift(make_vector({1, 1, 1, -2, -2, -2}), *x) == make_vector({1, 1, 1, 0, 0, 0}));

  const SpincLattice c53(kC53);
  CHECK(c53.same_class(make_vector({3, -1, 0}), make_vector({-3, 1, 0})) == make_vector({1, 0, 0}));
  CHECK(c53.move(make_vector({3, -1, 0}), 0) == make_vector({-3, 1, 0}));
  CHECK(c53.same_class(make_vector({1, 3, 0}), make_vector({1, 3, 0})) == make_vector({0, 0, 0}));
  CHECK_FALSE(c53.same_class(make_vector({1, 3, 0}), make_vector({-1, -3, 0})).has_value());
}

TEST_CASE("class counts") {
  CHECK(SpincLattice(kWahl).class_count() == 81);
  CHECK(SpincLattice(kC53).class_count() == 25);
  CHECK(SpincLattice(kMirror).class_count() == 49);
}

TEST_CASE("conjugation") {
  CHECK(conjugate(make_vector({1, 3, 0})) == make_vector({-1, -3, 0}));
  CHECK(conjugate(make_vector({2, 1, 1, 1})) == make_vector({-2, -1, -1, -1}));
  const SpincLattice nine(family_form(3, false));
  const auto spin = nine.class_key(make_vector({1, 1, 1, -2, -2, -2}));
  CHECK(nine.conjugate_key(spin) == spin);
  const SpincLattice c53(kC53);
  const auto key = c53.class_key(make_vector({1, 3, 0}));
  CHECK(c53.conjugate_key(key) == c53.class_key(make_vector({-1, -3, 0})));
  CHECK(c53.conjugate_key(c53.conjugate_key(key)) == key);
}

TEST_CASE("the default box meets every class exactly |det| ways") {
  for (const IntMatrix& a : {kC53, kWahl, kMirror, family_form(3, false), IntMatrix{{-4}}}) {
    const SpincLattice lat(a);
    const oracle::ClassOracle co(a);
    std::set<IntVector> keys;
    std::set<std::vector<long long>> sigs;
    for (const auto& k : enumerate_box(a, CharBox::preset(a, BoxPreset::Wide))) {
      keys.insert(lat.class_key(k));
      sigs.insert(co.signature(oracle::small_vec(k)));
    }
    CHECK(Integer(static_cast<long>(keys.size())) == lat.class_count());
    CHECK(sigs.size() == keys.size());
  }
}

TEST_CASE("class key arithmetic") {
  const SpincLattice wahl(kWahl);
  CHECK(wahl.key_moduli() == make_vector({3, 27}));
  const auto a = wahl.class_key(make_vector({2, 1, 1, 1}));
  const auto b = wahl.class_key(make_vector({0, 1, 3, -1}));
  CHECK(wahl.add_keys(wahl.sub_keys(a, b), b) == a);
  CHECK(lex_less(make_vector({-1, 5}), make_vector({0, -5})));
}
