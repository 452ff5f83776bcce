#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "rbd/dinvariant.hpp"
#include "rbd/goeritz.hpp"
#include "rbd/plumbing.hpp"

using namespace rbd;

namespace {

const IntMatrix kC53{{-3, 1, 0}, {1, -5, 1}, {0, 1, -2}};
const IntMatrix kL257{{-4, 1, 0, 0}, {1, -3, 1, 0}, {0, 1, -2, 1}, {0, 0, 1, -2}};

// Distinct condition-2 endpoints over every move choice from k, by plain DFS.
void endpoints(const IntMatrix& a, const IntVector& k, std::set<IntVector>& out, std::set<IntVector>& seen) {
  if (!seen.insert(k).second) return;
  bool above = false, moved = false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (k[i] > -a(i, i)) above = true;
  if (above) return;
  for (std::size_t j = 0; j < a.rows(); ++j) {
    if (k[j] != -a(j, j)) continue;
    IntVector next = k;
    for (std::size_t t = 0; t < a.rows(); ++t) next[t] += 2 * a(t, j);
    endpoints(a, next, out, seen);
    moved = true;
  }
  if (!moved) out.insert(k);
}

}  // namespace

TEST_CASE("full paths on the -L(25,7) chain") {
  const SpincLattice lat(kL257);
  const auto p = full_path(lat, make_vector({0, 1, 0, 2}));
  CHECK(p.vectors == std::vector<IntVector>{make_vector({0, 1, 0, 2}), make_vector({0, 1, 2, -2}),
                                            make_vector({0, 3, -2, 0}), make_vector({2, -3, 0, 0})});
  CHECK(p.moves == std::vector<std::size_t>{3, 2, 1});
  CHECK(p.condition == 2);
  const auto q = full_path(lat, make_vector({4, -1, 0, 0}));
  CHECK(q.vectors == std::vector<IntVector>{make_vector({4, -1, 0, 0}), make_vector({-4, 1, 0, 0})});
}

TEST_CASE("full path on a single -1 sphere") {
  const SpincLattice lat(IntMatrix{{-1}});
  const auto p = full_path(lat, make_vector({1}));
  CHECK(p.vectors == std::vector<IntVector>{make_vector({1}), make_vector({-1})});
  CHECK(p.condition == 2);
}

TEST_CASE("full path preconditions") {
  try {
    full_path(SpincLattice(family_form(3, false)), make_vector({1, 1, 1, 0, 0, 0}));
    FAIL("expected NotTreeForm");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotTreeForm);
  }
  try {
    full_path(SpincLattice(kC53), make_vector({-3, 1, 0}));
    FAIL("expected OutsideInitialBox");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OutsideInitialBox);
  }
  CHECK_THROWS_AS(full_path(SpincLattice(kC53), make_vector({0, 1, 0})), Error);
}

TEST_CASE("paths on the A2 form") {
  const SpincLattice lat(IntMatrix{{-2, 1}, {1, -2}});
  const auto p = full_path(lat, make_vector({2, 0}));
  CHECK(p.vectors == std::vector<IntVector>{make_vector({2, 0}), make_vector({-2, 2}), make_vector({0, -2})});
  CHECK(p.condition == 2);
  const auto q = full_path(lat, make_vector({2, 2}));
  CHECK(q.vectors == std::vector<IntVector>{make_vector({2, 2}), make_vector({-2, 4})});
  CHECK(q.moves == std::vector<std::size_t>{0});
  CHECK(q.condition == 1);
}

TEST_CASE("grading shifts") {
  CHECK(grading_shift(SpincLattice(kC53), make_vector({1, 3, 0})) == 0);
  CHECK(grading_shift(SpincLattice(intersection_form(wahl_graph(2, 2, 2))), make_vector({2, 1, 1, 1})) == 0);
  CHECK(grading_shift(SpincLattice(IntMatrix{{-2}}), make_vector({0})) == Rational(1, 4));
}

TEST_CASE("d-invariants of small forms") {
  CHECK(d_invariant(SpincLattice(kC53), make_vector({1, 3, 0})).d == 0);
  const auto two = d_invariant_table(SpincLattice(IntMatrix{{-2}}));
  REQUIRE(two.entries.size() == 2);
  std::multiset<Rational> ds{two.entries[0].d, two.entries[1].d};
  CHECK(ds == std::multiset<Rational>{Rational(1, 4), Rational(-1, 4)});
  CHECK(d_invariant(SpincLattice(IntMatrix{{-1}}), make_vector({1})).d == 0);
  CHECK_THROWS_AS(d_invariant_table(SpincLattice(IntMatrix{{1}})), Error);
}

TEST_CASE("d-table agrees with the brute-force spectrum") {
  for (const IntMatrix& a : {kC53, kL257, intersection_form(wahl_graph(2, 2, 2))}) {
    const SpincLattice lat(a);
    const auto t = d_invariant_table(lat);
    CHECK(t.stabilized);
    CHECK(t.tree_form);
    CHECK(t.warnings.empty());
    const auto spec = oracle::d_spectrum(a);
    const oracle::ClassOracle co(a);
    CHECK(spec.size() == t.entries.size());
    for (const auto& e : t.entries) {
      CHECK(spec.at(co.signature(oracle::small_vec(e.representative))) == e.d);
      CHECK(lat.class_key(e.witness) == e.key);
    }
    for (std::size_t i = 1; i < t.entries.size(); ++i)
      CHECK(lex_less(t.entries[i - 1].representative, t.entries[i].representative));
  }
}

TEST_CASE("parallel and sequential tables agree") {
  const SpincLattice lat(family_form(3, false));
  const auto a = d_invariant_table(lat, {BoxPreset::Wide, 3, 1});
  const auto b = d_invariant_table(lat, {BoxPreset::Wide, 3, 4});
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].key == b.entries[i].key);
    CHECK(a.entries[i].d == b.entries[i].d);
    CHECK(a.entries[i].witness == b.entries[i].witness);
  }
  CHECK_FALSE(a.tree_form);
  CHECK_FALSE(a.warnings.empty());
}

TEST_CASE("sharp vectors") {
  CHECK(sharp_vectors(SpincLattice(kC53)) ==
        std::vector<IntVector>{make_vector({-1, -3, 0}), make_vector({-1, 1, 2}), make_vector({1, -3, 2}),
                               make_vector({1, 3, 0}), make_vector({3, -1, 0})});
  CHECK(sharp_vectors(SpincLattice(kL257)) ==
        std::vector<IntVector>{make_vector({-2, -1, 0, 2}), make_vector({-2, 3, 0, 0}), make_vector({0, 1, 0, 2}),
                               make_vector({2, -1, 2, 0}), make_vector({4, -1, 0, 0})});
  const SpincLattice one(IntMatrix{{-1}});
  CHECK(sharp_vectors(one, BoxPreset::Wide) == std::vector<IntVector>{make_vector({-1}), make_vector({1})});
  CHECK(sharp_vectors(one) == std::vector<IntVector>{make_vector({1})});
}

TEST_CASE("condition-2 path counts") {
  const auto one = count_condition2_paths(SpincLattice(IntMatrix{{-1}}));
  REQUIRE(one.size() == 1);
  CHECK(one.begin()->second == 1);
  for (const IntMatrix& a : {kC53, kL257}) {
    const SpincLattice lat(a);
    const auto counts = count_condition2_paths(lat);
    CHECK(Integer(static_cast<long>(counts.size())) == lat.class_count());
    std::map<IntVector, long> want;
    for (const auto& k : enumerate_box(a, CharBox::preset(a, BoxPreset::Initial))) {
      std::set<IntVector> out, seen;
      endpoints(a, k, out, seen);
      want[lat.class_key(k)] += static_cast<long>(out.size());
    }
    for (const auto& [key, n] : counts) {
      CHECK(n == want[key]);
      CHECK(n == 1);
    }
  }
  CHECK_THROWS_AS(count_condition2_paths(SpincLattice(family_form(2, false))), Error);
}
