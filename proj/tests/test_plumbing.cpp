#include <doctest.h>

#include "rbd/dinvariant.hpp"
#include "rbd/lens.hpp"
#include "rbd/linalg.hpp"
#include "rbd/plumbing.hpp"

using namespace rbd;

namespace {

IntVector weights(const PlumbingGraph& g) {
  IntVector w;
  for (const auto& v : g.vertices()) w.push_back(v.weight);
  return w;
}

std::vector<Integer> ints(std::initializer_list<long> xs) { return make_vector(xs); }

}  // namespace

TEST_CASE("intersection forms of small plumbings") {
  CHECK(intersection_form(linear_chain(ints({-3, -5, -2}))) == IntMatrix{{-3, 1, 0}, {1, -5, 1}, {0, 1, -2}});
  CHECK(intersection_form(wahl_graph(2, 2, 2)) ==
        IntMatrix{{-4, 1, 1, 1}, {1, -3, 0, 0}, {1, 0, -3, 0}, {1, 0, 0, -3}});
  PlumbingGraph one;
  one.add_vertex("e", Integer(-1));
  CHECK(intersection_form(one) == IntMatrix{{-1}});
}

TEST_CASE("edge multiplicities accumulate") {
  PlumbingGraph g;
  g.add_vertex("a", Integer(-2));
  g.add_vertex("b", Integer(-2));
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK_FALSE(g.is_forest());
  g.add_edge(0, 1, -2);
  CHECK(g.edges().empty());
  CHECK(g.valence(0) == 0);
  CHECK_THROWS_AS(g.add_edge(0, 0), Error);
}

TEST_CASE("graph from form inverts intersection_form") {
  const IntMatrix a{{-5, 2, 1}, {2, -5, 1}, {1, 1, -3}};
  CHECK(intersection_form(graph_from_form(a)) == a);
}

TEST_CASE("bad vertices") {
  const auto wahl = bad_vertices(wahl_graph(2, 2, 2));
  CHECK(wahl.vertices.empty());
  CHECK(wahl.tag == SleekTag::Sleek);

  PlumbingGraph star;
  star.add_vertex("c", Integer(-2));
  for (int i = 0; i < 3; ++i) star.add_edge(0, star.add_vertex("r" + std::to_string(i), Integer(-2)));
  const auto bad = bad_vertices(star);
  CHECK(bad.vertices == std::vector<std::size_t>{0});
  CHECK(bad.negative_definite);

  CHECK(bad_vertices(linear_chain(ints({-2, -2, -7, -3}))).vertices.empty());

  PlumbingGraph cycle = linear_chain(ints({-3, -3, -3}));
  cycle.add_edge(0, 2);
  try {
    bad_vertices(cycle);
    FAIL("expected NotATree");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotATree);
  }
}

TEST_CASE("two and three bad vertices are tagged") {
  PlumbingGraph g;
  g.add_vertex("a", Integer(-1));
  g.add_vertex("b", Integer(-1));
  for (int i = 0; i < 2; ++i) g.add_edge(0, g.add_vertex("x" + std::to_string(i), Integer(-4)));
  for (int i = 0; i < 2; ++i) g.add_edge(1, g.add_vertex("y" + std::to_string(i), Integer(-4)));
  g.add_edge(0, 1);
  CHECK(bad_vertices(g).tag == SleekTag::EvenPartOnly);
  g.add_edge(2, g.add_vertex("z", Integer(-1)));
  g.add_edge(6, g.add_vertex("w", Integer(-5)));
  g.add_edge(6, g.add_vertex("u", Integer(-5)));
  CHECK(bad_vertices(g).tag == SleekTag::Unsupported);
}

TEST_CASE("continued fraction expansion") {
  CHECK(cfrac_expand(Integer(25), Integer(14)) == ints({2, 5, 3}));
  CHECK(cfrac_expand(Integer(25), Integer(6)) == ints({5, 2, 2, 2, 2, 2}));
  CHECK(cfrac_expand(Integer(4), Integer(1)) == ints({4}));
  CHECK(cfrac_evaluate(ints({2, 5, 3})) == Rational(25, 14));
  for (auto [n, d] : {std::pair{3L, 6L}, std::pair{4L, 2L}, std::pair{5L, 5L}, std::pair{5L, 0L}}) {
    try {
      cfrac_expand(Integer(n), Integer(d));
      FAIL("expected BadFraction");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadFraction);
    }
  }
}

TEST_CASE("chains C_{p,q}") {
  CHECK(weights(park_chain(5, 3)) == ints({-2, -5, -3}));
  CHECK(weights(park_chain(5, 3).reversed()) == ints({-3, -5, -2}));
  CHECK(weights(park_chain(2, 1)) == ints({-4}));
  CHECK(weights(park_chain(5, 1)) == ints({-7, -2, -2, -2}));
  CHECK_THROWS_AS(park_chain(6, 3), Error);
}

TEST_CASE("Wahl stars") {
  CHECK(wahl_graph(2, 2, 2).size() == 4);
  CHECK(wahl_graph(2, 2, 3).size() == 5);
  const auto g = wahl_graph(3, 4, 5);
  CHECK(g.size() == 1 + (3 - 1) + (4 - 1) + (5 - 1));
  CHECK(g.vertices()[0].weight == -4);
  CHECK(g.is_tree());
  CHECK(is_negative_definite(intersection_form(g)));
}

TEST_CASE("(m,n) family") {
  const auto raw = mn_family_graph(4, 1);
  const auto reduced = reduce_blow_downs(raw);
  CHECK(weights(reduced) == ints({-4, -3, -2, -2}));
  CHECK(format_lens(chain_boundary(weights(reduced))) == "-L(25,7)");
  CHECK(abs(determinant(intersection_form(raw))) == 25);
  for (long n = 1; n <= 6; ++n) {
    const auto g = reduce_blow_downs(mn_family_graph(n + 3, n));
    CHECK(is_negative_definite(intersection_form(g)));
    CHECK(bad_vertices(g).vertices.empty());
  }
  // m = 5, n = 2: a star with one central node.
  const auto g52 = reduce_blow_downs(mn_family_graph(5, 2));
  CHECK(abs(determinant(intersection_form(g52))) == 49);
}

TEST_CASE("blow-downs") {
  PlumbingGraph g = linear_chain(ints({-2, -1, -3}));
  const auto h = blow_down(g, 1);
  CHECK(weights(h) == ints({-1, -2}));
  CHECK(h.multiplicity(0, 1) == 1);
  try {
    blow_down(g, 0);
    FAIL("expected NotBlowDownable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotBlowDownable);
  }
  CHECK(reduce_blow_downs(g).size() == 0);
}

TEST_CASE("Seifert stars") {
  const auto s = seifert_star(Integer(-3), {{Integer(1), Integer(3)}, {Integer(1), Integer(3)}, {Integer(1), Integer(3)}});
  CHECK(weights(s.graph) == ints({-3, -3, -3, -3}));
  CHECK(s.guaranteed_negative_definite);
  const auto t = seifert_star(Integer(-2), {{Integer(1), Integer(2)}});
  CHECK(intersection_form(t.graph) == intersection_form(linear_chain(ints({-2, -2}))));
  const auto u = seifert_star(Integer(-2), {{Integer(1), Integer(3)}, {Integer(1), Integer(3)}, {Integer(1), Integer(3)}});
  CHECK_FALSE(u.guaranteed_negative_definite);
  // 2/5: alpha/beta = 5/2 = [3,2]; alpha/(alpha-beta) = 5/3 = [2,3].
  const auto a = seifert_star(Integer(-1), {{Integer(2), Integer(5)}});
  const auto b = seifert_star(Integer(-1), {{Integer(2), Integer(5)}}, HjConvention::AlphaOverComplement);
  CHECK(weights(a.graph) == ints({-1, -3, -2}));
  CHECK(weights(b.graph) == ints({-1, -2, -3}));
  for (auto [beta, alpha] : {std::pair{0L, 3L}, std::pair{3L, 3L}, std::pair{2L, 4L}, std::pair{1L, 1L}}) {
    try {
      seifert_star(Integer(-2), {{Integer(beta), Integer(alpha)}});
      FAIL("expected BadSeifertInvariants");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadSeifertInvariants);
    }
  }
}

TEST_CASE("tree form detection") {
  CHECK(is_tree_form(intersection_form(wahl_graph(2, 2, 2))));
  CHECK_FALSE(is_tree_form(IntMatrix{{-5, 2, 1}, {2, -5, 1}, {1, 1, -3}}));
  CHECK(is_tree_form(IntMatrix{{-2, 0}, {0, -3}}));
}
