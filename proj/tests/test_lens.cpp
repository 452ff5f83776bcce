#include <doctest.h>

#include <numeric>

#include "rbd/lens.hpp"
#include "rbd/plumbing.hpp"

using namespace rbd;

namespace {

LensSpace L(long p, long q, int o = 1) { return make_lens(Integer(p), Integer(q), o); }

std::vector<Integer> ints(std::initializer_list<long> v) { return make_vector(v); }

}  // namespace

TEST_CASE("normal form") {
  const auto n = normalize(L(25, 4, -1));
  CHECK(n.orientation == 1);
  CHECK(n.q == 21);
  CHECK(normalize(L(7, 9)).q == 2);
  CHECK(format_lens(L(25, 9, -1)) == "-L(25,9)");
  CHECK(format_lens(L(9, 2)) == "L(9,2)");
}

TEST_CASE("oriented and unoriented equivalence") {
  CHECK(lens_equiv(L(25, 4, -1), L(25, 21)));
  CHECK(lens_equiv(L(25, 19, -1), L(25, 6)));
  CHECK(lens_equiv(L(25, 9, -1), L(25, 14, -1)));
  CHECK_FALSE(lens_equiv(L(25, 7), L(25, 14)));
  CHECK(lens_equiv(L(25, 7), L(25, 7, -1)));
  CHECK_FALSE(lens_equiv(L(5, 1), L(5, 1, -1)));
  CHECK(lens_equiv_unoriented(L(5, 1), L(5, 1, -1)));
  CHECK_FALSE(lens_equiv_unoriented(L(5, 1), L(5, 2)));
  CHECK_FALSE(lens_equiv(L(5, 1), L(7, 1)));
}

TEST_CASE("chain boundaries") {
  CHECK(format_lens(chain_boundary(ints({-5, -2, -2, -2, -2, -2}))) == "-L(25,6)");
  CHECK(lens_equiv(chain_boundary(ints({-2, -5, -3})), L(25, 14, -1)));
  CHECK(lens_equiv(chain_boundary(ints({-4})), L(4, 1, -1)));
  CHECK_THROWS_AS(chain_boundary(ints({-1, -3})), Error);
  CHECK_THROWS_AS(chain_boundary({}), Error);
  for (long p = 2; p <= 8; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      std::vector<Integer> w;
      const auto chain = park_chain(p, q);
      for (const auto& v : chain.vertices()) w.push_back(v.weight);
      CHECK(lens_equiv(chain_boundary(w), park_boundary(Integer(p), Integer(q))));
    }
}

TEST_CASE("dual pairs") {
  CHECK(dual_pair(Integer(5), Integer(2), Integer(3)));
  CHECK_FALSE(dual_pair(Integer(5), Integer(1), Integer(3)));
}

TEST_CASE("invalid lens spaces") {
  CHECK_THROWS_AS(L(6, 3), Error);
  CHECK_THROWS_AS(L(0, 1), Error);
  CHECK_THROWS_AS(L(5, 1, 2), Error);
}
