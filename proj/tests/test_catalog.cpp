#include "matoric/catalog.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace matoric;

TEST_CASE("uniform") {
  CHECK(uniform(1, 2).basis_count() == 2);
  CHECK(uniform(2, 4).basis_count() == 6);
  CHECK(uniform(0, 1).bases() == std::vector<Basis>{{}});
  CHECK_THROWS_AS(uniform(3, 2), BadParamsError);
  CHECK_THROWS_AS(uniform(-1, 2), BadParamsError);
}

TEST_CASE("graphic") {
  CHECK(graphic(3, {{1, 2}, {2, 3}, {1, 3}}) == uniform(2, 3));
  CHECK(tu::mk4().basis_count() == 16);
  CHECK(graphic(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}) == uniform(3, 4));
  // Cycles give uniform matroids.
  for (int n = 3; n <= 5; ++n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n, 1);
    CHECK(graphic(n, edges) == uniform(n - 1, n));
  }
  // A self-loop is a matroid loop.
  Matroid with_loop = graphic(3, {{1, 2}, {2, 3}, {1, 1}});
  CHECK(classify_elements(with_loop).loops == std::vector<Element>{3});
  // Disconnected graphs give spanning forests.
  Matroid forest = graphic(4, {{1, 2}, {3, 4}});
  CHECK(forest.basis_count() == 1);
  CHECK(forest.rank() == 2);
}

TEST_CASE("named matroids have the expected shapes") {
  Matroid mk4 = named(NamedMatroid::MK4);
  Matroid w3 = named(NamedMatroid::W3);
  Matroid p6 = named(NamedMatroid::P6);
  Matroid q6 = named(NamedMatroid::Q6);
  CHECK(mk4.basis_count() == 16);
  CHECK(w3.basis_count() == 17);
  CHECK(p6.basis_count() == 19);
  CHECK(q6.basis_count() == 18);
  for (const Matroid& m : {mk4, w3, p6, q6}) {
    CHECK(m.ground_size() == 6);
    CHECK(m.rank() == 3);
    // from_bases re-validates; equality means the exchange axiom held.
    CHECK(Matroid::from_bases(6, m.bases()) == m);
  }
}

TEST_CASE("no two named matroids are isomorphic") {
  std::vector<Matroid> all{named(NamedMatroid::MK4), named(NamedMatroid::W3),
                           named(NamedMatroid::P6), named(NamedMatroid::Q6)};
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK(!is_isomorphic(all[i], all[j]).has_value());
}

TEST_CASE("excluded_minor_free") {
  CHECK(excluded_minor_free(uniform(2, 4)));
  CHECK(!excluded_minor_free(named(NamedMatroid::MK4)));
}
