#include "matoric/catalog.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace matoric {

Matroid uniform(int r, int n) {
  if (n < 1 || r < 0 || r > n) throw BadParamsError("uniform(r,n) requires 0 <= r <= n, n >= 1");
  std::vector<Basis> bases;
  for (ElementMask s = 0; s < (ElementMask{1} << n); ++s)
    if (std::popcount(s) == r) bases.push_back(basis_of(s));
  return Matroid::from_bases(n, std::move(bases));
}

namespace {

// Union-find on vertices for forest checks.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

Matroid graphic(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  if (num_vertices < 1) throw BadParamsError("graph needs at least one vertex");
  const int m = static_cast<int>(edges.size());
  if (m < 1 || m > 31) throw BadParamsError("edge count must be in 1..31");
  for (const auto& [u, v] : edges)
    if (u < 1 || u > num_vertices || v < 1 || v > num_vertices)
      throw BadParamsError("edge endpoint out of range");

  // Forest rank = vertices - components of the whole graph.
  Dsu whole(num_vertices);
  int components = num_vertices;
  for (const auto& [u, v] : edges)
    if (u != v && whole.unite(u - 1, v - 1)) --components;
  const int rank = num_vertices - components;

  std::vector<Basis> bases;
  if (rank == 0) {
    bases.push_back({});
    return Matroid::from_bases(m, std::move(bases));
  }
  for (ElementMask s = 0; s < (ElementMask{1} << m); ++s) {
    if (std::popcount(s) != rank) continue;
    Dsu dsu(num_vertices);
    bool acyclic = true;
    for (int e = 0; e < m && acyclic; ++e) {
      if (!(s & (ElementMask{1} << e))) continue;
      const auto& [u, v] = edges[static_cast<std::size_t>(e)];
      if (u == v || !dsu.unite(u - 1, v - 1)) acyclic = false;
    }
    if (acyclic) bases.push_back(basis_of(s));
  }
  return Matroid::from_bases(m, std::move(bases));
}

Matroid named(NamedMatroid which) {
  switch (which) {
    case NamedMatroid::MK4:
      return graphic(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    case NamedMatroid::W3: {
      // Wheel on hub 1, rim 2-3-4: spokes are elements 1,2,3, rim edges
      // 4,5,6. The whirl relaxes the rim circuit into a basis.
      Matroid wheel = graphic(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {2, 4}});
      std::vector<Basis> bases = wheel.bases();
      bases.push_back({4, 5, 6});
      return Matroid::from_bases(6, std::move(bases));
    }
    case NamedMatroid::P6: {
      std::vector<Basis> bases;
      for (ElementMask s = 0; s < (ElementMask{1} << 6); ++s) {
        if (std::popcount(s) != 3) continue;
        if (basis_of(s) == Basis{4, 5, 6}) continue;
        bases.push_back(basis_of(s));
      }
      return Matroid::from_bases(6, std::move(bases));
    }
    case NamedMatroid::Q6: {
      std::vector<Basis> bases;
      for (ElementMask s = 0; s < (ElementMask{1} << 6); ++s) {
        if (std::popcount(s) != 3) continue;
        Basis b = basis_of(s);
        if (b == Basis{1, 2, 3} || b == Basis{3, 4, 5}) continue;
        bases.push_back(std::move(b));
      }
      return Matroid::from_bases(6, std::move(bases));
    }
  }
  throw BadParamsError("unknown named matroid");
}

bool excluded_minor_free(const Matroid& m) {
  for (NamedMatroid t :
       {NamedMatroid::MK4, NamedMatroid::W3, NamedMatroid::P6, NamedMatroid::Q6})
    if (has_minor(m, named(t))) return false;
  return true;
}

}  // namespace matoric
