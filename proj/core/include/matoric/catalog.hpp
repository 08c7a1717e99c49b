#pragma once

#include "matoric/matroid.hpp"

namespace matoric {

/// All r-subsets of [n]. Throws BadParamsError unless 0 <= r <= n, n >= 1.
Matroid uniform(int r, int n);

/// Graphic matroid of a multigraph on vertices 1..num_vertices; ground set
/// is the edge list by position, bases are the spanning forests of maximal
/// size (spanning trees when connected). Self-loops become matroid loops.
Matroid graphic(int num_vertices, const std::vector<std::pair<int, int>>& edges);

enum class NamedMatroid { MK4, W3, P6, Q6 };

/// The four rank-3, six-element excluded minors: M(K4) as the graphic
/// matroid of K4; the whirl W3 as the wheel with spokes {1,2,3}, rim
/// {4,5,6} plus the rim basis; P6 with the single line {4,5,6}; Q6 with
/// the two lines {1,2,3} and {3,4,5}.
Matroid named(NamedMatroid which);

/// No minor isomorphic to any of M(K4), W3, P6, Q6.
bool excluded_minor_free(const Matroid& m);

}  // namespace matoric
