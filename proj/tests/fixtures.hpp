#pragma once

// Small hand-written complexes shared by the test suites.

#include <vector>

#include "walkup/complex.hpp"

namespace fixtures {

using walkup::Complex;
using walkup::Face;

// Boundary of the 3-dimensional cross-polytope; opposite pairs 01, 23, 45.
inline Complex octahedron() {
  std::vector<Face> f;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) f.push_back({a, b, c});
  return Complex(f);
}

// 6-vertex real projective plane.
inline Complex rp2_6() {
  return Complex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                  {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

// 7-vertex torus: {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline Complex torus_7() {
  std::vector<Face> f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return Complex(f);
}

// n-cycle as a 1-complex.
inline Complex cycle(int n) {
  std::vector<Face> f;
  for (int i = 0; i < n; ++i) f.push_back({i, (i + 1) % n});
  return Complex(f);
}

// Three triangles on one edge: not a weak pseudomanifold.
inline Complex book3() { return Complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}); }

// Two tetrahedra boundaries sharing a vertex (a pinched, non-manifold 2-complex).
inline Complex wedge_of_spheres() {
  return Complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}});
}

}  // namespace fixtures
