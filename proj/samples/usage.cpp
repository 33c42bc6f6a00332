// Small tour of the library: build a complex from its orbit presentation,
// look at its boundary, and check a few of its invariants.

#include <iostream>

#include "walkup/catalog.hpp"
#include "walkup/homology.hpp"
#include "walkup/symmetry.hpp"

int main() {
  using namespace walkup;

  Complex a = catalog::get("A5_21");
  std::cout << "A5_21: " << a.num_facets() << " facets on " << a.num_vertices() << " vertices\n";
  std::cout << "in Kbar(5): " << std::boolalpha << in_walkup_class(a, WalkupClass::Kbar) << "\n";

  Complex m = boundary_complex(a);
  auto fv = face_vector(m);
  std::cout << "boundary f-vector:";
  for (auto f : fv.counts) std::cout << ' ' << f;
  std::cout << "  chi = " << fv.chi << "\n";

  auto t = identify_type(m);
  std::cout << "beta1 = " << t.beta1 << ", orientable = " << t.orientable << ", type " << t.type << "\n";

  auto cert = certify_tight(m);
  std::cout << "tightness: " << cert.verdict << " over " << to_string(cert.field) << "\n";

  auto g = automorphism_group(m);
  std::cout << "Aut: " << g.structure() << "\n";
  return 0;
}
