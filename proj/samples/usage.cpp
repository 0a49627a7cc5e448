// Hilbert-Samuel coefficients of (x^6, x^2 y) on the curve y^2 = x^8, and
// the delta invariant of that curve.

#include <iostream>

#include "hilbsam.hpp"

using namespace hilbsam;

int main() {
  auto plane = make_poly_ring({"x", "y"});
  auto f = parse_polynomial<Rational>("y^2 - x^8", plane);
  auto curve = make_plane_curve(f);

  Ideal<Rational> ideal(curve.ring, parse_generators<Rational>("x^6, x^2*y", plane));
  auto h = e_coefficients(ideal);
  std::cout << "e =";
  for (const auto& e : h.e) std::cout << ' ' << e;
  std::cout << "\na =";
  for (const auto& a : h.a) std::cout << ' ' << a;
  std::cout << '\n';

  auto d = delta(f);
  std::cout << "delta = " << d.delta_combinatorial << " (Northcott: " << d.delta_northcott << ")\n";
  std::cout << "multiplicities:";
  for (unsigned m : d.tree.multiplicities()) std::cout << ' ' << m;
  std::cout << '\n';
}
