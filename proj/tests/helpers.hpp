#pragma once

#include <string>
#include <vector>

#include "hilbsam.hpp"

namespace testing_helpers {

using namespace hilbsam;

inline QPoly q(const std::string& text, const PolyRingPtr& ring) { return parse_polynomial<Rational>(text, ring); }

inline Ideal<Rational> ideal(const std::string& gens, const RingPtr<Rational>& ring) {
  return Ideal<Rational>(ring, parse_generators<Rational>(gens, ring->base));
}

inline RingPtr<Rational> poly_ring(std::vector<std::string> vars) {
  return make_ring<Rational>(make_poly_ring(std::move(vars)));
}

/// Q[x,y]/(y^2 - x^n).
inline RingPtr<Rational> double_point(unsigned n) {
  auto base = make_poly_ring({"x", "y"});
  return make_ring<Rational>(base, q("y^2 - x^" + std::to_string(n), base));
}

inline std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline std::vector<std::uint64_t> u64s(std::initializer_list<std::uint64_t> v) { return v; }

}  // namespace testing_helpers
