#pragma once

#include <string>
#include <utility>
#include <vector>

#include "firstfall/cryptosys.hpp"
#include "firstfall/ring.hpp"

namespace firstfall::testing {

inline const FieldSpec kP{65521};

/// Polynomial from (coefficient, exponents) pairs.
inline Poly poly(const FieldSpec& f, std::initializer_list<std::pair<std::uint32_t, std::vector<std::uint16_t>>> terms) {
  Poly p;
  for (const auto& [c, e] : terms) p.add_term(Monomial{e}, FieldElem{c}, f);
  return p;
}

/// m generic forms of one standard degree in n variables.
inline SystemInstance generic_standard(int n, int m, int degree, std::uint64_t seed, const FieldSpec& f = kP) {
  return random_system(RingSpec::standard(f, n), std::vector<MultiDegree>(m, MultiDegree{degree}), seed);
}

/// m generic bilinear forms on blocks (a, b).
inline SystemInstance generic_bilinear(int a, int b, int m, std::uint64_t seed) {
  RingSpec r(kP, {{"x", a}, {"y", b}});
  return random_system(r, std::vector<MultiDegree>(m, MultiDegree{1, 1}), seed);
}

inline std::vector<long long> coeffs(const SeriesTrunc& s) {
  std::vector<long long> out;
  for (std::size_t i = 0; i < s.index().size(); ++i) out.push_back(s.at(i).get_si());
  return out;
}

}  // namespace firstfall::testing
