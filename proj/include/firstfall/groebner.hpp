#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "firstfall/ring.hpp"
#include "firstfall/series.hpp"

namespace firstfall {

/// Graded reverse lexicographic comparison (true when a > b).
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct GBTrace {
  int max_degree = 0;
  std::map<int, int> new_leading_by_degree;
  std::vector<Poly> basis;        ///< reduced, monic, ascending by degree then leading monomial
  std::vector<Monomial> leading;  ///< leading[i] = LM(basis[i])
  DegreeAnswer d_slv;
  bool complete = false;          ///< every S-pair degree was covered and all generators consumed
  int degree_reached = -1;        ///< degree at which `complete` was established

  /// dim S_d minus the degree-d monomials divisible by some leading monomial.
  long long quotient_dim(const RingSpec& standard_ring, int d) const;
};

/// Default size guard: columns * rows of a single degree step.
inline constexpr std::size_t kDefaultGbCellCap = 400'000'000;

/// Homogeneous degree-by-degree reduced Groebner basis in grevlex, standard
/// grading view. Each step row-reduces x_k * (basis of I_{d-1}) together with
/// the degree-d generators.
GBTrace reduced_gb_bounded(const SystemInstance& sys, int max_degree, std::size_t cell_cap = kDefaultGbCellCap);

DegreeAnswer solving_degree(const SystemInstance& sys, int max_degree);

/// Trace as JSON: degrees, new-leading counts, d_slv, leading monomials.
nlohmann::json to_json(const GBTrace& trace);

}  // namespace firstfall
