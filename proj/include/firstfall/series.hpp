#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "firstfall/ring.hpp"

namespace firstfall {

/// Result of a degree search. `NotFoundUpTo(bound)` only says nothing was
/// found at or below `bound`.
struct DegreeAnswer {
  std::optional<int> value;
  int bound = 0;

  static DegreeAnswer found(int v, int bound) { return {v, bound}; }
  static DegreeAnswer not_found(int bound) { return {std::nullopt, bound}; }

  bool is_found() const noexcept { return value.has_value(); }
  std::string str() const;

  friend bool operator==(const DegreeAnswer&, const DegreeAnswer&) = default;
};

struct MultiDegreeAnswer {
  std::optional<MultiDegree> value;
  int bound = 0;

  static MultiDegreeAnswer found(MultiDegree v, int bound) { return {std::move(v), bound}; }
  static MultiDegreeAnswer not_found(int bound) { return {std::nullopt, bound}; }

  bool is_found() const noexcept { return value.has_value(); }
  std::string str() const;

  friend bool operator==(const MultiDegreeAnswer&, const MultiDegreeAnswer&) = default;
};

/// Bijection between the multidegrees of total <= bound and [0, size), in
/// deglex order. Level t occupies [level_begin(t), level_begin(t+1)).
class DegreeIndex {
 public:
  DegreeIndex(std::size_t s, int bound);

  /// Entry count without building the index; saturates at SIZE_MAX.
  static std::size_t count(std::size_t s, int bound);

  std::size_t s() const noexcept { return s_; }
  int bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  std::size_t level_begin(int t) const { return level_start_[static_cast<std::size_t>(t)]; }
  const MultiDegree& at(std::size_t i) const { return degrees_[i]; }
  /// Position of d; d must be nonnegative with |d| <= bound.
  std::size_t rank(const MultiDegree& d) const;
  const std::vector<MultiDegree>& degrees() const noexcept { return degrees_; }

 private:
  std::size_t s_;
  int bound_;
  std::vector<MultiDegree> degrees_;
  std::vector<std::size_t> level_start_;
};

enum class Kernel { Serial, Parallel };

/// Truncated power series in s variables with exact integer coefficients,
/// defined for every multidegree of total degree <= bound.
class SeriesTrunc {
 public:
  SeriesTrunc(std::size_t s, int bound);

  static SeriesTrunc one(std::size_t s, int bound);

  std::size_t s() const noexcept { return index_.s(); }
  int bound() const noexcept { return index_.bound(); }
  const DegreeIndex& index() const noexcept { return index_; }

  /// Coefficient of t^d; zero for negative d, DimensionMismatch if |d| > bound.
  mpz_class coeff(const MultiDegree& d) const;
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  mpz_class& at(std::size_t i) { return coeffs_[i]; }
  const mpz_class& at(std::size_t i) const { return coeffs_[i]; }

  /// this *= (1 - t^a)^power, truncated.
  void mul_one_minus(const MultiDegree& a, unsigned power = 1, Kernel kernel = Kernel::Serial);
  /// this *= (1 - t^a)^(-power), truncated.
  void div_one_minus(const MultiDegree& a, unsigned power = 1, Kernel kernel = Kernel::Serial);

  /// Truncated product; both operands must share s and bound.
  friend SeriesTrunc operator*(const SeriesTrunc& x, const SeriesTrunc& y);
  friend SeriesTrunc operator+(const SeriesTrunc& x, const SeriesTrunc& y);
  friend bool operator==(const SeriesTrunc& x, const SeriesTrunc& y) {
    return x.s() == y.s() && x.bound() == y.bound() && x.coeffs_ == y.coeffs_;
  }

  /// Substitutes t_i := t, summing coefficients by total degree.
  SeriesTrunc collapse_total() const;

  /// Nonzero terms in deglex order.
  std::vector<std::pair<MultiDegree, mpz_class>> terms() const;

 private:
  std::vector<std::ptrdiff_t> shift_table(const MultiDegree& a) const;

  DegreeIndex index_;
  std::vector<mpz_class> coeffs_;
};

inline constexpr std::size_t kDefaultSeriesCap = 100'000'000;

/// Hilbert series of the ring: prod over variables of 1/(1 - t^{weight}).
SeriesTrunc hilbert_series_ring(const RingSpec& r, int bound, Kernel kernel = Kernel::Serial);

/// prod_i (1 - t^{gen_degs[i]}) * HS_S(t), exact to total degree `bound`.
SeriesTrunc estimate_series(const RingSpec& r, const std::vector<MultiDegree>& gen_degs, int bound,
                            Kernel kernel = Kernel::Serial, std::size_t cap = kDefaultSeriesCap);

/// Smallest d >= 1 with a non-positive coefficient; series must have s = 1.
DegreeAnswer find_dreg(const SeriesTrunc& series);
/// Minimal |d| with a strictly negative coefficient.
DegreeAnswer find_dmulti(const SeriesTrunc& series);
/// Deglex-minimal d with a strictly negative coefficient.
MultiDegreeAnswer find_dmulti_ordered(const SeriesTrunc& series);

/// One factor (1 - t^degree)^exponent of a product-form series numerator.
struct NumeratorFactor {
  MultiDegree degree;
  unsigned exponent = 0;
};

/// Coefficients of prod_k (1 - t^{a_k})^{e_k} / prod_j (1 - t_j)^{f_j} by the
/// direct binomial convolution sum_{k} (-1)^{|k|} prod C(e,k) * prod C(r_j + f_j - 1, f_j - 1).
/// Independent of the factor-by-factor expansion used by estimate_series.
/// `denominators[j]` is the number of variables of weight e_j.
SeriesTrunc product_form_series(const std::vector<NumeratorFactor>& numerator,
                                const std::vector<unsigned>& denominators, int bound);

}  // namespace firstfall
