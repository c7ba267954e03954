#pragma once

#include <vector>

#include "firstfall/macaulay.hpp"
#include "firstfall/ring.hpp"
#include "firstfall/series.hpp"

namespace firstfall {

/// Syzygy dimensions of a homogeneous system at one multidegree.
/// Invariant: h1_dim = syz_dim - ksyz_dim >= 0.
struct SyzygyProfile {
  MultiDegree degree;
  long long syz_dim = 0;
  long long ksyz_dim = 0;
  long long h1_dim = 0;

  friend bool operator==(const SyzygyProfile&, const SyzygyProfile&) = default;
};

/// dim Syz(h)_d = sum_i dim S_{d - d_i} - rank phi_d.
long long syz_dim(const SystemInstance& sys, const MultiDegree& d);

/// Rank of the span of all monomial multiples of the Koszul syzygies pi_ij
/// in syzygy degree d. `cap` bounds the elimination (KSyz is inside Syz).
long long ksyz_dim(const SystemInstance& sys, const MultiDegree& d, std::size_t cap = kNoRankCap);

SyzygyProfile syzygy_profile(const SystemInstance& sys, const MultiDegree& d);

/// Profiles of every multidegree with |d| <= bound, deglex order.
std::vector<SyzygyProfile> syzygy_table(const SystemInstance& sys, int bound);

/// First total degree at which Syz != KSyz (deglex scan up to `bound`).
DegreeAnswer dff_prime(const SystemInstance& sys, int bound);
/// Deglex-first multidegree at which Syz != KSyz.
MultiDegreeAnswer dff_prime_ordered(const SystemInstance& sys, int bound);

/// First fall degree over B = F_q[x]/(x_1^q, ..., x_n^q), q = field prime,
/// in the standard grading. Generators must share one total degree d0.
DegreeAnswer dff_truncated(const SystemInstance& sys, int bound);

/// Per-degree dimensions over B used by dff_truncated.
struct TruncatedProfile {
  int degree = 0;
  long long syz_dim = 0;
  long long tsyz_dim = 0;
};
TruncatedProfile truncated_profile(const SystemInstance& sys, int d);

/// True iff every x h_i: (S/<h_1..h_{i-1}>)_{d0 - d_i} -> (S/<h_1..h_{i-1}>)_{d0}
/// is injective for all d0 deglex-below-or-equal d.
bool regular_up_to(const SystemInstance& sys, const MultiDegree& d);
/// Same with every d0 of total degree <= t (the standard-grading view).
bool regular_up_to_total(const SystemInstance& sys, int t);

/// Per-multidegree predicates along the deglex scan up to `bound`. The
/// prefix versions of the three predicates are the cumulative ANDs.
struct RegularityScan {
  std::vector<MultiDegree> degrees;
  std::vector<bool> injective;      ///< all multiplication maps injective at d
  std::vector<bool> hilbert_match;  ///< quotient dimension == series coefficient at d
  std::vector<bool> h1_zero;        ///< Syz_d == KSyz_d
};
RegularityScan regularity_scan(const SystemInstance& sys, int bound);

enum class SemiRegularity { True, False, UnknownAboveBound };
std::string_view to_string(SemiRegularity v);

/// Standard-grading semi-regularity: regular up to D_reg - 1.
SemiRegularity is_semiregular(const SystemInstance& sys, int bound);

/// D_reg of the system's collapsed (standard-grading) series.
DegreeAnswer series_dreg(const SystemInstance& sys, int bound);

}  // namespace firstfall
