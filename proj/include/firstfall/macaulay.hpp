#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "firstfall/linalg.hpp"
#include "firstfall/ring.hpp"
#include "firstfall/series.hpp"

namespace firstfall {

enum class RankKernel { Reference, DenseParallel, Sparse };

std::size_t rank_with(RankKernel kernel, const SparseMatrix& m, const FieldSpec& f, std::size_t cap = kNoRankCap);

struct MacaulayRow {
  std::size_t gen = 0;
  Monomial multiplier;
};

/// Matrix of all monomial multiples m*h_i landing in degree `target`.
/// Columns follow monomial_basis order; rows are (generator, multiplier)
/// with generators ascending and multipliers in monomial_basis order.
struct MacaulayView {
  MultiDegree target;
  std::vector<MacaulayRow> row_index;
  std::vector<Monomial> col_index;
  SparseMatrix matrix;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;

  std::size_t rows() const noexcept { return row_index.size(); }
  std::size_t cols() const noexcept { return col_index.size(); }
};

/// Builds the Macaulay matrix without computing its rank. With exp_cap the
/// products are taken in F[x]/(x_1^cap, ..., x_n^cap).
MacaulayView macaulay_matrix(const SystemInstance& sys, const MultiDegree& d,
                             std::optional<int> exp_cap = std::nullopt);

MacaulayView macaulay_rank(const SystemInstance& sys, const MultiDegree& d, std::optional<int> exp_cap = std::nullopt,
                           RankKernel kernel = RankKernel::Sparse);

/// dim <h_1..h_m>_d.
std::size_t ideal_dim(const SystemInstance& sys, const MultiDegree& d, std::optional<int> exp_cap = std::nullopt);

/// dim (S/<h>)_d.
std::size_t quotient_dim(const SystemInstance& sys, const MultiDegree& d, std::optional<int> exp_cap = std::nullopt);

/// dim (S/<h>)_t in the total-degree view: sum of quotient_dim over |d| = t.
std::size_t quotient_dim_total(const SystemInstance& sys, int t);

using HilbertTable = std::map<MultiDegree, long long, DeglexLess>;

/// Hilbert function of S/<h> at every multidegree with |d| <= bound.
HilbertTable quotient_hilbert(const SystemInstance& sys, int bound);

/// Smallest total degree at which the quotient vanishes.
DegreeAnswer dreg_actual(const SystemInstance& sys, int bound);

/// Debug dump: "rows cols p", then one dense row per line.
void dump_matrix(std::ostream& os, const MacaulayView& view, const FieldSpec& f);

}  // namespace firstfall
