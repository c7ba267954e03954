#include "firstfall/macaulay.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <unordered_map>

namespace firstfall {

std::size_t rank_with(RankKernel kernel, const SparseMatrix& m, const FieldSpec& f, std::size_t cap) {
  switch (kernel) {
    case RankKernel::Reference: return std::min(cap, rank_reference(m, f));
    case RankKernel::DenseParallel: return std::min(cap, rank_dense_parallel(m, f));
    case RankKernel::Sparse: return rank_sparse(m, f, cap);
  }
  return 0;
}

namespace {

bool within_cap(const Monomial& m, std::optional<int> cap) {
  if (!cap) return true;
  return std::all_of(m.exps.begin(), m.exps.end(), [&](std::uint16_t e) { return e < *cap; });
}

}  // namespace

MacaulayView macaulay_matrix(const SystemInstance& sys, const MultiDegree& d, std::optional<int> exp_cap) {
  const auto degs = sys.degrees();
  MacaulayView view;
  view.target = d;
  view.col_index = monomial_basis(sys.ring, d, exp_cap);
  view.matrix.ncols = view.col_index.size();

  std::unordered_map<Monomial, std::uint32_t, MonomialHash> col_of;
  col_of.reserve(view.col_index.size() * 2);
  for (std::size_t c = 0; c < view.col_index.size(); ++c) col_of.emplace(view.col_index[c], static_cast<std::uint32_t>(c));

  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
  for (std::size_t i = 0; i < sys.polys.size(); ++i) {
    const MultiDegree rest = d - degs[i];
    if (!rest.is_nonneg()) continue;
    for (auto& m : monomial_basis(sys.ring, rest, exp_cap)) {
      entries.clear();
      for (const auto& [mono, c] : sys.polys[i].terms()) {
        Monomial prod = mono * m;
        if (!within_cap(prod, exp_cap)) continue;
        entries.emplace_back(col_of.at(prod), c.value);
      }
      std::sort(entries.begin(), entries.end());
      SparseRow row;
      row.cols.reserve(entries.size());
      row.vals.reserve(entries.size());
      for (auto [col, val] : entries) {
        row.cols.push_back(col);
        row.vals.push_back(val);
      }
      view.matrix.rows.push_back(std::move(row));
      view.row_index.push_back({i, std::move(m)});
    }
  }
  return view;
}

MacaulayView macaulay_rank(const SystemInstance& sys, const MultiDegree& d, std::optional<int> exp_cap,
                           RankKernel kernel) {
  MacaulayView view = macaulay_matrix(sys, d, exp_cap);
  view.rank = rank_with(kernel, view.matrix, sys.ring.field());
  view.kernel_dim = view.rows() - view.rank;
  return view;
}

std::size_t ideal_dim(const SystemInstance& sys, const MultiDegree& d, std::optional<int> exp_cap) {
  return macaulay_rank(sys, d, exp_cap).rank;
}

std::size_t quotient_dim(const SystemInstance& sys, const MultiDegree& d, std::optional<int> exp_cap) {
  auto view = macaulay_rank(sys, d, exp_cap);
  return view.cols() - view.rank;
}

std::size_t quotient_dim_total(const SystemInstance& sys, int t) {
  std::size_t sum = 0;
  for (const auto& d : multidegrees_of_total(sys.ring.s(), t)) sum += quotient_dim(sys, d);
  return sum;
}

HilbertTable quotient_hilbert(const SystemInstance& sys, int bound) {
  sys.degrees();  // homogeneity check up front
  HilbertTable table;
  for (const auto& d : multidegrees_up_to(sys.ring.s(), bound))
    table.emplace(d, static_cast<long long>(quotient_dim(sys, d)));
  return table;
}

DegreeAnswer dreg_actual(const SystemInstance& sys, int bound) {
  sys.degrees();
  for (int t = 0; t <= bound; ++t)
    if (quotient_dim_total(sys, t) == 0) return DegreeAnswer::found(t, bound);
  return DegreeAnswer::not_found(bound);
}

void dump_matrix(std::ostream& os, const MacaulayView& view, const FieldSpec& f) {
  os << view.rows() << ' ' << view.cols() << ' ' << f.p() << '\n';
  std::vector<std::uint32_t> dense(view.cols());
  for (const auto& row : view.matrix.rows) {
    std::fill(dense.begin(), dense.end(), 0);
    for (std::size_t k = 0; k < row.nnz(); ++k) dense[row.cols[k]] = row.vals[k];
    for (std::size_t c = 0; c < dense.size(); ++c) os << (c ? " " : "") << dense[c];
    os << '\n';
  }
}

}  // namespace firstfall
