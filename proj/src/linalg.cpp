#include "firstfall/linalg.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

namespace firstfall {

namespace {

// Dense copy used by the two dense kernels.
std::vector<std::uint32_t> densify(const SparseMatrix& m) {
  std::vector<std::uint32_t> a(m.nrows() * m.ncols, 0);
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    const auto& r = m.rows[i];
    for (std::size_t k = 0; k < r.nnz(); ++k) a[i * m.ncols + r.cols[k]] = r.vals[k];
  }
  return a;
}

template <bool Parallel>
std::size_t dense_rank(const SparseMatrix& m, const FieldSpec& f) {
  const std::size_t rows = m.nrows(), cols = m.ncols;
  const std::uint64_t p = f.p();
  auto a = densify(m);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + rank * cols);
    std::uint32_t* prow = a.data() + rank * cols;
    const std::uint64_t inv = inv_mod(prow[c], f.p());
    for (std::size_t j = c; j < cols; ++j) prow[j] = static_cast<std::uint32_t>(prow[j] * inv % p);
    const auto lo = static_cast<std::ptrdiff_t>(rank + 1), hi = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static) if (Parallel)
    for (std::ptrdiff_t i = lo; i < hi; ++i) {
      std::uint32_t* row = a.data() + static_cast<std::size_t>(i) * cols;
      const std::uint64_t factor = row[c];
      if (factor == 0) continue;
      const std::uint64_t neg = p - factor;
      for (std::size_t j = c; j < cols; ++j)
        row[j] = static_cast<std::uint32_t>((row[j] + neg * prow[j]) % p);
    }
    ++rank;
  }
  return rank;
}

/// Incremental sparse echelon store shared by rank_sparse and reduced_echelon.
class SparseEliminator {
 public:
  SparseEliminator(std::size_t ncols, const FieldSpec& f)
      : p_(f.p()), pivot_of_col_(ncols, -1), acc_(ncols, 0) {}

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::vector<SparseRow>& pivots() noexcept { return pivots_; }
  const std::vector<std::int32_t>& pivot_of_col() const noexcept { return pivot_of_col_; }

  /// Reduces `row` against the current pivots; adds it if it stays nonzero.
  bool insert(const SparseRow& row) {
    if (row.empty()) return false;
    const std::uint32_t lead = row.cols.front();
    if (pivot_of_col_[lead] < 0) {
      add_pivot(row, lead);
      return true;
    }
    std::size_t lo = lead, hi = row.cols.back();
    for (std::size_t k = 0; k < row.nnz(); ++k) acc_[row.cols[k]] = row.vals[k];
    bool added = false;
    for (std::size_t c = lo; c <= hi; ++c) {
      const std::uint64_t v = acc_[c] % p_;
      if (v == 0) {
        acc_[c] = 0;
        continue;
      }
      const std::int32_t pi = pivot_of_col_[c];
      if (pi < 0) {
        SparseRow fresh;
        const std::uint64_t inv = inv_mod(static_cast<std::uint32_t>(v), p_);
        for (std::size_t j = c; j <= hi; ++j) {
          const std::uint64_t x = acc_[j] % p_;
          if (x) {
            fresh.cols.push_back(static_cast<std::uint32_t>(j));
            fresh.vals.push_back(static_cast<std::uint32_t>(x * inv % p_));
          }
        }
        pivot_of_col_[c] = static_cast<std::int32_t>(pivots_.size());
        pivots_.push_back(std::move(fresh));
        added = true;
        break;
      }
      const SparseRow& pr = pivots_[static_cast<std::size_t>(pi)];
      const std::uint64_t factor = p_ - v;
      for (std::size_t k = 0; k < pr.nnz(); ++k) acc_[pr.cols[k]] += factor * pr.vals[k];
      hi = std::max<std::size_t>(hi, pr.cols.back());
      acc_[c] = 0;
    }
    std::fill(acc_.begin() + static_cast<std::ptrdiff_t>(lo), acc_.begin() + static_cast<std::ptrdiff_t>(hi) + 1, 0);
    return added;
  }

 private:
  void add_pivot(const SparseRow& row, std::uint32_t lead) {
    SparseRow r = row;
    if (r.vals.front() != 1) {
      const std::uint64_t inv = inv_mod(r.vals.front(), p_);
      for (auto& v : r.vals) v = static_cast<std::uint32_t>(v * inv % p_);
    }
    pivot_of_col_[lead] = static_cast<std::int32_t>(pivots_.size());
    pivots_.push_back(std::move(r));
  }

  std::uint64_t p_;
  std::vector<std::int32_t> pivot_of_col_;
  std::vector<std::uint64_t> acc_;
  std::vector<SparseRow> pivots_;
};

// Rows with smaller leading column first; among equal leads, sparser first.
std::vector<std::size_t> streaming_order(const SparseMatrix& m) {
  std::vector<std::size_t> order(m.nrows());
  std::iota(order.begin(), order.end(), 0);
  auto lead = [&](std::size_t i) {
    return m.rows[i].empty() ? std::numeric_limits<std::uint32_t>::max() : m.rows[i].cols.front();
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lead(a) != lead(b)) return lead(a) < lead(b);
    return m.rows[a].nnz() < m.rows[b].nnz();
  });
  return order;
}

}  // namespace

std::size_t rank_reference(const SparseMatrix& m, const FieldSpec& f) { return dense_rank<false>(m, f); }

std::size_t rank_dense_parallel(const SparseMatrix& m, const FieldSpec& f) { return dense_rank<true>(m, f); }

std::size_t rank_sparse(const SparseMatrix& m, const FieldSpec& f, std::size_t cap) {
  const std::size_t limit = std::min(cap, m.ncols);
  if (limit == 0 || m.nrows() == 0) return 0;
  SparseEliminator elim(m.ncols, f);
  for (std::size_t i : streaming_order(m)) {
    elim.insert(m.rows[i]);
    if (elim.rank() >= limit) return limit;
  }
  return elim.rank();
}

std::vector<SparseRow> reduced_echelon(const SparseMatrix& m, const FieldSpec& f) {
  SparseEliminator elim(m.ncols, f);
  for (std::size_t i : streaming_order(m)) {
    elim.insert(m.rows[i]);
    if (elim.rank() == m.ncols) break;
  }
  auto rows = std::move(elim.pivots());
  std::sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) { return a.cols[0] < b.cols[0]; });
  std::vector<std::int32_t> pivot_at(m.ncols, -1);
  for (std::size_t i = 0; i < rows.size(); ++i) pivot_at[rows[i].cols[0]] = static_cast<std::int32_t>(i);

  // Back substitution, rightmost pivot first: later rows are already reduced.
  const std::uint64_t p = f.p();
  std::vector<std::uint64_t> acc(m.ncols, 0);
  for (std::size_t ii = rows.size(); ii-- > 0;) {
    SparseRow& r = rows[ii];
    bool touches = false;
    for (std::size_t k = 1; k < r.nnz() && !touches; ++k) touches = pivot_at[r.cols[k]] >= 0;
    if (!touches) continue;
    const std::size_t lead = r.cols[0];
    std::size_t hi = r.cols.back();
    for (std::size_t k = 0; k < r.nnz(); ++k) acc[r.cols[k]] = r.vals[k];
    for (std::size_t c = lead + 1; c <= hi; ++c) {
      const std::uint64_t v = acc[c] % p;
      acc[c] = v;
      if (v == 0 || pivot_at[c] < 0) continue;
      const SparseRow& pr = rows[static_cast<std::size_t>(pivot_at[c])];
      const std::uint64_t factor = p - v;
      for (std::size_t k = 0; k < pr.nnz(); ++k) acc[pr.cols[k]] += factor * pr.vals[k];
      hi = std::max<std::size_t>(hi, pr.cols.back());
      acc[c] = 0;
    }
    SparseRow out;
    for (std::size_t c = lead; c <= hi; ++c) {
      const std::uint64_t v = acc[c] % p;
      if (v) {
        out.cols.push_back(static_cast<std::uint32_t>(c));
        out.vals.push_back(static_cast<std::uint32_t>(v));
      }
      acc[c] = 0;
    }
    r = std::move(out);
  }
  return rows;
}

// ---------------------------------------------------------------------------

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool DenseMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b, const FieldSpec& f) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  const std::uint64_t p = f.p();
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = (s + static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, j)) % p;
      c.at(i, j) = static_cast<std::uint32_t>(s);
    }
  return c;
}

DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b, const FieldSpec& f) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix sum shapes");
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = f.add({a.at(i, j)}, {b.at(i, j)}).value;
  return c;
}

DenseMatrix mat_scale(const DenseMatrix& a, FieldElem c, const FieldSpec& f) {
  DenseMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = f.mul({a.at(i, j)}, c).value;
  return r;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

namespace {

/// In-place RREF over the first `pivot_cols` columns; returns pivot columns.
std::vector<std::size_t> rref(DenseMatrix& a, std::size_t pivot_cols, const FieldSpec& f) {
  const std::uint64_t p = f.p();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    const std::uint64_t inv = inv_mod(a.at(r, c), f.p());
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = static_cast<std::uint32_t>(a.at(r, j) * inv % p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      const std::uint64_t neg = p - a.at(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.at(i, j) = static_cast<std::uint32_t>((a.at(i, j) + neg * a.at(r, j)) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const DenseMatrix& a, const FieldSpec& f) {
  DenseMatrix w = a;
  return rref(w, w.cols(), f).size();
}

std::optional<DenseMatrix> inverse(const DenseMatrix& a, const FieldSpec& f) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  DenseMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  if (rref(aug, n, f).size() != n) return std::nullopt;
  DenseMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::vector<std::uint32_t> mat_vec(const DenseMatrix& a, const std::vector<std::uint32_t>& x, const FieldSpec& f) {
  if (a.cols() != x.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shapes");
  std::vector<std::uint32_t> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) s = (s + static_cast<std::uint64_t>(a.at(i, k)) * x[k]) % f.p();
    y[i] = static_cast<std::uint32_t>(s);
  }
  return y;
}

std::optional<std::vector<std::uint32_t>> solve(const DenseMatrix& a, const std::vector<std::uint32_t>& b,
                                                const FieldSpec& f) {
  if (a.rows() != b.size()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  DenseMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug, a.cols(), f);
  for (std::size_t i = pivots.size(); i < a.rows(); ++i)
    if (aug.at(i, a.cols()) != 0) return std::nullopt;
  std::vector<std::uint32_t> x(a.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

DenseMatrix left_kernel(const DenseMatrix& a, const FieldSpec& f) {
  // y A = 0  <=>  A^T y^T = 0
  DenseMatrix t = transpose(a);
  auto pivots = rref(t, t.cols(), f);
  const std::size_t n = t.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  DenseMatrix basis(free_cols.size(), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis.at(k, free_cols[k]) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis.at(k, pivots[r]) = f.neg({t.at(r, free_cols[k])}).value;
  }
  return basis;
}

SparseMatrix to_sparse(const DenseMatrix& a) {
  SparseMatrix m;
  m.ncols = a.cols();
  m.rows.resize(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j)) {
        m.rows[i].cols.push_back(static_cast<std::uint32_t>(j));
        m.rows[i].vals.push_back(a.at(i, j));
      }
  return m;
}

}  // namespace firstfall
