#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "firstfall/field.hpp"

namespace firstfall {

/// Row of a sparse matrix over F_p: strictly increasing column indices with
/// nonzero values in [1, p).
struct SparseRow {
  std::vector<std::uint32_t> cols;
  std::vector<std::uint32_t> vals;

  std::size_t nnz() const noexcept { return cols.size(); }
  bool empty() const noexcept { return cols.empty(); }
  friend bool operator==(const SparseRow&, const SparseRow&) = default;
};

struct SparseMatrix {
  std::size_t ncols = 0;
  std::vector<SparseRow> rows;

  std::size_t nrows() const noexcept { return rows.size(); }
};

inline constexpr std::size_t kNoRankCap = std::numeric_limits<std::size_t>::max();

// Rank kernels. All three return the same value for every input; they differ
// only in cost profile.

/// Textbook dense Gaussian elimination, sequential. Pivot = first row with a
/// nonzero entry in the leftmost remaining column. Reference for tests.
std::size_t rank_reference(const SparseMatrix& m, const FieldSpec& f);

/// Same elimination as rank_reference with the row updates below each pivot
/// distributed over OpenMP threads. Bit-identical echelon form.
std::size_t rank_dense_parallel(const SparseMatrix& m, const FieldSpec& f);

/// Streaming sparse elimination: rows are reduced one at a time against
/// normalized sparse pivot rows in a dense accumulator. Stops early once the
/// rank reaches `cap` or the column count.
std::size_t rank_sparse(const SparseMatrix& m, const FieldSpec& f, std::size_t cap = kNoRankCap);

/// Reduced row echelon basis of the row space, sorted by leading column.
/// Every returned row has leading coefficient 1 and zeros in all other
/// pivot columns.
std::vector<SparseRow> reduced_echelon(const SparseMatrix& m, const FieldSpec& f);

/// Dense matrix over F_p, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<std::uint32_t>& data() const noexcept { return data_; }

  bool is_symmetric() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b, const FieldSpec& f);
DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b, const FieldSpec& f);
DenseMatrix mat_scale(const DenseMatrix& a, FieldElem c, const FieldSpec& f);
DenseMatrix transpose(const DenseMatrix& a);
std::size_t rank(const DenseMatrix& a, const FieldSpec& f);
std::optional<DenseMatrix> inverse(const DenseMatrix& a, const FieldSpec& f);
std::vector<std::uint32_t> mat_vec(const DenseMatrix& a, const std::vector<std::uint32_t>& x,
                                   const FieldSpec& f);

/// Some solution of A x = b (free variables set to zero), or nullopt.
std::optional<std::vector<std::uint32_t>> solve(const DenseMatrix& a, const std::vector<std::uint32_t>& b,
                                                const FieldSpec& f);

/// Basis of the left kernel {y : y A = 0}, one basis vector per row; row k
/// has a 1 at the k-th free coordinate and 0 at the other free coordinates.
DenseMatrix left_kernel(const DenseMatrix& a, const FieldSpec& f);

SparseMatrix to_sparse(const DenseMatrix& a);

}  // namespace firstfall
