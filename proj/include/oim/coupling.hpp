#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "oim/types.hpp"

namespace oim {

enum class StorageKind { Dense, Sparse };

/// How a CouplingMatrix picks its storage.
enum class StoragePolicy { Auto, Dense, Sparse };

/// Off-diagonal nnz / n^2 above which Auto picks dense storage.
inline constexpr double kDenseThreshold = 0.25;

/// One symmetric pair (i, j) with i != j; the mirror entry is implied.
struct CouplingEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  double value = 0.0;
};

/// Symmetric interaction matrix J with zero diagonal.
///
/// Stored either as a flat row-major n*n array or as compressed sparse rows
/// holding both (i,j) and (j,i). Both layouts report identical values for
/// every (i,j); row iteration visits columns in increasing order in either
/// case, so row sums accumulate in the same order.
class CouplingMatrix {
 public:
  CouplingMatrix() = default;

  /// Builds from one entry per unordered pair. Zero values are dropped.
  /// Throws std::invalid_argument on self-coupling, out-of-range index or a
  /// pair given twice.
  static CouplingMatrix from_pairs(std::size_t n, std::span<const CouplingEntry> pairs,
                                   StoragePolicy policy = StoragePolicy::Auto);

  std::size_t size() const { return n_; }
  StorageKind storage() const { return kind_; }
  /// Number of stored off-diagonal nonzeros, counting (i,j) and (j,i).
  std::size_t nonzeros() const { return nnz_; }

  double at(std::size_t i, std::size_t j) const;

  /// Sum over j of |J_ij|.
  double row_abs_sum(std::size_t i) const;
  double max_row_abs_sum() const;

  /// Upper-triangle nonzero pairs (i < j) in row-major order.
  std::vector<CouplingEntry> pairs() const;

  CouplingMatrix with_storage(StorageKind kind) const;

  /// Calls f(j, J_ij) for every nonzero in row i, j ascending.
  template <class F>
  void for_each_in_row(std::size_t i, F&& f) const {
    if (kind_ == StorageKind::Dense) {
      const double* row = dense_.data() + i * n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (row[j] != 0.0) f(j, row[j]);
    } else {
      for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) f(cols_[k], vals_[k]);
    }
  }

  /// Returns (sum_j J_ij * a_j, sum_j J_ij * b_j) for row i.
  ///
  /// This is the inner loop of the step kernel. Dense rows are summed over all
  /// columns including zeros; adding +0.0 leaves a partial sum unchanged, so the
  /// result is bit-identical to the sparse path.
  std::pair<double, double> row_dot2(std::size_t i, const double* a, const double* b) const {
    double sa = 0.0;
    double sb = 0.0;
    if (kind_ == StorageKind::Dense) {
      const double* row = dense_.data() + i * n_;
      for (std::size_t j = 0; j < n_; ++j) {
        sa += row[j] * a[j];
        sb += row[j] * b[j];
      }
    } else {
      for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
        const std::size_t j = cols_[k];
        sa += vals_[k] * a[j];
        sb += vals_[k] * b[j];
      }
    }
    return {sa, sb};
  }

 private:
  std::size_t n_ = 0;
  std::size_t nnz_ = 0;
  StorageKind kind_ = StorageKind::Sparse;
  std::vector<double> dense_;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> cols_;
  std::vector<double> vals_;
};

}  // namespace oim
