#include "oim/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace oim {

namespace {

struct Triplet {
  std::size_t row;
  std::size_t col;
  double value;
};

}  // namespace

CouplingMatrix CouplingMatrix::from_pairs(std::size_t n, std::span<const CouplingEntry> pairs,
                                          StoragePolicy policy) {
  std::vector<Triplet> triplets;
  triplets.reserve(pairs.size() * 2);
  for (const CouplingEntry& p : pairs) {
    if (p.i >= n || p.j >= n)
      throw std::invalid_argument("coupling (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                  ") is outside a " + std::to_string(n) + "-oscillator matrix");
    if (p.i == p.j)
      throw std::invalid_argument("self-coupling on oscillator " + std::to_string(p.i));
    if (!std::isfinite(p.value))
      throw std::invalid_argument("non-finite coupling value");
    if (p.value == 0.0) continue;
    triplets.push_back({p.i, p.j, p.value});
    triplets.push_back({p.j, p.i, p.value});
  }
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t k = 1; k < triplets.size(); ++k)
    if (triplets[k].row == triplets[k - 1].row && triplets[k].col == triplets[k - 1].col)
      throw std::invalid_argument("coupling pair (" + std::to_string(triplets[k].row) + "," +
                                  std::to_string(triplets[k].col) + ") given twice");

  CouplingMatrix m;
  m.n_ = n;
  m.nnz_ = triplets.size();
  m.row_ptr_.assign(n + 1, 0);
  m.cols_.reserve(triplets.size());
  m.vals_.reserve(triplets.size());
  for (const Triplet& t : triplets) {
    ++m.row_ptr_[t.row + 1];
    m.cols_.push_back(t.col);
    m.vals_.push_back(t.value);
  }
  for (std::size_t r = 0; r < n; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];

  StorageKind kind = StorageKind::Sparse;
  if (policy == StoragePolicy::Dense) {
    kind = StorageKind::Dense;
  } else if (policy == StoragePolicy::Auto && n > 0) {
    const double density = static_cast<double>(m.nnz_) / (static_cast<double>(n) * n);
    if (density > kDenseThreshold) kind = StorageKind::Dense;
  }
  return kind == StorageKind::Dense ? m.with_storage(StorageKind::Dense) : m;
}

double CouplingMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_)
    throw std::out_of_range("coupling index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range");
  if (kind_ == StorageKind::Dense) return dense_[i * n_ + j];
  const auto first = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
  const auto last = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
  const auto it = std::lower_bound(first, last, j);
  return (it != last && *it == j) ? vals_[static_cast<std::size_t>(it - cols_.begin())] : 0.0;
}

double CouplingMatrix::row_abs_sum(std::size_t i) const {
  double s = 0.0;
  for_each_in_row(i, [&](std::size_t, double w) { s += std::abs(w); });
  return s;
}

double CouplingMatrix::max_row_abs_sum() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i) best = std::max(best, row_abs_sum(i));
  return best;
}

std::vector<CouplingEntry> CouplingMatrix::pairs() const {
  std::vector<CouplingEntry> out;
  out.reserve(nnz_ / 2);
  for (std::size_t i = 0; i < n_; ++i)
    for_each_in_row(i, [&](std::size_t j, double w) {
      if (i < j) out.push_back({i, j, w});
    });
  return out;
}

CouplingMatrix CouplingMatrix::with_storage(StorageKind kind) const {
  if (kind == kind_) return *this;
  CouplingMatrix m;
  m.n_ = n_;
  m.nnz_ = nnz_;
  m.kind_ = kind;
  if (kind == StorageKind::Dense) {
    m.dense_.assign(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
        m.dense_[i * n_ + cols_[k]] = vals_[k];
  } else {
    m.row_ptr_.assign(n_ + 1, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const double w = dense_[i * n_ + j];
        if (w == 0.0) continue;
        m.cols_.push_back(j);
        m.vals_.push_back(w);
      }
      m.row_ptr_[i + 1] = m.cols_.size();
    }
  }
  return m;
}

}  // namespace oim
