#include "gca/graded_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "gca/errors.hpp"

namespace gca {

GradedMatrix::GradedMatrix(int n, std::vector<int> levels)
    : n_(n), levels_(std::move(levels)), rows_(n) {
  if (n < 0 || static_cast<int>(levels_.size()) != n)
    throw UsageError("graded matrix needs one level per index");
  for (int l : levels_)
    if (l < 0) throw UsageError("levels must be nonnegative");
}

std::complex<double> GradedMatrix::get(int i, int j) const {
  const auto& row = rows_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Entry& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == j) return it->second;
  return 0.0;
}

void GradedMatrix::set(int i, int j, std::complex<double> v) {
  auto& row = rows_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Entry& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == j) {
    if (v == std::complex<double>(0.0))
      row.erase(it);
    else
      it->second = v;
  } else if (v != std::complex<double>(0.0)) {
    row.insert(it, {j, v});
  }
}

void GradedMatrix::add(int i, int j, std::complex<double> v) {
  auto& row = rows_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Entry& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == j) {
    it->second += v;
    if (it->second == std::complex<double>(0.0)) row.erase(it);
  } else if (v != std::complex<double>(0.0)) {
    row.insert(it, {j, v});
  }
}

std::size_t GradedMatrix::nonzeros() const {
  std::size_t c = 0;
  for (const auto& row : rows_) c += row.size();
  return c;
}

GradedMatrix& GradedMatrix::operator*=(std::complex<double> c) {
  if (c == std::complex<double>(0.0)) {
    for (auto& row : rows_) row.clear();
    return *this;
  }
  for (auto& row : rows_)
    for (auto& e : row) e.second *= c;
  return *this;
}

GradedMatrix& GradedMatrix::operator-=(const GradedMatrix& other) {
  if (other.n_ != n_) throw UsageError("matrix dimensions differ");
  for (int i = 0; i < n_; ++i)
    for (const auto& [j, v] : other.rows_[i]) add(i, j, -v);
  return *this;
}

void GradedMatrix::shift_diagonal(std::complex<double> c) {
  for (int i = 0; i < n_; ++i) add(i, i, c);
}

void GradedMatrix::apply(const std::complex<double>* x, std::complex<double>* y) const {
  for (int i = 0; i < n_; ++i) {
    std::complex<double> acc = 0.0;
    for (const auto& [j, v] : rows_[i]) acc += v * x[j];
    y[i] = acc;
  }
}

void GradedMatrix::apply_adjoint(const std::complex<double>* x,
                                 std::complex<double>* y) const {
  std::memset(y, 0, sizeof(std::complex<double>) * n_);
  for (int i = 0; i < n_; ++i) {
    const std::complex<double> xi = x[i];
    for (const auto& [j, v] : rows_[i]) y[j] += std::conj(v) * xi;
  }
}

void GradedMatrix::apply_block(const std::complex<double>* X, std::complex<double>* Y,
                               int cols) const {
  for (int i = 0; i < n_; ++i) {
    std::complex<double>* yi = Y + static_cast<std::size_t>(i) * cols;
    for (int c = 0; c < cols; ++c) yi[c] = 0.0;
    for (const auto& [j, v] : rows_[i]) {
      const std::complex<double>* xj = X + static_cast<std::size_t>(j) * cols;
      for (int c = 0; c < cols; ++c) yi[c] += v * xj[c];
    }
  }
}

void GradedMatrix::apply_adjoint_block(const std::complex<double>* X,
                                       std::complex<double>* Y, int cols) const {
  std::memset(Y, 0, sizeof(std::complex<double>) * n_ * cols);
  for (int i = 0; i < n_; ++i) {
    const std::complex<double>* xi = X + static_cast<std::size_t>(i) * cols;
    for (const auto& [j, v] : rows_[i]) {
      std::complex<double>* yj = Y + static_cast<std::size_t>(j) * cols;
      const std::complex<double> cv = std::conj(v);
      for (int c = 0; c < cols; ++c) yj[c] += cv * xi[c];
    }
  }
}

double GradedMatrix::max_abs_entry_diff(const GradedMatrix& other) const {
  if (other.n_ != n_) throw UsageError("matrix dimensions differ");
  double m = 0;
  for (int i = 0; i < n_; ++i) {
    // Merge the two sorted rows.
    const auto &a = rows_[i], &b = other.rows_[i];
    std::size_t p = 0, q = 0;
    while (p < a.size() || q < b.size()) {
      if (q == b.size() || (p < a.size() && a[p].first < b[q].first)) {
        m = std::max(m, std::abs(a[p].second));
        ++p;
      } else if (p == a.size() || b[q].first < a[p].first) {
        m = std::max(m, std::abs(b[q].second));
        ++q;
      } else {
        m = std::max(m, std::abs(a[p].second - b[q].second));
        ++p, ++q;
      }
    }
  }
  return m;
}

double GradedMatrix::max_abs_entry() const {
  double m = 0;
  for (const auto& row : rows_)
    for (const auto& [j, v] : row) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace gca
