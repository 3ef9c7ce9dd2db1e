#ifndef GCA_GRADED_MATRIX_HPP
#define GCA_GRADED_MATRIX_HPP

#include <complex>
#include <utility>
#include <vector>

namespace gca {

// Square matrix carrying a nonnegative integer level per index. The level
// vector is the finite stand-in for the grading H = sum H_m; level differences
// drive the Dirac commutator and every Schur-multiplier operation here.
//
// Storage is sparse rows sorted by column (convolution rows hold at most
// |support| entries). Norm routines densify below dimension 256.
class GradedMatrix {
 public:
  using Entry = std::pair<int, std::complex<double>>;

  GradedMatrix() = default;
  GradedMatrix(int n, std::vector<int> levels);

  int dim() const { return n_; }
  const std::vector<int>& levels() const { return levels_; }
  const std::vector<std::vector<Entry>>& rows() const { return rows_; }

  std::complex<double> get(int i, int j) const;
  // Insert-or-overwrite; rows stay sorted. Exact zeros are dropped.
  void set(int i, int j, std::complex<double> v);
  void add(int i, int j, std::complex<double> v);

  std::size_t nonzeros() const;

  GradedMatrix& operator*=(std::complex<double> c);
  GradedMatrix& operator-=(const GradedMatrix& other);
  // A + c I on the diagonal.
  void shift_diagonal(std::complex<double> c);

  // y = A x and y = A* x over raw buffers of length dim.
  void apply(const std::complex<double>* x, std::complex<double>* y) const;
  void apply_adjoint(const std::complex<double>* x, std::complex<double>* y) const;

  // Blocked variants: X and Y are dim x cols row-major.
  void apply_block(const std::complex<double>* X, std::complex<double>* Y, int cols) const;
  void apply_adjoint_block(const std::complex<double>* X, std::complex<double>* Y,
                           int cols) const;

  double max_abs_entry_diff(const GradedMatrix& other) const;
  double max_abs_entry() const;

 private:
  int n_ = 0;
  std::vector<int> levels_;
  std::vector<std::vector<Entry>> rows_;
};

}  // namespace gca

#endif
