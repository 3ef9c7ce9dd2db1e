#ifndef GCA_NORMS_HPP
#define GCA_NORMS_HPP

#include <cstdint>
#include <utility>

#include "gca/algebra.hpp"
#include "gca/graded_matrix.hpp"

namespace gca {

struct NormEstimate {
  double value = 0.0;     // Rayleigh value of the final iterate: certified lower bound
  bool converged = false; // relative change over the last sweep < tol
  int iterations = 0;
  double residual = 0.0;  // last relative change
};

// Largest singular value from power iteration on A*A. Starts at the basis
// vector of index 0 (the identity slot for convolution matrices), plus 4
// seeded random restarts; the best Rayleigh value wins. The value is
// ||A v|| / ||v|| for an explicit iterate v, so it never exceeds the true
// norm, and along one run it never decreases.
NormEstimate operator_norm(const GradedMatrix& a, double tol = 1e-9, int max_iter = 10000);

// sqrt(max column sum * max row sum) of |a_ij|: cheap certified upper bound.
double operator_norm_upper(const GradedMatrix& a);

// Bracket for sup_theta |sum x(n) e^{i n theta}| over Z (rank 1). Lower bound
// from sampled points, upper bound from the derivative Lipschitz constant
// sum |n x(n)|; interval subdivision until the bracket width is <= tol.
// lower <= sup <= upper always.
std::pair<double, double> z_symbol_norm(const GroupAlgebraElement& x, double tol = 1e-6);

// Enclosure [lo, hi] with lo <= v <= hi.
struct Enclosure {
  double lo = 0.0, hi = 0.0;
};

// sum_{j > k} 1/j^2: pi^2/6 minus a partial sum, intersected with the rational
// bounds 1/(k+1) < tail < 1/k.
Enclosure inv_square_tail(int k);

// kappa^2 = sum_{n in Z} (1+|n|)^{-2} = pi^2/3 - 1; same enclosure treatment.
Enclosure kappa_squared();

}  // namespace gca

#endif
