#ifndef GCA_SCHUR_HPP
#define GCA_SCHUR_HPP

#include <map>

#include <nlohmann/json_fwd.hpp>

#include "gca/graded_matrix.hpp"
#include "gca/norms.hpp"
#include "gca/report.hpp"
#include "gca/rng.hpp"

namespace gca {

// Finitely supported phi: Z -> C acting entrywise through level differences.
struct Symbol {
  std::map<long long, Complex> phi;

  Complex at(long long m) const;
  double l2_norm() const;

  // JSON object: integer string -> [re, im].
  nlohmann::json to_json() const;
  static Symbol from_json(const nlohmann::json& j);
};

// Keeps entries with l_i - l_j = k. An orthogonal family of contractions:
// rho_k . rho_k = rho_k and sum_k rho_k = id on any finite graded matrix.
GradedMatrix rho_k(const GradedMatrix& a, long long k);

// Entry (i, j) scaled by phi(l_i - l_j). ||Lambda_phi|| <= ||phi||_2 on
// operator norm, which is the bound every check below leans on.
GradedMatrix schur_apply(const Symbol& phi, const GradedMatrix& a);

// Entries with l_i != l_j, i.e. a - rho_0(a).
GradedMatrix off_diagonal_part(const GradedMatrix& a);
// Entries with |l_i - l_j| > k, i.e. a - sum_{|i| <= k} rho_i(a).
GradedMatrix outside_band(const GradedMatrix& a, long long k);

// sum_{k != 0} (1/k) rho_k([D, a]), which reproduces a - rho_0(a) exactly at
// finite dimension; the multiply-then-divide round trip is the only source of
// floating error.
GradedMatrix reconstruct_offdiagonal(const GradedMatrix& a);

// lhs = estimated ||a - sum_{|i|<=k} rho_i(a)||,
// rhs = estimated ||[D, a]|| * sqrt(2 * tail), tail = sum_{j>k} j^-2 upper
// enclosure. Reports the closed-form constants pi/sqrt(3) (k = 0) and
// sqrt(2/k) alongside.
BoundReport diagonal_bound_check(const GradedMatrix& a, int k, double tol = 1e-9,
                                 std::uint64_t seed = 0);

// lhs = estimated ||Lambda_phi(a)||, rhs = ||phi||_2 * upper bound of ||a||
// (full SVD below dimension 256, row/column enclosure above).
BoundReport schur_norm_check(const Symbol& phi, const GradedMatrix& a, double tol = 1e-9,
                             std::uint64_t seed = 0);

// Random test matrix: levels uniform in 0..level_max, entries complex
// Gaussian scaled by 1/sqrt(dim).
GradedMatrix random_graded(int dim, int level_max, Rng& rng);

}  // namespace gca

#endif
