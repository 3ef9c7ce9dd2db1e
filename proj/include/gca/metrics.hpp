#ifndef GCA_METRICS_HPP
#define GCA_METRICS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "gca/algebra.hpp"
#include "gca/report.hpp"

namespace gca {

// Vector state phi(a) = <lambda(a) xi, xi> for a unit l2 vector xi supported
// in a ball. Evaluation against finitely supported elements is exact sparse
// convolution; ball_radius declares how far the vector is allowed to reach.
struct VectorState {
  GroupSpec group;
  int ball_radius = 0;
  std::map<GroupElement, Complex> amplitude;

  double l2_norm() const;
  long long vector_radius() const;
  void normalize();

  // {"ball_radius": L, "vector": {word: [re, im]}}. Normalized on load;
  // original_norm reports what the file contained (warn if off by > 1e-8).
  static VectorState from_json(GroupSpec spec, const nlohmann::json& j,
                               double* original_norm = nullptr);
  nlohmann::json to_json() const;
};

// State on the d x d matrix algebra: a trace-1 PSD density.
struct DensityState {
  Eigen::MatrixXcd rho;
};

struct SeminormSpec {
  GroupSpec group;
  int k = 1;  // commutator order
};

// Group form: element g_n carries weight 1/n (1-based). Matrix form: explicit
// hermitian test matrices. Exactly one of the two is populated.
struct MetricSet {
  GroupSpec group;
  std::vector<GroupElement> elements;
  std::vector<Eigen::MatrixXcd> matrices;

  static MetricSet from_json(GroupSpec spec, const nlohmann::json& j);
};

// (certified lower estimate, weighted-l1 upper bound) for ||delta^k lambda(x)||.
std::pair<double, double> seminorm_bounds(const GroupAlgebraElement& x, int k,
                                          int ball_radius);

// Coefficient inequality (sum l(g)^{2k} |x(g)|^2)^{1/2} <= lower seminorm
// estimate. lhs is exactly the identity-column norm of the commutator matrix,
// so the power iteration (which starts there) can never fall below it.
BoundReport coefficient_check(const GroupAlgebraElement& x, int k, int ball_radius,
                              double tol = 1e-9, std::uint64_t seed = 0);

// Tail estimate: || sum_{l(g) >= n} x(g) lambda_g || at truncation against
// C 2^s n^{s-k} * (upper k-seminorm). Requires k > s.
BoundReport tail_check(const GroupAlgebraElement& x, int n, int k, double C, double s,
                       int ball_radius, double tol = 1e-9, std::uint64_t seed = 0);

// Exact phi(x); requires ball_radius >= vector radius + support radius.
Complex evaluate_state(const VectorState& phi, const GroupAlgebraElement& x,
                       int ball_radius);

// Best |phi(x) - psi(x)| over x supported in ball(R) \ {e} scaled so the
// upper k-seminorm is 1 (sound lower bound of the metric distance).
// Coordinate ascent over real/imaginary parts, 50 sweeps, `trials` seeded
// restarts; deterministic and symmetric in (phi, psi) for fixed (trials, seed).
double distance_lower_bound(const VectorState& phi, const VectorState& psi,
                            const SeminormSpec& spec, int support_radius, int trials,
                            std::uint64_t seed);

// Best spectral spread lambda_max - lambda_min of compressed self-adjoint
// lambda(x) over the canonical generator candidate plus random self-adjoint
// draws, each scaled to upper k-seminorm 1. Certified via shifted norm
// estimates, so the result is a true diameter lower bound.
double diameter_lower_bound(const SeminormSpec& spec, int support_radius, int ball_radius,
                            int trials, std::uint64_t seed);

// Traceless hermitian F with trace norm <= 2 splits as rho - sigma for states
// rho, sigma: positive/negative parts padded by ((1 - tr F+)/tr F+) F+.
// F = 0 maps to (I/d, I/d).
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> jordan_decompose(const Eigen::MatrixXcd& f);

// d_K distance. Group form: max_n |(phi - psi)(lambda_{g_n})| / n, the hull
// supremum in closed form. Matrix form: max_i |tr((rho_phi - rho_psi) k_i)|.
double metric_set_distance(const VectorState& phi, const VectorState& psi,
                           const MetricSet& k);
double metric_set_distance(const DensityState& phi, const DensityState& psi,
                           const MetricSet& k);

}  // namespace gca

#endif
