#ifndef GCA_HAAGERUP_HPP
#define GCA_HAAGERUP_HPP

#include <map>

#include "gca/algebra.hpp"
#include "gca/report.hpp"

namespace gca {

// Function supported on one sphere {g : l(g) = degree}.
struct SphereFunction {
  GroupSpec group;
  int degree = 0;
  std::map<GroupElement, Complex> values;

  double l2_norm() const;

  static SphereFunction from_element(const GroupAlgebraElement& x, int degree);
  GroupAlgebraElement as_element() const;
};

struct RDParams {
  double C = 2.0;
  double s = 2.0;
};

// ||(b * eta) restricted to sphere (deg b + deg eta)||_2 <= ||b||_2 ||eta||_2.
// The sphere-to-sphere convolution estimate behind everything else here.
BoundReport sphere_convolution_check(const SphereFunction& b, const SphereFunction& eta,
                                     double tol = 1e-9, std::uint64_t seed = 0);

// ||P_L lambda(x) P_L|| <= C (sum (1+l(g))^{2s} |x(g)|^2)^{1/2}. Free groups
// satisfy this with C = 2, s = 2; Z with C = kappa, s = 1.
BoundReport rd_check(const GroupAlgebraElement& x, const RDParams& params, int ball_radius,
                     double tol = 1e-9, std::uint64_t seed = 0);

// ||x||_1 <= kappa (sum (1+|n|)^2 |x(n)|^2)^{1/2} on Z, kappa^2 = pi^2/3 - 1,
// with the upper enclosure of kappa on the rhs.
BoundReport z_l1_check(const GroupAlgebraElement& x, double tol = 1e-9,
                       std::uint64_t seed = 0);

struct DominationResult {
  BoundReport pointwise;  // lhs = worst violation of the entrywise domination
  BoundReport sphere_l2;  // ||p_m lambda(x) xi||_2 vs pi/(2 sqrt 6) * weighted l1
};

// Splits x * xi by prefix overlap: |x*xi(g)| <= sum_k (b_k * eta_{m-k})(g) on
// sphere m, where b_k collects l2 mass of x over length-2k elements extending
// the k-prefix of g (b_m(g) = |x(g)| on the top sphere) and eta_{m-k} collects
// the matching l2 mass of xi. Requires x(e) = 0.
DominationResult domination_check(const GroupAlgebraElement& x, const SphereFunction& xi,
                                  double tol = 1e-9, std::uint64_t seed = 0);

// Scales x so the first-order weighted-l1 commutator bound is 1, then checks
// the estimated ||lambda(x) - x(e) I|| at truncation against 2.5. Also reports
// the rho_0 block against pi/(2 sqrt 6). Rejects scalar x.
struct FreeDiameterResult {
  BoundReport main;
  BoundReport rho0;
};
FreeDiameterResult free_diameter_check(const GroupAlgebraElement& x, int ball_radius,
                                       double tol = 1e-9, std::uint64_t seed = 0);

}  // namespace gca

#endif
