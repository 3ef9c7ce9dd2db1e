#include "gca/haagerup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include <nlohmann/json.hpp>

#include "gca/errors.hpp"
#include "gca/norms.hpp"
#include "gca/operators.hpp"
#include "gca/schur.hpp"

namespace gca {

namespace {

constexpr double kRho0Constant = 0.6412749150809320;  // pi / (2 sqrt 6)

std::vector<std::int8_t> prefix_letters(const GroupElement& g, int k) {
  return {g.letters().begin(), g.letters().begin() + k};
}

std::vector<std::int8_t> suffix_letters(const GroupElement& g, int k) {
  return {g.letters().end() - k, g.letters().end()};
}

}  // namespace

double SphereFunction::l2_norm() const {
  double s = 0;
  for (const auto& [g, c] : values) s += std::norm(c);
  return std::sqrt(s);
}

SphereFunction SphereFunction::from_element(const GroupAlgebraElement& x, int degree) {
  SphereFunction f;
  f.group = x.spec();
  f.degree = degree;
  for (const auto& [g, c] : x.coeffs())
    if (g.length() == degree) f.values.emplace(g, c);
  return f;
}

GroupAlgebraElement SphereFunction::as_element() const {
  GroupAlgebraElement x(group);
  for (const auto& [g, c] : values) x.set(g, c);
  return x;
}

BoundReport sphere_convolution_check(const SphereFunction& b, const SphereFunction& eta,
                                     double tol, std::uint64_t seed) {
  if (!(b.group == eta.group)) throw UsageError("spheres from different groups");
  const int m = b.degree + eta.degree;
  GroupAlgebraElement prod = convolve(b.as_element(), eta.as_element());
  double lhs_sq = 0;
  for (const auto& [g, c] : prod.coeffs())
    if (g.length() == m) lhs_sq += std::norm(c);
  double lhs = std::sqrt(lhs_sq);
  double rhs = b.l2_norm() * eta.l2_norm();
  nlohmann::json params{{"deg_b", b.degree}, {"deg_eta", eta.degree}, {"m", m}};
  return make_report("sphere-convolution", std::move(params), lhs, rhs, tol, seed);
}

BoundReport rd_check(const GroupAlgebraElement& x, const RDParams& params, int ball_radius,
                     double tol, std::uint64_t seed) {
  if (params.C <= 0 || params.s <= 0) throw UsageError("rd_check: C and s must be > 0");
  NormEstimate est = operator_norm(convolution_matrix(x, ball_radius));
  double sobolev = 0;
  for (const auto& [g, c] : x.coeffs())
    sobolev += std::pow(1.0 + static_cast<double>(g.length()), 2.0 * params.s) *
               std::norm(c);
  double rhs = params.C * std::sqrt(sobolev);
  nlohmann::json p{{"C", params.C},
                   {"s", params.s},
                   {"L", ball_radius},
                   {"converged", est.converged}};
  return make_report("rd", std::move(p), est.value, rhs, tol, seed);
}

BoundReport z_l1_check(const GroupAlgebraElement& x, double tol, std::uint64_t seed) {
  if (!(x.spec() == free_abelian(1))) throw UsageError("z_l1_check is defined for z1 only");
  double weighted = 0;
  for (const auto& [g, c] : x.coeffs()) {
    double w = 1.0 + static_cast<double>(g.length());
    weighted += w * w * std::norm(c);
  }
  double kappa_hi = std::sqrt(kappa_squared().hi);
  nlohmann::json p{{"kappa_upper", kappa_hi}};
  return make_report("z-l1", std::move(p), x.l1_norm(), kappa_hi * std::sqrt(weighted),
                     tol, seed);
}

DominationResult domination_check(const GroupAlgebraElement& x, const SphereFunction& xi,
                                  double tol, std::uint64_t seed) {
  if (x.spec().kind != GroupKind::FreeGroup)
    throw UsageError("domination_check needs a free group");
  if (!(x.spec() == xi.group)) throw UsageError("element and sphere from different groups");
  if (x.at_identity() != Complex(0.0))
    throw UsageError("domination_check requires x(e) = 0");
  const int m = xi.degree;
  if (m < 1) throw UsageError("sphere degree must be >= 1");
  for (const auto& [g, c] : xi.values)
    if (g.length() != m) throw UsageError("sphere function has off-sphere support");

  const double xi_l2 = xi.l2_norm();
  GroupAlgebraElement y = convolve(x, xi.as_element());

  // b_k mass: length-2k support of x keyed by its k-letter prefix (k < m);
  // the top term uses |x(g)| itself.
  std::map<std::pair<int, std::vector<std::int8_t>>, double> b_mass;
  for (const auto& [h, c] : x.coeffs()) {
    long long len = h.length();
    if (len >= 2 && len % 2 == 0 && len / 2 < m)
      b_mass[{static_cast<int>(len / 2), prefix_letters(h, static_cast<int>(len / 2))}] +=
          std::norm(c);
  }
  // eta_{m-k} mass: xi keyed by its (m-k)-letter suffix.
  std::map<std::pair<int, std::vector<std::int8_t>>, double> eta_mass;
  for (const auto& [v, c] : xi.values)
    for (int j = 1; j < m; ++j) eta_mass[{j, suffix_letters(v, j)}] += std::norm(c);

  double worst = 0;       // most negative slack of rhs - |y(g)|
  double sphere_sq = 0;   // l2 of y over sphere m
  for (const auto& [g, c] : y.coeffs()) {
    if (g.length() != m) continue;
    sphere_sq += std::norm(c);
    double bound = std::abs(x.at(g)) * xi_l2;
    for (int k = 1; k < m; ++k) {
      auto bit = b_mass.find({k, prefix_letters(g, k)});
      if (bit == b_mass.end()) continue;
      auto eit = eta_mass.find({m - k, suffix_letters(g, m - k)});
      if (eit == eta_mass.end()) continue;
      bound += std::sqrt(bit->second) * std::sqrt(eit->second);
    }
    worst = std::max(worst, std::abs(c) - bound);
  }

  DominationResult out;
  nlohmann::json p1{{"m", m}, {"support", static_cast<int>(x.support_size())}};
  out.pointwise =
      make_report("domination-pointwise", std::move(p1), worst, 0.0, tol, seed);
  nlohmann::json p2{{"m", m}, {"xi_l2", xi_l2}};
  out.sphere_l2 = make_report("domination-sphere-l2", std::move(p2), std::sqrt(sphere_sq),
                              kRho0Constant * commutator_upper_bound(x, 1) * xi_l2, tol,
                              seed);
  return out;
}

FreeDiameterResult free_diameter_check(const GroupAlgebraElement& x, int ball_radius,
                                       double tol, std::uint64_t seed) {
  if (x.spec().kind != GroupKind::FreeGroup)
    throw UsageError("free_diameter_check needs a free group");
  if (x.is_scalar())
    throw UsageError("free_diameter_check: x is scalar, distance data is void");
  double scale = commutator_upper_bound(x, 1);
  GroupAlgebraElement xs = x;
  xs *= 1.0 / scale;

  GradedMatrix a = convolution_matrix(xs, ball_radius);
  Complex trace_part = xs.at_identity();
  GradedMatrix centered = a;
  centered.shift_diagonal(-trace_part);
  NormEstimate main = operator_norm(centered);

  GradedMatrix diag_block = rho_k(a, 0);
  diag_block.shift_diagonal(-trace_part);
  NormEstimate rho0 = operator_norm(diag_block);

  FreeDiameterResult out;
  nlohmann::json p1{{"L", ball_radius},
                    {"normalization", scale},
                    {"converged", main.converged}};
  out.main = make_report("free-diameter", std::move(p1), main.value, 2.5, tol, seed);
  nlohmann::json p2{{"L", ball_radius}, {"converged", rho0.converged}};
  out.rho0 =
      make_report("free-diameter-rho0", std::move(p2), rho0.value, kRho0Constant, tol, seed);
  return out;
}

}  // namespace gca
