#include "gca/suites.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "gca/algebra.hpp"
#include "gca/errors.hpp"
#include "gca/haagerup.hpp"
#include "gca/metrics.hpp"
#include "gca/norms.hpp"
#include "gca/operators.hpp"
#include "gca/rng.hpp"
#include "gca/schur.hpp"

namespace gca {

namespace {

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void require_free(const SuiteConfig& c, const char* suite) {
  if (c.group.kind != GroupKind::FreeGroup)
    throw UsageError(std::string(suite) + " runs on free groups");
}

// Dense gaussian coefficients over the support ball, identity included
// unless skip_identity.
GroupAlgebraElement random_element(const BallIndex& ball, Rng& rng,
                                   bool skip_identity = false) {
  GroupAlgebraElement x(ball.spec());
  for (std::size_t i = skip_identity ? 1 : 0; i < ball.size(); ++i)
    x.add(ball.at(i), rng.complex_gaussian());
  return x;
}

SphereFunction random_sphere_function(const GroupSpec& spec, int degree, Rng& rng) {
  BallIndex ball(spec, degree);
  SphereFunction f;
  f.group = spec;
  f.degree = degree;
  auto [lo, hi] = ball.sphere_range(degree);
  for (std::size_t i = lo; i < hi; ++i)
    f.values.emplace(ball.at(i), rng.complex_gaussian());
  return f;
}

VectorState random_state(const GroupSpec& spec, const BallIndex& ball, Rng& rng) {
  VectorState st;
  st.group = spec;
  st.ball_radius = ball.radius();
  for (std::size_t i = 0; i < ball.size(); ++i)
    st.amplitude.emplace(ball.at(i), rng.complex_gaussian());
  st.normalize();
  return st;
}

std::uint64_t trial_seed(const SuiteConfig& c, int trial) {
  return Rng(c.seed, static_cast<std::uint64_t>(trial)).next();
}

// Population for element-driven suites: the coeffs file pins a single trial,
// otherwise `trials` seeded draws over ball(support_radius).
std::vector<GroupAlgebraElement> element_population(const SuiteConfig& c,
                                                    bool skip_identity = false) {
  std::vector<GroupAlgebraElement> xs;
  if (!c.coeffs_path.empty()) {
    GroupAlgebraElement x =
        GroupAlgebraElement::from_json(c.group, load_json_file(c.coeffs_path));
    if (skip_identity && std::abs(x.at_identity()) != 0.0)
      throw UsageError("this suite needs a vanishing identity coefficient");
    xs.push_back(std::move(x));
    return xs;
  }
  BallIndex ball(c.group, c.support_radius);
  for (int t = 0; t < c.trials; ++t) {
    Rng rng(c.seed, static_cast<std::uint64_t>(t));
    xs.push_back(random_element(ball, rng, skip_identity));
  }
  return xs;
}

std::vector<BoundReport> suite_norm_sandwich(const SuiteConfig& c) {
  std::vector<BoundReport> out;
  auto xs = element_population(c);
  for (std::size_t t = 0; t < xs.size(); ++t) {
    const auto& x = xs[t];
    double est = operator_norm(convolution_matrix(x, c.ball_radius), c.tol).value;
    std::uint64_t s = trial_seed(c, static_cast<int>(t));
    nlohmann::json p{{"L", c.ball_radius}, {"R", c.support_radius}};
    out.push_back(make_report("norm-sandwich-lower", p, x.l2_norm(), est, c.tol, s));
    out.push_back(make_report("norm-sandwich-upper", p, est, x.l1_norm(), c.tol, s));
  }
  return out;
}

std::vector<BoundReport> suite_diagonal_bound(const SuiteConfig& c) {
  std::vector<BoundReport> out;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng(c.seed, static_cast<std::uint64_t>(t));
    GradedMatrix a = random_graded(c.dim, c.level_max, rng);
    int k = t % 11;  // k = 0 is the pi/sqrt(3) full off-diagonal bound
    out.push_back(diagonal_bound_check(a, k, c.tol, trial_seed(c, t)));
  }
  return out;
}

std::vector<BoundReport> suite_schur_bound(const SuiteConfig& c) {
  std::vector<BoundReport> out;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng(c.seed, static_cast<std::uint64_t>(t));
    GradedMatrix a = random_graded(c.dim, c.level_max, rng);
    Symbol phi;
    for (long long m = -c.level_max; m <= c.level_max; ++m)
      phi.phi.emplace(m, rng.complex_gaussian());
    out.push_back(schur_norm_check(phi, a, c.tol, trial_seed(c, t)));
  }
  return out;
}

std::vector<BoundReport> suite_sphere_convolution(const SuiteConfig& c) {
  require_free(c, "sphere-convolution");
  std::vector<BoundReport> out;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng(c.seed, static_cast<std::uint64_t>(t));
    int p = 1 + t % 3, q = 1 + (t / 3) % 3;
    SphereFunction b = random_sphere_function(c.group, p, rng);
    SphereFunction eta = random_sphere_function(c.group, q, rng);
    out.push_back(sphere_convolution_check(b, eta, c.tol, trial_seed(c, t)));
  }
  return out;
}

std::vector<BoundReport> suite_rd(const SuiteConfig& c) {
  RDParams params;
  if (c.group.kind == GroupKind::FreeAbelian) {
    if (c.group.rank != 1)
      throw UsageError("rd suite covers free groups and z");
    params = {std::sqrt(kappa_squared().hi), 1.0};
  }
  std::vector<BoundReport> out;
  auto xs = element_population(c);
  for (std::size_t t = 0; t < xs.size(); ++t)
    out.push_back(rd_check(xs[t], params, c.ball_radius, c.tol,
                           trial_seed(c, static_cast<int>(t))));
  return out;
}

std::vector<BoundReport> suite_z_l1(const SuiteConfig& c) {
  if (!(c.group == free_abelian(1)))
    throw UsageError("z-l1 runs on the group z1");
  std::vector<BoundReport> out;
  auto xs = element_population(c);
  for (std::size_t t = 0; t < xs.size(); ++t)
    out.push_back(z_l1_check(xs[t], c.tol, trial_seed(c, static_cast<int>(t))));
  return out;
}

std::vector<BoundReport> suite_domination(const SuiteConfig& c) {
  require_free(c, "domination");
  // degree R keeps the even-length mass strictly inside the support ball.
  int degree = std::max(1, c.support_radius);
  std::vector<BoundReport> out;
  auto xs = element_population(c, /*skip_identity=*/true);
  for (std::size_t t = 0; t < xs.size(); ++t) {
    Rng rng(c.seed ^ 0x5eedd011ull, static_cast<std::uint64_t>(t));
    SphereFunction xi = random_sphere_function(c.group, degree, rng);
    DominationResult r =
        domination_check(xs[t], xi, c.tol, trial_seed(c, static_cast<int>(t)));
    out.push_back(std::move(r.pointwise));
    out.push_back(std::move(r.sphere_l2));
  }
  return out;
}

std::vector<BoundReport> suite_free_diameter(const SuiteConfig& c) {
  require_free(c, "free-diameter");
  std::vector<BoundReport> out;
  auto xs = element_population(c);
  for (std::size_t t = 0; t < xs.size(); ++t) {
    if (xs[t].is_scalar())
      xs[t].add(GroupElement::generator(c.group, 0), 1.0);
    FreeDiameterResult r =
        free_diameter_check(xs[t], c.ball_radius, c.tol, trial_seed(c, static_cast<int>(t)));
    out.push_back(std::move(r.main));
    out.push_back(std::move(r.rho0));
  }
  return out;
}

std::vector<BoundReport> suite_coefficient(const SuiteConfig& c) {
  std::vector<BoundReport> out;
  auto xs = element_population(c);
  for (std::size_t t = 0; t < xs.size(); ++t) {
    int k = 1 + static_cast<int>(t) % 3;
    out.push_back(coefficient_check(xs[t], k, c.ball_radius, c.tol,
                                    trial_seed(c, static_cast<int>(t))));
  }
  return out;
}

std::vector<BoundReport> suite_tail(const SuiteConfig& c) {
  std::vector<BoundReport> out;
  auto xs = element_population(c);
  for (std::size_t t = 0; t < xs.size(); ++t) {
    int n = 1 + static_cast<int>(t) % std::max(1, c.support_radius);
    int k = 3 + static_cast<int>(t) % 3;
    out.push_back(tail_check(xs[t], n, k, 2.0, 2.0, c.ball_radius, c.tol,
                             trial_seed(c, static_cast<int>(t))));
  }
  return out;
}

std::vector<BoundReport> suite_jordan(const SuiteConfig& c) {
  std::vector<BoundReport> out;
  int dmax = std::clamp(c.dim, 2, 16);
  for (int t = 0; t < c.trials; ++t) {
    Rng rng(c.seed, static_cast<std::uint64_t>(t));
    int d = 2 + (dmax > 2 ? t % (dmax - 1) : 0);
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
    Eigen::MatrixXcd f = (g + g.adjoint()) / 2.0;
    f -= (f.trace() / static_cast<double>(d)) * Eigen::MatrixXcd::Identity(d, d);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(f);
    double trace_norm = es.eigenvalues().cwiseAbs().sum();
    if (trace_norm > 0) f *= 2.0 * (0.05 + 0.95 * rng.uniform()) / trace_norm;

    auto [rho, sigma] = jordan_decompose(f);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> er(rho), esg(sigma);
    double neg = std::max(-er.eigenvalues().minCoeff(), -esg.eigenvalues().minCoeff());
    double trace_err = std::max(std::abs(rho.trace() - 1.0), std::abs(sigma.trace() - 1.0));
    double rec_err = (rho - sigma - f).cwiseAbs().maxCoeff();
    std::uint64_t s = trial_seed(c, t);
    nlohmann::json p{{"d", d}};
    out.push_back(make_report("jordan-psd", p, neg, 0.0, c.tol, s));
    out.push_back(make_report("jordan-trace", p, trace_err, 0.0, c.tol, s));
    out.push_back(make_report("jordan-reconstruct", p, rec_err, 0.0, c.tol, s));
  }
  return out;
}

// phi(lambda_g) - psi(lambda_g) for every g in the ball, exact.
std::vector<Complex> state_gap(const VectorState& phi, const VectorState& psi,
                               const BallIndex& ball) {
  std::vector<Complex> out(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    GroupAlgebraElement dg = GroupAlgebraElement::delta(ball.at(i));
    int la = static_cast<int>(phi.vector_radius()) + ball.radius();
    int lb = static_cast<int>(psi.vector_radius()) + ball.radius();
    out[i] = evaluate_state(phi, dg, la) - evaluate_state(psi, dg, lb);
  }
  return out;
}

std::pair<VectorState, VectorState> state_pair(const SuiteConfig& c,
                                               const BallIndex& ball, int trial) {
  if (!c.state_a_path.empty() != !c.state_b_path.empty())
    throw UsageError("provide both state files or neither");
  if (!c.state_a_path.empty()) {
    double na = 1, nb = 1;
    VectorState a = VectorState::from_json(c.group, load_json_file(c.state_a_path), &na);
    VectorState b = VectorState::from_json(c.group, load_json_file(c.state_b_path), &nb);
    if (std::abs(na - 1.0) > 1e-8)
      std::cerr << "warning: " << c.state_a_path << " had norm " << na
                << ", normalized\n";
    if (std::abs(nb - 1.0) > 1e-8)
      std::cerr << "warning: " << c.state_b_path << " had norm " << nb
                << ", normalized\n";
    return {std::move(a), std::move(b)};
  }
  Rng ra(c.seed ^ 0xa11ce5ull, static_cast<std::uint64_t>(trial));
  Rng rb(c.seed ^ 0xb0b5ull, static_cast<std::uint64_t>(trial));
  return {random_state(c.group, ball, ra), random_state(c.group, ball, rb)};
}

std::vector<BoundReport> suite_metric_set(const SuiteConfig& c) {
  BallIndex ball(c.group, c.support_radius);
  MetricSet k;
  k.group = c.group;
  for (std::size_t i = 1; i < ball.size(); ++i) k.elements.push_back(ball.at(i));
  if (k.elements.empty()) throw UsageError("support ball has no non-identity elements");

  std::vector<BoundReport> out;
  int trials = c.state_a_path.empty() ? c.trials : 1;
  for (int t = 0; t < trials; ++t) {
    auto [phi, psi] = state_pair(c, ball, t);
    Rng rc(c.seed ^ 0xc4a1ull, static_cast<std::uint64_t>(t));
    VectorState chi = random_state(c.group, ball, rc);
    double dab = metric_set_distance(phi, psi, k);
    double dba = metric_set_distance(psi, phi, k);
    double dac = metric_set_distance(phi, chi, k);
    double dcb = metric_set_distance(chi, psi, k);
    double self = metric_set_distance(phi, phi, k);
    std::uint64_t s = trial_seed(c, t);
    nlohmann::json p{{"R", c.support_radius}, {"d", dab}};
    out.push_back(make_report("metric-set-symmetry", p, std::abs(dab - dba), 0.0, c.tol, s));
    out.push_back(make_report("metric-set-self", p, self, 0.0, c.tol, s));
    out.push_back(make_report("metric-set-triangle", p, dab, dac + dcb, c.tol, s));
  }
  return out;
}

std::vector<BoundReport> suite_distance(const SuiteConfig& c) {
  SeminormSpec spec{c.group, 1};
  BallIndex ball(c.group, c.support_radius);
  std::vector<BoundReport> out;
  int trials = c.state_a_path.empty() ? c.trials : 1;
  for (int t = 0; t < trials; ++t) {
    auto [phi, psi] = state_pair(c, ball, t);
    std::uint64_t s = trial_seed(c, t);
    double est = distance_lower_bound(phi, psi, spec, c.support_radius, 8, s);
    double est_swapped = distance_lower_bound(psi, phi, spec, c.support_radius, 8, s);
    // Dual optimum of the search objective: the searched value can reach but
    // never exceed it, so this pins search soundness.
    auto gap = state_gap(phi, psi, ball);
    double dual = 0;
    for (std::size_t i = 1; i < ball.size(); ++i)
      dual = std::max(dual, std::abs(gap[i]) / static_cast<double>(ball.levels()[i]));
    nlohmann::json p{{"R", c.support_radius}, {"k", spec.k}, {"distance", est}};
    out.push_back(make_report("distance-sound", p, est, dual, c.tol, s));
    out.push_back(
        make_report("distance-symmetry", p, std::abs(est - est_swapped), 0.0, c.tol, s));
  }
  return out;
}

std::vector<BoundReport> suite_diameter(const SuiteConfig& c) {
  SeminormSpec spec{c.group, 1};
  double best =
      diameter_lower_bound(spec, c.support_radius, c.ball_radius, c.trials, c.seed);
  // After weighted-l1 normalization the spectral spread never exceeds 2.
  nlohmann::json p{{"R", c.support_radius}, {"L", c.ball_radius},
                   {"k", spec.k},           {"trials", c.trials}};
  return {make_report("diameter", p, best, 2.0, c.tol, c.seed)};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "norm-sandwich", "diagonal-bound", "schur-bound", "sphere-convolution",
      "rd",            "z-l1",           "domination",  "free-diameter",
      "coefficient",   "tail",           "jordan",      "metric-set",
      "distance",      "diameter"};
  return names;
}

int run_suite(const SuiteConfig& c) {
  if (c.trials < 1) throw UsageError("trials must be >= 1");
  if (!(c.tol > 0)) throw UsageError("tolerance must be positive");
  if (c.support_radius < 1) throw UsageError("support radius must be >= 1");
  if (c.ball_radius < c.support_radius)
    throw UsageError("ball radius must be >= support radius");

  std::vector<BoundReport> reports;
  if (c.suite == "norm-sandwich") reports = suite_norm_sandwich(c);
  else if (c.suite == "diagonal-bound") reports = suite_diagonal_bound(c);
  else if (c.suite == "schur-bound") reports = suite_schur_bound(c);
  else if (c.suite == "sphere-convolution") reports = suite_sphere_convolution(c);
  else if (c.suite == "rd") reports = suite_rd(c);
  else if (c.suite == "z-l1") reports = suite_z_l1(c);
  else if (c.suite == "domination") reports = suite_domination(c);
  else if (c.suite == "free-diameter") reports = suite_free_diameter(c);
  else if (c.suite == "coefficient") reports = suite_coefficient(c);
  else if (c.suite == "tail") reports = suite_tail(c);
  else if (c.suite == "jordan") reports = suite_jordan(c);
  else if (c.suite == "metric-set") reports = suite_metric_set(c);
  else if (c.suite == "distance") reports = suite_distance(c);
  else if (c.suite == "diameter") reports = suite_diameter(c);
  else {
    std::ostringstream msg;
    msg << "unknown suite '" << c.suite << "'; available:";
    for (const auto& n : suite_names()) msg << ' ' << n;
    throw UsageError(msg.str());
  }

  if (c.out.empty() || c.out == "-") {
    write_reports(std::cout, reports, c.format);
  } else {
    std::ofstream os(c.out);
    if (!os) throw UsageError("cannot write " + c.out);
    write_reports(os, reports, c.format);
  }
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace gca
