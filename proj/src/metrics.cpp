#include "gca/metrics.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "gca/errors.hpp"
#include "gca/norms.hpp"
#include "gca/operators.hpp"
#include "gca/rng.hpp"

namespace gca {

double VectorState::l2_norm() const {
  double s = 0;
  for (const auto& [g, c] : amplitude) s += std::norm(c);
  return std::sqrt(s);
}

long long VectorState::vector_radius() const {
  long long r = 0;
  for (const auto& [g, c] : amplitude) r = std::max(r, g.length());
  return r;
}

void VectorState::normalize() {
  double n = l2_norm();
  if (n == 0.0) throw UsageError("state vector is zero");
  for (auto& [g, c] : amplitude) c /= n;
}

VectorState VectorState::from_json(GroupSpec spec, const nlohmann::json& j,
                                   double* original_norm) {
  if (!j.is_object() || !j.contains("ball_radius") || !j.contains("vector"))
    throw UsageError("state file needs ball_radius and vector");
  VectorState st;
  st.group = spec;
  st.ball_radius = j.at("ball_radius").get<int>();
  if (st.ball_radius < 0) throw UsageError("state ball_radius must be >= 0");
  GroupAlgebraElement vec = GroupAlgebraElement::from_json(spec, j.at("vector"));
  for (const auto& [g, c] : vec.coeffs()) st.amplitude.emplace(g, c);
  if (st.vector_radius() > st.ball_radius)
    throw UsageError("state vector reaches outside its declared ball");
  if (original_norm) *original_norm = st.l2_norm();
  st.normalize();
  return st;
}

nlohmann::json VectorState::to_json() const {
  nlohmann::json vec = nlohmann::json::object();
  for (const auto& [g, c] : amplitude) vec[g.str()] = {c.real(), c.imag()};
  return nlohmann::json{{"ball_radius", ball_radius}, {"vector", vec}};
}

MetricSet MetricSet::from_json(GroupSpec spec, const nlohmann::json& j) {
  if (!j.is_array()) throw UsageError("metric set must be a JSON list of words");
  MetricSet k;
  k.group = spec;
  for (const auto& w : j) {
    if (!w.is_string()) throw UsageError("metric set entries must be word strings");
    k.elements.push_back(GroupElement::parse(spec, w.get<std::string>()));
  }
  return k;
}

std::pair<double, double> seminorm_bounds(const GroupAlgebraElement& x, int k,
                                          int ball_radius) {
  NormEstimate lower = operator_norm(commutator_matrix(x, ball_radius, k));
  return {lower.value, commutator_upper_bound(x, k)};
}

BoundReport coefficient_check(const GroupAlgebraElement& x, int k, int ball_radius,
                              double tol, std::uint64_t seed) {
  if (ball_radius < x.support_radius())
    throw UsageError("coefficient_check needs ball radius >= support radius");
  double lhs_sq = 0;
  for (const auto& [g, c] : x.coeffs())
    lhs_sq += std::pow(static_cast<double>(g.length()), 2 * k) * std::norm(c);
  auto [lower, upper] = seminorm_bounds(x, k, ball_radius);
  nlohmann::json p{{"k", k}, {"L", ball_radius}, {"upper", upper}};
  return make_report("coefficient", std::move(p), std::sqrt(lhs_sq), lower, tol, seed);
}

BoundReport tail_check(const GroupAlgebraElement& x, int n, int k, double C, double s,
                       int ball_radius, double tol, std::uint64_t seed) {
  if (n < 1) throw UsageError("tail_check: n must be >= 1");
  if (!(static_cast<double>(k) > s))
    throw UsageError("tail_check needs k > s for the decay to close");
  GroupAlgebraElement tail_part = x.tail(n);
  double lhs = 0;
  if (!tail_part.empty())
    lhs = operator_norm(convolution_matrix(tail_part, ball_radius)).value;
  double rhs = C * std::pow(2.0, s) * std::pow(static_cast<double>(n), s - k) *
               commutator_upper_bound(x, k);
  nlohmann::json p{{"n", n}, {"k", k}, {"C", C}, {"s", s}, {"L", ball_radius}};
  return make_report("tail", std::move(p), lhs, rhs, tol, seed);
}

Complex evaluate_state(const VectorState& phi, const GroupAlgebraElement& x,
                       int ball_radius) {
  if (!(phi.group == x.spec())) throw UsageError("state and element group mismatch");
  if (ball_radius < phi.vector_radius() + x.support_radius())
    throw UsageError("evaluation ball too small: needs vector radius + support radius");
  GroupAlgebraElement xi(phi.group);
  for (const auto& [g, c] : phi.amplitude) xi.set(g, c);
  GroupAlgebraElement y = convolve(x, xi);
  Complex acc = 0;
  for (const auto& [g, c] : phi.amplitude) acc += y.at(g) * std::conj(c);
  return acc;
}

namespace {

// State evaluations phi(lambda_g) for every g in a ball, exact.
std::vector<Complex> pairings(const VectorState& phi, const BallIndex& ball) {
  std::vector<Complex> out(ball.size());
  int radius = static_cast<int>(phi.vector_radius()) + ball.radius();
  for (std::size_t i = 0; i < ball.size(); ++i)
    out[i] =
        evaluate_state(phi, GroupAlgebraElement::delta(ball.at(i)), radius);
  return out;
}

}  // namespace

double distance_lower_bound(const VectorState& phi, const VectorState& psi,
                            const SeminormSpec& spec, int support_radius, int trials,
                            std::uint64_t seed) {
  if (!(phi.group == spec.group) || !(psi.group == spec.group))
    throw UsageError("states and seminorm belong to different groups");
  if (spec.k < 1) throw UsageError("seminorm order must be >= 1");
  if (support_radius < 1) throw UsageError("support radius must be >= 1");
  if (trials < 1) trials = 1;

  BallIndex ball(spec.group, support_radius);
  std::vector<Complex> dphi = pairings(phi, ball), dpsi = pairings(psi, ball);

  // Coordinates: ball minus identity. d_g = (phi - psi)(lambda_g), weight l(g)^k.
  std::vector<Complex> d;
  std::vector<double> w;
  for (std::size_t i = 1; i < ball.size(); ++i) {
    d.push_back(dphi[i] - dpsi[i]);
    w.push_back(std::pow(static_cast<double>(ball.levels()[i]), spec.k));
  }
  const std::size_t nc = d.size();
  if (nc == 0) return 0.0;

  // Rest sums are recomputed from the coordinates every step. Incremental
  // updates cancel catastrophically once a near-vertex move (the 1e30
  // candidates below) dominates the sums, and a corrupted weight denominator
  // would void the certificate.
  auto rest_sums = [&](const std::vector<Complex>& c, std::size_t skip, Complex& value,
                       double& weight) {
    value = 0;
    weight = 0;
    for (std::size_t g = 0; g < nc; ++g) {
      if (g == skip) continue;
      value += c[g] * d[g];
      weight += std::abs(c[g]) * w[g];
    }
  };

  double best = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(seed, static_cast<std::uint64_t>(trial));
    std::vector<Complex> c(nc);
    for (std::size_t i = 0; i < nc; ++i) c[i] = rng.complex_gaussian();

    for (int sweep = 0; sweep < 50; ++sweep) {
      for (std::size_t i = 0; i < nc; ++i) {
        for (int part = 0; part < 2; ++part) {
          Complex rest_value;
          double rest_weight;
          rest_sums(c, i, rest_value, rest_weight);
          double re = c[i].real(), im = c[i].imag();
          double fixed = part == 0 ? im : re;
          double cur = part == 0 ? re : im;
          double scale = std::max({rest_weight / std::max(w[i], 1e-300),
                                   std::abs(fixed), 1e-6});
          double best_t = cur, best_j = -1.0;
          auto consider = [&](double t) {
            Complex ci = part == 0 ? Complex(t, fixed) : Complex(fixed, t);
            double wsum = rest_weight + std::abs(ci) * w[i];
            if (wsum <= 0) return;
            double j = std::abs(rest_value + ci * d[i]) / wsum;
            if (j > best_j) {
              best_j = j;
              best_t = t;
            }
          };
          consider(cur);
          consider(0.0);
          for (int e = -12; e <= 12; ++e) {
            double mag = scale * std::pow(2.0, e);
            consider(mag);
            consider(-mag);
          }
          // The ratio's supremum can sit at t -> +-infinity (the pure
          // coordinate); 1e30 reaches it to full double precision.
          consider(1e30 * scale);
          consider(-1e30 * scale);

          c[i] = part == 0 ? Complex(best_t, fixed) : Complex(fixed, best_t);
          // Rescale to total weight 1: the objective is scale-invariant and
          // this keeps the 1e30 moves from swamping later coordinates.
          double total = rest_weight + std::abs(c[i]) * w[i];
          if (total > 0)
            for (auto& cc : c) cc *= 1.0 / total;
        }
      }
      // The certificate: the ratio at the explicit iterate, summed afresh.
      Complex value;
      double weight;
      rest_sums(c, nc, value, weight);
      if (weight > 0) best = std::max(best, std::abs(value) / weight);
    }
  }
  return best;
}

double diameter_lower_bound(const SeminormSpec& spec, int support_radius, int ball_radius,
                            int trials, std::uint64_t seed) {
  if (spec.k < 1) throw UsageError("seminorm order must be >= 1");
  if (support_radius < 1 || ball_radius < support_radius)
    throw UsageError("need 1 <= support radius <= ball radius");
  if (trials < 1) trials = 1;

  BallIndex support_ball(spec.group, support_radius);
  double best = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    GroupAlgebraElement x(spec.group);
    if (trial == 0) {
      // Canonical candidate: the first generator's symmetrized delta.
      GroupElement g = GroupElement::generator(spec.group, 0);
      x.add(g, 0.5);
      x.add(g.inverse(), 0.5);
    } else {
      Rng rng(seed, static_cast<std::uint64_t>(trial));
      for (std::size_t i = 1; i < support_ball.size(); ++i) {
        const GroupElement& g = support_ball.at(i);
        GroupElement gi = g.inverse();
        if (gi < g) continue;  // mirrored below
        Complex c = rng.complex_gaussian();
        if (g == gi) {
          x.add(g, c.real());
        } else {
          x.add(g, c);
          x.add(gi, std::conj(c));
        }
      }
    }
    double scale = commutator_upper_bound(x, spec.k);
    if (scale <= 0) continue;
    x *= 1.0 / scale;

    GradedMatrix a = convolution_matrix(x, ball_radius);
    // Shift by a certified upper bound so both extremes become norm readings:
    // ||A + cI|| = lambda_max + c and ||A - cI|| = c - lambda_min.
    double c = operator_norm_upper(a);
    GradedMatrix up = a, down = a;
    up.shift_diagonal(c);
    down.shift_diagonal(-c);
    double spread =
        operator_norm(up).value + operator_norm(down).value - 2.0 * c;
    best = std::max(best, spread);
  }
  return best;
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> jordan_decompose(const Eigen::MatrixXcd& f) {
  const auto d = f.rows();
  if (d < 1 || f.cols() != d) throw UsageError("jordan_decompose needs a square matrix");
  if ((f - f.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw UsageError("jordan_decompose needs a hermitian matrix");
  if (std::abs(f.trace()) > 1e-10)
    throw UsageError("jordan_decompose needs a traceless matrix");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((f + f.adjoint()) / 2.0);
  const auto& vals = es.eigenvalues();
  if (vals.cwiseAbs().sum() > 2.0 + 1e-10)
    throw UsageError("jordan_decompose needs trace norm <= 2");

  Eigen::VectorXd plus = vals.cwiseMax(0.0), minus = (-vals).cwiseMax(0.0);
  double t = plus.sum();
  if (t < 1e-300) {
    Eigen::MatrixXcd uniform =
        Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
    return {uniform, uniform};
  }
  const auto& v = es.eigenvectors();
  Eigen::MatrixXcd fplus = v * plus.asDiagonal() * v.adjoint();
  Eigen::MatrixXcd fminus = v * minus.asDiagonal() * v.adjoint();
  Eigen::MatrixXcd rho = fplus / t;
  Eigen::MatrixXcd sigma = fminus + ((1.0 - t) / t) * fplus;
  return {rho, sigma};
}

double metric_set_distance(const VectorState& phi, const VectorState& psi,
                           const MetricSet& k) {
  if (k.elements.empty()) throw UsageError("metric set is empty");
  if (!(phi.group == k.group) || !(psi.group == k.group))
    throw UsageError("states and metric set belong to different groups");
  double best = 0;
  for (std::size_t n = 0; n < k.elements.size(); ++n) {
    GroupAlgebraElement dg = GroupAlgebraElement::delta(k.elements[n]);
    int la = static_cast<int>(phi.vector_radius() + k.elements[n].length());
    int lb = static_cast<int>(psi.vector_radius() + k.elements[n].length());
    Complex diff = evaluate_state(phi, dg, la) - evaluate_state(psi, dg, lb);
    best = std::max(best, std::abs(diff) / static_cast<double>(n + 1));
  }
  return best;
}

double metric_set_distance(const DensityState& phi, const DensityState& psi,
                           const MetricSet& k) {
  if (k.matrices.empty()) throw UsageError("metric set has no matrices");
  double best = 0;
  Eigen::MatrixXcd diff = phi.rho - psi.rho;
  for (const auto& m : k.matrices) {
    if (m.rows() != diff.rows() || m.cols() != diff.cols())
      throw UsageError("metric set matrix dimension mismatch");
    best = std::max(best, std::abs((diff * m).trace()));
  }
  return best;
}

}  // namespace gca
