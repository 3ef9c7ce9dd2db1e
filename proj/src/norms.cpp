#include "gca/norms.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include <Eigen/Dense>

#include "gca/errors.hpp"
#include "gca/rng.hpp"

namespace gca {

namespace {

constexpr int kStarts = 5;  // basis vector at index 0 + 4 random restarts
constexpr int kDenseCutoff = 256;

struct RunState {
  double value = 0.0;
  double residual = 0.0;
  bool converged = false;
  bool active = true;
};

double column_norm(const std::complex<double>* x, int n, int stride) {
  double s = 0;
  for (int i = 0; i < n; ++i) s += std::norm(x[static_cast<std::size_t>(i) * stride]);
  return std::sqrt(s);
}

}  // namespace

NormEstimate operator_norm(const GradedMatrix& a, double tol, int max_iter) {
  const int n = a.dim();
  if (n == 0) return {0.0, true, 0, 0.0};
  if (tol <= 0 || max_iter < 1) throw UsageError("operator_norm: bad tol or max_iter");

  // Row-major n x kStarts block of start vectors.
  std::vector<std::complex<double>> B(static_cast<std::size_t>(n) * kStarts, 0.0);
  B[0] = 1.0;  // start 0: basis vector at the identity slot
  for (int c = 1; c < kStarts; ++c) {
    Rng rng(0x9c0ffee1dull, static_cast<std::uint64_t>(c));
    double s = 0;
    for (int i = 0; i < n; ++i) {
      auto v = rng.complex_gaussian();
      B[static_cast<std::size_t>(i) * kStarts + c] = v;
      s += std::norm(v);
    }
    s = std::sqrt(s);
    for (int i = 0; i < n; ++i) B[static_cast<std::size_t>(i) * kStarts + c] /= s;
  }

  std::vector<std::complex<double>> W(B.size()), U(B.size());
  std::vector<RunState> run(kStarts);

  const bool dense = n < kDenseCutoff;
  Eigen::MatrixXcd Ad;
  if (dense) {
    Ad.setZero(n, n);
    for (int i = 0; i < n; ++i)
      for (const auto& [j, v] : a.rows()[i]) Ad(i, j) = v;
  }
  using MapMat =
      Eigen::Map<Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                               Eigen::RowMajor>>;

  int sweeps = 0;
  for (int iter = 1; iter <= max_iter; ++iter) {
    if (dense) {
      MapMat Bm(B.data(), n, kStarts), Wm(W.data(), n, kStarts), Um(U.data(), n, kStarts);
      Wm.noalias() = Ad * Bm;
      Um.noalias() = Ad.adjoint() * Wm;
    } else {
      a.apply_block(B.data(), W.data(), kStarts);
      a.apply_adjoint_block(W.data(), U.data(), kStarts);
    }
    sweeps = iter;
    bool any_active = false;
    for (int c = 0; c < kStarts; ++c) {
      if (!run[c].active) continue;
      // The iterate in B is unit, so this is the Rayleigh value for it.
      double val = column_norm(W.data() + c, n, kStarts);
      double change = std::abs(val - run[c].value) / std::max(val, 1e-300);
      run[c].residual = change;
      run[c].value = val;
      if (val == 0.0) {  // A kills the iterate: settled at zero
        run[c].converged = true;
        run[c].active = false;
        continue;
      }
      if (iter > 1 && change < tol) {
        run[c].converged = true;
        run[c].active = false;
        continue;
      }
      double nu = column_norm(U.data() + c, n, kStarts);
      // val > 0 forces ||A*A v|| >= val^2 > 0, so nu > 0 here.
      for (int i = 0; i < n; ++i)
        B[static_cast<std::size_t>(i) * kStarts + c] =
            U[static_cast<std::size_t>(i) * kStarts + c] / nu;
      any_active = true;
    }
    if (!any_active) break;
  }

  int best = 0;
  for (int c = 1; c < kStarts; ++c)
    if (run[c].value > run[best].value) best = c;
  return {run[best].value, run[best].converged, sweeps, run[best].residual};
}

double operator_norm_upper(const GradedMatrix& a) {
  const int n = a.dim();
  std::vector<double> row_sum(n, 0.0), col_sum(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (const auto& [j, v] : a.rows()[i]) {
      double m = std::abs(v);
      row_sum[i] += m;
      col_sum[j] += m;
    }
  double r = 0, c = 0;
  for (int i = 0; i < n; ++i) {
    r = std::max(r, row_sum[i]);
    c = std::max(c, col_sum[i]);
  }
  return std::sqrt(r * c);
}

std::pair<double, double> z_symbol_norm(const GroupAlgebraElement& x, double tol) {
  if (!(x.spec() == free_abelian(1)))
    throw UsageError("z_symbol_norm is defined for z1 only");
  if (tol <= 0) throw UsageError("z_symbol_norm: tol must be positive");
  if (x.empty()) return {0.0, 0.0};

  std::vector<std::pair<long long, Complex>> terms;
  double lip = 0;
  for (const auto& [g, c] : x.coeffs()) {
    long long m = g.coords()[0];
    terms.push_back({m, c});
    lip += std::abs(c) * static_cast<double>(std::llabs(m));
  }
  auto eval = [&](double theta) {
    Complex s = 0;
    for (const auto& [m, c] : terms) s += c * std::polar(1.0, m * theta);
    return std::abs(s);
  };
  // One support point: the modulus is constant on the circle.
  if (terms.size() == 1) {
    double v = std::abs(terms[0].second);
    return {v, v};
  }

  struct Seg {
    double upper, center, half;
    bool operator<(const Seg& o) const { return upper < o.upper; }
  };
  const double two_pi = 6.283185307179586477;
  std::priority_queue<Seg> heap;
  double best_lo = 0;
  const int init = 64;
  for (int i = 0; i < init; ++i) {
    double c = (i + 0.5) * two_pi / init, h = 0.5 * two_pi / init;
    double f = eval(c);
    best_lo = std::max(best_lo, f);
    heap.push({f + lip * h, c, h});
  }
  double upper = heap.top().upper;
  // Subdivide the worst segment until the bracket closes to tol.
  for (long guard = 0; guard < 4000000; ++guard) {
    Seg s = heap.top();
    upper = s.upper;
    if (upper - best_lo <= tol) break;
    heap.pop();
    for (int side = -1; side <= 1; side += 2) {
      double c = s.center + side * s.half / 2, h = s.half / 2;
      double f = eval(c);
      best_lo = std::max(best_lo, f);
      heap.push({f + lip * h, c, h});
    }
  }
  upper = std::max(heap.top().upper, best_lo);
  return {best_lo, upper};
}

namespace {
constexpr double kPi2Over6 = 1.6449340668482264365;
}

Enclosure inv_square_tail(int k) {
  if (k < 0) throw UsageError("inv_square_tail: k must be >= 0");
  double partial = 0;
  for (int j = k; j >= 1; --j) partial += 1.0 / (static_cast<double>(j) * j);
  double mid = kPi2Over6 - partial;
  double slop = 1e-14 + 1e-16 * k;
  double lo = std::max(mid - slop, k > 0 ? 1.0 / (k + 1.0) : 0.0);
  double hi = mid + slop;
  if (k >= 1) hi = std::min(hi, 1.0 / k);  // integral estimate, exact rational
  return {lo, hi};
}

Enclosure kappa_squared() {
  // 1 + 2 sum_{j >= 2} j^-2 = pi^2/3 - 1
  Enclosure t = inv_square_tail(1);
  return {1.0 + 2.0 * t.lo, 1.0 + 2.0 * t.hi};
}

}  // namespace gca
