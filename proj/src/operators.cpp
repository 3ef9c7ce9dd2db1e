#include "gca/operators.hpp"

#include <algorithm>
#include <cmath>

#include "gca/errors.hpp"

namespace gca {

namespace {

// Shared assembly: entry (s, t) = w(l(s), l(t)) * x(s t^-1), built column by
// column as s = g t over the support. The pair (s, t) determines g, so no
// accumulation collisions happen.
template <typename Weight>
GradedMatrix assemble(const GroupAlgebraElement& x, const BallIndex& ball, Weight w) {
  if (!(x.spec() == ball.spec()))
    throw UsageError("element and ball belong to different groups");
  const int n = static_cast<int>(ball.size());

  struct Triplet {
    int row, col;
    Complex v;
  };
  std::vector<Triplet> triplets;
  triplets.reserve(x.support_size() * ball.size());
  for (const auto& [g, c] : x.coeffs()) {
    for (int t = 0; t < n; ++t) {
      GroupElement s = multiply(g, ball.at(t));
      auto idx = ball.index_of(s);
      if (!idx) continue;
      double weight = w(ball.levels()[*idx], ball.levels()[t]);
      if (weight == 0.0) continue;
      triplets.push_back({static_cast<int>(*idx), t, c * weight});
    }
  }
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  // Rows arrive sorted; bulk-build instead of per-entry insertion.
  GradedMatrix out(n, ball.levels());
  {
    std::vector<std::vector<GradedMatrix::Entry>> rows(n);
    for (const auto& t : triplets) rows[t.row].push_back({t.col, t.v});
    for (int i = 0; i < n; ++i)
      for (const auto& [j, v] : rows[i]) out.set(i, j, v);
  }
  return out;
}

}  // namespace

GradedMatrix convolution_matrix(const GroupAlgebraElement& x, const BallIndex& ball) {
  return assemble(x, ball, [](int, int) { return 1.0; });
}

GradedMatrix convolution_matrix(const GroupAlgebraElement& x, int ball_radius,
                                std::size_t cap) {
  BallIndex ball(x.spec(), ball_radius, cap);
  return convolution_matrix(x, ball);
}

GradedMatrix commutator_matrix(const GroupAlgebraElement& x, const BallIndex& ball,
                               int k) {
  if (k < 0) throw UsageError("commutator order must be >= 0");
  if (k == 0) return convolution_matrix(x, ball);
  return assemble(x, ball, [k](int ls, int lt) {
    return std::pow(static_cast<double>(ls - lt), k);
  });
}

GradedMatrix commutator_matrix(const GroupAlgebraElement& x, int ball_radius, int k,
                               std::size_t cap) {
  BallIndex ball(x.spec(), ball_radius, cap);
  return commutator_matrix(x, ball, k);
}

double commutator_upper_bound(const GroupAlgebraElement& x, int k) {
  if (k < 0) throw UsageError("commutator order must be >= 0");
  return x.weighted_l1(k);
}

GradedMatrix level_commutator(const GradedMatrix& a) {
  GradedMatrix out(a.dim(), a.levels());
  for (int i = 0; i < a.dim(); ++i)
    for (const auto& [j, v] : a.rows()[i]) {
      int d = a.levels()[i] - a.levels()[j];
      if (d != 0) out.set(i, j, static_cast<double>(d) * v);
    }
  return out;
}

}  // namespace gca
