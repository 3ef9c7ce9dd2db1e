#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "gca/algebra.hpp"
#include "gca/errors.hpp"
#include "gca/norms.hpp"
#include "gca/operators.hpp"
#include "gca/report.hpp"
#include "gca/rng.hpp"

using namespace gca;

namespace {

const GroupSpec f2 = free_group(2);
const GroupSpec z1 = free_abelian(1);

GroupElement w(const std::string& s) { return GroupElement::parse(f2, s); }
GroupElement zw(long long n) { return GroupElement::from_vector(z1, {n}); }

Eigen::MatrixXcd to_dense(const GradedMatrix& a) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(a.dim(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (const auto& [j, v] : a.rows()[i]) m(i, j) = v;
  return m;
}

double svd_norm(const GradedMatrix& a) {
  return to_dense(a).jacobiSvd().singularValues()(0);
}

GroupAlgebraElement random_element(const BallIndex& ball, Rng& rng) {
  GroupAlgebraElement x(ball.spec());
  for (std::size_t i = 0; i < ball.size(); ++i)
    x.add(ball.at(i), rng.complex_gaussian());
  return x;
}

}  // namespace

TEST_CASE("algebra element basics") {
  GroupAlgebraElement x(f2);
  x.add(w("a"), {1.0, 0.0});
  x.add(w("ab"), {0.0, -2.0});
  x.add(w("a"), {-1.0, 0.0});  // cancels to exact zero: slot erased
  CHECK(x.support_size() == 1);
  CHECK(x.at(w("ab")) == Complex(0.0, -2.0));
  CHECK(x.at(w("b")) == Complex(0.0, 0.0));
  CHECK(x.support_radius() == 2);
  CHECK(x.l1_norm() == doctest::Approx(2.0));
  CHECK(x.l2_norm() == doctest::Approx(2.0));
  CHECK(x.weighted_l1(1) == doctest::Approx(4.0));
  CHECK(x.weighted_l1(2) == doctest::Approx(8.0));

  GroupAlgebraElement d = GroupAlgebraElement::delta(w("a"));
  CHECK(d.support_size() == 1);
  CHECK(d.at(w("a")) == Complex(1.0, 0.0));
  CHECK(d.at_identity() == Complex(0.0, 0.0));

  CHECK(GroupAlgebraElement::delta(GroupElement(f2)).is_scalar());
  CHECK(GroupAlgebraElement(f2).is_scalar());
  CHECK_FALSE(d.is_scalar());
}

TEST_CASE("adjoint and self-adjointness") {
  GroupAlgebraElement x(f2);
  x.add(w("ab"), {0.5, 1.5});
  x.add(w("b"), {-1.0, 0.25});
  GroupAlgebraElement xs = x.adjoint();
  CHECK(xs.at(w("BA")) == std::conj(Complex(0.5, 1.5)));
  CHECK(xs.at(w("B")) == std::conj(Complex(-1.0, 0.25)));
  CHECK_FALSE(x.is_self_adjoint());

  GroupAlgebraElement sym(f2);
  sym.add(w("a"), {0.5, 0.0});
  sym.add(w("A"), {0.5, 0.0});
  sym.add(GroupElement(f2), {1.0, 0.0});
  CHECK(sym.is_self_adjoint());

  GroupAlgebraElement h(f2);
  h.add(w("ab"), {0.3, -0.7});
  h.add(w("BA"), std::conj(Complex(0.3, -0.7)));
  CHECK(h.is_self_adjoint());
}

TEST_CASE("tail keeps exactly the far coefficients") {
  GroupAlgebraElement x(f2);
  x.add(GroupElement(f2), 1.0);
  x.add(w("a"), 2.0);
  x.add(w("ab"), 3.0);
  x.add(w("aba"), 4.0);
  GroupAlgebraElement t = x.tail(2);
  CHECK(t.support_size() == 2);
  CHECK(t.at(w("ab")) == Complex(3.0, 0.0));
  CHECK(t.at(w("aba")) == Complex(4.0, 0.0));
  CHECK(x.tail(5).empty());
  CHECK(x.tail(0).support_size() == 4);
}

TEST_CASE("convolution against the double-sum oracle") {
  CHECK(convolve(GroupAlgebraElement::delta(w("a")), GroupAlgebraElement::delta(w("b")))
            .at(w("ab")) == Complex(1.0, 0.0));
  GroupAlgebraElement e1 =
      convolve(GroupAlgebraElement::delta(w("a")), GroupAlgebraElement::delta(w("A")));
  CHECK(e1.support_size() == 1);
  CHECK(e1.at_identity() == Complex(1.0, 0.0));

  Rng rng(11);
  for (GroupSpec spec : {f2, free_abelian(2)}) {
    BallIndex ball(spec, 2);
    GroupAlgebraElement a = random_element(ball, rng);
    GroupAlgebraElement b = random_element(ball, rng);
    GroupAlgebraElement ab = convolve(a, b);
    // (a*b)(g) = sum over support pairs with uv = g.
    BallIndex big(spec, 4);
    for (std::size_t i = 0; i < big.size(); ++i) {
      Complex want = 0;
      for (const auto& [u, cu] : a.coeffs())
        for (const auto& [v, cv] : b.coeffs())
          if (multiply(u, v) == big.at(i)) want += cu * cv;
      CHECK(std::abs(ab.at(big.at(i)) - want) < 1e-12);
    }
  }
}

TEST_CASE("element json round-trip and rejection") {
  GroupAlgebraElement x(f2);
  x.add(w("a"), {0.5, -1.0});
  x.add(w("BA"), {2.0, 0.0});
  nlohmann::json j = x.to_json();
  GroupAlgebraElement back = GroupAlgebraElement::from_json(f2, j);
  CHECK(back.support_size() == 2);
  CHECK(back.at(w("a")) == Complex(0.5, -1.0));
  CHECK(back.at(w("BA")) == Complex(2.0, 0.0));

  CHECK_THROWS_AS(GroupAlgebraElement::from_json(
                      f2, nlohmann::json{{"a", {0.0, 0.0}}}),
                  UsageError);  // explicit zero
  CHECK_THROWS_AS(GroupAlgebraElement::from_json(
                      f2, nlohmann::json{{"aA", {1.0, 0.0}}, {"", {1.0, 0.0}}}),
                  UsageError);  // both reduce to the identity
  CHECK_THROWS_AS(GroupAlgebraElement::from_json(f2, nlohmann::json::array()),
                  UsageError);
  CHECK_THROWS_AS(GroupAlgebraElement::from_json(
                      f2, nlohmann::json{{"a", {1.0}}}),
                  UsageError);  // needs [re, im]
}

TEST_CASE("convolution matrix frozen examples") {
  // Identity coefficient: identity matrix at any truncation.
  GradedMatrix id = convolution_matrix(
      GroupAlgebraElement::delta(GroupElement(f2)), 2);
  CHECK(id.dim() == 17);
  CHECK(id.nonzeros() == 17);
  for (int i = 0; i < id.dim(); ++i) CHECK(id.get(i, i) == Complex(1.0, 0.0));

  // Z shift on basis (0, -1, 1): ones exactly where s - t = 1.
  GradedMatrix shift =
      convolution_matrix(GroupAlgebraElement::delta(zw(1)), 1);
  CHECK(shift.dim() == 3);
  CHECK(shift.nonzeros() == 2);
  CHECK(shift.get(0, 1) == Complex(1.0, 0.0));  // 0 = 1 + (-1)
  CHECK(shift.get(2, 0) == Complex(1.0, 0.0));  // 1 = 1 + 0

  // F2 partial permutation on (e, a, A, b, B): column e to row a, column A
  // to row e, nothing else stays in the ball.
  GradedMatrix pa = convolution_matrix(GroupAlgebraElement::delta(w("a")), 1);
  CHECK(pa.dim() == 5);
  CHECK(pa.nonzeros() == 2);
  CHECK(pa.get(1, 0) == Complex(1.0, 0.0));
  CHECK(pa.get(0, 2) == Complex(1.0, 0.0));
}

TEST_CASE("commutator matrix frozen examples") {
  // Z, x = delta_1, k = 1, basis (0,-1,1,-2,2): signed shift, norm exactly 1.
  GradedMatrix c = commutator_matrix(GroupAlgebraElement::delta(zw(1)), 2, 1);
  CHECK(c.dim() == 5);
  CHECK(c.get(0, 1) == Complex(-1.0, 0.0));  // s=0 from t=-1: levels 0-1
  CHECK(c.get(2, 0) == Complex(1.0, 0.0));   // s=1 from t=0
  CHECK(c.get(1, 3) == Complex(-1.0, 0.0));  // s=-1 from t=-2
  CHECK(c.get(4, 2) == Complex(1.0, 0.0));   // s=2 from t=1
  CHECK(c.nonzeros() == 4);
  CHECK(svd_norm(c) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(operator_norm(c).value == doctest::Approx(1.0).epsilon(1e-9));

  // Scalar x commutes with D.
  GradedMatrix zero = commutator_matrix(
      GroupAlgebraElement::delta(GroupElement(f2), {2.0, 1.0}), 2, 1);
  CHECK(zero.nonzeros() == 0);
  CHECK(operator_norm(zero).value == 0.0);
  CHECK(operator_norm(zero).converged);

  // F2, x = delta_ab, k = 2: entry at (ab, e) is (2 - 0)^2 = 4.
  GradedMatrix c2 = commutator_matrix(GroupAlgebraElement::delta(w("ab")), 2, 2);
  BallIndex ball(f2, 2);
  auto iab = ball.index_of(w("ab"));
  REQUIRE(iab.has_value());
  CHECK(c2.get(static_cast<int>(*iab), 0) == Complex(4.0, 0.0));

  // k = 0 falls back to plain convolution.
  GroupAlgebraElement x(f2);
  x.add(w("ab"), {0.7, -0.3});
  x.add(w("B"), {0.1, 0.4});
  CHECK(commutator_matrix(x, 3, 0).max_abs_entry_diff(convolution_matrix(x, 3)) == 0.0);
}

TEST_CASE("commutator equals the level commutator of the convolution") {
  Rng rng(23);
  for (GroupSpec spec : {f2, free_abelian(2)}) {
    BallIndex ball(spec, 2);
    GroupAlgebraElement x = random_element(ball, rng);
    GradedMatrix conv = convolution_matrix(x, 4);
    GradedMatrix comm = commutator_matrix(x, 4, 1);
    CHECK(comm.max_abs_entry_diff(level_commutator(conv)) < 1e-14);
  }
}

TEST_CASE("commutator upper bound worked values") {
  CHECK(commutator_upper_bound(GroupAlgebraElement::delta(w("a")), 1) == 1.0);
  CHECK(commutator_upper_bound(GroupAlgebraElement::delta(GroupElement(f2)), 3) == 0.0);
  CHECK(commutator_upper_bound(GroupAlgebraElement::delta(w("ab"), 0.5), 1) == 1.0);

  // Dominates the truncated commutator norm estimate.
  Rng rng(31);
  BallIndex ball(f2, 2);
  for (int t = 0; t < 5; ++t) {
    GroupAlgebraElement x = random_element(ball, rng);
    for (int k = 1; k <= 3; ++k)
      CHECK(operator_norm(commutator_matrix(x, 4, k)).value <=
            commutator_upper_bound(x, k) + 1e-9);
  }
}

TEST_CASE("operator norm basics") {
  GradedMatrix id(4, {0, 1, 1, 2});
  for (int i = 0; i < 4; ++i) id.set(i, i, 1.0);
  NormEstimate e = operator_norm(id);
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.converged);

  GradedMatrix offdiag(2, {0, 1});
  offdiag.set(0, 1, 1.0);
  CHECK(operator_norm(offdiag).value == doctest::Approx(1.0).epsilon(1e-12));

  GradedMatrix zero(3, {0, 0, 1});
  CHECK(operator_norm(zero).value == 0.0);
  CHECK(operator_norm(zero).converged);
}

TEST_CASE("operator norm matches dense SVD on random compressions") {
  Rng rng(41);
  for (GroupSpec spec : {f2, free_abelian(2)}) {
    BallIndex ball(spec, 2);
    for (int t = 0; t < 8; ++t) {
      GroupAlgebraElement x = random_element(ball, rng);
      GradedMatrix a = t % 2 == 0 ? convolution_matrix(x, 3)
                                  : commutator_matrix(x, 3, 1 + t % 3);
      double svd = svd_norm(a);
      NormEstimate est = operator_norm(a);
      CHECK(est.value <= svd + 1e-12);    // certified side
      CHECK(est.value >= svd * (1 - 1e-7));  // quality side
      CHECK(est.value <= operator_norm_upper(a) + 1e-12);
    }
  }
}

TEST_CASE("long Z compression reaches the symbol value 2") {
  GroupAlgebraElement x(z1);
  x.add(zw(1), 1.0);
  x.add(zw(-1), 1.0);
  NormEstimate e = operator_norm(convolution_matrix(x, 512));
  CHECK(e.value <= 2.0 + 1e-12);
  CHECK(e.value == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("norm sandwich and monotonicity in the truncation") {
  Rng rng(53);
  for (GroupSpec spec : {f2, free_abelian(1)}) {
    BallIndex ball(spec, 2);
    for (int t = 0; t < 6; ++t) {
      GroupAlgebraElement x = random_element(ball, rng);
      double prev = 0.0;
      for (int L = 2; L <= 5; ++L) {
        double est = operator_norm(convolution_matrix(x, L)).value;
        CHECK(x.l2_norm() <= est + 1e-10);  // L >= support radius
        CHECK(est <= x.l1_norm() + 1e-9);
        CHECK(est >= prev - 1e-9);
        prev = est;
      }
    }
  }
}

TEST_CASE("identity column floor: estimate never beats l2 from below") {
  Rng rng(67);
  BallIndex ball(f2, 2);
  for (int t = 0; t < 10; ++t) {
    GroupAlgebraElement x = random_element(ball, rng);
    NormEstimate e = operator_norm(convolution_matrix(x, 2));
    CHECK(e.value >= x.l2_norm() - 1e-12);
  }
}

TEST_CASE("z symbol bracket worked examples") {
  auto [lo0, hi0] = z_symbol_norm(GroupAlgebraElement::delta(zw(0)));
  CHECK(lo0 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hi0 == doctest::Approx(1.0).epsilon(1e-12));

  auto [lo1, hi1] = z_symbol_norm(GroupAlgebraElement::delta(zw(1)));
  CHECK(lo1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hi1 == doctest::Approx(1.0).epsilon(1e-12));

  GroupAlgebraElement cosx(z1);
  cosx.add(zw(1), 1.0);
  cosx.add(zw(-1), 1.0);
  auto [lo, hi] = z_symbol_norm(cosx);
  CHECK(lo <= 2.0);
  CHECK(hi >= 2.0);
  CHECK(hi - lo <= 1e-6);
}

TEST_CASE("z symbol bracket encloses the compression norm") {
  Rng rng(71);
  BallIndex ball(z1, 3);
  for (int t = 0; t < 6; ++t) {
    GroupAlgebraElement x = random_element(ball, rng);
    auto [lo, hi] = z_symbol_norm(x);
    CHECK(hi - lo <= 1e-6);
    CHECK(lo <= x.l1_norm() + 1e-12);
    double est = operator_norm(convolution_matrix(x, 64)).value;
    CHECK(est <= hi + 1e-9);  // compression below the true norm
    CHECK(lo <= est + 0.05);  // and the truncation is not far below at L=64
  }
}

TEST_CASE("tail sum enclosures against partial-sum brackets") {
  const int N = 200000;
  for (int k : {0, 1, 2, 5, 10}) {
    Enclosure t = inv_square_tail(k);
    CHECK(t.lo <= t.hi);
    CHECK(t.hi - t.lo < 1e-10);
    double brute = 0;
    for (int j = N; j > k; --j) brute += 1.0 / (double(j) * j);
    // true tail lies in (brute + 1/(N+2), brute + 1/(N+1)) up to the float
    // error of the brute sum itself (~N ulps, well under 1e-9)
    CHECK(t.hi >= brute + 1.0 / (N + 2) - 1e-9);
    CHECK(t.lo <= brute + 1.0 / (N + 1) + 1e-9);
    if (k >= 1) {
      CHECK(t.lo >= 1.0 / (k + 1));  // rational sandwich from the spec text
      CHECK(t.hi <= 1.0 / k);
    }
  }
  Enclosure t0 = inv_square_tail(0);
  const double pi = 3.14159265358979323846;
  CHECK(t0.lo <= pi * pi / 6);
  CHECK(t0.hi >= pi * pi / 6);
}

TEST_CASE("kappa squared enclosure") {
  Enclosure k2 = kappa_squared();
  const double pi = 3.14159265358979323846;
  double exact = pi * pi / 3 - 1.0;
  CHECK(k2.lo <= exact);
  CHECK(k2.hi >= exact);
  CHECK(k2.hi - k2.lo < 1e-10);
  CHECK(std::abs(std::sqrt(k2.hi) - 1.513) < 1e-3);

  double brute = 1.0;  // n = 0 term
  const int N = 200000;
  for (int n = N; n >= 1; --n) brute += 2.0 / (double(1 + n) * (1 + n));
  CHECK(k2.hi >= brute + 2.0 / (N + 3) - 1e-9);
  CHECK(k2.lo <= brute + 2.0 / (N + 2) + 1e-9);
}

TEST_CASE("graded matrix storage and application") {
  Rng rng(83);
  GradedMatrix a(6, {0, 1, 1, 2, 2, 3});
  for (int t = 0; t < 12; ++t)
    a.set(static_cast<int>(rng.below(6)), static_cast<int>(rng.below(6)),
          rng.complex_gaussian());
  a.set(2, 4, 0.0);  // exact zero never stored
  for (const auto& [j, v] : a.rows()[2]) CHECK(j != 4);

  Eigen::MatrixXcd d = to_dense(a);
  Eigen::VectorXcd v(6), y(6);
  for (int i = 0; i < 6; ++i) v(i) = rng.complex_gaussian();
  a.apply(v.data(), y.data());
  CHECK((y - d * v).norm() < 1e-12);
  a.apply_adjoint(v.data(), y.data());
  CHECK((y - d.adjoint() * v).norm() < 1e-12);

  // Blocked application agrees with column-by-column.
  std::vector<Complex> X(6 * 3), Y(6 * 3);
  for (auto& c : X) c = rng.complex_gaussian();
  a.apply_block(X.data(), Y.data(), 3);
  for (int col = 0; col < 3; ++col) {
    Eigen::VectorXcd xc(6);
    for (int i = 0; i < 6; ++i) xc(i) = X[i * 3 + col];
    Eigen::VectorXcd yc = d * xc;
    for (int i = 0; i < 6; ++i) CHECK(std::abs(Y[i * 3 + col] - yc(i)) < 1e-12);
  }

  a.shift_diagonal({0.5, 0.0});
  CHECK(std::abs(a.get(3, 3) - (d(3, 3) + 0.5)) < 1e-15);

  GradedMatrix b = a;
  b -= a;
  CHECK(b.nonzeros() == 0);
  CHECK(a.max_abs_entry_diff(a) == 0.0);
}

TEST_CASE("adjoint element gives the adjoint compression") {
  Rng rng(89);
  BallIndex ball(f2, 2);
  GroupAlgebraElement x = random_element(ball, rng);
  GradedMatrix a = convolution_matrix(x, 3);
  GradedMatrix astar = convolution_matrix(x.adjoint(), 3);
  double worst = 0;
  for (int i = 0; i < a.dim(); ++i)
    for (const auto& [j, v] : a.rows()[i])
      worst = std::max(worst, std::abs(std::conj(v) - astar.get(j, i)));
  CHECK(worst < 1e-15);
}

TEST_CASE("capacity guard on matrix assembly") {
  GroupAlgebraElement x = GroupAlgebraElement::delta(w("a"));
  CHECK_THROWS_AS(convolution_matrix(x, 12), CapacityError);
  CHECK_THROWS_AS(commutator_matrix(x, 12, 1), CapacityError);
}

TEST_CASE("bound reports and serialization") {
  BoundReport r = make_report("demo", nlohmann::json{{"k", 2}}, 1.0, 1.5, 1e-9, 77);
  CHECK(r.pass);
  CHECK(r.slack == doctest::Approx(0.5));
  nlohmann::json j = r.to_json();
  for (const char* key : {"check", "params", "lhs", "rhs", "slack", "pass", "seed"})
    CHECK(j.contains(key));
  CHECK(j["seed"] == 77);

  BoundReport fail = make_report("demo", {}, 2.0, 1.0, 1e-9, 0);
  CHECK_FALSE(fail.pass);

  // Borderline: pass is lhs <= rhs + tol.
  CHECK(make_report("demo", {}, 1.0 + 0.5e-9, 1.0, 1e-9, 0).pass);
  CHECK_FALSE(make_report("demo", {}, 1.0 + 2e-9, 1.0, 1e-9, 0).pass);

  std::ostringstream js, cs;
  write_reports(js, {r, fail}, ReportFormat::Json);
  write_reports(cs, {r, fail}, ReportFormat::Csv);
  std::string jtext = js.str(), ctext = cs.str();
  CHECK(jtext.find("timestamp") != std::string::npos);
  CHECK(jtext.find("\"check\":\"demo\"") != std::string::npos);
  CHECK(ctext.rfind("# generated", 0) == 0);
  CHECK(ctext.find("check,seed,trial,lhs,rhs,slack,pass") != std::string::npos);
}
