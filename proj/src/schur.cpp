#include "gca/schur.hpp"

#include <cmath>
#include <cstdlib>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <nlohmann/json.hpp>

#include "gca/errors.hpp"
#include "gca/operators.hpp"

namespace gca {

Complex Symbol::at(long long m) const {
  auto it = phi.find(m);
  return it == phi.end() ? Complex(0.0) : it->second;
}

double Symbol::l2_norm() const {
  double s = 0;
  for (const auto& [m, c] : phi) s += std::norm(c);
  return std::sqrt(s);
}

nlohmann::json Symbol::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [m, c] : phi) j[std::to_string(m)] = {c.real(), c.imag()};
  return j;
}

Symbol Symbol::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("symbol must be a JSON object");
  Symbol s;
  for (const auto& [key, val] : j.items()) {
    char* end = nullptr;
    long long m = std::strtoll(key.c_str(), &end, 10);
    if (end == key.c_str() || *end != '\0')
      throw UsageError("symbol key '" + key + "' is not an integer");
    if (!val.is_array() || val.size() != 2)
      throw UsageError("symbol value for '" + key + "' must be [re, im]");
    Complex c(val[0].get<double>(), val[1].get<double>());
    if (c == Complex(0.0)) throw UsageError("zero symbol value at '" + key + "'");
    s.phi[m] = c;
  }
  return s;
}

namespace {

template <typename Keep>
GradedMatrix filter_entries(const GradedMatrix& a, Keep keep) {
  GradedMatrix out(a.dim(), a.levels());
  for (int i = 0; i < a.dim(); ++i)
    for (const auto& [j, v] : a.rows()[i]) {
      long long d = a.levels()[i] - a.levels()[j];
      if (keep(d)) out.set(i, j, v);
    }
  return out;
}

}  // namespace

GradedMatrix rho_k(const GradedMatrix& a, long long k) {
  return filter_entries(a, [k](long long d) { return d == k; });
}

GradedMatrix schur_apply(const Symbol& phi, const GradedMatrix& a) {
  GradedMatrix out(a.dim(), a.levels());
  for (int i = 0; i < a.dim(); ++i)
    for (const auto& [j, v] : a.rows()[i]) {
      Complex f = phi.at(a.levels()[i] - a.levels()[j]);
      if (f != Complex(0.0)) out.set(i, j, f * v);
    }
  return out;
}

GradedMatrix off_diagonal_part(const GradedMatrix& a) {
  return filter_entries(a, [](long long d) { return d != 0; });
}

GradedMatrix outside_band(const GradedMatrix& a, long long k) {
  return filter_entries(a, [k](long long d) { return std::llabs(d) > k; });
}

GradedMatrix reconstruct_offdiagonal(const GradedMatrix& a) {
  GradedMatrix commutator = level_commutator(a);
  GradedMatrix out(a.dim(), a.levels());
  for (int i = 0; i < a.dim(); ++i)
    for (const auto& [j, v] : commutator.rows()[i]) {
      long long d = a.levels()[i] - a.levels()[j];
      if (d != 0) out.set(i, j, v / static_cast<double>(d));
    }
  return out;
}

BoundReport diagonal_bound_check(const GradedMatrix& a, int k, double tol,
                                 std::uint64_t seed) {
  if (k < 0) throw UsageError("diagonal_bound_check: k must be >= 0");
  GradedMatrix lhs_m = outside_band(a, k);
  GradedMatrix commutator = level_commutator(a);
  NormEstimate lhs = operator_norm(lhs_m);
  NormEstimate comm = operator_norm(commutator);
  double tail_hi = inv_square_tail(k).hi;
  double factor = std::sqrt(2.0 * tail_hi);
  double paper_constant = k == 0 ? 1.8137993642342178  // pi/sqrt(3)
                                 : std::sqrt(2.0 / k);
  nlohmann::json params{{"k", k},
                        {"dim", a.dim()},
                        {"factor", factor},
                        {"paper_constant", paper_constant},
                        {"lhs_converged", lhs.converged},
                        {"comm_converged", comm.converged}};
  return make_report("diagonal-bound", std::move(params), lhs.value,
                     comm.value * factor, tol, seed);
}

BoundReport schur_norm_check(const Symbol& phi, const GradedMatrix& a, double tol,
                             std::uint64_t seed) {
  GradedMatrix mapped = schur_apply(phi, a);
  NormEstimate lhs = operator_norm(mapped);
  double a_upper;
  std::string route;
  if (a.dim() < 256) {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(a.dim(), a.dim());
    for (int i = 0; i < a.dim(); ++i)
      for (const auto& [j, v] : a.rows()[i]) d(i, j) = v;
    a_upper = a.dim() == 0 ? 0.0
                           : Eigen::JacobiSVD<Eigen::MatrixXcd>(d).singularValues()(0);
    route = "svd";
  } else {
    a_upper = operator_norm_upper(a);
    route = "rowcol";
  }
  double phi2 = phi.l2_norm();
  nlohmann::json params{{"dim", a.dim()},
                        {"phi_l2", phi2},
                        {"a_upper", a_upper},
                        {"a_upper_route", route},
                        {"lhs_converged", lhs.converged}};
  return make_report("schur-bound", std::move(params), lhs.value, phi2 * a_upper, tol,
                     seed);
}

GradedMatrix random_graded(int dim, int level_max, Rng& rng) {
  if (dim < 1 || level_max < 0) throw UsageError("random_graded: bad dim or level_max");
  std::vector<int> levels(dim);
  for (int i = 0; i < dim; ++i)
    levels[i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(level_max) + 1));
  GradedMatrix a(dim, levels);
  double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a.set(i, j, scale * rng.complex_gaussian());
  return a;
}

}  // namespace gca
