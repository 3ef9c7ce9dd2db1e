#ifndef GCA_ALGEBRA_HPP
#define GCA_ALGEBRA_HPP

#include <complex>
#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gca/words.hpp"

namespace gca {

using Complex = std::complex<double>;

// Finitely supported x: G -> C, the dense-subalgebra element sum x(g) lambda_g.
// Zero coefficients are never stored, so support() is exactly the nonzeros and
// the canonical map order makes iteration (and serialization) deterministic.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(GroupSpec spec) : spec_(spec) {}

  static GroupAlgebraElement delta(const GroupElement& g, Complex c = 1.0);

  const GroupSpec& spec() const { return spec_; }
  const std::map<GroupElement, Complex>& coeffs() const { return coeffs_; }

  Complex at(const GroupElement& g) const;
  Complex at_identity() const { return at(GroupElement(spec_)); }

  // Adds c to the coefficient; erases the slot if the sum is exactly zero.
  void add(const GroupElement& g, Complex c);
  void set(const GroupElement& g, Complex c);

  bool empty() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }
  long long support_radius() const;

  double l1_norm() const;
  double l2_norm() const;
  // sum |x(g)| l(g)^k, the weighted l1 bound used all over the operator layer.
  double weighted_l1(int k) const;

  GroupAlgebraElement& operator*=(Complex c);
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);

  // x*(g) = conj(x(g^-1)); lambda(x)* = lambda(x*).
  GroupAlgebraElement adjoint() const;

  // Entries with l(g) >= cutoff.
  GroupAlgebraElement tail(long long cutoff) const;

  bool is_scalar() const;  // supported on {e} or empty
  bool is_self_adjoint(double tol = 1e-12) const;

  // JSON object word -> [re, im]. Zero coefficients and duplicate (post-
  // reduction) keys are rejected on load.
  nlohmann::json to_json() const;
  static GroupAlgebraElement from_json(GroupSpec spec, const nlohmann::json& j);

 private:
  GroupSpec spec_;
  std::map<GroupElement, Complex> coeffs_;
};

// Full (untruncated) convolution: (a*b)(g) = sum_h a(h) b(h^-1 g).
GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

}  // namespace gca

#endif
