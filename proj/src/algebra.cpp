#include "gca/algebra.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "gca/errors.hpp"

namespace gca {

GroupAlgebraElement GroupAlgebraElement::delta(const GroupElement& g, Complex c) {
  GroupAlgebraElement x(g.spec());
  x.add(g, c);
  return x;
}

Complex GroupAlgebraElement::at(const GroupElement& g) const {
  auto it = coeffs_.find(g);
  return it == coeffs_.end() ? Complex(0.0) : it->second;
}

void GroupAlgebraElement::add(const GroupElement& g, Complex c) {
  if (!(g.spec() == spec_)) throw UsageError("coefficient for a different group");
  auto [it, inserted] = coeffs_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0)) coeffs_.erase(it);
    return;
  }
  if (it->second == Complex(0.0)) coeffs_.erase(it);
}

void GroupAlgebraElement::set(const GroupElement& g, Complex c) {
  if (!(g.spec() == spec_)) throw UsageError("coefficient for a different group");
  if (c == Complex(0.0))
    coeffs_.erase(g);
  else
    coeffs_[g] = c;
}

long long GroupAlgebraElement::support_radius() const {
  long long r = 0;
  for (const auto& [g, c] : coeffs_) r = std::max(r, g.length());
  return r;
}

double GroupAlgebraElement::l1_norm() const {
  double s = 0;
  for (const auto& [g, c] : coeffs_) s += std::abs(c);
  return s;
}

double GroupAlgebraElement::l2_norm() const {
  double s = 0;
  for (const auto& [g, c] : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

double GroupAlgebraElement::weighted_l1(int k) const {
  double s = 0;
  for (const auto& [g, c] : coeffs_)
    s += std::abs(c) * std::pow(static_cast<double>(g.length()), k);
  return s;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(Complex c) {
  if (c == Complex(0.0)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [g, v] : coeffs_) v *= c;
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  if (!(other.spec_ == spec_)) throw UsageError("adding elements of different groups");
  for (const auto& [g, c] : other.coeffs_) add(g, c);
  return *this;
}

GroupAlgebraElement GroupAlgebraElement::adjoint() const {
  GroupAlgebraElement out(spec_);
  for (const auto& [g, c] : coeffs_) out.add(g.inverse(), std::conj(c));
  return out;
}

GroupAlgebraElement GroupAlgebraElement::tail(long long cutoff) const {
  GroupAlgebraElement out(spec_);
  for (const auto& [g, c] : coeffs_)
    if (g.length() >= cutoff) out.set(g, c);
  return out;
}

bool GroupAlgebraElement::is_scalar() const {
  return coeffs_.empty() ||
         (coeffs_.size() == 1 && coeffs_.begin()->first.is_identity());
}

bool GroupAlgebraElement::is_self_adjoint(double tol) const {
  for (const auto& [g, c] : coeffs_)
    if (std::abs(c - std::conj(at(g.inverse()))) > tol) return false;
  return true;
}

nlohmann::json GroupAlgebraElement::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [g, c] : coeffs_) j[g.str()] = {c.real(), c.imag()};
  return j;
}

GroupAlgebraElement GroupAlgebraElement::from_json(GroupSpec spec, const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("coefficients must be a JSON object");
  GroupAlgebraElement x(spec);
  for (const auto& [key, val] : j.items()) {
    if (!val.is_array() || val.size() != 2 || !val[0].is_number() || !val[1].is_number())
      throw UsageError("coefficient of '" + key + "' must be [re, im]");
    Complex c(val[0].get<double>(), val[1].get<double>());
    if (c == Complex(0.0))
      throw UsageError("zero coefficient at '" + key + "' rejected");
    GroupElement g = GroupElement::parse(spec, key);
    if (x.coeffs_.count(g))
      throw UsageError("duplicate support element '" + g.str() + "' after reduction");
    x.set(g, c);
  }
  return x;
}

GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (!(a.spec() == b.spec())) throw UsageError("convolving elements of different groups");
  GroupAlgebraElement out(a.spec());
  for (const auto& [h, ch] : a.coeffs())
    for (const auto& [g, cg] : b.coeffs()) out.add(multiply(h, g), ch * cg);
  return out;
}

}  // namespace gca
