#include "jetfields/derivation.hpp"

#include "jetfields/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace jetfields {

Derivation::Derivation(std::vector<Jet> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw DimensionError("a derivation needs at least one coefficient");
  const std::size_t n = coefficients_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (coefficients_[i].variables() != n)
      throw DimensionError("coefficient " + std::to_string(i + 1) + " has " +
                           std::to_string(coefficients_[i].variables()) + " variables, expected " +
                           std::to_string(n));
    if (coefficients_[i].order() != coefficients_.front().order())
      throw PrecisionError("derivation coefficients have different orders");
  }
}

Derivation Derivation::zero(std::size_t n, int order) {
  return Derivation(std::vector<Jet>(n, Jet(n, order)));
}

bool Derivation::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Jet& a) { return a.is_zero(); });
}

Derivation Derivation::truncate(int k) const {
  std::vector<Jet> out;
  for (const auto& a : coefficients_) out.push_back(a.truncate(k));
  return Derivation(std::move(out));
}

bool Derivation::equal_at(const Derivation& other, int k) const {
  if (variables() != other.variables()) throw DimensionError("comparing derivations in different dimensions");
  for (std::size_t i = 0; i < variables(); ++i)
    if (!coefficients_[i].equal_at(other.coefficients_[i], k)) return false;
  return true;
}

bool Derivation::operator==(const Derivation& other) const {
  if (variables() != other.variables()) throw DimensionError("comparing derivations in different dimensions");
  for (std::size_t i = 0; i < variables(); ++i)
    if (!(coefficients_[i] == other.coefficients_[i])) return false;
  return true;
}

Derivation partial_field(std::size_t i, std::size_t n, int order) {
  if (i >= n) throw DimensionError("field index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(n));
  std::vector<Jet> c(n, Jet(n, order));
  c[i] = Jet::constant(n, order, 1);
  return Derivation(std::move(c));
}

Derivation euler_field(std::size_t i, std::size_t n, int order) {
  if (i >= n) throw DimensionError("field index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(n));
  std::vector<Jet> c(n, Jet(n, order));
  c[i] = Jet::variable(n, order, i);
  return Derivation(std::move(c));
}

namespace {

void require_same_variables(const Derivation& a, const Derivation& b) {
  if (a.variables() != b.variables())
    throw DimensionError("derivations in " + std::to_string(a.variables()) + " and " +
                         std::to_string(b.variables()) + " variables");
}

} // namespace

Derivation operator+(const Derivation& a, const Derivation& b) {
  require_same_variables(a, b);
  std::vector<Jet> out;
  for (std::size_t i = 0; i < a.variables(); ++i) out.push_back(a.coefficient(i) + b.coefficient(i));
  return Derivation(std::move(out));
}

Derivation operator-(const Derivation& a, const Derivation& b) {
  require_same_variables(a, b);
  std::vector<Jet> out;
  for (std::size_t i = 0; i < a.variables(); ++i) out.push_back(a.coefficient(i) - b.coefficient(i));
  return Derivation(std::move(out));
}

Derivation operator*(const Coefficient& c, const Derivation& d) {
  std::vector<Jet> out;
  for (const auto& a : d.coefficients()) out.push_back(c * a);
  return Derivation(std::move(out));
}

Derivation operator*(const Jet& f, const Derivation& d) {
  std::vector<Jet> out;
  for (const auto& a : d.coefficients()) out.push_back(f * a);
  return Derivation(std::move(out));
}

Jet apply_derivation(const Derivation& d, const Jet& f) {
  if (f.variables() != d.variables())
    throw DimensionError("applying a derivation in " + std::to_string(d.variables()) +
                         " variables to a jet in " + std::to_string(f.variables()));
  if (f.order() < 1) throw PrecisionError("applying a derivation to an order-0 jet: precision exhausted");
  Jet out(f.variables(), std::min(d.order(), f.order() - 1));
  for (std::size_t i = 0; i < d.variables(); ++i) {
    if (d.coefficient(i).is_zero()) continue;
    out = out + d.coefficient(i) * partial_derivative(f, i);
  }
  return out;
}

Derivation bracket(const Derivation& d, const Derivation& e) {
  require_same_variables(d, e);
  if (d.order() < 1 || e.order() < 1) throw PrecisionError("bracket of order-0 fields: precision exhausted");
  std::vector<Jet> out;
  for (std::size_t j = 0; j < d.variables(); ++j)
    out.push_back(apply_derivation(d, e.coefficient(j)) - apply_derivation(e, d.coefficient(j)));
  return Derivation(std::move(out));
}

Jet divergence(const Derivation& d) {
  if (d.order() < 1) throw PrecisionError("divergence of an order-0 field: precision exhausted");
  Jet out(d.variables(), d.order() - 1);
  for (std::size_t i = 0; i < d.variables(); ++i) out = out + partial_derivative(d.coefficient(i), i);
  return out;
}

} // namespace jetfields
