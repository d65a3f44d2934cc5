#pragma once

#include "jetfields/jet.hpp"

#include <cstddef>
#include <vector>

namespace jetfields {

/// Formal vector field a_1 d_1 + ... + a_n d_n, with a_i = d * x_i. All
/// coefficient jets share one variable count n and one order.
class Derivation {
public:
  explicit Derivation(std::vector<Jet> coefficients);

  static Derivation zero(std::size_t n, int order);

  std::size_t variables() const noexcept { return coefficients_.size(); }
  int order() const noexcept { return coefficients_.front().order(); }
  const Jet& coefficient(std::size_t i) const { return coefficients_.at(i); }
  const std::vector<Jet>& coefficients() const noexcept { return coefficients_; }

  bool is_zero() const;
  Derivation truncate(int k) const;
  bool equal_at(const Derivation& other, int k) const;
  /// Same contract as Jet::operator==.
  bool operator==(const Derivation& other) const;

private:
  std::vector<Jet> coefficients_;
};

/// d_i (0-based i).
Derivation partial_field(std::size_t i, std::size_t n, int order);
/// H_i = x_i d_i (0-based i).
Derivation euler_field(std::size_t i, std::size_t n, int order);

Derivation operator+(const Derivation& a, const Derivation& b);
Derivation operator-(const Derivation& a, const Derivation& b);
Derivation operator*(const Coefficient& c, const Derivation& d);
/// The field f * d (multiplication of every coefficient by f).
Derivation operator*(const Jet& f, const Derivation& d);

/// d * f = sum a_i df/dx_i, at order min(d.order(), f.order() - 1).
Jet apply_derivation(const Derivation& d, const Jet& f);

/// [d, e] = d e - e d; coefficient j is d*(e_j) - e*(d_j).
Derivation bracket(const Derivation& d, const Derivation& e);

/// div(d) = sum d a_i / d x_i, one order below d.
Jet divergence(const Derivation& d);

} // namespace jetfields
