#pragma once

#include "jetfields/derivation.hpp"
#include "jetfields/jet.hpp"
#include "jetfields/jet_matrix.hpp"

#include <cstddef>
#include <vector>

namespace jetfields {

/// A continuous endomorphism s of S_n, known through the images
/// x_i' = s(x_i) up to a common order. Every image lies in the maximal ideal
/// (zero constant term); s(f) = f(x_1', ..., x_n').
class FormalMap {
public:
  explicit FormalMap(std::vector<Jet> images);

  std::size_t variables() const noexcept { return images_.size(); }
  int order() const noexcept { return images_.front().order(); }
  const Jet& image(std::size_t i) const { return images_.at(i); }
  const std::vector<Jet>& images() const noexcept { return images_; }

  FormalMap truncate(int k) const;
  bool equal_at(const FormalMap& other, int k) const;
  /// Same contract as Jet::operator==.
  bool operator==(const FormalMap& other) const;

private:
  std::vector<Jet> images_;
};

/// Requires n >= 1 and order >= 1.
FormalMap identity_map(std::size_t n, int order);

/// x_i -> sum_j a(i, j) x_j.
FormalMap linear_map(const RationalMatrix& a, int order);

/// s(f), at order min(s.order(), f.order()).
Jet apply(const FormalMap& s, const Jet& f);
/// Entrywise s(M).
JetMatrix apply(const FormalMap& s, const JetMatrix& m);

/// The product s t as ring maps, (s t)(f) = s(t(f)); image i is s(t(x_i)).
FormalMap compose(const FormalMap& s, const FormalMap& t);

/// Entry (i, j) is the coefficient of x_j in s(x_i), so s(x) = A x + ...
RationalMatrix linear_part(const FormalMap& s);

/// s is invertible iff its linear part is.
bool is_automorphism(const FormalMap& s);

/// J(s) with entry (i, j) = d x_j' / d x_i: column j is the gradient of
/// s(x_j). This is the transpose of the usual analysis convention, and the
/// chain rule reads J(s t) = J(s) s(J(t)). Order s.order() - 1.
JetMatrix jacobian_matrix(const FormalMap& s);

/// det J(s), order s.order() - 1.
Jet jacobian_det(const FormalMap& s);

/// s is an automorphism whose Jacobian is a constant at order s.order() - 1.
/// Needs s.order() >= 2; at lower order the verdict would be vacuous and a
/// PrecisionError is thrown instead.
bool is_constant_jacobian(const FormalMap& s);

/// Two-sided inverse of an automorphism at s.order(). Solves
/// s(t(x)) = x by the fixed point t <- A^-1 (x - N(t)), where N = s - A is
/// the part of degree >= 2; each sweep fixes one more degree. Throws
/// DomainError for a singular linear part.
FormalMap invert(const FormalMap& s);

/// exp(d) = sum_k d^k / k! for a field whose coefficients all lie in m^2.
/// Such a field raises degrees, so the series is finite on jets and the
/// result keeps the order of d. Throws DomainError otherwise.
FormalMap exp_flow(const Derivation& d);

} // namespace jetfields
