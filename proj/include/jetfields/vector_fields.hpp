#pragma once

#include "jetfields/derivation.hpp"
#include "jetfields/formal_map.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace jetfields {

enum class DivergenceKind { zero, constant, non_constant };

/// Exact verdict on div(d) at `verdict_order` = d.order() - 1. For
/// DivergenceKind::constant, `value` is the nonzero constant.
struct DivergenceClass {
  DivergenceKind kind;
  Coefficient value;
  int verdict_order;

  /// A verdict at order 0 only sees the constant term.
  bool weak() const noexcept { return verdict_order < 1; }
  bool is_constant() const noexcept { return kind != DivergenceKind::non_constant; }
};

DivergenceClass classify_divergence(const Derivation& d);

/// d = divergence_free + constant * H_1.
struct ConstantDivergenceSplit {
  Derivation divergence_free;
  Coefficient constant;
};

/// Splits a field of constant divergence c along Div^c = Div^0 + K H_1.
/// Throws DomainError when the divergence is not constant.
ConstantDivergenceSplit decompose_const_div(const Derivation& d);

/// s(d) = s d s^-1 = sum_i s(a_i) d_i' with d_i' = sum_j (J(s)^-1)_ij d_j,
/// so coefficient j of the result is sum_i s(a_i) (J(s)^-1)_ij. Needs an
/// automorphism of order >= 2; result order min(d.order(), s.order() - 1).
Derivation pushforward(const FormalMap& s, const Derivation& d);

/// [d_i, d] = 0 for every i at order d.order() - 1. Needs order >= 2.
bool centralizes_partials(const Derivation& d);

/// Fields of order N whose divergence is constant at order N - 1, found as
/// the kernel of the exact linear map "field -> non-constant part of div".
struct ConstantDivergenceSpace {
  std::size_t variables;
  int order;
  int verdict_order;
  std::size_t ambient_dimension; // n * #monomials of degree <= N
  std::vector<Derivation> basis;
};

ConstantDivergenceSpace constant_divergence_space(std::size_t n, int order);

/// The finite search set {d_i} + {H_i} + {x_j d_i : j != i} at `order`.
std::vector<Derivation> witness_basis(std::size_t n, int order);

/// First field d in witness_basis(n, s.order()) with
/// div(s(d)) != s(div d) at the common order, if any.
std::optional<Derivation> equivariance_witness(const FormalMap& s);

} // namespace jetfields
