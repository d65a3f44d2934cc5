#include "jetfields/vector_fields.hpp"

#include "jetfields/errors.hpp"
#include "jetfields/jet_matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace jetfields {

DivergenceClass classify_divergence(const Derivation& d) {
  const Jet div = divergence(d);
  if (!div.is_constant()) return {DivergenceKind::non_constant, 0, div.order()};
  const Coefficient c = div.constant_term();
  return {sgn(c) == 0 ? DivergenceKind::zero : DivergenceKind::constant, c, div.order()};
}

ConstantDivergenceSplit decompose_const_div(const Derivation& d) {
  const DivergenceClass cls = classify_divergence(d);
  if (!cls.is_constant()) throw DomainError("field does not have constant divergence");
  const Derivation h1 = euler_field(0, d.variables(), d.order());
  return {d - cls.value * h1, cls.value};
}

Derivation pushforward(const FormalMap& s, const Derivation& d) {
  if (s.variables() != d.variables())
    throw DimensionError("pushing a field in " + std::to_string(d.variables()) + " variables along a map in " +
                         std::to_string(s.variables()));
  if (s.order() < 2) throw PrecisionError("pushforward needs a map of order >= 2");
  const JetMatrix j_inv = matrix_inverse(jacobian_matrix(s)); // throws for a non-automorphism
  const std::size_t n = s.variables();
  Substituter sub(s.images());
  std::vector<Jet> moved;
  for (const auto& a : d.coefficients()) moved.push_back(sub(a));
  const int k = std::min(d.order(), s.order() - 1);
  std::vector<Jet> out;
  for (std::size_t j = 0; j < n; ++j) {
    Jet b(n, k);
    for (std::size_t i = 0; i < n; ++i) b = b + moved[i] * j_inv.at(i, j);
    out.push_back(std::move(b));
  }
  return Derivation(std::move(out));
}

bool centralizes_partials(const Derivation& d) {
  if (d.order() < 2) throw PrecisionError("centralizer test needs order >= 2");
  const std::size_t n = d.variables();
  bool commutes = true;
  for (std::size_t i = 0; i < n && commutes; ++i)
    commutes = bracket(partial_field(i, n, d.order()), d).is_zero();
  if (commutes) {
    // the centraliser of the d_i is the constant fields
    const int k = d.order() - 1;
    for (const auto& a : d.coefficients())
      if (!a.truncate(k).is_constant())
        throw std::logic_error("field commutes with every d_i but has a non-constant coefficient");
  }
  return commutes;
}

ConstantDivergenceSpace constant_divergence_space(std::size_t n, int order) {
  if (order < 1) throw PrecisionError("constant-divergence space needs order >= 1");
  const auto basis = MonomialBasis::get(n, order);
  const std::size_t m = basis->size();
  const std::size_t rows = basis->count_up_to(order - 1) - 1; // degrees 1..order-1
  RationalMatrix a(rows, n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (MonomialRank r = 0; r < m; ++r) {
      // div(x^e d_i) = e_i x^(e - e_i)
      const MonomialRank lowered = basis->lower(r, i);
      if (lowered == MonomialBasis::npos || lowered == 0) continue;
      a(lowered - 1, i * m + r) = basis->exponents(r)[i];
    }
  ConstantDivergenceSpace out{n, order, order - 1, n * m, {}};
  for (const auto& v : a.nullspace()) {
    std::vector<Jet> coeffs;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Term> terms;
      for (MonomialRank r = 0; r < m; ++r)
        if (sgn(v[i * m + r]) != 0) terms.push_back(Term{r, v[i * m + r]});
      coeffs.push_back(Jet::from_canonical(n, order, std::move(terms)));
    }
    out.basis.emplace_back(std::move(coeffs));
  }
  return out;
}

std::vector<Derivation> witness_basis(std::size_t n, int order) {
  std::vector<Derivation> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(partial_field(i, n, order));
  for (std::size_t i = 0; i < n; ++i) out.push_back(euler_field(i, n, order));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<Jet> c(n, Jet(n, order));
      c[i] = Jet::variable(n, order, j);
      out.emplace_back(std::move(c));
    }
  return out;
}

std::optional<Derivation> equivariance_witness(const FormalMap& s) {
  for (const auto& d : witness_basis(s.variables(), s.order())) {
    const Jet lhs = divergence(pushforward(s, d));
    const Jet rhs = apply(s, divergence(d));
    if (!lhs.equal_at(rhs, std::min(lhs.order(), rhs.order()))) return d;
  }
  return std::nullopt;
}

} // namespace jetfields
