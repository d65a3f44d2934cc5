#pragma once

#include "jetfields/coefficient.hpp"
#include "jetfields/monomial.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace jetfields {

struct Term {
  MonomialRank rank;
  Coefficient coef;
};

/// A power series in n variables known modulo m^(order+1), i.e. up to and
/// including total degree `order`. Stored sparsely: terms sorted by rank,
/// no zero coefficients, no degree above the order.
///
/// Binary operations take the smaller of the two orders. Variable indices in
/// this API are 0-based.
class Jet {
public:
  /// The zero jet.
  Jet(std::size_t n, int order);

  static Jet constant(std::size_t n, int order, const Coefficient& c);
  static Jet variable(std::size_t n, int order, std::size_t i);
  static Jet monomial(std::size_t n, int order, const MultiIndex& e, const Coefficient& c = 1);

  /// Repeated exponents are summed. A nonzero term of degree above `order`
  /// is rejected with PrecisionError.
  static Jet from_terms(std::size_t n, int order,
                        const std::vector<std::pair<MultiIndex, Coefficient>>& terms);

  /// Trusted constructor for kernels: `terms` must already be canonical.
  static Jet from_canonical(std::size_t n, int order, std::vector<Term> terms);

  std::size_t variables() const noexcept { return n_; }
  int order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const MonomialBasis& basis() const { return *basis_; }
  const MultiIndex& exponents(const Term& t) const { return basis_->exponents(t.rank); }
  unsigned degree(const Term& t) const { return basis_->degree(t.rank); }

  Coefficient coefficient(const MultiIndex& e) const;
  Coefficient constant_term() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  /// No term of positive degree.
  bool is_constant() const;

  /// Forget every term of degree above k (k <= order()).
  Jet truncate(int k) const;

  /// Coefficients of degree <= k agree. Needs k <= both orders.
  bool equal_at(const Jet& other, int k) const;

  /// Exact equality of jets with the same order. Comparing jets of
  /// different orders throws PrecisionError; use equal_at() instead.
  bool operator==(const Jet& other) const;

private:
  Jet(std::size_t n, int order, std::shared_ptr<const MonomialBasis> basis, std::vector<Term> terms);

  std::size_t n_;
  int order_;
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<Term> terms_;
};

Jet add(const Jet& f, const Jet& g);
Jet subtract(const Jet& f, const Jet& g);
Jet negate(const Jet& f);
Jet scale(const Jet& f, const Coefficient& c);
/// Truncated product; order min(f.order(), g.order()).
Jet mul(const Jet& f, const Jet& g);

inline Jet operator+(const Jet& f, const Jet& g) { return add(f, g); }
inline Jet operator-(const Jet& f, const Jet& g) { return subtract(f, g); }
inline Jet operator-(const Jet& f) { return negate(f); }
inline Jet operator*(const Jet& f, const Jet& g) { return mul(f, g); }
inline Jet operator*(const Coefficient& c, const Jet& f) { return scale(f, c); }

/// d f / d x_i, one order lower than f.
Jet partial_derivative(const Jet& f, std::size_t i);

/// Inverse of a jet with nonzero constant term, at f.order().
Jet invert_unit(const Jet& f);

/// Lowest degree carrying a nonzero coefficient; nullopt for the zero jet.
std::optional<unsigned> m_adic_order(const Jet& f);

/// Evaluates jets at a fixed tuple of images (x_i -> images[i]). Images must
/// lie in the maximal ideal, which makes the truncated result exact. The
/// evaluator caches products of images, so reuse one instance when the same
/// images are substituted into many jets.
class Substituter {
public:
  explicit Substituter(std::vector<Jet> images);

  std::size_t variables() const noexcept { return n_; }
  int order() const noexcept { return order_; }

  /// f(images), at order min(f.order(), order()).
  Jet operator()(const Jet& f);

private:
  const Jet& power(MonomialRank r);

  std::size_t n_;
  int order_;
  std::vector<Jet> images_;
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<std::optional<Jet>> powers_;
};

Jet substitute(const Jet& f, std::span<const Jet> images);

} // namespace jetfields
