#include "jetfields/formal_map.hpp"

#include "jetfields/errors.hpp"

#include <string>
#include <utility>

namespace jetfields {

FormalMap::FormalMap(std::vector<Jet> images) : images_(std::move(images)) {
  if (images_.empty()) throw DimensionError("a formal map needs at least one image");
  const std::size_t n = images_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Jet& img = images_[i];
    if (img.variables() != n)
      throw DimensionError("image of x" + std::to_string(i + 1) + " has " + std::to_string(img.variables()) +
                           " variables, expected " + std::to_string(n));
    if (img.order() != images_.front().order())
      throw PrecisionError("images of a formal map have different orders");
    if (sgn(img.constant_term()) != 0)
      throw DomainError("image of x" + std::to_string(i + 1) +
                        " has a nonzero constant term; the map is not continuous");
  }
}

FormalMap FormalMap::truncate(int k) const {
  std::vector<Jet> out;
  for (const auto& img : images_) out.push_back(img.truncate(k));
  return FormalMap(std::move(out));
}

bool FormalMap::equal_at(const FormalMap& other, int k) const {
  if (variables() != other.variables()) throw DimensionError("comparing maps in different dimensions");
  for (std::size_t i = 0; i < variables(); ++i)
    if (!images_[i].equal_at(other.images_[i], k)) return false;
  return true;
}

bool FormalMap::operator==(const FormalMap& other) const {
  if (variables() != other.variables()) throw DimensionError("comparing maps in different dimensions");
  for (std::size_t i = 0; i < variables(); ++i)
    if (!(images_[i] == other.images_[i])) return false;
  return true;
}

FormalMap identity_map(std::size_t n, int order) {
  if (n < 1) throw DimensionError("identity map needs n >= 1");
  if (order < 1) throw PrecisionError("identity map needs order >= 1");
  std::vector<Jet> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Jet::variable(n, order, i));
  return FormalMap(std::move(images));
}

FormalMap linear_map(const RationalMatrix& a, int order) {
  if (a.rows() != a.cols() || a.rows() == 0) throw DimensionError("linear map needs a nonempty square matrix");
  const std::size_t n = a.rows();
  std::vector<Jet> images;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<MultiIndex, Coefficient>> terms;
    for (std::size_t j = 0; j < n; ++j) {
      MultiIndex e(n, 0);
      e[j] = 1;
      terms.emplace_back(std::move(e), a(i, j));
    }
    images.push_back(Jet::from_terms(n, order, terms));
  }
  return FormalMap(std::move(images));
}

Jet apply(const FormalMap& s, const Jet& f) { return Substituter(s.images())(f); }

JetMatrix apply(const FormalMap& s, const JetMatrix& m) {
  Substituter sub(s.images());
  std::vector<Jet> out;
  out.reserve(m.entries().size());
  for (const auto& e : m.entries()) out.push_back(sub(e));
  return JetMatrix(m.dim(), std::move(out));
}

FormalMap compose(const FormalMap& s, const FormalMap& t) {
  if (s.variables() != t.variables())
    throw DimensionError("composing maps in " + std::to_string(s.variables()) + " and " +
                         std::to_string(t.variables()) + " variables");
  Substituter sub(s.images());
  std::vector<Jet> out;
  out.reserve(t.variables());
  for (const auto& img : t.images()) out.push_back(sub(img));
  return FormalMap(std::move(out));
}

RationalMatrix linear_part(const FormalMap& s) {
  const std::size_t n = s.variables();
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    MultiIndex e(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      e[j] = 1;
      a(i, j) = s.order() >= 1 ? s.image(i).coefficient(e) : Coefficient(0);
      e[j] = 0;
    }
  }
  return a;
}

bool is_automorphism(const FormalMap& s) { return linear_part(s).is_invertible(); }

JetMatrix jacobian_matrix(const FormalMap& s) {
  if (s.order() < 1) throw PrecisionError("Jacobian of an order-0 map: precision exhausted");
  const std::size_t n = s.variables();
  std::vector<Jet> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries.push_back(partial_derivative(s.image(j), i));
  return JetMatrix(n, std::move(entries));
}

Jet jacobian_det(const FormalMap& s) { return determinant(jacobian_matrix(s)); }

bool is_constant_jacobian(const FormalMap& s) {
  if (s.order() < 2)
    throw PrecisionError("constant-Jacobian test needs order >= 2, got " + std::to_string(s.order()));
  if (!is_automorphism(s)) return false;
  return jacobian_det(s).is_constant();
}

FormalMap invert(const FormalMap& s) {
  const RationalMatrix a = linear_part(s);
  const auto a_inv = a.inverse();
  if (!a_inv) throw DomainError("map has a singular linear part and is not an automorphism");
  const std::size_t n = s.variables();
  const int order = s.order();

  const FormalMap linear = linear_map(a, order);
  std::vector<Jet> higher; // N = s - A, every image in m^2
  for (std::size_t i = 0; i < n; ++i) higher.push_back(s.image(i) - linear.image(i));

  const FormalMap a_inv_map = linear_map(*a_inv, order);
  std::vector<Jet> t = a_inv_map.images();
  for (int sweep = 1; sweep < order; ++sweep) {
    Substituter at_t(t);
    std::vector<Jet> rhs; // x - N(t)
    for (std::size_t i = 0; i < n; ++i) rhs.push_back(Jet::variable(n, order, i) - at_t(higher[i]));
    Substituter by_rhs(rhs);
    for (std::size_t i = 0; i < n; ++i) t[i] = by_rhs(a_inv_map.image(i));
  }
  return FormalMap(std::move(t));
}

FormalMap exp_flow(const Derivation& d) {
  const std::size_t n = d.variables();
  const int order = d.order();
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = m_adic_order(d.coefficient(i));
    if (v && *v < 2)
      throw DomainError("coefficient " + std::to_string(i + 1) + " has m-adic order " + std::to_string(*v) +
                        " < 2; the flow is not nilpotent on jets");
  }
  // One application of d at full order. d_j f loses its top degree, but
  // a_j is in m^2, so the lost terms only reach degree >= order + 1.
  auto step = [&](const Jet& f) {
    Jet out(n, order);
    for (std::size_t j = 0; j < n; ++j) {
      if (d.coefficient(j).is_zero() || order < 1) continue;
      const Jet df = partial_derivative(f, j);
      out = out + d.coefficient(j) * Jet::from_canonical(n, order, df.terms());
    }
    return out;
  };
  std::vector<Jet> images;
  for (std::size_t i = 0; i < n; ++i) {
    Jet term = Jet::variable(n, order, i);
    Jet sum = term;
    for (int k = 1; !term.is_zero(); ++k) {
      term = Coefficient(1, k) * step(term);
      sum = sum + term;
    }
    images.push_back(std::move(sum));
  }
  return FormalMap(std::move(images));
}

} // namespace jetfields
