#pragma once

#include "jetfields/coefficient.hpp"
#include "jetfields/jet.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace jetfields {

/// Dense matrix over Q with exact elimination.
class RationalMatrix {
public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Coefficient& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Coefficient& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Coefficient determinant() const;
  bool is_invertible() const { return sgn(determinant()) != 0; }
  /// nullopt when singular.
  std::optional<RationalMatrix> inverse() const;
  std::size_t rank() const;
  /// Basis of { v : M v = 0 }, one vector per free column of the reduced
  /// row echelon form.
  std::vector<std::vector<Coefficient>> nullspace() const;

  bool operator==(const RationalMatrix& other) const = default;

private:
  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> reduce();

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coefficient> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Square matrix of jets sharing one variable count and one order.
class JetMatrix {
public:
  /// `entries` in row-major order, dim * dim of them.
  JetMatrix(std::size_t dim, std::vector<Jet> entries);

  static JetMatrix identity(std::size_t dim, std::size_t n, int order);
  static JetMatrix from_constant(const RationalMatrix& m, std::size_t n, int order);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t variables() const noexcept { return entries_.front().variables(); }
  int order() const noexcept { return entries_.front().order(); }
  const Jet& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  const std::vector<Jet>& entries() const noexcept { return entries_; }

  /// Degree-0 coefficients.
  RationalMatrix constant_part() const;
  JetMatrix truncate(int k) const;
  bool equal_at(const JetMatrix& other, int k) const;
  /// Same contract as Jet::operator==.
  bool operator==(const JetMatrix& other) const;

private:
  std::size_t dim_;
  std::vector<Jet> entries_;
};

JetMatrix operator+(const JetMatrix& a, const JetMatrix& b);
JetMatrix operator-(const JetMatrix& a, const JetMatrix& b);
JetMatrix operator*(const JetMatrix& a, const JetMatrix& b);

/// Determinant by Laplace expansion memoised over column subsets
/// (2^dim * dim jet products); valid over any commutative jet ring.
Jet determinant(const JetMatrix& m);

/// Inverse in GL(S_n) mod m^(order+1). Starts from the inverse of the
/// constant part and runs Newton steps X <- X (2I - M X); each step doubles
/// the number of correct degrees. Throws DomainError when the constant part
/// is singular.
JetMatrix matrix_inverse(const JetMatrix& m);

} // namespace jetfields
