#include "jetfields/jet_matrix.hpp"

#include "jetfields/errors.hpp"

#include <string>
#include <utility>

namespace jetfields {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::size_t> RationalMatrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && sgn((*this)(p, col)) == 0) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
    const Coefficient inv = 1 / (*this)(row, col);
    for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || sgn((*this)(i, col)) == 0) continue;
      const Coefficient f = (*this)(i, col);
      for (std::size_t j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Coefficient RationalMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionError("determinant of a non-square matrix");
  RationalMatrix a = *this;
  Coefficient det = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t p = col;
    while (p < rows_ && sgn(a(p, col)) == 0) ++p;
    if (p == rows_) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(p, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (sgn(a(i, col)) == 0) continue;
      const Coefficient f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < cols_; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = aug.reduce();
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix a = *this;
  return a.reduce().size();
}

std::vector<std::vector<Coefficient>> RationalMatrix::nullspace() const {
  RationalMatrix a = *this;
  const auto pivots = a.reduce();
  std::vector<char> is_pivot(cols_, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<Coefficient>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coefficient> v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

JetMatrix::JetMatrix(std::size_t dim, std::vector<Jet> entries) : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) throw DimensionError("jet matrix needs dimension >= 1");
  if (entries_.size() != dim_ * dim_)
    throw DimensionError("jet matrix of dimension " + std::to_string(dim_) + " needs " +
                         std::to_string(dim_ * dim_) + " entries, got " + std::to_string(entries_.size()));
  for (const auto& e : entries_) {
    if (e.variables() != entries_.front().variables())
      throw DimensionError("jet matrix entries have different variable counts");
    if (e.order() != entries_.front().order())
      throw PrecisionError("jet matrix entries have different orders");
  }
}

JetMatrix JetMatrix::identity(std::size_t dim, std::size_t n, int order) {
  return from_constant(RationalMatrix::identity(dim), n, order);
}

JetMatrix JetMatrix::from_constant(const RationalMatrix& m, std::size_t n, int order) {
  if (m.rows() != m.cols()) throw DimensionError("jet matrix must be square");
  std::vector<Jet> entries;
  entries.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(Jet::constant(n, order, m(i, j)));
  return JetMatrix(m.rows(), std::move(entries));
}

RationalMatrix JetMatrix::constant_part() const {
  RationalMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = at(i, j).constant_term();
  return m;
}

JetMatrix JetMatrix::truncate(int k) const {
  std::vector<Jet> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.truncate(k));
  return JetMatrix(dim_, std::move(out));
}

bool JetMatrix::equal_at(const JetMatrix& other, int k) const {
  if (dim_ != other.dim_) throw DimensionError("comparing jet matrices of different dimensions");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!entries_[i].equal_at(other.entries_[i], k)) return false;
  return true;
}

bool JetMatrix::operator==(const JetMatrix& other) const {
  if (dim_ != other.dim_) throw DimensionError("comparing jet matrices of different dimensions");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!(entries_[i] == other.entries_[i])) return false;
  return true;
}

namespace {

void require_same_dim(const JetMatrix& a, const JetMatrix& b) {
  if (a.dim() != b.dim())
    throw DimensionError("jet matrices of dimensions " + std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()));
}

template <typename Op>
JetMatrix entrywise(const JetMatrix& a, const JetMatrix& b, Op op) {
  require_same_dim(a, b);
  std::vector<Jet> out;
  out.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i) out.push_back(op(a.entries()[i], b.entries()[i]));
  return JetMatrix(a.dim(), std::move(out));
}

} // namespace

JetMatrix operator+(const JetMatrix& a, const JetMatrix& b) { return entrywise(a, b, add); }

JetMatrix operator-(const JetMatrix& a, const JetMatrix& b) { return entrywise(a, b, subtract); }

JetMatrix operator*(const JetMatrix& a, const JetMatrix& b) {
  require_same_dim(a, b);
  const std::size_t d = a.dim();
  const int k = std::min(a.order(), b.order());
  std::vector<Jet> out;
  out.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Jet s(a.variables(), k);
      for (std::size_t l = 0; l < d; ++l) s = s + a.at(i, l) * b.at(l, j);
      out.push_back(std::move(s));
    }
  return JetMatrix(d, std::move(out));
}

Jet determinant(const JetMatrix& m) {
  const std::size_t d = m.dim();
  if (d > 20) throw DimensionError("determinant: dimension too large for subset expansion");
  // minors[S] = det of rows 0..|S|-1 restricted to the column set S
  std::vector<std::optional<Jet>> minors(std::size_t{1} << d);
  minors[0] = Jet::constant(m.variables(), m.order(), 1);
  for (std::size_t s = 0; s < minors.size(); ++s) {
    if (!minors[s] || minors[s]->is_zero()) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(s));
    if (row == d) continue;
    for (std::size_t c = 0; c < d; ++c) {
      if (s & (std::size_t{1} << c)) continue;
      // sign of moving column c past the chosen columns to its right
      const int above = __builtin_popcountll(s >> (c + 1));
      Jet term = *minors[s] * m.at(row, c);
      if (above % 2) term = -term;
      auto& slot = minors[s | (std::size_t{1} << c)];
      slot = slot ? *slot + term : term;
    }
  }
  const auto& full = minors.back();
  return full ? *full : Jet(m.variables(), m.order());
}

JetMatrix matrix_inverse(const JetMatrix& m) {
  const auto c_inv = m.constant_part().inverse();
  if (!c_inv) throw DomainError("matrix is not invertible: its constant part is singular");
  const std::size_t n = m.variables();
  const int order = m.order();
  JetMatrix x = JetMatrix::from_constant(*c_inv, n, order);
  const JetMatrix two = JetMatrix::from_constant(
      [&] {
        RationalMatrix t = RationalMatrix::identity(m.dim());
        for (std::size_t i = 0; i < m.dim(); ++i) t(i, i) = 2;
        return t;
      }(),
      n, order);
  // X_0 is exact mod m; step k makes it exact mod m^(2^k)
  for (int correct = 1; correct < order + 1; correct *= 2) x = x * (two - m * x);
  return x;
}

} // namespace jetfields
