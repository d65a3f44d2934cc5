#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace jetfields {

/// Exponent vector of a monomial x1^e1 ... xn^en.
using MultiIndex = std::vector<unsigned>;

/// Position of a monomial in the graded order: lower total degree first,
/// then lexicographically descending exponents (x1 before x2, x1^2 before
/// x1*x2 before x2^2). Ranks do not depend on any truncation order.
using MonomialRank = std::uint32_t;

unsigned degree(const MultiIndex& e);

/// True iff `a` comes strictly before `b` in the graded order.
bool graded_less(const MultiIndex& a, const MultiIndex& b);

/// Rank of `e` among all monomials in e.size() variables.
MonomialRank rank_of(const MultiIndex& e);

/// All monomials in n variables of degree at most `max_degree`, listed in
/// rank order, with the lookup tables the jet kernels need. Instances are
/// immutable and shared; obtain them through get().
class MonomialBasis {
public:
  static constexpr MonomialRank npos = static_cast<MonomialRank>(-1);

  static std::shared_ptr<const MonomialBasis> get(std::size_t n, int max_degree);

  std::size_t variables() const noexcept { return n_; }
  int max_degree() const noexcept { return max_degree_; }
  std::size_t size() const noexcept { return exponents_.size(); }

  const MultiIndex& exponents(MonomialRank r) const { return exponents_[r]; }
  unsigned degree(MonomialRank r) const { return degrees_[r]; }

  /// Number of monomials of degree <= d (d may be negative).
  std::size_t count_up_to(int d) const;

  /// Rank of the product monomial, or npos when its degree exceeds
  /// max_degree().
  MonomialRank product(MonomialRank a, MonomialRank b) const;

  /// Rank of e - e_i where e = exponents(r); npos when e_i = 0.
  MonomialRank lower(MonomialRank r, std::size_t i) const { return lower_[r * n_ + i]; }

  /// Rank of e + e_i, or npos past max_degree().
  MonomialRank raise(MonomialRank r, std::size_t i) const { return raise_[r * n_ + i]; }

  MonomialBasis(std::size_t n, int max_degree);

private:
  std::size_t n_;
  int max_degree_;
  std::vector<MultiIndex> exponents_;
  std::vector<unsigned> degrees_;
  std::vector<std::size_t> degree_offsets_;
  std::vector<MonomialRank> lower_;
  std::vector<MonomialRank> raise_;
  std::vector<MonomialRank> products_; // size()^2 when small enough, else empty
};

} // namespace jetfields
