#include "gen.hpp"
#include "oracle.hpp"

#include "jetfields/errors.hpp"
#include "jetfields/jet_matrix.hpp"

#include <doctest.h>

using namespace jetfields;

TEST_CASE("rational matrices") {
  RationalMatrix a(2, 2);
  a(0, 0) = 1; a(0, 1) = 2;
  a(1, 0) = 3; a(1, 1) = 4;
  CHECK(a.determinant() == -2);
  CHECK(a.rank() == 2);
  const auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK(a * *inv == RationalMatrix::identity(2));

  RationalMatrix s(2, 3);
  s(0, 0) = 1; s(0, 1) = 2; s(0, 2) = 3;
  s(1, 0) = 2; s(1, 1) = 4; s(1, 2) = 6;
  CHECK(s.rank() == 1);
  const auto kernel = s.nullspace();
  CHECK(kernel.size() == 2);
  for (const auto& v : kernel) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  CHECK(!RationalMatrix(2, 2).inverse().has_value());
}

TEST_CASE("jet determinant matches the permutation expansion") {
  gen::Gen g(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(g.between(1, 4));
    const std::size_t n = static_cast<std::size_t>(g.between(1, 3));
    const int order = g.between(0, 4);
    std::vector<Jet> entries;
    std::vector<std::vector<oracle::Poly>> rows(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        rows[i].push_back(g.poly(n, order, 0, 3));
        entries.push_back(gen::Gen::to_jet(rows[i].back(), n, order));
      }
    const Jet det = determinant(JetMatrix(dim, entries));
    REQUIRE(oracle::from_jet(det) == oracle::determinant(rows, n, order));
  }
}

TEST_CASE("jet matrix inverse") {
  gen::Gen g(22);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(g.between(1, 3));
    const std::size_t n = static_cast<std::size_t>(g.between(1, 3));
    const int order = g.between(0, 5);
    std::vector<Jet> entries;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        entries.push_back(g.jet(n, order, 1, 3) + Jet::constant(n, order, i == j ? g.between(1, 3) : 0));
    const JetMatrix m(dim, entries);
    const JetMatrix inv = matrix_inverse(m);
    CHECK(m * inv == JetMatrix::identity(dim, n, order));
    CHECK(inv * m == JetMatrix::identity(dim, n, order));
  }
  const JetMatrix singular(2, {Jet::variable(2, 3, 0), Jet(2, 3), Jet(2, 3), Jet::constant(2, 3, 1)});
  CHECK_THROWS_AS(matrix_inverse(singular), DomainError);
}
