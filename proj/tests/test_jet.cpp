#include "gen.hpp"
#include "oracle.hpp"

#include "jetfields/errors.hpp"
#include "jetfields/jet.hpp"
#include "jetfields/monomial.hpp"

#include <doctest.h>

using namespace jetfields;

TEST_CASE("graded order and ranks") {
  const auto& b = *MonomialBasis::get(2, 3);
  CHECK(b.size() == 10);
  CHECK(b.exponents(0) == MultiIndex{0, 0});
  CHECK(b.exponents(1) == MultiIndex{1, 0});
  CHECK(b.exponents(2) == MultiIndex{0, 1});
  CHECK(b.exponents(3) == MultiIndex{2, 0});
  CHECK(b.exponents(4) == MultiIndex{1, 1});
  CHECK(b.exponents(5) == MultiIndex{0, 2});
  for (MonomialRank r = 0; r < b.size(); ++r) CHECK(rank_of(b.exponents(r)) == r);
  // ranks do not depend on the maximal degree
  const auto& big = *MonomialBasis::get(2, 6);
  for (MonomialRank r = 0; r < b.size(); ++r) CHECK(big.exponents(r) == b.exponents(r));
  CHECK(b.count_up_to(1) == 3);
}

TEST_CASE("construction and access") {
  const Jet f = Jet::from_terms(3, 4, {{{2, 1, 0}, 1}, {{0, 0, 1}, Coefficient(-3, 2)}});
  CHECK(f.coefficient({2, 1, 0}) == 1);
  CHECK(f.coefficient({0, 0, 1}) == Coefficient(-3, 2));
  CHECK(f.coefficient({1, 0, 0}) == 0);
  CHECK(f.terms().size() == 2);
  CHECK(f.constant_term() == 0);
  CHECK(Jet(2, 3).is_zero());
  CHECK(Jet::constant(2, 3, 5).is_constant());
  CHECK_THROWS_AS(Jet::from_terms(2, 2, {{{3, 0}, 1}}), PrecisionError);
  // repeated exponents are summed, and cancellation leaves nothing behind
  CHECK(Jet::from_terms(2, 2, {{{1, 0}, 1}, {{1, 0}, -1}}).is_zero());
}

TEST_CASE("precision is tracked") {
  const Jet f = Jet::variable(2, 4, 0);
  const Jet g = Jet::variable(2, 2, 1);
  CHECK((f + g).order() == 2);
  CHECK((f * g).order() == 2);
  CHECK(partial_derivative(f, 0).order() == 3);
  CHECK_THROWS_AS((void)(f == g), PrecisionError);
  CHECK(f.equal_at(f.truncate(2), 2));
  CHECK_THROWS_AS(partial_derivative(Jet::constant(2, 0, 1), 0), PrecisionError);
  CHECK_THROWS_AS(f + Jet::variable(3, 4, 0), DimensionError);
}

TEST_CASE("multiplication truncates") {
  const Jet x = Jet::variable(1, 3, 0);
  const Jet one = Jet::constant(1, 3, 1);
  const Jet p = (one + x) * (one + x) * (one + x) * (one + x);
  CHECK(p == Jet::from_terms(1, 3, {{{0}, 1}, {{1}, 4}, {{2}, 6}, {{3}, 4}}));
}

TEST_CASE("multiplication matches the convolution oracle") {
  gen::Gen g(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.between(1, 3));
    const int order = g.between(0, 5);
    const auto a = g.poly(n, order, 0, 8), b = g.poly(n, order, 0, 8);
    const Jet product = gen::Gen::to_jet(a, n, order) * gen::Gen::to_jet(b, n, order);
    REQUIRE(oracle::from_jet(product) == oracle::mul(a, b, order));
  }
}

TEST_CASE("ring axioms") {
  gen::Gen g(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.between(1, 3));
    const int order = g.between(0, 5);
    const Jet a = g.jet(n, order), b = g.jet(n, order), c = g.jet(n, order);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Jet::constant(n, order, 1) == a);
  }
}

TEST_CASE("Leibniz rule") {
  gen::Gen g(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.between(1, 3));
    const int order = g.between(1, 5);
    const Jet a = g.jet(n, order), b = g.jet(n, order);
    const std::size_t i = static_cast<std::size_t>(g.below(static_cast<int>(n)));
    CHECK(partial_derivative(a * b, i) == partial_derivative(a, i) * b.truncate(order - 1) +
                                              a.truncate(order - 1) * partial_derivative(b, i));
    CHECK(oracle::from_jet(partial_derivative(a, i)) == oracle::truncated(oracle::derivative(oracle::from_jet(a), i), order - 1));
  }
}

TEST_CASE("unit inverse") {
  gen::Gen g(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.between(1, 3));
    const int order = g.between(0, 5);
    Jet u = g.jet(n, order, 1) + Jet::constant(n, order, g.rational() + 7);
    CHECK(u * invert_unit(u) == Jet::constant(n, order, 1));
  }
  CHECK_THROWS_AS(invert_unit(Jet::variable(2, 3, 0)), DomainError);
  const Jet one_minus_x = Jet::constant(1, 4, 1) - Jet::variable(1, 4, 0);
  CHECK(invert_unit(one_minus_x) == Jet::from_terms(1, 4, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 1}}));
}

TEST_CASE("m-adic order") {
  CHECK(!m_adic_order(Jet(2, 3)).has_value());
  CHECK(m_adic_order(Jet::constant(2, 3, 2)) == 0u);
  CHECK(m_adic_order(Jet::from_terms(2, 3, {{{1, 1}, 1}, {{0, 3}, 2}})) == 2u);
}

TEST_CASE("substitution matches the monomial evaluation oracle") {
  gen::Gen g(15);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.between(1, 3));
    const int order = g.between(1, 5);
    const auto f = g.poly(n, order, 0, 6);
    std::vector<oracle::Poly> images;
    std::vector<Jet> jets;
    for (std::size_t i = 0; i < n; ++i) {
      images.push_back(g.poly(n, order, 1, 4));
      jets.push_back(gen::Gen::to_jet(images.back(), n, order));
    }
    REQUIRE(oracle::from_jet(substitute(gen::Gen::to_jet(f, n, order), jets)) ==
            oracle::substitute(f, n, images, order));
  }
}

TEST_CASE("substitution rejects images with a constant term") {
  std::vector<Jet> images{Jet::constant(1, 3, 1) + Jet::variable(1, 3, 0)};
  CHECK_THROWS_AS(Substituter{images}, DomainError);
}
