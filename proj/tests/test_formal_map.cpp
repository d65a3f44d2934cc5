#include "gen.hpp"
#include "oracle.hpp"

#include "jetfields/errors.hpp"
#include "jetfields/formal_map.hpp"
#include "jetfields/random.hpp"
#include "jetfields/text.hpp"

#include <doctest.h>

using namespace jetfields;

namespace {

FormalMap sigma(int order) { return parse_map("x1 -> x1; x2 -> x2 + x1^2", 2, order); }

} // namespace

TEST_CASE("worked Jacobian") {
  const FormalMap s = sigma(3);
  const JetMatrix j = jacobian_matrix(s);
  CHECK(format_series(j.at(0, 0)) == "1");
  CHECK(format_series(j.at(0, 1)) == "2*x1");
  CHECK(format_series(j.at(1, 0)) == "0");
  CHECK(format_series(j.at(1, 1)) == "1");
  CHECK(format_series(jacobian_det(s)) == "1");
  CHECK(is_constant_jacobian(s));
}

TEST_CASE("worked composite and inverse") {
  const FormalMap tau = parse_map("x1 -> x1 + x2^2; x2 -> x2", 2, 3);
  const FormalMap st = compose(sigma(3), tau);
  CHECK(format_series(st.image(0)) == "x1 + x2^2 + 2*x1^2*x2");
  CHECK(format_map(invert(sigma(4))) == "x1 -> x1; x2 -> x2 - x1^2");
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(FormalMap({Jet::constant(1, 3, 1) + Jet::variable(1, 3, 0)}), DomainError);
  CHECK_THROWS_AS(FormalMap({Jet::variable(2, 3, 0)}), DimensionError);
  CHECK_THROWS_AS(invert(parse_map("x1 -> x1^2; x2 -> x2", 2, 3)), DomainError);
  CHECK_THROWS_AS(is_constant_jacobian(identity_map(2, 1)), PrecisionError);
  CHECK_THROWS_AS(identity_map(2, 0), PrecisionError);
}

TEST_CASE("composition is associative and substitution agrees with the oracle") {
  gen::Gen g(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.between(1, 3));
    const int order = g.between(1, 5);
    const FormalMap a = g.automorphism(n, order), b = g.automorphism(n, order), c = g.automorphism(n, order);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    const FormalMap ab = compose(a, b);
    std::vector<oracle::Poly> images;
    // a acts as a substitution on the images of b
    for (const auto& f : a.images()) images.push_back(oracle::from_jet(f));
    for (std::size_t i = 0; i < n; ++i)
      CHECK(oracle::from_jet(ab.image(i)) == oracle::substitute(oracle::from_jet(b.image(i)), n, images, order));
  }
}

TEST_CASE("group law") {
  gen::Gen g(32);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.between(1, 3));
    const int order = g.between(1, 5);
    const FormalMap s = g.automorphism(n, order);
    const FormalMap s_inv = invert(s);
    CHECK(compose(s, s_inv) == identity_map(n, order));
    CHECK(compose(s_inv, s) == identity_map(n, order));
  }
}

TEST_CASE("linear maps") {
  RationalMatrix a(2, 2);
  a(0, 0) = 2; a(0, 1) = 1;
  a(1, 0) = 0; a(1, 1) = 3;
  const FormalMap l = linear_map(a, 3);
  CHECK(format_map(l) == "x1 -> 2*x1 + x2; x2 -> 3*x2");
  CHECK(linear_part(l) == a);
  CHECK(jacobian_det(l) == Jet::constant(2, 2, 6));
  CHECK(is_automorphism(l));
}

TEST_CASE("chain rule for Jacobians") {
  gen::Gen g(33);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.between(1, 3));
    const int order = g.between(1, 5);
    const FormalMap s = g.automorphism(n, order), t = g.automorphism(n, order);
    const JetMatrix lhs = jacobian_matrix(compose(s, t));
    CHECK(lhs == jacobian_matrix(s) * apply(s, jacobian_matrix(t)));
  }
}

TEST_CASE("flows of divergence-free fields have unit Jacobian") {
  // x2^2 d1 and the Hamiltonian field of x1^2 x2
  const Derivation d = parse_field("(x2^2)*d1 + (x1^2)*d1 + (-2*x1*x2)*d2", 2, 5);
  const FormalMap f = exp_flow(d);
  CHECK(jacobian_det(f) == Jet::constant(2, 4, 1));
  CHECK_THROWS_AS(exp_flow(parse_field("(x1)*d1", 2, 3)), DomainError);
  CHECK(format_map(exp_flow(parse_field("(x2^2)*d1", 2, 4))) == "x1 -> x1 + x2^2; x2 -> x2");
}

TEST_CASE("trivial cases") {
  CHECK(invert(identity_map(3, 4)) == identity_map(3, 4));
  CHECK(exp_flow(Derivation::zero(2, 4)) == identity_map(2, 4));
  GeneratorParams none;
  none.linear = false;
  none.shears = 0;
  none.flows = 0;
  CHECK(random_const_jacobian(3, 4, 7, none) == identity_map(3, 4));
  CHECK(format_map(invert(parse_map("x1 -> 2*x1 + x2; x2 -> x2", 2, 3))) == "x1 -> 1/2*x1 - 1/2*x2; x2 -> x2");
}
