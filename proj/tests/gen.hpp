#pragma once

// Small test-side generators, independent of the library's own sampling.

#include "oracle.hpp"

#include "jetfields/derivation.hpp"
#include "jetfields/formal_map.hpp"

#include <cstdint>
#include <random>

namespace gen {

using jetfields::Coefficient;
using jetfields::Derivation;
using jetfields::FormalMap;
using jetfields::Jet;
using jetfields::MultiIndex;

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int below(int k) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(k)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  Coefficient rational(int bound = 5) {
    Coefficient c(between(-bound, bound), between(1, 4));
    c.canonicalize();
    return c;
  }

  MultiIndex exponent(std::size_t n, int degree) {
    MultiIndex e(n, 0);
    for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(below(static_cast<int>(n)))];
    return e;
  }

  oracle::Poly poly(std::size_t n, int order, int min_degree, int terms) {
    oracle::Poly p;
    if (order < min_degree) return p;
    for (int t = 0; t < terms; ++t) p[exponent(n, between(min_degree, order))] += rational();
    oracle::prune(p);
    return p;
  }

  Jet jet(std::size_t n, int order, int min_degree = 0, int terms = 6) {
    return to_jet(poly(n, order, min_degree, terms), n, order);
  }

  /// Random linear part (lower triangular with nonzero diagonal, then a
  /// variable permutation) plus terms of degree 2..order.
  FormalMap automorphism(std::size_t n, int order, int terms = 3) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(below(static_cast<int>(i)))]);
    std::vector<Jet> images;
    for (std::size_t i = 0; i < n; ++i) {
      oracle::Poly p = poly(n, order, 2, terms);
      for (std::size_t j = 0; j < i; ++j) p[unit(n, perm[j])] += rational(2);
      Coefficient d = rational(3);
      while (sgn(d) == 0) d = rational(3);
      p[unit(n, perm[i])] += d;
      oracle::prune(p);
      images.push_back(to_jet(p, n, order));
    }
    return FormalMap(std::move(images));
  }

  Derivation field(std::size_t n, int order, int min_degree = 0, int terms = 4) {
    std::vector<Jet> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(jet(n, order, min_degree, terms));
    return Derivation(std::move(c));
  }

  static MultiIndex unit(std::size_t n, std::size_t i) {
    MultiIndex e(n, 0);
    e[i] = 1;
    return e;
  }

  static Jet to_jet(const oracle::Poly& p, std::size_t n, int order) {
    return Jet::from_terms(n, order, {p.begin(), p.end()});
  }

private:
  std::mt19937_64 rng_;
};

} // namespace gen
