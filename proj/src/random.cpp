#include "jetfields/random.hpp"

#include "jetfields/errors.hpp"

#include <string>
#include <utility>

namespace jetfields {

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Coefficient Rng::rational(long bound) {
  const long num = uniform(-bound, bound);
  const long den = uniform(1, 3);
  Coefficient c(num, den);
  c.canonicalize();
  return c;
}

Coefficient Rng::nonzero_rational(long bound) {
  Coefficient c = rational(bound);
  while (sgn(c) == 0) c = rational(bound);
  return c;
}

std::uint64_t mix_seed(std::initializer_list<std::uint64_t> words) {
  // splitmix64 finaliser folded over the words
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = 0x6a09e667f3bcc908ULL;
  for (auto w : words) h = mix(h ^ mix(w));
  return h;
}

RationalMatrix random_invertible(Rng& rng, std::size_t n, long bound) {
  for (;;) {
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.rational(bound);
    if (a.is_invertible()) return a;
  }
}

Jet random_jet(Rng& rng, std::size_t n, int order, int min_degree, int max_terms, long bound) {
  if (min_degree > order || max_terms <= 0) return Jet(n, order);
  const auto basis = MonomialBasis::get(n, order);
  std::vector<std::pair<MultiIndex, Coefficient>> terms;
  const long count = rng.uniform(1, max_terms);
  for (long k = 0; k < count; ++k) {
    const int d = static_cast<int>(rng.uniform(min_degree, order));
    const std::size_t lo = basis->count_up_to(d - 1);
    const std::size_t hi = basis->count_up_to(d);
    const auto r = static_cast<MonomialRank>(rng.uniform(static_cast<long>(lo), static_cast<long>(hi) - 1));
    terms.emplace_back(basis->exponents(r), rng.rational(bound));
  }
  return Jet::from_terms(n, order, terms);
}

FormalMap random_automorphism(Rng& rng, std::size_t n, int order, int max_terms, long bound) {
  const FormalMap linear = linear_map(random_invertible(rng, n, bound), order);
  std::vector<Jet> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(linear.image(i) + random_jet(rng, n, order, 2, max_terms, bound));
  return FormalMap(std::move(images));
}

Derivation random_field(Rng& rng, std::size_t n, int order, int min_degree, int max_terms, long bound) {
  std::vector<Jet> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_jet(rng, n, order, min_degree, max_terms, bound));
  return Derivation(std::move(c));
}

Derivation random_divergence_free_field(Rng& rng, std::size_t n, int order, int min_degree, int max_terms,
                                        long bound) {
  Derivation d = Derivation::zero(n, order);
  if (min_degree == 0) {
    std::vector<Jet> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(Jet::constant(n, order, rng.rational(bound)));
    d = d + Derivation(std::move(c));
  }
  if (n < 2) return d;
  const int pairs = static_cast<int>(rng.uniform(1, 2));
  for (int p = 0; p < pairs; ++p) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    // h of order+1 has derivatives of order `order`, valuation >= min_degree
    const Jet h = random_jet(rng, n, order + 1, std::max(min_degree + 1, 1), max_terms, bound);
    std::vector<Jet> c(n, Jet(n, order));
    c[i] = partial_derivative(h, j);
    c[j] = -partial_derivative(h, i);
    d = d + Derivation(std::move(c));
  }
  return d;
}

ConstJacobianSample sample_const_jacobian(std::size_t n, int order, std::uint64_t seed,
                                          const GeneratorParams& params) {
  if (n < 1) throw DimensionError("generator needs n >= 1");
  if (order < 2) throw PrecisionError("constant-Jacobian generator needs order >= 2");
  Rng rng(seed);
  ConstJacobianSample out{identity_map(n, order)};
  FormalMap& s = out.map;

  if (params.linear) {
    s = linear_map(random_invertible(rng, n, params.coeff_bound), order);
    out.trace.linear = true;
  }
  if (n >= 2) {
    // consecutive shears move consecutive variables, starting at a random one
    const std::size_t first = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    for (int k = 0; k < params.shears; ++k) {
      const std::size_t dir = (first + static_cast<std::size_t>(k)) % n;
      Jet f(n, order);
      while (f.is_zero()) {
        const Jet g = random_jet(rng, n, order, 2, params.max_terms, params.coeff_bound);
        std::vector<std::pair<MultiIndex, Coefficient>> kept;
        for (const auto& t : g.terms())
          if (g.exponents(t)[dir] == 0) kept.emplace_back(g.exponents(t), t.coef);
        f = Jet::from_terms(n, order, kept);
      }
      std::vector<Jet> images = identity_map(n, order).images();
      images[dir] = images[dir] + f;
      s = compose(FormalMap(std::move(images)), s);
      out.trace.shear_directions.push_back(dir);
    }
    for (int k = 0; k < params.flows; ++k) {
      const Derivation d = random_divergence_free_field(rng, n, order, 2, params.max_terms, params.coeff_bound);
      s = compose(exp_flow(d), s);
      ++out.trace.flows;
    }
  }
  return out;
}

FormalMap random_const_jacobian(std::size_t n, int order, std::uint64_t seed, const GeneratorParams& params) {
  return sample_const_jacobian(n, order, seed, params).map;
}

} // namespace jetfields
