#pragma once

#include "jetfields/derivation.hpp"
#include "jetfields/formal_map.hpp"
#include "jetfields/jet.hpp"
#include "jetfields/jet_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace jetfields {

/// Deterministic generator. Only the raw mt19937_64 stream is used (never
/// std distributions), so draws are identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi);
  /// p/q with |p| <= bound, 1 <= q <= 3.
  Coefficient rational(long bound);
  Coefficient nonzero_rational(long bound);

private:
  std::mt19937_64 engine_;
};

/// Order-sensitive 64-bit mix of several words.
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> words);

/// Size knobs for the random generators.
struct GeneratorParams {
  bool linear = true;   // start from a random invertible linear map
  int shears = 2;       // x_i -> x_i + f(other variables), f in m^2
  int flows = 1;        // exp of divergence-free fields with coefficients in m^2
  int max_terms = 3;    // terms per random polynomial
  long coeff_bound = 3; // numerators in [-bound, bound]
};

/// What the constant-Jacobian generator actually built.
struct GeneratorTrace {
  bool linear = false;
  std::vector<std::size_t> shear_directions; // 0-based variable each shear moved
  int flows = 0;
};

struct ConstJacobianSample {
  FormalMap map;
  GeneratorTrace trace;
};

/// Product of a random invertible linear map, random shears and flows of
/// random divergence-free fields. Each factor has constant Jacobian, hence
/// so does the product. With n >= 2 and at least two shears the first two
/// shears move different variables. Deterministic in `seed`.
ConstJacobianSample sample_const_jacobian(std::size_t n, int order, std::uint64_t seed,
                                          const GeneratorParams& params = {});

FormalMap random_const_jacobian(std::size_t n, int order, std::uint64_t seed,
                                const GeneratorParams& params = {});

/// Random invertible matrix with small rational entries.
RationalMatrix random_invertible(Rng& rng, std::size_t n, long bound);

/// Up to `max_terms` random terms of degree in [min_degree, order].
Jet random_jet(Rng& rng, std::size_t n, int order, int min_degree, int max_terms, long bound);

/// A generic element of S_n: random invertible linear part plus random
/// terms of degree 2..order (Jacobian usually not constant).
FormalMap random_automorphism(Rng& rng, std::size_t n, int order, int max_terms, long bound);

Derivation random_field(Rng& rng, std::size_t n, int order, int min_degree, int max_terms, long bound);

/// Divergence-free field with every coefficient of m-adic order >= min_degree.
/// Built from Hamiltonian pairs (d_j h) d_i - (d_i h) d_j, plus a constant
/// field when min_degree == 0. In one variable only constant fields qualify.
Derivation random_divergence_free_field(Rng& rng, std::size_t n, int order, int min_degree, int max_terms,
                                        long bound);

} // namespace jetfields
