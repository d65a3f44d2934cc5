#pragma once

// Slow reference implementations on plain exponent maps. They share no code
// with the library kernels beyond the coefficient type.

#include "jetfields/jet.hpp"
#include "jetfields/jet_matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using jetfields::Coefficient;
using jetfields::Jet;
using jetfields::MultiIndex;

using Poly = std::map<MultiIndex, Coefficient>;

inline unsigned deg(const MultiIndex& e) { return std::accumulate(e.begin(), e.end(), 0u); }

inline void prune(Poly& p) {
  for (auto it = p.begin(); it != p.end();)
    it = (sgn(it->second) == 0) ? p.erase(it) : std::next(it);
}

inline Poly from_jet(const Jet& f) {
  Poly p;
  for (const auto& t : f.terms()) p[f.exponents(t)] = t.coef;
  return p;
}

inline Poly truncated(const Poly& p, int order) {
  Poly out;
  for (const auto& [e, c] : p)
    if (static_cast<int>(deg(e)) <= order) out.emplace(e, c);
  return out;
}

inline Poly mul(const Poly& a, const Poly& b, int order) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      MultiIndex e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (static_cast<int>(deg(e)) > order) continue;
      out[e] += ca * cb;
    }
  prune(out);
  return out;
}

inline Poly add(Poly a, const Poly& b, const Coefficient& scale = 1) {
  for (const auto& [e, c] : b) a[e] += scale * c;
  prune(a);
  return a;
}

inline Poly one(std::size_t n) { return {{MultiIndex(n, 0), Coefficient(1)}}; }

/// f(images) by expanding each monomial as a product of powers.
inline Poly substitute(const Poly& f, std::size_t n, const std::vector<Poly>& images, int order) {
  Poly out;
  for (const auto& [e, c] : f) {
    Poly term = one(n);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term = mul(term, images[i], order);
    out = add(out, term, c);
  }
  return out;
}

inline Poly derivative(const Poly& f, std::size_t i) {
  Poly out;
  for (const auto& [e, c] : f) {
    if (e[i] == 0) continue;
    MultiIndex d = e;
    --d[i];
    out[d] += c * e[i];
  }
  prune(out);
  return out;
}

/// Leibniz formula over all permutations.
inline Poly determinant(const std::vector<std::vector<Poly>>& m, std::size_t n, int order) {
  const std::size_t dim = m.size();
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  Poly out;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = a + 1; b < dim; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Poly term = one(n);
    for (std::size_t r = 0; r < dim; ++r) term = mul(term, m[r][perm[r]], order);
    out = add(out, term, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

} // namespace oracle
