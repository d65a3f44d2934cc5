#include "jetfields/monomial.hpp"

#include "jetfields/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

namespace jetfields {

namespace {

constexpr std::size_t kProductTableLimit = 1024;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Monomials of degree <= d in m variables.
std::uint64_t count_at_most(std::int64_t d, std::size_t m) {
  if (d < 0) return 0;
  return binomial(static_cast<std::uint64_t>(d) + m, m);
}

void enumerate_degree(std::size_t n, unsigned d, MultiIndex& cur, std::size_t pos,
                      std::vector<MultiIndex>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (unsigned v = d + 1; v-- > 0;) {
    cur[pos] = v;
    enumerate_degree(n, d - v, cur, pos + 1, out);
  }
}

} // namespace

unsigned degree(const MultiIndex& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool graded_less(const MultiIndex& a, const MultiIndex& b) {
  const unsigned da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return b < a;
}

MonomialRank rank_of(const MultiIndex& e) {
  const std::size_t n = e.size();
  const unsigned d = degree(e);
  std::uint64_t r = count_at_most(static_cast<std::int64_t>(d) - 1, n);
  std::int64_t rem = d;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // monomials agreeing on the prefix but with a larger exponent at k
    r += count_at_most(rem - static_cast<std::int64_t>(e[k]) - 1, n - k - 1);
    rem -= e[k];
  }
  return static_cast<MonomialRank>(r);
}

MonomialBasis::MonomialBasis(std::size_t n, int max_degree) : n_(n), max_degree_(max_degree) {
  if (n == 0) throw DimensionError("monomial basis needs at least one variable");
  degree_offsets_.push_back(0);
  MultiIndex cur(n, 0);
  for (int d = 0; d <= max_degree; ++d) {
    enumerate_degree(n, static_cast<unsigned>(d), cur, 0, exponents_);
    degree_offsets_.push_back(exponents_.size());
  }
  const std::size_t m = exponents_.size();
  degrees_.reserve(m);
  for (const auto& e : exponents_) degrees_.push_back(jetfields::degree(e));

  lower_.assign(m * n, npos);
  raise_.assign(m * n, npos);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      MultiIndex e = exponents_[r];
      if (e[i] > 0) {
        --e[i];
        lower_[r * n + i] = rank_of(e);
        ++e[i];
      }
      if (static_cast<int>(degrees_[r]) < max_degree) {
        ++e[i];
        raise_[r * n + i] = rank_of(e);
      }
    }
  }

  if (m <= kProductTableLimit) {
    products_.assign(m * m, npos);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (static_cast<int>(degrees_[a] + degrees_[b]) > max_degree) continue;
        MultiIndex e = exponents_[a];
        for (std::size_t i = 0; i < n; ++i) e[i] += exponents_[b][i];
        products_[a * m + b] = rank_of(e);
      }
    }
  }
}

std::size_t MonomialBasis::count_up_to(int d) const {
  if (d < 0) return 0;
  if (d > max_degree_) return size();
  return degree_offsets_[static_cast<std::size_t>(d) + 1];
}

MonomialRank MonomialBasis::product(MonomialRank a, MonomialRank b) const {
  if (!products_.empty()) return products_[static_cast<std::size_t>(a) * size() + b];
  if (static_cast<int>(degrees_[a] + degrees_[b]) > max_degree_) return npos;
  MultiIndex e = exponents_[a];
  for (std::size_t i = 0; i < n_; ++i) e[i] += exponents_[b][i];
  return rank_of(e);
}

std::shared_ptr<const MonomialBasis> MonomialBasis::get(std::size_t n, int max_degree) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, int>, std::shared_ptr<const MonomialBasis>> cache;
  thread_local std::map<std::pair<std::size_t, int>, std::shared_ptr<const MonomialBasis>> local;

  const auto key = std::make_pair(n, max_degree < 0 ? -1 : max_degree);
  if (auto it = local.find(key); it != local.end()) return it->second;
  std::shared_ptr<const MonomialBasis> basis;
  {
    std::lock_guard lock(mutex);
    auto& slot = cache[key];
    if (!slot) slot = std::make_shared<const MonomialBasis>(n, key.second);
    basis = slot;
  }
  local.emplace(key, basis);
  return basis;
}

} // namespace jetfields
