#include "jetfields/jet.hpp"

#include "jetfields/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>

namespace jetfields {

namespace {

// Dense scratch space indexed by monomial rank. Leased from a per-thread
// pool so that nested kernels (substitution calls mul) get distinct slots.
class Accumulator {
public:
  void prepare(std::size_t size) {
    if (slots_.size() < size) {
      slots_.resize(size);
      used_.resize(size, 0);
    }
  }

  void add_product(MonomialRank r, const Coefficient& a, const Coefficient& b) {
    mpq_mul(tmp_.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    add(r, tmp_);
  }

  void add(MonomialRank r, const Coefficient& c) {
    if (!used_[r]) {
      used_[r] = 1;
      touched_.push_back(r);
      mpq_set(slots_[r].get_mpq_t(), c.get_mpq_t());
    } else {
      mpq_add(slots_[r].get_mpq_t(), slots_[r].get_mpq_t(), c.get_mpq_t());
    }
  }

  std::vector<Term> collect() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<Term> out;
    out.reserve(touched_.size());
    for (MonomialRank r : touched_) {
      if (sgn(slots_[r]) != 0) out.push_back(Term{r, slots_[r]});
      used_[r] = 0;
    }
    touched_.clear();
    return out;
  }

private:
  std::vector<Coefficient> slots_;
  std::vector<char> used_;
  std::vector<MonomialRank> touched_;
  Coefficient tmp_;
};

class AccumulatorLease {
public:
  AccumulatorLease() {
    auto& p = pool();
    if (p.empty()) {
      acc_ = std::make_unique<Accumulator>();
    } else {
      acc_ = std::move(p.back());
      p.pop_back();
    }
  }
  ~AccumulatorLease() { pool().push_back(std::move(acc_)); }
  AccumulatorLease(const AccumulatorLease&) = delete;
  AccumulatorLease& operator=(const AccumulatorLease&) = delete;

  Accumulator* operator->() { return acc_.get(); }

private:
  static std::vector<std::unique_ptr<Accumulator>>& pool() {
    thread_local std::vector<std::unique_ptr<Accumulator>> p;
    return p;
  }
  std::unique_ptr<Accumulator> acc_;
};

void require_same_variables(const Jet& f, const Jet& g, const char* what) {
  if (f.variables() != g.variables())
    throw DimensionError(std::string(what) + ": variable counts differ (" +
                         std::to_string(f.variables()) + " vs " + std::to_string(g.variables()) + ")");
}

void require_variable_index(std::size_t n, std::size_t i) {
  if (i >= n)
    throw DimensionError("variable index " + std::to_string(i + 1) + " out of range 1.." +
                         std::to_string(n));
}

} // namespace

Jet::Jet(std::size_t n, int order) : Jet(n, order, MonomialBasis::get(n, order), {}) {}

Jet::Jet(std::size_t n, int order, std::shared_ptr<const MonomialBasis> basis, std::vector<Term> terms)
    : n_(n), order_(order), basis_(std::move(basis)), terms_(std::move(terms)) {
  if (order < 0) throw PrecisionError("jet order must be non-negative, got " + std::to_string(order));
}

Jet Jet::constant(std::size_t n, int order, const Coefficient& c) {
  Jet j(n, order);
  if (sgn(c) != 0) j.terms_.push_back(Term{0, c});
  return j;
}

Jet Jet::variable(std::size_t n, int order, std::size_t i) {
  require_variable_index(n, i);
  MultiIndex e(n, 0);
  e[i] = 1;
  return monomial(n, order, e);
}

Jet Jet::monomial(std::size_t n, int order, const MultiIndex& e, const Coefficient& c) {
  return from_terms(n, order, {{e, c}});
}

Jet Jet::from_terms(std::size_t n, int order,
                    const std::vector<std::pair<MultiIndex, Coefficient>>& terms) {
  Jet j(n, order);
  std::map<MonomialRank, Coefficient> merged;
  for (const auto& [e, c] : terms) {
    if (e.size() != n)
      throw DimensionError("exponent vector has " + std::to_string(e.size()) + " entries, expected " +
                           std::to_string(n));
    Coefficient v = c;
    v.canonicalize();
    merged[rank_of(e)] += v;
  }
  for (auto& [r, c] : merged) {
    if (sgn(c) == 0) continue;
    if (r >= j.basis_->size())
      throw PrecisionError("term of degree above order " + std::to_string(order));
    j.terms_.push_back(Term{r, c});
  }
  return j;
}

Jet Jet::from_canonical(std::size_t n, int order, std::vector<Term> terms) {
  auto basis = MonomialBasis::get(n, order);
#ifndef NDEBUG
  for (std::size_t k = 0; k < terms.size(); ++k) {
    assert(terms[k].rank < basis->size());
    assert(sgn(terms[k].coef) != 0);
    assert(k == 0 || terms[k - 1].rank < terms[k].rank);
  }
#endif
  return Jet(n, order, std::move(basis), std::move(terms));
}

Coefficient Jet::coefficient(const MultiIndex& e) const {
  if (e.size() != n_) throw DimensionError("exponent vector length does not match variable count");
  const MonomialRank r = rank_of(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), r,
                             [](const Term& t, MonomialRank v) { return t.rank < v; });
  if (it != terms_.end() && it->rank == r) return it->coef;
  return 0;
}

Coefficient Jet::constant_term() const {
  if (!terms_.empty() && terms_.front().rank == 0) return terms_.front().coef;
  return 0;
}

bool Jet::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].rank == 0); }

Jet Jet::truncate(int k) const {
  if (k > order_)
    throw PrecisionError("cannot raise a jet of order " + std::to_string(order_) + " to order " +
                         std::to_string(k));
  auto basis = MonomialBasis::get(n_, k);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.rank >= basis->size()) break;
    out.push_back(t);
  }
  return Jet(n_, k, std::move(basis), std::move(out));
}

bool Jet::equal_at(const Jet& other, int k) const {
  require_same_variables(*this, other, "comparison");
  if (k > order_ || k > other.order_)
    throw PrecisionError("comparison at order " + std::to_string(k) + " exceeds jet orders " +
                         std::to_string(order_) + " and " + std::to_string(other.order_));
  if (k < 0) return true;
  const std::size_t limit = basis_->count_up_to(k);
  auto a = terms_.begin(), b = other.terms_.begin();
  for (;;) {
    const bool a_done = a == terms_.end() || a->rank >= limit;
    const bool b_done = b == other.terms_.end() || b->rank >= limit;
    if (a_done || b_done) return a_done && b_done;
    if (a->rank != b->rank || a->coef != b->coef) return false;
    ++a;
    ++b;
  }
}

bool Jet::operator==(const Jet& other) const {
  require_same_variables(*this, other, "comparison");
  if (order_ != other.order_)
    throw PrecisionError("jets of orders " + std::to_string(order_) + " and " +
                         std::to_string(other.order_) + " compared without an explicit order");
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (terms_[k].rank != other.terms_[k].rank || terms_[k].coef != other.terms_[k].coef) return false;
  return true;
}

namespace {

Jet combine(const Jet& f, const Jet& g, bool negate_g) {
  require_same_variables(f, g, "add");
  const int k = std::min(f.order(), g.order());
  const std::size_t limit = MonomialBasis::get(f.variables(), k)->size();
  std::vector<Term> out;
  auto a = f.terms().begin(), ae = f.terms().end();
  auto b = g.terms().begin(), be = g.terms().end();
  for (;;) {
    const bool a_ok = a != ae && a->rank < limit;
    const bool b_ok = b != be && b->rank < limit;
    if (!a_ok && !b_ok) break;
    if (a_ok && (!b_ok || a->rank < b->rank)) {
      out.push_back(*a++);
    } else if (b_ok && (!a_ok || b->rank < a->rank)) {
      out.push_back(Term{b->rank, negate_g ? Coefficient(-b->coef) : b->coef});
      ++b;
    } else {
      Coefficient c = negate_g ? Coefficient(a->coef - b->coef) : Coefficient(a->coef + b->coef);
      if (sgn(c) != 0) out.push_back(Term{a->rank, std::move(c)});
      ++a;
      ++b;
    }
  }
  return Jet::from_canonical(f.variables(), k, std::move(out));
}

} // namespace

Jet add(const Jet& f, const Jet& g) { return combine(f, g, false); }

Jet subtract(const Jet& f, const Jet& g) { return combine(f, g, true); }

Jet negate(const Jet& f) { return scale(f, -1); }

Jet scale(const Jet& f, const Coefficient& c) {
  std::vector<Term> out;
  if (sgn(c) != 0) {
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) out.push_back(Term{t.rank, t.coef * c});
  }
  return Jet::from_canonical(f.variables(), f.order(), std::move(out));
}

Jet mul(const Jet& f, const Jet& g) {
  require_same_variables(f, g, "mul");
  const int k = std::min(f.order(), g.order());
  const auto basis = MonomialBasis::get(f.variables(), k);
  const std::size_t m = basis->size();
  AccumulatorLease acc;
  acc->prepare(m);
  for (const auto& a : f.terms()) {
    if (a.rank >= m) break;
    const unsigned da = basis->degree(a.rank);
    for (const auto& b : g.terms()) {
      if (b.rank >= m || static_cast<int>(da + basis->degree(b.rank)) > k) break;
      acc->add_product(basis->product(a.rank, b.rank), a.coef, b.coef);
    }
  }
  return Jet::from_canonical(f.variables(), k, acc->collect());
}

Jet partial_derivative(const Jet& f, std::size_t i) {
  require_variable_index(f.variables(), i);
  if (f.order() < 1)
    throw PrecisionError("partial derivative of an order-0 jet: precision exhausted");
  const MonomialBasis& basis = f.basis();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const MonomialRank r = basis.lower(t.rank, i);
    if (r == MonomialBasis::npos) continue;
    out.push_back(Term{r, t.coef * basis.exponents(t.rank)[i]});
  }
  // e -> e - e_i is monotone on monomials with e_i > 0, so `out` stays sorted
  return Jet::from_canonical(f.variables(), f.order() - 1, std::move(out));
}

Jet invert_unit(const Jet& f) {
  const Coefficient c = f.constant_term();
  if (sgn(c) == 0) throw DomainError("jet with zero constant term is not a unit");
  const std::size_t n = f.variables();
  const Jet one = Jet::constant(n, f.order(), 1);
  const Coefficient c_inv = 1 / c;
  // f = c (1 - u) with u in m, so 1/f = c^-1 (1 + u + ... + u^order)
  const Jet u = subtract(one, scale(f, c_inv));
  Jet s = one;
  for (int k = 0; k < f.order(); ++k) s = add(one, mul(u, s));
  return scale(s, c_inv);
}

std::optional<unsigned> m_adic_order(const Jet& f) {
  if (f.is_zero()) return std::nullopt;
  return f.degree(f.terms().front());
}

Substituter::Substituter(std::vector<Jet> images) : n_(images.size()), order_(0), images_(std::move(images)) {
  if (n_ == 0) throw DimensionError("substitution needs at least one image");
  order_ = images_.front().order();
  for (std::size_t i = 0; i < n_; ++i) {
    const Jet& img = images_[i];
    if (img.variables() != n_)
      throw DimensionError("image " + std::to_string(i + 1) + " has " + std::to_string(img.variables()) +
                           " variables, expected " + std::to_string(n_));
    if (sgn(img.constant_term()) != 0)
      throw DomainError("image of x" + std::to_string(i + 1) +
                        " has a nonzero constant term; substitution is not continuous");
    order_ = std::min(order_, img.order());
  }
  basis_ = MonomialBasis::get(n_, order_);
  powers_.resize(basis_->size());
}

const Jet& Substituter::power(MonomialRank r) {
  auto& slot = powers_[r];
  if (slot) return *slot;
  if (r == 0) {
    slot = Jet::constant(n_, order_, 1);
    return *slot;
  }
  const MultiIndex& e = basis_->exponents(r);
  std::size_t last = n_ - 1;
  while (e[last] == 0) --last;
  const MonomialRank parent = basis_->lower(r, last);
  Jet p = mul(power(parent), images_[last]);
  powers_[r] = std::move(p);
  return *powers_[r];
}

Jet Substituter::operator()(const Jet& f) {
  if (f.variables() != n_)
    throw DimensionError("substituting " + std::to_string(n_) + " images into a jet in " +
                         std::to_string(f.variables()) + " variables");
  const int k = std::min(f.order(), order_);
  const std::size_t limit = basis_->count_up_to(k);
  // powers of images in m have valuation >= degree, so terms past k vanish
  for (const auto& t : f.terms()) {
    if (t.rank >= limit) break;
    power(t.rank);
  }
  AccumulatorLease acc;
  acc->prepare(limit);
  for (const auto& t : f.terms()) {
    if (t.rank >= limit) break;
    for (const auto& p : powers_[t.rank]->terms()) {
      if (p.rank >= limit) break;
      acc->add_product(p.rank, t.coef, p.coef);
    }
  }
  return Jet::from_canonical(n_, k, acc->collect());
}

Jet substitute(const Jet& f, std::span<const Jet> images) {
  Substituter s(std::vector<Jet>(images.begin(), images.end()));
  return s(f);
}

} // namespace jetfields
