#include "jetfields/identity_suite.hpp"

#include "jetfields/errors.hpp"
#include "jetfields/serialization.hpp"
#include "jetfields/text.hpp"
#include "jetfields/vector_fields.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <climits>
#include <iomanip>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

namespace jetfields {

using nlohmann::json;

namespace {

constexpr std::array<CheckInfo, 10> kCatalog{{
    {CheckId::C1, "C1", "jacobian-chain-rule", 2},
    {CheckId::C2, "C2", "jacobian-det-cocycle", 2},
    {CheckId::C3, "C3", "inverse-formulas", 2},
    {CheckId::C4, "C4", "piola-lemma", 3},
    {CheckId::C5, "C5", "divergence-equivariance", 3},
    {CheckId::C6, "C6", "bracket-divergence", 3},
    {CheckId::C7, "C7", "pushforward-lie-hom", 3},
    {CheckId::C8, "C8", "duality", 3},
    {CheckId::C9, "C9", "fixed-point-ingredients", 2},
    {CheckId::C10, "C10", "n1-structure", 2},
}};

// Accumulates sub-comparisons of one trial. The verdict order is the lowest
// order any comparison was made at.
class Outcome {
public:
  template <typename T>
  void equal(const T& lhs, const T& rhs, const std::string& what) {
    const int k = std::min(lhs.order(), rhs.order());
    note(k);
    if (!lhs.equal_at(rhs, k)) fail(what + " (at order " + std::to_string(k) + ")");
  }

  void zero(const Jet& f, const std::string& what) {
    note(f.order());
    if (!f.is_zero()) fail(what + " (got " + format_series(f) + ")");
  }

  void require(bool ok, int at_order, const std::string& what) {
    note(at_order);
    if (!ok) fail(what);
  }

  void fail(const std::string& what) {
    if (pass_) detail_ = what;
    pass_ = false;
  }

  bool pass() const { return pass_; }
  int verdict() const { return verdict_ == INT_MAX ? 0 : verdict_; }
  const std::string& detail() const { return detail_; }

private:
  void note(int k) { verdict_ = std::min(verdict_, k); }

  bool pass_ = true;
  int verdict_ = INT_MAX;
  std::string detail_;
};

const FormalMap& map_at(const TrialInputs& in, std::size_t i) {
  if (in.maps.size() <= i) throw DimensionError("trial input is missing map " + std::to_string(i + 1));
  return in.maps[i];
}

const Derivation& field_at(const TrialInputs& in, std::size_t i) {
  if (in.fields.size() <= i) throw DimensionError("trial input is missing field " + std::to_string(i + 1));
  return in.fields[i];
}

void check_chain_rule(const TrialInputs& in, Outcome& o) {
  const FormalMap& s = map_at(in, 0);
  const FormalMap& t = map_at(in, 1);
  o.equal(jacobian_matrix(compose(s, t)), jacobian_matrix(s) * apply(s, jacobian_matrix(t)),
          "J(st) != J(s) s(J(t))");
}

void check_det_cocycle(const TrialInputs& in, Outcome& o) {
  const FormalMap& s = map_at(in, 0);
  const FormalMap& t = map_at(in, 1);
  o.equal(jacobian_det(compose(s, t)), jacobian_det(s) * apply(s, jacobian_det(t)),
          "det J(st) != det J(s) s(det J(t))");
}

void check_inverse_formulas(const TrialInputs& in, Outcome& o) {
  const FormalMap& s = map_at(in, 0);
  const FormalMap s_inv = invert(s);
  const JetMatrix j = jacobian_matrix(s);
  o.equal(jacobian_matrix(s_inv), apply(s_inv, matrix_inverse(j)), "J(s^-1) != s^-1(J(s)^-1)");
  o.equal(jacobian_det(s_inv), apply(s_inv, invert_unit(determinant(j))), "det J(s^-1) != s^-1(det J(s)^-1)");
}

void check_piola(const TrialInputs& in, Outcome& o) {
  const FormalMap& s = map_at(in, 0);
  o.require(is_constant_jacobian(s), s.order() - 1, "input map does not have constant Jacobian");
  const JetMatrix j_inv = matrix_inverse(jacobian_matrix(s));
  const std::size_t n = s.variables();
  for (std::size_t i = 0; i < n; ++i) {
    Jet row(n, j_inv.order() - 1);
    for (std::size_t k = 0; k < n; ++k) row = row + partial_derivative(j_inv.at(i, k), k);
    o.zero(row, "row " + std::to_string(i + 1) + " of J(s)^-1 is not divergence free");
  }
}

void check_equivariance(const TrialInputs& in, Outcome& o, TrialResult& r) {
  const FormalMap& s = map_at(in, 0);
  const Derivation& d = field_at(in, 0);
  o.equal(divergence(pushforward(s, d)), apply(s, divergence(d)), "div(s(d)) != s(div d)");
  if (in.fields.size() > 1) {
    // a constant-divergence field keeps its constant
    const Derivation& p = in.fields[1];
    const DivergenceClass before = classify_divergence(p);
    const DivergenceClass after = classify_divergence(pushforward(s, p));
    o.require(before.is_constant(), before.verdict_order, "membership input is not in Div^c");
    o.require(after.is_constant() && after.value == before.value, after.verdict_order,
              "pushforward left Div^c or changed the divergence constant");
  }
  if (in.maps.size() > 1) {
    const NegativeControl control = run_negative_control(in.maps[1]);
    if (!control.confirmed()) o.fail("negative control: equivariance did not fail off the constant-Jacobian subgroup");
    else r.control_witness = format_field(*control.witness);
  }
}

void check_bracket_divergence(const TrialInputs& in, Outcome& o) {
  const Derivation& d = field_at(in, 0);
  const Derivation& e = field_at(in, 1);
  o.equal(divergence(bracket(d, e)), apply_derivation(d, divergence(e)) - apply_derivation(e, divergence(d)),
          "div[d,e] != d(div e) - e(div d)");
  const Derivation& p = field_at(in, 2);
  const Derivation& q = field_at(in, 3);
  const DivergenceClass cp = classify_divergence(p);
  const DivergenceClass cq = classify_divergence(q);
  o.require(cp.is_constant() && cq.is_constant(), std::min(cp.verdict_order, cq.verdict_order),
            "constant-divergence inputs do not have constant divergence");
  o.zero(divergence(bracket(p, q)), "bracket of constant-divergence fields is not divergence free");
}

void check_pushforward_hom(const TrialInputs& in, Outcome& o) {
  const FormalMap& s = map_at(in, 0);
  const FormalMap& t = map_at(in, 1);
  const Derivation& d = field_at(in, 0);
  const Derivation& e = field_at(in, 1);
  o.equal(pushforward(s, bracket(d, e)), bracket(pushforward(s, d), pushforward(s, e)),
          "s([d,e]) != [s(d), s(e)]");
  o.equal(pushforward(compose(s, t), d), pushforward(s, pushforward(t, d)), "(st)(d) != s(t(d))");
}

void check_duality(const TrialInputs& in, Outcome& o) {
  const FormalMap& s = map_at(in, 0);
  const std::size_t n = s.variables();
  for (std::size_t i = 0; i < n; ++i) {
    const Derivation di = pushforward(s, partial_field(i, n, s.order()));
    for (std::size_t j = 0; j < n; ++j) {
      const Jet lhs = apply_derivation(di, s.image(j));
      o.equal(lhs, Jet::constant(n, lhs.order(), i == j ? 1 : 0),
              "s(d_" + std::to_string(i + 1) + ") * s(x_" + std::to_string(j + 1) + ") is not the Kronecker delta");
    }
  }
}

bool euler_shifts_commute(const Derivation& d) {
  const std::size_t n = d.variables();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!bracket(euler_field(i, n, d.order()) + d, euler_field(j, n, d.order()) + d).is_zero()) return false;
  return true;
}

Derivation constant_field(std::span<const Coefficient> lambda, int order) {
  const std::size_t n = lambda.size();
  std::vector<Jet> c;
  for (const auto& l : lambda) c.push_back(Jet::constant(n, order, l));
  return Derivation(std::move(c));
}

void check_fixed_point(const TrialInputs& in, Outcome& o) {
  const Derivation& c = field_at(in, 0);
  const Derivation& p = field_at(in, 1);
  const Derivation& d = field_at(in, 2);
  const std::size_t n = c.variables();
  const int k = c.order() - 1;
  o.require(centralizes_partials(c), k, "constant field does not commute with every d_i");
  o.require(!centralizes_partials(p), k, "field with non-constant coefficients commutes with every d_i");
  if (n < 2) return; // the commuting argument needs two Euler fields

  std::vector<Coefficient> lambda;
  for (const auto& a : d.coefficients()) {
    o.require(a.is_constant(), a.order(), "shift field is not constant");
    lambda.push_back(a.constant_term());
  }
  o.require(!d.is_zero(), k, "shift field is zero");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // [H_i + d, H_j + d] = -l_i d_i + l_j d_j
      const Derivation got = bracket(euler_field(i, n, d.order()) + d, euler_field(j, n, d.order()) + d);
      const Derivation want = (-lambda[i]) * partial_field(i, n, got.order()) + lambda[j] * partial_field(j, n, got.order());
      o.equal(got, want, "[H_i + d, H_j + d] does not match the coordinate formula");
    }
  o.require(!euler_shifts_commute(d), k, "H_i + d commute pairwise for a nonzero d");

  // exhaustive over lambda in {-1, 0, 1}^n: commuting iff lambda = 0
  std::vector<Coefficient> grid(n, -1);
  for (;;) {
    const bool all_zero = std::all_of(grid.begin(), grid.end(), [](const Coefficient& v) { return sgn(v) == 0; });
    o.require(euler_shifts_commute(constant_field(grid, c.order())) == all_zero, k,
              "grid search: H_i + d commute for a nonzero d, or fail to for d = 0");
    std::size_t pos = 0;
    while (pos < n && grid[pos] == 1) grid[pos++] = -1;
    if (pos == n) break;
    grid[pos] += 1;
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::shared_ptr<const ConstantDivergenceSpace> cached_space(std::size_t n, int order) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, int>, std::shared_ptr<const ConstantDivergenceSpace>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, order}];
  if (!slot) slot = std::make_shared<const ConstantDivergenceSpace>(constant_divergence_space(n, order));
  return slot;
}

void check_n1_structure(const TrialInputs& in, Outcome& o) {
  const std::size_t n = in.n;
  const int order = in.order;
  const auto space = cached_space(n, order);
  // div maps onto the jets of order N-1; only the constant survives the kernel
  const std::uint64_t expected =
      n * binomial(n + order, n) - binomial(n + order - 1, n) + 1;
  o.require(space->basis.size() == expected, space->verdict_order,
            "constant-divergence space has dimension " + std::to_string(space->basis.size()) + ", expected " +
                std::to_string(expected));
  if (n == 1) {
    // span equals K d + K x d
    const Derivation d = partial_field(0, 1, order);
    const Derivation h = euler_field(0, 1, order);
    const std::size_t m = static_cast<std::size_t>(order) + 1;
    std::vector<Derivation> all = space->basis;
    all.push_back(d);
    all.push_back(h);
    RationalMatrix a(all.size(), m);
    for (std::size_t r = 0; r < all.size(); ++r)
      for (const auto& t : all[r].coefficient(0).terms()) a(r, t.rank) = t.coef;
    o.require(space->basis.size() == 2 && a.rank() == 2, space->verdict_order,
              "one-variable constant-divergence space is not spanned by d and x d");
  }
  const Derivation& f = field_at(in, 0);
  const DivergenceClass cls = classify_divergence(f);
  o.require(cls.is_constant(), cls.verdict_order, "kernel element does not have constant divergence");
  if (!cls.is_constant()) return;
  const ConstantDivergenceSplit split = decompose_const_div(f);
  o.zero(divergence(split.divergence_free), "divergence-free part has nonzero divergence");
  o.equal(split.divergence_free + split.constant * euler_field(0, n, f.order()), f, "d0 + c H1 != d");
  if (n == 1)
    o.require(split.divergence_free.coefficient(0).truncate(order - 1).is_constant(), order - 1,
              "one-variable divergence-free part is not a constant multiple of d");
}

} // namespace

std::span<const CheckInfo> catalog() { return kCatalog; }

const CheckInfo& info(CheckId id) { return kCatalog.at(static_cast<std::size_t>(id) - 1); }

std::optional<CheckId> parse_check_id(std::string_view code) {
  for (const auto& c : kCatalog)
    if (c.code == code) return c.id;
  return std::nullopt;
}

std::uint64_t trial_seed(std::uint64_t master, CheckId check, std::size_t n, int order, std::size_t trial) {
  return mix_seed({master, static_cast<std::uint64_t>(check), n, static_cast<std::uint64_t>(order), trial});
}

FormalMap non_constant_jacobian_map(std::size_t n, int order) {
  std::vector<Jet> images = identity_map(n, order).images();
  const std::size_t other = n >= 2 ? 1 : 0;
  images[0] = images[0] + Jet::variable(n, order, 0) * Jet::variable(n, order, other);
  return FormalMap(std::move(images));
}

NegativeControl run_negative_control(const FormalMap& s) {
  NegativeControl c;
  c.constant_jacobian = is_constant_jacobian(s);
  c.witness = equivariance_witness(s);
  return c;
}

TrialInputs generate_inputs(CheckId check, std::size_t n, int order, std::uint64_t seed) {
  if (order < info(check).min_order)
    throw ConfigError(std::string(info(check).code) + " needs order >= " + std::to_string(info(check).min_order));
  Rng rng(seed);
  TrialInputs in;
  in.n = n;
  in.order = order;
  auto const_jacobian_map = [&] {
    ConstJacobianSample sample = sample_const_jacobian(n, order, rng.next());
    in.traces.push_back(sample.trace);
    return sample.map;
  };
  auto general_map = [&] {
    FormalMap rho = random_automorphism(rng, n, order, 3, 3);
    return compose(rho, const_jacobian_map());
  };
  auto field = [&] { return random_field(rng, n, order, 0, 4, 3); };
  auto const_div_field = [&] {
    Derivation p = random_divergence_free_field(rng, n, order, 0, 3, 3);
    return p + rng.rational(3) * euler_field(0, n, order);
  };

  switch (check) {
  case CheckId::C1:
  case CheckId::C2:
    in.maps.push_back(general_map());
    in.maps.push_back(random_automorphism(rng, n, order, 3, 3));
    break;
  case CheckId::C3:
    in.maps.push_back(general_map());
    break;
  case CheckId::C4:
  case CheckId::C8:
    in.maps.push_back(const_jacobian_map());
    break;
  case CheckId::C5: {
    in.maps.push_back(const_jacobian_map());
    // s composed with x1 -> x1 + x1 x2 has Jacobian c (1 + s(x2))
    in.maps.push_back(compose(in.maps[0], non_constant_jacobian_map(n, order)));
    in.fields.push_back(field());
    in.fields.push_back(const_div_field());
    break;
  }
  case CheckId::C6:
    in.fields.push_back(field());
    in.fields.push_back(field());
    in.fields.push_back(const_div_field());
    in.fields.push_back(const_div_field());
    break;
  case CheckId::C7:
    in.maps.push_back(const_jacobian_map());
    in.maps.push_back(const_jacobian_map());
    in.fields.push_back(field());
    in.fields.push_back(field());
    break;
  case CheckId::C9: {
    std::vector<Coefficient> c, lambda;
    for (std::size_t i = 0; i < n; ++i) c.push_back(rng.rational(3));
    Derivation constant = constant_field(c, order);
    Derivation perturbation = Derivation::zero(n, order);
    while (perturbation.is_zero()) perturbation = random_field(rng, n, order, 1, 3, 3);
    for (std::size_t i = 0; i < n; ++i) lambda.push_back(rng.rational(3));
    if (std::all_of(lambda.begin(), lambda.end(), [](const Coefficient& v) { return sgn(v) == 0; }))
      lambda[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1))] = rng.nonzero_rational(3);
    in.fields.push_back(constant);
    in.fields.push_back(constant + perturbation);
    in.fields.push_back(constant_field(lambda, order));
    break;
  }
  case CheckId::C10: {
    const auto space = cached_space(n, order);
    Derivation f = Derivation::zero(n, order);
    for (const auto& b : space->basis) {
      const Coefficient w = rng.rational(3);
      if (sgn(w) != 0) f = f + w * b;
    }
    in.fields.push_back(std::move(f));
    break;
  }
  }
  return in;
}

TrialResult evaluate_check(CheckId check, const TrialInputs& in) {
  TrialResult r;
  r.check = check;
  r.n = in.n;
  r.order = in.order;
  Outcome o;
  try {
    switch (check) {
    case CheckId::C1: check_chain_rule(in, o); break;
    case CheckId::C2: check_det_cocycle(in, o); break;
    case CheckId::C3: check_inverse_formulas(in, o); break;
    case CheckId::C4: check_piola(in, o); break;
    case CheckId::C5: check_equivariance(in, o, r); break;
    case CheckId::C6: check_bracket_divergence(in, o); break;
    case CheckId::C7: check_pushforward_hom(in, o); break;
    case CheckId::C8: check_duality(in, o); break;
    case CheckId::C9: check_fixed_point(in, o); break;
    case CheckId::C10: check_n1_structure(in, o); break;
    }
  } catch (const Error& e) {
    o.fail(std::string("error: ") + e.what());
  }
  r.pass = o.pass();
  r.verdict_order = o.verdict();
  if (!r.pass) {
    r.detail = o.detail();
    r.counterexample = payload_to_json(check, in);
  }
  return r;
}

TrialResult run_check(CheckId check, std::size_t n, int order, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  TrialResult r = evaluate_check(check, generate_inputs(check, n, order, seed));
  r.seed = seed;
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json payload_to_json(CheckId check, const TrialInputs& in) {
  json maps = json::array(), fields = json::array();
  for (const auto& m : in.maps) maps.push_back(to_json(m));
  for (const auto& f : in.fields) fields.push_back(to_json(f));
  return {{"check", info(check).code}, {"n", in.n}, {"order", in.order}, {"maps", maps}, {"fields", fields}};
}

TrialResult replay_payload(const json& payload) {
  const auto code = payload.at("check").get<std::string>();
  const auto check = parse_check_id(code);
  if (!check) throw DomainError("unknown check '" + code + "'");
  TrialInputs in;
  in.n = payload.at("n").get<std::size_t>();
  in.order = payload.at("order").get<int>();
  for (const auto& m : payload.at("maps")) in.maps.push_back(map_from_json(m));
  for (const auto& f : payload.at("fields")) in.fields.push_back(field_from_json(f));
  return evaluate_check(*check, in);
}

SuiteConfig SuiteConfig::defaults() {
  SuiteConfig c;
  for (const auto& i : kCatalog) c.checks.push_back(i.id);
  return c;
}

void validate(const SuiteConfig& config) {
  if (config.checks.empty()) throw ConfigError("no checks selected");
  if (config.n_list.empty()) throw ConfigError("empty n list");
  if (config.order_list.empty()) throw ConfigError("empty order list");
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  for (auto n : config.n_list)
    if (n < 1) throw ConfigError("n must be >= 1");
  for (auto id : config.checks)
    for (int order : config.order_list)
      if (order < info(id).min_order)
        throw ConfigError(std::string(info(id).code) + " needs order >= " + std::to_string(info(id).min_order) +
                          ", got " + std::to_string(order));
}

std::size_t CellReport::failures() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const TrialResult& t) { return !t.pass; }));
}

VerificationReport run_suite(const SuiteConfig& config) {
  validate(config);
  VerificationReport report;
  report.config = config;
  auto& cfg = report.config;
  auto canon = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  canon(cfg.checks);
  canon(cfg.n_list);
  canon(cfg.order_list);

  for (auto id : cfg.checks)
    for (auto n : cfg.n_list)
      for (int order : cfg.order_list) {
        CellReport cell{id, n, order, {}};
        cell.trials.resize(cfg.trials);
        report.cells.push_back(std::move(cell));
      }

  const std::size_t tasks = report.cells.size() * cfg.trials;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) {
      CellReport& cell = report.cells[t / cfg.trials];
      const std::size_t trial = t % cfg.trials;
      cell.trials[trial] = run_check(cell.check, cell.n, cell.order,
                                     trial_seed(cfg.seed, cell.check, cell.n, cell.order, trial));
    }
  };
  const auto start = std::chrono::steady_clock::now();
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  for (const auto& cell : report.cells)
    for (const auto& t : cell.trials) {
      ++report.total_trials;
      if (!t.pass) ++report.unexpected_failures;
      if (t.control_witness) ++report.controls_confirmed;
    }
  return report;
}

json to_json(const VerificationReport& report, bool include_timings) {
  const SuiteConfig& cfg = report.config;
  json checks = json::array();
  for (auto id : cfg.checks) checks.push_back(info(id).code);
  json config = {{"checks", checks},
                 {"n_list", cfg.n_list},
                 {"order_list", cfg.order_list},
                 {"trials", cfg.trials},
                 {"seed", cfg.seed}};
  json cells = json::array();
  for (const auto& cell : report.cells) {
    json trials = json::array();
    for (const auto& t : cell.trials) {
      json j = {{"seed", t.seed}, {"pass", t.pass}, {"verdict_order", t.verdict_order}};
      if (include_timings) j["ms"] = t.ms;
      if (t.control_witness) j["control"] = {{"expected_fail", true}, {"witness", *t.control_witness}};
      if (!t.pass) {
        j["detail"] = t.detail;
        if (t.counterexample) j["counterexample"] = *t.counterexample;
      }
      trials.push_back(std::move(j));
    }
    cells.push_back({{"check", info(cell.check).code},
                     {"name", info(cell.check).name},
                     {"n", cell.n},
                     {"order", cell.order},
                     {"trials", std::move(trials)}});
  }
  json summary = {{"unexpected_failures", report.unexpected_failures},
                  {"trials", report.total_trials},
                  {"negative_controls_confirmed", report.controls_confirmed}};
  if (include_timings) summary["elapsed_ms"] = report.elapsed_ms;
  return {{"config", std::move(config)}, {"cells", std::move(cells)}, {"summary", std::move(summary)}};
}

void print_table(const VerificationReport& report, std::ostream& os) {
  os << std::left << std::setw(6) << "check" << std::setw(26) << "name" << std::right << std::setw(3) << "n"
     << std::setw(7) << "order" << std::setw(8) << "trials" << std::setw(8) << "passed" << std::setw(9) << "verdict"
     << "\n";
  for (const auto& cell : report.cells) {
    int verdict = INT_MAX;
    for (const auto& t : cell.trials) verdict = std::min(verdict, t.verdict_order);
    os << std::left << std::setw(6) << info(cell.check).code << std::setw(26) << info(cell.check).name << std::right
       << std::setw(3) << cell.n << std::setw(7) << cell.order << std::setw(8) << cell.trials.size() << std::setw(8)
       << cell.trials.size() - cell.failures() << std::setw(9) << verdict << "\n";
    for (const auto& t : cell.trials)
      if (!t.pass) os << "  FAIL seed " << t.seed << ": " << t.detail << "\n";
  }
  os << "summary: " << report.total_trials << " trials, " << report.unexpected_failures << " unexpected failures, "
     << report.controls_confirmed << " negative controls confirmed\n";
}

} // namespace jetfields
