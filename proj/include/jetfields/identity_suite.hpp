#pragma once

#include "jetfields/derivation.hpp"
#include "jetfields/formal_map.hpp"
#include "jetfields/random.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jetfields {

/// The closed catalogue of identities the suite checks.
enum class CheckId : int {
  C1 = 1, // J(st) = J(s) s(J(t))
  C2,     // det J(st) = det J(s) s(det J(t))
  C3,     // J(s^-1) = s^-1(J(s)^-1), and the same for det J
  C4,     // rows of J(s)^-1 are divergence free on constant-Jacobian maps
  C5,     // div(s(d)) = s(div d) on constant-Jacobian maps, plus a negative control
  C6,     // div[d,e] = d(div e) - e(div d); [Div^c, Div^c] lies in Div^0
  C7,     // pushforward preserves brackets and is a group action
  C8,     // s(d_i) * s(x_j) = delta_ij
  C9,     // centraliser of the d_i is the constant fields; H_i + d commute only for d = 0
  C10,    // constant-divergence fields in one variable are K d + K x d
};

struct CheckInfo {
  CheckId id;
  std::string_view code;
  std::string_view name;
  int min_order;
};

std::span<const CheckInfo> catalog();
const CheckInfo& info(CheckId id);
/// "C1".."C10"
std::optional<CheckId> parse_check_id(std::string_view code);

/// Everything one trial consumes. Maps and fields are listed per check in
/// identity_suite.cpp; `traces` records how generated maps were built.
struct TrialInputs {
  std::size_t n = 0;
  int order = 0;
  std::vector<FormalMap> maps;
  std::vector<Derivation> fields;
  std::vector<GeneratorTrace> traces;
};

struct TrialResult {
  CheckId check = CheckId::C1;
  std::size_t n = 0;
  int order = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  int verdict_order = 0;
  double ms = 0;
  std::string detail;                             // why it failed
  std::optional<nlohmann::json> counterexample;   // replayable payload on failure
  std::optional<std::string> control_witness;     // C5 negative control
};

/// Per-trial seed: a hash of (master, check, n, order, trial), so results do
/// not depend on the order trials run in.
std::uint64_t trial_seed(std::uint64_t master, CheckId check, std::size_t n, int order, std::size_t trial);

TrialInputs generate_inputs(CheckId check, std::size_t n, int order, std::uint64_t seed);
/// Evaluates both sides exactly and compares at the common order. Pure in
/// its inputs; `seed` in the result is left 0.
TrialResult evaluate_check(CheckId check, const TrialInputs& inputs);
/// generate_inputs + evaluate_check. Throws ConfigError below the check's
/// minimum order.
TrialResult run_check(CheckId check, std::size_t n, int order, std::uint64_t seed);

nlohmann::json payload_to_json(CheckId check, const TrialInputs& inputs);
/// Re-evaluates a counterexample payload.
TrialResult replay_payload(const nlohmann::json& payload);

/// Equivariance is expected to fail off the constant-Jacobian subgroup.
struct NegativeControl {
  bool constant_jacobian = false;
  std::optional<Derivation> witness;
  bool confirmed() const { return !constant_jacobian && witness.has_value(); }
};

NegativeControl run_negative_control(const FormalMap& s);

/// x1 -> x1 + x1 * x2 (x1 -> x1 + x1^2 when n = 1), other variables fixed.
/// Jacobian 1 + x2, so not in the constant-Jacobian subgroup.
FormalMap non_constant_jacobian_map(std::size_t n, int order);

struct SuiteConfig {
  std::vector<CheckId> checks;
  std::vector<std::size_t> n_list{1, 2, 3};
  std::vector<int> order_list{3, 4, 5};
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  bool json_output = false;
  unsigned threads = 1; // 0 = hardware concurrency

  static SuiteConfig defaults(); // every check
};

/// Throws ConfigError: empty lists, trials == 0, n == 0, or an order below
/// the minimum of a selected check (its verdict order would be < 1).
void validate(const SuiteConfig& config);

struct CellReport {
  CheckId check;
  std::size_t n;
  int order;
  std::vector<TrialResult> trials;

  std::size_t failures() const;
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<CellReport> cells; // canonical order: check, n, order
  std::size_t total_trials = 0;
  std::size_t unexpected_failures = 0;
  std::size_t controls_confirmed = 0;
  double elapsed_ms = 0;
};

VerificationReport run_suite(const SuiteConfig& config);

/// The report schema. Timings are left out unless asked for, so reports
/// for a fixed config and seed are byte-identical.
nlohmann::json to_json(const VerificationReport& report, bool include_timings = false);
void print_table(const VerificationReport& report, std::ostream& os);

} // namespace jetfields
