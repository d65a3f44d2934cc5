#include "jetfields/errors.hpp"
#include "jetfields/identity_suite.hpp"
#include "jetfields/text.hpp"
#include "jetfields/vector_fields.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace jetfields;

TEST_CASE("catalog") {
  CHECK(catalog().size() == 10);
  CHECK(parse_check_id("C7") == CheckId::C7);
  CHECK(!parse_check_id("C11").has_value());
  CHECK(info(CheckId::C10).code == "C10");
}

TEST_CASE("every check passes on small cells") {
  for (const auto& c : catalog())
    for (std::size_t n = 1; n <= 3; ++n)
      for (int order = std::max(3, c.min_order); order <= 4; ++order)
        for (std::uint64_t trial = 0; trial < 3; ++trial) {
          const TrialResult r = run_check(c.id, n, order, trial_seed(99, c.id, n, order, trial));
          INFO(c.code, " n=", n, " order=", order, " ", r.detail);
          CHECK(r.pass);
          CHECK(r.verdict_order >= 1);
        }
}

TEST_CASE("verdict orders") {
  CHECK(run_check(CheckId::C1, 2, 4, 1).verdict_order == 3);
  CHECK(run_check(CheckId::C4, 2, 4, 1).verdict_order == 2);
  CHECK(run_check(CheckId::C8, 2, 4, 1).verdict_order == 3);
  CHECK(run_check(CheckId::C9, 2, 4, 1).verdict_order == 3);
}

TEST_CASE("trial seeds are distinct and deterministic") {
  std::set<std::uint64_t> seen;
  for (std::size_t t = 0; t < 100; ++t) seen.insert(trial_seed(1, CheckId::C1, 2, 3, t));
  CHECK(seen.size() == 100);
  CHECK(trial_seed(1, CheckId::C1, 2, 3, 0) != trial_seed(1, CheckId::C2, 2, 3, 0));
  CHECK(trial_seed(1, CheckId::C1, 2, 3, 0) != trial_seed(2, CheckId::C1, 2, 3, 0));
  const TrialInputs a = generate_inputs(CheckId::C7, 3, 4, 5), b = generate_inputs(CheckId::C7, 3, 4, 5);
  REQUIRE(a.maps.size() == b.maps.size());
  for (std::size_t i = 0; i < a.maps.size(); ++i) CHECK(a.maps[i] == b.maps[i]);
}

TEST_CASE("generator exercises shears in different directions") {
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const TrialInputs in = generate_inputs(CheckId::C4, n, 4, seed);
      REQUIRE(in.traces.size() == 1);
      const auto& dirs = in.traces[0].shear_directions;
      REQUIRE(dirs.size() >= 2);
      CHECK(dirs[0] != dirs[1]);
      CHECK(in.traces[0].linear);
      CHECK(is_constant_jacobian(in.maps[0]));
    }
}

TEST_CASE("counterexample payloads replay") {
  // a map outside the constant-Jacobian subgroup makes the Piola check fail
  TrialInputs in;
  in.n = 2;
  in.order = 4;
  in.maps.push_back(non_constant_jacobian_map(2, 4));
  const TrialResult r = evaluate_check(CheckId::C4, in);
  CHECK(!r.pass);
  REQUIRE(r.counterexample.has_value());
  const TrialResult again = replay_payload(*r.counterexample);
  CHECK(!again.pass);
  CHECK(again.detail == r.detail);

  const TrialInputs good = generate_inputs(CheckId::C5, 2, 4, 3);
  CHECK(replay_payload(payload_to_json(CheckId::C5, good)).pass);
}

TEST_CASE("negative control") {
  const NegativeControl c = run_negative_control(parse_map("x1 -> x1 + x1*x2; x2 -> x2", 2, 4));
  CHECK(c.confirmed());
  CHECK(!run_negative_control(parse_map("x1 -> x1; x2 -> x2 + x1^2", 2, 4)).confirmed());
}

TEST_CASE("suite configuration") {
  SuiteConfig c = SuiteConfig::defaults();
  CHECK_NOTHROW(validate(c));
  c.trials = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = SuiteConfig::defaults();
  c.order_list = {2};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.checks = {CheckId::C1, CheckId::C9};
  CHECK_NOTHROW(validate(c));
  CHECK_THROWS_AS(run_check(CheckId::C5, 2, 2, 1), ConfigError);
}

TEST_CASE("reports are deterministic across thread counts") {
  SuiteConfig c = SuiteConfig::defaults();
  c.n_list = {2, 1};
  c.order_list = {3};
  c.trials = 3;
  c.seed = 17;
  const std::string one = to_json(run_suite(c)).dump();
  c.threads = 3;
  const VerificationReport r = run_suite(c);
  CHECK(to_json(r).dump() == one);
  CHECK(r.unexpected_failures == 0);
  CHECK(r.total_trials == 60);
  CHECK(r.controls_confirmed == 6);
  CHECK(r.cells.front().n == 1);
  std::ostringstream table;
  print_table(r, table);
  CHECK(table.str().find("summary: 60 trials, 0 unexpected failures, 6 negative controls confirmed") !=
        std::string::npos);
}

TEST_CASE("checks on hand-picked inputs") {
  TrialInputs c1;
  c1.n = 2;
  c1.order = 4;
  c1.maps = {parse_map("x1 -> x1; x2 -> x2 + x1^2", 2, 4), parse_map("x1 -> x1 + x2^2; x2 -> x2", 2, 4)};
  const TrialResult r1 = evaluate_check(CheckId::C1, c1);
  CHECK(r1.pass);
  CHECK(r1.verdict_order == 3);

  // identity map: both sides are div d; the second map is the control
  TrialInputs c5;
  c5.n = 2;
  c5.order = 4;
  c5.maps = {identity_map(2, 4), non_constant_jacobian_map(2, 4)};
  c5.fields = {parse_field("(x1^3)*d1 + (x1*x2)*d2", 2, 4)};
  const TrialResult r5 = evaluate_check(CheckId::C5, c5);
  CHECK(r5.pass);
  CHECK(r5.control_witness.has_value());

  // a map outside the subgroup in the checked slot is a genuine failure
  c5.maps = {non_constant_jacobian_map(2, 4)};
  c5.fields = {witness_basis(2, 4).front()};
  for (const auto& d : witness_basis(2, 4)) {
    c5.fields = {d};
    if (!evaluate_check(CheckId::C5, c5).pass) break;
  }
  CHECK(!evaluate_check(CheckId::C5, c5).pass);
}
