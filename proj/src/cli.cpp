#include "jetfields/cli.hpp"

#include "jetfields/errors.hpp"
#include "jetfields/formal_map.hpp"
#include "jetfields/identity_suite.hpp"
#include "jetfields/text.hpp"
#include "jetfields/vector_fields.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>

namespace jetfields {

namespace {

constexpr const char* kSeedEnv = "JETFIELDS_SEED";

struct Shape {
  std::size_t n = 0;
  int order = 0;
};

void add_shape(CLI::App* cmd, Shape& s) {
  cmd->add_option("-n", s.n, "number of variables")->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  cmd->add_option("-N", s.order, "truncation order")->required()->check(CLI::Range(0, 64));
}

std::uint64_t seed_from_env() {
  const char* v = std::getenv(kSeedEnv);
  if (!v || !*v) return 1;
  char* end = nullptr;
  const unsigned long long s = std::strtoull(v, &end, 10);
  if (*end != '\0') throw ConfigError(std::string(kSeedEnv) + " is not an unsigned integer: '" + v + "'");
  return s;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact truncated power series, formal maps and vector fields", "jetfields"};
  app.require_subcommand(1);

  Shape shape;
  std::string text, text2, map_text, field_text;
  std::function<int()> action;

  auto* div = app.add_subcommand("div", "divergence of a field");
  add_shape(div, shape);
  div->add_option("field", text, "field, e.g. \"(x1)*d1 + (x2)*d2\"")->required();
  div->callback([&] {
    action = [&] {
      out << format_series(divergence(parse_field(text, shape.n, shape.order))) << "\n";
      return 0;
    };
  });

  auto* jac = app.add_subcommand("jac", "Jacobian matrix of a map, entry (i,j) = d x_j' / d x_i");
  add_shape(jac, shape);
  jac->add_option("map", text, "map script, e.g. \"x1 -> x1; x2 -> x2 + x1^2\"")->required();
  jac->callback([&] {
    action = [&] {
      out << format_matrix(jacobian_matrix(parse_map(text, shape.n, shape.order))) << "\n";
      return 0;
    };
  });

  auto* jacdet = app.add_subcommand("jacdet", "Jacobian determinant of a map");
  add_shape(jacdet, shape);
  jacdet->add_option("map", text, "map script")->required();
  jacdet->callback([&] {
    action = [&] {
      out << format_series(jacobian_det(parse_map(text, shape.n, shape.order))) << "\n";
      return 0;
    };
  });

  auto* push = app.add_subcommand("push", "pushforward s d s^-1 of a field along a map");
  add_shape(push, shape);
  push->add_option("--map", map_text, "map script")->required();
  push->add_option("--field", field_text, "field")->required();
  push->callback([&] {
    action = [&] {
      const FormalMap s = parse_map(map_text, shape.n, shape.order);
      out << format_field(pushforward(s, parse_field(field_text, shape.n, shape.order))) << "\n";
      return 0;
    };
  });

  auto* comp = app.add_subcommand("compose", "composite s t, x_i -> s(t(x_i))");
  add_shape(comp, shape);
  comp->add_option("s", text, "first map script")->required();
  comp->add_option("t", text2, "second map script")->required();
  comp->callback([&] {
    action = [&] {
      const FormalMap s = parse_map(text, shape.n, shape.order);
      out << format_map(compose(s, parse_map(text2, shape.n, shape.order))) << "\n";
      return 0;
    };
  });

  auto* inv = app.add_subcommand("invert", "inverse of an automorphism");
  add_shape(inv, shape);
  inv->add_option("map", text, "map script")->required();
  inv->callback([&] {
    action = [&] {
      out << format_map(invert(parse_map(text, shape.n, shape.order))) << "\n";
      return 0;
    };
  });

  auto* br = app.add_subcommand("bracket", "Lie bracket [d, e]");
  add_shape(br, shape);
  br->add_option("d", text, "first field")->required();
  br->add_option("e", text2, "second field")->required();
  br->callback([&] {
    action = [&] {
      const Derivation d = parse_field(text, shape.n, shape.order);
      out << format_field(bracket(d, parse_field(text2, shape.n, shape.order))) << "\n";
      return 0;
    };
  });

  auto* flow = app.add_subcommand("flow", "time-one flow exp(d) of a field with coefficients in m^2");
  add_shape(flow, shape);
  flow->add_option("field", text, "field")->required();
  flow->callback([&] {
    action = [&] {
      out << format_map(exp_flow(parse_field(text, shape.n, shape.order))) << "\n";
      return 0;
    };
  });

  SuiteConfig config = SuiteConfig::defaults();
  std::vector<std::string> check_codes;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_option("--checks", check_codes, "comma-separated checks, default all")->delimiter(',');
  verify->add_option("--n-list", config.n_list, "comma-separated variable counts")->delimiter(',');
  verify->add_option("--order-list", config.order_list, "comma-separated orders")->delimiter(',');
  verify->add_option("--trials", config.trials, "trials per cell");
  auto* seed_opt = verify->add_option("--seed", config.seed, std::string("master seed (default $") + kSeedEnv + " or 1)");
  verify->add_option("--threads", config.threads, "worker threads, 0 = all cores");
  verify->add_flag("--json", config.json_output, "print the JSON report");
  verify->add_flag("--timings", timings, "include timings in the JSON report");
  verify->callback([&] {
    action = [&] {
      if (!check_codes.empty()) {
        config.checks.clear();
        for (const auto& c : check_codes) {
          const auto id = parse_check_id(c);
          if (!id) throw ConfigError("unknown check '" + c + "'");
          config.checks.push_back(*id);
        }
      }
      if (seed_opt->count() == 0) config.seed = seed_from_env();
      const VerificationReport report = run_suite(config);
      if (config.json_output) out << to_json(report, timings).dump(2) << "\n";
      else print_table(report, out);
      return report.unexpected_failures == 0 ? 0 : 1;
    };
  });

  std::vector<std::string> argv_store{"jetfields"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace jetfields
