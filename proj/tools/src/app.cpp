#include "nova/cli/app.hpp"

#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "nova/errors.hpp"
#include "nova/properties.hpp"

namespace nova::cli {

namespace {

// Errors caused by the inputs themselves rather than by the mathematics.
bool input_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DimMismatch*>(&e) ||
         dynamic_cast<const FieldMismatch*>(&e) || dynamic_cast<const DivisionByZero*>(&e) ||
         dynamic_cast<const BadContraction*>(&e) || dynamic_cast<const SpaceTooLarge*>(&e) ||
         dynamic_cast<const NoHalf*>(&e);
}

int fail_with(int code, const std::string& type, const std::string& message) {
  std::cout << Json{{"error", type}, {"message", message}, {"exit", code}}.dump() << "\n";
  std::cerr << "nova: " << message << "\n";
  return code;
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

void masses(CLI::App* sub, Options& o) {
  sub->add_option("--weight", o.weight, "weight lambda (integer or num/den)");
  sub->add_option("--kappa", o.kappa, "mass kappa");
  sub->add_option("--mu", o.mu, "mass mu");
  sub->add_option("--epsilon", o.epsilon, "tensor-equation mass");
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Exact computations with Novikov algebras, their bimodules and operators", "nova"};
  app.set_version_flag("--version", NOVA_VERSION_STRING);
  app.require_subcommand(1);

  Options o;
  std::string kind;
  std::string field;

  auto common = [&](CLI::App* sub, const std::string& kind_help) {
    sub->add_option("kind", kind, kind_help)->required();
    sub->add_option("inputs", o.inputs, "documents or context keywords");
    sub->add_option("--field", field, "Q, F2, F3, F5, F7, ...");
    sub->add_flag("--verbose,-v", o.verbose, "list every residual location");
  };

  CLI::App* verify = app.add_subcommand("verify", "check the defining identities of a document");
  common(verify, "one of: " + joined(verify_kinds()));

  CLI::App* check = app.add_subcommand("check", "evaluate an operator or tensor equation");
  common(check, "one of: " + joined(check_kinds()));
  masses(check, o);

  CLI::App* derive = app.add_subcommand("derive", "build a derived structure");
  common(derive, "one of: " + joined(derive_constructions()));
  masses(derive, o);
  derive->add_option("--out,-o", o.out, "write the document here instead of stdout");

  CLI::App* prop = app.add_subcommand("prop", "run a named property check");
  prop->add_option("id", kind, "one of: " + joined(property_ids()))->required();
  prop->add_option("--field", field, "field (property default when omitted)");
  prop->add_option("--trials", o.trials, "seeded random instances");
  prop->add_option("--seed", o.seed, "random seed");
  prop->add_option("--dims", o.dims, "dimensions, e.g. --dims 2,3")->delimiter(',');
  prop->add_option("--jobs,-j", o.jobs, "worker threads");
  prop->add_flag("--verbose,-v", o.verbose, "print every stored counterexample");

  CLI::App* solve = app.add_subcommand("solve", "enumerate solutions over a prime field");
  common(solve, "novikov, nybe, enybe, ext-o, rota-baxter, invariant-tensor or quadratic");
  masses(solve, o);
  solve->add_option("--dim", o.dim, "dimension (novikov)");
  solve->add_option("--shard", o.shard, "i/k: scan the i-th of k interleaved slices");
  solve->add_option("--jobs,-j", o.jobs, "worker threads");
  solve->add_flag("--count-only", o.count_only, "print only the summary line");
  solve->add_flag("--golden", o.golden, "compare count and hash with the golden file");
  solve->add_flag("--write-golden", o.write_golden, "record count and hash as the golden file");

  CLI::App* list = app.add_subcommand("list", "print the known kinds of every command");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail_with(kInputError, "ParseError", e.what());
  }
  if (!field.empty()) o.field = field;

  try {
    if (verify->parsed()) return cmd_verify(kind, o);
    if (check->parsed()) return cmd_check(kind, o);
    if (derive->parsed()) return cmd_derive(kind, o);
    if (prop->parsed()) return cmd_prop(kind, o);
    if (solve->parsed()) return cmd_solve(kind, o);
    if (list->parsed()) {
      std::cout << Json{{"verify", verify_kinds()},
                        {"check", check_kinds()},
                        {"derive", derive_constructions()},
                        {"prop", property_ids()},
                        {"solve", {"novikov", "nybe", "enybe", "ext-o", "rota-baxter",
                                   "invariant-tensor", "quadratic"}}}
                       .dump(2)
                << "\n";
      return kPass;
    }
  } catch (const Error& e) {
    const std::string what = e.what();
    const std::string type = what.substr(0, what.find(':'));
    return fail_with(input_error(e) ? kInputError : kFail, type, what);
  } catch (const Json::exception& e) {
    return fail_with(kInputError, "ParseError", e.what());
  } catch (const std::exception& e) {
    return fail_with(kInputError, "Error", e.what());
  }
  return kInputError;
}

}  // namespace nova::cli
