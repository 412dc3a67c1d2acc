#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nova/cli/document.hpp"
#include "nova/operators.hpp"
#include "nova/residual.hpp"

namespace nova::cli {

// Exit codes of every subcommand.
enum Exit : int { kPass = 0, kFail = 1, kInputError = 2 };

struct Options {
  std::vector<std::string> inputs;
  std::optional<std::string> field;
  std::string weight = "0", kappa = "0", mu = "0", epsilon = "0";
  bool verbose = false;
  std::string out;
  // prop
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::vector<std::size_t> dims;
  unsigned jobs = 1;
  // solve
  std::size_t dim = 2;
  std::string shard = "0/1";
  bool count_only = false;
  bool golden = false;
  bool write_golden = false;
};

// Positional inputs of a command: documents by path, or a context keyword.
class Inputs {
 public:
  Inputs(const Options& o, std::size_t min_count, std::size_t max_count, const std::string& usage);
  const Field& field() const { return field_; }
  std::size_t size() const { return args_.size(); }
  const std::string& arg(std::size_t i) const { return args_.at(i); }

  const Json& doc(std::size_t i);
  Algebra algebra(std::size_t i);
  // "regular" (the algebra acting on itself with its product), "regular-trivial" (zero
  // module product), "dual" ((A*, L_star*, -R*) with zero product) or a bimodule/bimodnov file.
  BimodNov context(std::size_t i, const Algebra& alg);
  Matrix map(std::size_t i);
  Tensor2 tensor(std::size_t i);
  BilForm form(std::size_t i);
  PostNov post(std::size_t i);

  Scalar scalar(const std::string& text) const { return Scalar::parse(field_, text); }
  MassParams masses() const;

 private:
  bool is_keyword(std::size_t i) const;
  const Options& o_;
  std::vector<std::string> args_;
  std::vector<std::optional<Json>> docs_;
  Field field_;
};

Json witness_json(const Witness& w);
// {"check", "flag", "residual_norm_zero", "witness", "elapsed_ms"}; with verbose, every
// witness under "residuals".
Json report(const std::string& check, bool flag, bool residual_zero, const Residual& witnesses,
            double elapsed_ms, bool verbose);

// Prints the report to stdout and a one-line summary to stderr; returns the exit code.
int emit(const Json& report);

int cmd_verify(const std::string& kind, const Options& o);
int cmd_check(const std::string& kind, const Options& o);
int cmd_derive(const std::string& construction, const Options& o);
int cmd_prop(const std::string& id, const Options& o);
int cmd_solve(const std::string& kind, const Options& o);

std::vector<std::string> verify_kinds();
std::vector<std::string> check_kinds();
std::vector<std::string> derive_constructions();

}  // namespace nova::cli
