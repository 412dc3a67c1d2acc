#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nova/algebra.hpp"
#include "nova/tensor.hpp"

namespace nova {

struct PropertyOptions {
  std::size_t trials = 20;        // seeded random instances (see README for per-property use)
  std::uint64_t seed = 1;
  std::optional<Field> field;     // property default when unset
  std::vector<std::size_t> dims;  // property default when empty
  unsigned jobs = 1;
};

// Everything needed to replay a failing instance.
struct Counterexample {
  std::string instance;  // which phase and index produced it
  std::string detail;    // failing conclusion and witness
  std::vector<std::pair<std::string, Algebra>> algebras;
  std::vector<std::pair<std::string, BimodNov>> contexts;
  std::vector<std::pair<std::string, Matrix>> maps;
  std::vector<std::pair<std::string, Tensor2>> tensors;
  std::vector<std::pair<std::string, Scalar>> scalars;
};

struct PropertyReport {
  std::string id;
  Field field;
  std::size_t instances = 0;       // evaluated
  std::size_t hypotheses_met = 0;  // instances where the premise held (all for equivalences)
  std::size_t failures = 0;
  std::vector<Counterexample> counterexamples;  // the first few
  // Verdict counts, e.g. how many instances landed on each side of an equivalence.
  std::vector<std::pair<std::string, std::size_t>> tallies;
  double elapsed_ms = 0;
  bool passed() const { return failures == 0; }
};

const std::vector<std::string>& property_ids();
// One-line description of what the property checks.
std::string property_summary(const std::string& id);
// Throws ParseError for an unknown id and FieldMismatch/NoHalf when the field cannot host
// the property.
PropertyReport run_property(const std::string& id, const PropertyOptions& options = {});

}  // namespace nova
