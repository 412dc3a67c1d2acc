#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "nova/linalg.hpp"

namespace nova {

// Full evaluation collects every failing tuple; FailFast stops at the first.
enum class Eval { Full, FailFast };

struct Witness {
  std::string identity;
  std::vector<std::size_t> tuple;  // basis indices the identity was evaluated on
  Vec value;
};

// Outcome of evaluating LHS - RHS of one or more identities on basis tuples.
class Residual {
 public:
  explicit Residual(Eval mode = Eval::Full) : mode_(mode) {}

  // Records value if nonzero. Returns false once evaluation may stop.
  bool check(const char* identity, std::initializer_list<std::size_t> tuple, const Vec& value) {
    if (value.is_zero()) return true;
    witnesses_.push_back({identity, std::vector<std::size_t>(tuple), value});
    return mode_ == Eval::Full;
  }
  bool check(const char* identity, std::initializer_list<std::size_t> tuple,
             const Scalar& value) {
    if (value.is_zero()) return true;
    witnesses_.push_back(
        {identity, std::vector<std::size_t>(tuple), Vec(value.field(), {value})});
    return mode_ == Eval::Full;
  }

  bool zero() const { return witnesses_.empty(); }
  // True when a fail-fast evaluation has already failed.
  bool done() const { return mode_ == Eval::FailFast && !witnesses_.empty(); }
  Eval mode() const { return mode_; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }

  // Appends another report's witnesses, prefixing their identity names.
  void absorb(const Residual& other, const std::string& prefix = "");
  std::string summary(std::size_t max_items = 5) const;

 private:
  Eval mode_;
  std::vector<Witness> witnesses_;
};

}  // namespace nova
