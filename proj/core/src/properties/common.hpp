#pragma once

// Shared machinery of the property checks: the harness that runs cases (optionally in
// parallel) and the instance sources they draw from.

#include <functional>
#include <string>
#include <vector>

#include "nova/algebra.hpp"
#include "nova/operators.hpp"
#include "nova/postnov.hpp"
#include "nova/properties.hpp"
#include "nova/solver.hpp"
#include "nova/tensor.hpp"

namespace nova::props {

struct Outcome {
  bool premise = true;  // false: hypotheses failed, conclusions not required
  bool ok = true;
  std::string detail;
  std::vector<std::string> tallies;
  std::vector<std::pair<std::string, Matrix>> maps;  // added to the replay data on failure
};

// Collects the conclusions of one case.
class Verdict {
 public:
  // Both sides of an equivalence must agree; the common verdict is tallied.
  Verdict& same(const std::string& what, bool lhs, bool rhs);
  Verdict& require(const std::string& what, const Residual& r);
  Verdict& require(const std::string& what, bool ok, const std::string& witness = "");
  Verdict& tally(const std::string& what);
  // Records a map that belongs in the counterexample if this case fails.
  Verdict& note(const std::string& name, const Matrix& m);
  bool ok() const { return out_.ok; }
  Outcome done() const { return out_; }
  static Outcome premise_failed(const std::string& tally = "premise false");

 private:
  void fail(const std::string& what);
  Outcome out_;
};

// Builder for the replay data of a case.
struct Inst {
  Counterexample ce;
  explicit Inst(std::string label) { ce.instance = std::move(label); }
  Inst& alg(const std::string& name, const Algebra& a);
  Inst& ctx(const std::string& name, const BimodNov& c);
  Inst& map(const std::string& name, const Matrix& m);
  Inst& tensor(const std::string& name, const Tensor2& t);
  Inst& scalar(const std::string& name, const Scalar& s);
  Inst& masses(const MassParams& m);
};

class Harness {
 public:
  Harness(std::string id, Field field) : id_(std::move(id)), field_(field) {}
  void add(Inst inst, std::function<Outcome()> run);
  std::size_t size() const { return cases_.size(); }
  PropertyReport run(unsigned jobs);

 private:
  struct Case {
    Counterexample ce;
    std::function<Outcome()> run;
  };
  std::string id_;
  Field field_;
  std::vector<Case> cases_;
};

// Options resolved against the property's defaults.
struct Setup {
  Field field;
  std::vector<std::size_t> dims;
  std::size_t trials;
  std::uint64_t seed;
};
Setup resolve(const PropertyOptions& o, Field default_field,
              std::vector<std::size_t> default_dims = {2, 3});
void require_half(const Field& f, const std::string& id);
bool has_dim(const Setup& s, std::size_t d);

// The worked example: A2 with T2 and beta2, reduced into any field.
Algebra a2(Field f);
Matrix t2(Field f);
Matrix beta2(Field f);

// Dim-2 enumerated algebras for prime fields, otherwise a few named ones.
std::vector<Algebra> sweep_algebras(const Field& f);
// Enumerated dim-2 (prime fields), trunc-poly in a random basis (dim >= 3 or Q),
// or e o e = c e (dim 1).
Algebra random_algebra(Rng& rng, const Field& f, std::size_t dim);
Algebra scaled(const Algebra& a, const Scalar& c);

// Every matrix over a prime field with rows * cols entries; empty when more than `limit`.
std::vector<Matrix> all_maps(const Field& f, std::size_t rows, std::size_t cols,
                             std::uint64_t limit = 4096);
std::vector<Tensor2> all_tensors(const Field& f, std::size_t n, std::uint64_t limit = 4096);
// Every element of the span of a basis over a prime field; empty when more than `limit`.
std::vector<Matrix> span_of(const Field& f, const std::vector<Matrix>& basis, std::size_t rows,
                            std::size_t cols, std::uint64_t limit);

// Solutions of homogeneous linear conditions on matrices: fn returns the coordinates of the
// conditions and must be linear in its argument.
using LinearFn = std::function<std::vector<Scalar>(const Matrix&)>;
std::vector<Matrix> solution_basis(const Field& f, std::size_t rows, std::size_t cols,
                                   const LinearFn& fn);
Matrix random_combination(Rng& rng, const Field& f, const std::vector<Matrix>& basis,
                          std::size_t rows, std::size_t cols);

// Linear conditions used to sample structured maps.
LinearFn balanced_conditions(const BimodNov& ctx);
LinearFn homomorphism_conditions(const BimodNov& ctx);
LinearFn both(LinearFn a, LinearFn b);
// Grid of a symmetric tensor invariant under (L(x) (x) id + id (x) L_star(x)).
LinearFn invariant_symmetric_conditions(const Algebra& alg);
// Gram matrix of a symmetric form with B(ab, c) + B(b, a * c) = 0.
LinearFn invariant_form_conditions(const Algebra& alg);
// T^T G - sign G T.
LinearFn adjoint_conditions(const Matrix& gram, int sign);
// D(xy) - D(x)y - xD(y) for each algebra given.
LinearFn derivation_conditions(std::vector<Algebra> algs);

// Tensors r = skew + symmetric with invariant symmetric part, all of them when few enough,
// otherwise `samples` random ones. Includes r = 0 first.
std::vector<Tensor2> tensors_with_invariant_sym(Rng& rng, const Algebra& alg, std::size_t samples);
// Every field element for prime fields, a few small values over Q.
std::vector<Scalar> field_values(const Field& f);

// Context M for operator properties: the regular module with product c * (product of A);
// c = 0 gives the trivial product.
BimodNov scaled_regular(const Algebra& alg, const Scalar& c);

// An operator instance on a context: alpha, beta and masses.
struct OperatorInstance {
  std::string how;
  Matrix alpha, beta;
  MassParams masses;
};
// beta is drawn from `beta_space`; alpha is random, built as a id + b beta on a
// scaled_regular context (which solves the equation for suitable masses), or found by
// enumerating every alpha for small prime instances. With unit_kappa the masses are
// (lambda, -1, +-lambda).
OperatorInstance operator_instance(Rng& rng, const BimodNov& ctx, const Scalar& scale,
                                   const std::vector<Matrix>& beta_space, bool allow_search,
                                   bool unit_kappa = false);

}  // namespace nova::props

namespace nova::props {

// One entry point per property id.
PropertyReport prop_semi(const PropertyOptions&);
PropertyReport prop_dual(const PropertyOptions&);
PropertyReport prop_ext_star(const PropertyOptions&);
PropertyReport prop_delta_pm(const PropertyOptions&);
PropertyReport prop_r_pm(const PropertyOptions&);
PropertyReport prop_cor_bax(const PropertyOptions&);
PropertyReport prop_baxter(const PropertyOptions&);
PropertyReport prop_cons(const PropertyOptions&);
PropertyReport prop_assoc(const PropertyOptions&);
PropertyReport prop_lrbimod(const PropertyOptions&);
PropertyReport prop_compat(const PropertyOptions&);
PropertyReport prop_hom(const PropertyOptions&);
PropertyReport prop_tri(const PropertyOptions&);
PropertyReport prop_tensor_op(const PropertyOptions&);
PropertyReport prop_enybe_ext(const PropertyOptions&);
PropertyReport prop_cor_enybe(const PropertyOptions&);
PropertyReport prop_skew(const PropertyOptions&);
PropertyReport prop_lem_r(const PropertyOptions&);
PropertyReport prop_qn(const PropertyOptions&);
PropertyReport prop_dual_exo(const PropertyOptions&);
PropertyReport prop_lift_bal(const PropertyOptions&);
PropertyReport prop_lift_ext(const PropertyOptions&);
PropertyReport prop_cor_gn(const PropertyOptions&);
PropertyReport prop_circ_delta(const PropertyOptions&);
PropertyReport prop_gnybe_prod(const PropertyOptions&);
PropertyReport prop_gnybe_ext(const PropertyOptions&);
PropertyReport prop_goper(const PropertyOptions&);
PropertyReport prop_goper_cor(const PropertyOptions&);

}  // namespace nova::props
