#include <chrono>
#include <functional>
#include <map>

#include "commands.hpp"
#include "nova/errors.hpp"
#include "nova/lift.hpp"
#include "nova/postnov.hpp"
#include "nova/ybe.hpp"

namespace nova::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
  Residual residual;
  bool flag;
  Json extra;  // merged into the report
};

Outcome plain(Residual r) {
  const bool z = r.zero();
  return {std::move(r), z, Json::object()};
}

Json tensor3_terms(const Tensor3& t) {
  Json terms = Json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!t.at(i, j, k).is_zero())
          terms.push_back({{"index", {i, j, k}}, {"coeff", scalar_json(t.at(i, j, k))}});
  return terms;
}

Outcome tensor_outcome(const Tensor3& t, const char* name) {
  Outcome o = plain(tensor_report(t, name));
  o.extra["residual"] = tensor3_terms(t);
  return o;
}

struct Kind {
  std::size_t min_args, max_args;
  std::string usage;
  std::function<Outcome(Inputs&)> run;
};

int dispatch(const std::map<std::string, Kind>& table, const std::string& verb,
             const std::string& kind, const Options& o) {
  auto it = table.find(kind);
  if (it == table.end()) throw ParseError("unknown " + verb + " kind '" + kind + "'");
  const Kind& k = it->second;
  Inputs in(o, k.min_args, k.max_args, verb + " " + kind + " " + k.usage);
  const auto start = Clock::now();
  Outcome out = k.run(in);
  Json r = report(kind, out.flag, out.residual.zero(), out.residual, ms_since(start), o.verbose);
  for (auto& [key, value] : out.extra.items()) r[key] = value;
  return emit(r);
}

CommTrialgebra trialgebra_from(const Json& doc) {
  return {algebra_from(bundle_item(doc, "dot")), algebra_from(bundle_item(doc, "circ")),
          linmap_from(bundle_item(doc, "derivation"))};
}

const std::map<std::string, Kind>& verify_table() {
  static const std::map<std::string, Kind> table = {
      {"algebra", {1, 1, "ALG", [](Inputs& in) { return plain(novikov_residual(in.algebra(0))); }}},
      {"bimodule",
       {1, 1, "BIMOD", [](Inputs& in) { return plain(bimodule_residual(bimodule_from(in.doc(0)))); }}},
      {"bimodnov",
       {1, 1, "BIMODNOV",
        [](Inputs& in) { return plain(bimodnov_residual(bimodnov_from(in.doc(0)))); }}},
      {"abnova",
       {1, 1, "BIMODNOV",
        [](Inputs& in) { return plain(abnova_residual(bimodnov_from(in.doc(0)))); }}},
      {"postnov", {1, 1, "POST", [](Inputs& in) { return plain(post_residual(in.post(0))); }}},
      {"trialgebra",
       {1, 1, "BUNDLE(dot, circ, derivation)",
        [](Inputs& in) {
          const CommTrialgebra t = trialgebra_from(in.doc(0));
          Residual r = trialgebra_residual(t);
          r.absorb(derivation_residual(t), "derivation ");
          return plain(std::move(r));
        }}},
      {"bilform",
       {2, 2, "FORM ALG",
        [](Inputs& in) {
          const BilForm b = in.form(0);
          const Algebra alg = in.algebra(1);
          if (b.grid.rows() != alg.dim()) throw DimMismatch("form and algebra differ in dimension");
          Residual r;
          const Matrix diff = b.grid - b.grid.transpose();
          for (std::size_t i = 0; i < diff.rows(); ++i)
            for (std::size_t j = i + 1; j < diff.cols(); ++j)
              r.check("symmetric", {i, j}, diff.at(i, j));
          if (!b.nondegenerate()) r.check("nondegenerate", {}, Scalar::one(alg.field()));
          r.absorb(bilform_invariance(alg, b), "invariance ");
          return plain(std::move(r));
        }}},
  };
  return table;
}

Residual invariance_as_residual(const InvarianceReport& rep, const Tensor2& s) {
  Residual r;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      r.check("symmetric", {i, j}, s.at(i, j) - s.at(j, i));
  r.absorb(rep.tensor);
  return r;
}

const std::map<std::string, Kind>& check_table() {
  static const std::map<std::string, Kind> table = {
      {"ext-o",
       {4, 4, "ALG CTX ALPHA BETA",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          const ExtOReport rep =
              ext_o_residual(in.context(1, alg), in.map(2), in.map(3), in.masses());
          Outcome o{rep.combined(), rep.flag(), Json::object()};
          o.extra["parts"] = {{"equation", rep.equation.zero()},
                              {"balanced", rep.balanced.zero()},
                              {"invariant", rep.invariant.zero()},
                              {"equivalent", rep.equivalent.zero()}};
          return o;
        }}},
      {"o-operator",
       {3, 3, "ALG CTX ALPHA",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          return plain(o_operator_residual(in.context(1, alg), in.map(2), in.masses().lambda));
        }}},
      {"rota-baxter",
       {2, 2, "ALG T",
        [](Inputs& in) {
          return plain(rota_baxter_residual(in.algebra(0), in.map(1), in.masses().lambda));
        }}},
      {"identity-ext",
       {2, 2, "ALG T",
        [](Inputs& in) {
          const MassParams m = in.masses();
          return plain(identity_extension_residual(in.algebra(0), in.map(1), m.lambda, m.kappa + m.mu));
        }}},
      {"balanced",
       {3, 3, "ALG CTX BETA",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          return plain(balanced_residual(in.context(1, alg), in.map(2)));
        }}},
      {"homomorphism",
       {3, 3, "ALG CTX BETA",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          return plain(homomorphism_residual(in.context(1, alg), in.map(2)));
        }}},
      {"invariant",
       {3, 3, "ALG CTX BETA",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          return plain(invariant_residual(in.context(1, alg), in.map(2), in.masses().kappa));
        }}},
      {"equivalent",
       {3, 3, "ALG CTX BETA",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          return plain(equivalent_residual(in.context(1, alg), in.map(2), in.masses().mu));
        }}},
      {"star-conditions",
       {3, 3, "ALG CTX ALPHA",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          return plain(star_conditions(in.context(1, alg), in.map(2), in.masses().lambda));
        }}},
      {"nybe",
       {2, 2, "ALG R",
        [](Inputs& in) { return tensor_outcome(nybe_residual(in.algebra(0), in.tensor(1)), "nybe"); }}},
      {"enybe",
       {2, 2, "ALG R",
        [](Inputs& in) {
          return tensor_outcome(enybe_residual(in.algebra(0), in.tensor(1), in.masses().epsilon),
                                "enybe");
        }}},
      {"o-nybe",
       {2, 2, "ALG R", [](Inputs& in) { return plain(o_nybe_residual(in.algebra(0), in.tensor(1))); }}},
      {"gnybe",
       {2, 2, "ALG R",
        [](Inputs& in) {
          const GnybeResiduals g = gnybe_residuals(in.algebra(0), in.tensor(1));
          Outcome o = plain(g.report());
          o.extra["parts"] = {{"first", g.first_zero()}, {"second", g.second_zero()}};
          return o;
        }}},
      {"bialgebra-extra",
       {2, 2, "ALG R",
        [](Inputs& in) { return plain(bialgebra_extra_residuals(in.algebra(0), in.tensor(1))); }}},
      {"invariance",
       {2, 2, "ALG S",
        [](Inputs& in) {
          const Tensor2 s = in.tensor(1);
          const InvarianceReport rep = invariance_residual(in.algebra(0), s);
          return plain(invariance_as_residual(rep, s));
        }}},
      {"self-adjoint",
       {2, 2, "FORM T", [](Inputs& in) { return plain(adjoint_residual(in.form(0), in.map(1), 1)); }}},
      {"skew-adjoint",
       {2, 2, "FORM T", [](Inputs& in) { return plain(adjoint_residual(in.form(0), in.map(1), -1)); }}},
      {"generalized-o",
       {3, 3, "ALG CTX ALPHA",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          return plain(generalized_o_residual(in.context(1, alg).bimod, in.map(2)));
        }}},
      {"goper-cor",
       {3, 3, "ALG CTX ALPHA",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          return plain(goper_cor_residual(in.context(1, alg), in.map(2), in.masses().lambda));
        }}},
  };
  return table;
}

}  // namespace

std::vector<std::string> verify_kinds() {
  std::vector<std::string> out;
  for (const auto& [k, v] : verify_table()) out.push_back(k);
  return out;
}

std::vector<std::string> check_kinds() {
  std::vector<std::string> out;
  for (const auto& [k, v] : check_table()) out.push_back(k);
  return out;
}

int cmd_verify(const std::string& kind, const Options& o) { return dispatch(verify_table(), "verify", kind, o); }
int cmd_check(const std::string& kind, const Options& o) { return dispatch(check_table(), "check", kind, o); }

}  // namespace nova::cli
