#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "commands.hpp"
#include "nova/errors.hpp"
#include "nova/lift.hpp"
#include "nova/postnov.hpp"
#include "nova/ybe.hpp"

namespace nova::cli {

namespace {

struct Construction {
  std::size_t min_args, max_args;
  std::string usage;
  std::function<Json(Inputs&)> run;
};

// Derived structures whose own validity a downstream consumer relies on are refused when
// the residual is nonzero.
void require(const Residual& r, const std::string& what) {
  if (!r.zero()) throw NotNovikov(what + " is not Novikov: " + r.summary(3));
}

Json pair_bundle(const Field& f, const std::pair<Algebra, Algebra>& pm) {
  return bundle(f, {{"plus", document(pm.first)}, {"minus", document(pm.second)}});
}

std::string basis_name(std::size_t i) { return "e" + std::to_string(i + 1); }

const std::map<std::string, Construction>& table() {
  static const std::map<std::string, Construction> t = {
      {"star", {1, 1, "ALG", [](Inputs& in) { return document(star(in.algebra(0))); }}},
      {"dual-bimodule",
       {2, 2, "ALG CTX",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          return document(dual_bimodule(in.context(1, alg).bimod));
        }}},
      {"semidirect",
       {2, 2, "ALG CTX",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          return document(semidirect(in.context(1, alg)));
        }}},
      {"double",
       {2, 2, "ALG CTX",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          return document(double_algebra(alg, in.context(1, alg).bimod).algebra);
        }}},
      {"circ-t",
       {2, 2, "ALG T",
        [](Inputs& in) { return document(circ_T(in.algebra(0), in.map(1), in.masses().lambda)); }}},
      {"circ-pm",
       {2, 3, "ALG BETA [CTX]",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          const BimodNov ctx = in.size() > 2 ? in.context(2, alg) : regular(alg);
          return pair_bundle(in.field(), pm_products(ctx, in.map(1), in.masses().lambda));
        }}},
      {"star-product",
       {3, 3, "ALG CTX ALPHA",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          return document(star_product(in.context(1, alg), in.map(2), in.masses().lambda));
        }}},
      {"diamond",
       {4, 4, "ALG CTX DPLUS DMINUS",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          const DiamondProduct d =
              diamond_product(in.context(1, alg), in.map(2), in.map(3), in.masses().lambda);
          return bundle(in.field(), {{"product", document(d.product)},
                                     {"alpha", document(d.alpha)},
                                     {"beta", document(d.beta)}});
        }}},
      {"post-from-o",
       {3, 3, "ALG CTX ALPHA",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          return document(post_from_o(in.context(1, alg), in.map(2), in.masses().lambda).post);
        }}},
      {"post-from-rb",
       {2, 2, "ALG T",
        [](Inputs& in) { return document(post_from_rb(in.algebra(0), in.map(1), in.masses().lambda)); }}},
      {"post-compatible",
       {2, 2, "ALG T",
        [](Inputs& in) {
          return document(post_from_rb_invertible(in.algebra(0), in.map(1), in.masses().lambda).post);
        }}},
      {"post-from-trialgebra",
       {1, 1, "BUNDLE(dot, circ, derivation)",
        [](Inputs& in) {
          const Json& d = in.doc(0);
          return document(post_from_trialgebra({algebra_from(bundle_item(d, "dot")),
                                                algebra_from(bundle_item(d, "circ")),
                                                linmap_from(bundle_item(d, "derivation"))}));
        }}},
      {"post-from-nybe",
       {2, 2, "ALG R",
        [](Inputs& in) {
          const NybePost p = post_from_nybe(in.algebra(0), in.tensor(1));
          std::map<std::string, Json> items{{"dual", document(p.dual)}};
          if (p.compatible) items["compatible"] = document(*p.compatible);
          return bundle(in.field(), items);
        }}},
      {"post-on-image",
       {3, 3, "ALG CTX ALPHA",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          const ImagePost p = post_on_image(in.context(1, alg), in.map(2), in.masses().lambda);
          return bundle(in.field(), {{"post", document(p.post)}, {"basis", document(p.basis)}});
        }}},
      {"dual-pm",
       {2, 2, "ALG R",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          return pair_bundle(in.field(), dual_pm_products(alg, RTensor(in.tensor(1))));
        }}},
      {"circ-delta",
       {2, 2, "ALG R",
        [](Inputs& in) { return document(circ_delta(in.algebra(0), in.tensor(1)).closed); }}},
      {"delta-r",
       {2, 2, "ALG R",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          const Tensor2 r = in.tensor(1);
          std::map<std::string, Json> items;
          for (std::size_t i = 0; i < alg.dim(); ++i)
            items[basis_name(i)] = document(delta_r(alg, r, alg.basis(i)));
          return bundle(in.field(), items);
        }}},
      {"lift-map",
       {3, 3, "ALG CTX G",
        [](Inputs& in) {
          const Algebra alg = in.algebra(0);
          const DoubleAlg d = double_algebra(alg, in.context(1, alg).bimod);
          require(d.novikov, "the double");
          const LiftedMap l = lift_map(d, in.map(2));
          return bundle(in.field(), {{"double", document(d.algebra)},
                                     {"check", document(l.check)},
                                     {"minus", document(l.minus)},
                                     {"plus", document(l.plus)}});
        }}},
      {"quad-transport",
       {4, 4, "ALG FORM T BETA",
        [](Inputs& in) {
          const QuadTransport q = quad_transport(in.algebra(0), in.form(1), in.map(2), in.map(3));
          return bundle(in.field(), {{"p_t", document(q.p_t)},
                                     {"p_beta", document(q.p_beta)},
                                     {"delta_plus", document(q.delta_plus)},
                                     {"delta_minus", document(q.delta_minus)}});
        }}},
      {"associated", {1, 1, "POST", [](Inputs& in) { return document(associated(in.post(0))); }}},
      {"lr-bimodule", {1, 1, "POST", [](Inputs& in) { return document(lr_bimodule(in.post(0))); }}},
      {"regular", {1, 1, "ALG", [](Inputs& in) { return document(regular(in.algebra(0))); }}},
      {"dual-context", {1, 1, "ALG", [](Inputs& in) { return document(dual_context(in.algebra(0))); }}},
  };
  return t;
}

}  // namespace

std::vector<std::string> derive_constructions() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

int cmd_derive(const std::string& construction, const Options& o) {
  auto it = table().find(construction);
  if (it == table().end()) throw ParseError("unknown construction '" + construction + "'");
  const Construction& c = it->second;
  Inputs in(o, c.min_args, c.max_args, "derive " + construction + " " + c.usage);
  const Json doc = c.run(in);
  if (o.out.empty()) {
    std::cout << doc.dump(2) << "\n";
    return kPass;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw ParseError("cannot write " + o.out);
  out << doc.dump(2) << "\n";
  std::cout << Json{{"construction", construction}, {"kind", kind_of(doc)}, {"out", o.out}}.dump()
            << "\n";
  return kPass;
}

}  // namespace nova::cli
