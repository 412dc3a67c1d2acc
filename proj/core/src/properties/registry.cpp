#include <algorithm>

#include "common.hpp"
#include "nova/errors.hpp"

namespace nova {

namespace {

struct Entry {
  std::string id;
  std::string summary;
  PropertyReport (*run)(const PropertyOptions&);
};

const std::vector<Entry>& registry() {
  using namespace props;
  static const std::vector<Entry> entries = {
      {"P-SEMI", "module identities hold iff the semidirect product is Novikov", prop_semi},
      {"P-DUAL", "the dual of a bimodule is a bimodule, and dualising twice returns it", prop_dual},
      {"P-EXT-STAR", "an extended operator makes the star product Novikov", prop_ext_star},
      {"P-DELTA-PM", "extended operators of unit mass correspond to homomorphisms of the star product", prop_delta_pm},
      {"P-R-PM", "the two sign-twisted module products give bimodule Novikov algebras", prop_r_pm},
      {"P-COR-BAX", "identity-extended operators are shifted Rota-Baxter operators", prop_cor_bax},
      {"P-BAXTER", "Baxter operators correspond to Rota-Baxter operators of weight -2 and 2", prop_baxter},
      {"P-CONS", "extended Rota-Baxter operators give Novikov products", prop_cons},
      {"P-ASSOC", "the associated product of a post-Novikov algebra is Novikov", prop_assoc},
      {"P-LRBIMOD", "a post-Novikov algebra is a bimodule Novikov algebra over its associated algebra", prop_lrbimod},
      {"P-COMPAT", "compatible post-Novikov structures match invertible weight-1 operators", prop_compat},
      {"P-HOM", "an operator is a homomorphism from the associated algebra", prop_hom},
      {"P-TRI", "a commutative trialgebra with derivation gives a post-Novikov algebra", prop_tri},
      {"P-TENSOR-OP", "the tensor equation matches its operator form", prop_tensor_op},
      {"P-ENYBE-EXT", "the extended tensor equation matches an extended operator on the dual context", prop_enybe_ext},
      {"P-COR-ENYBE", "the equivalent characterisations of tensor solutions agree", prop_cor_enybe},
      {"P-SKEW", "skew solutions are weight-0 operators on the dual context", prop_skew},
      {"P-LEM-R", "three characterisations of invariance agree on symmetric tensors", prop_lem_r},
      {"P-QN", "on quadratic algebras tensor solutions correspond to extended operators on A", prop_qn},
      {"P-DUAL-EXO", "a nondegenerate form transports extended operators to the dual context", prop_dual_exo},
      {"P-LIFT-BAL", "lifting preserves and reflects balanced homomorphisms", prop_lift_bal},
      {"P-LIFT-EXT", "lifting preserves and reflects extended operators", prop_lift_ext},
      {"P-COR-GN", "lifted operators give tensor solutions in the double", prop_cor_gn},
      {"P-CIRC-DELTA", "closed and pairing forms of the dual product agree", prop_circ_delta},
      {"P-GNYBE-PROD", "skew solutions of the generalized equations give a Novikov dual product", prop_gnybe_prod},
      {"P-GNYBE-EXT", "extended tensor solutions solve the generalized equations", prop_gnybe_ext},
      {"P-GOPER", "skew lifted solutions of the generalized equations are generalized operators", prop_goper},
      {"P-GOPER-COR", "weighted conditions characterise lifted extended operators", prop_goper_cor},
  };
  return entries;
}

const Entry& find(const std::string& id) {
  const auto& r = registry();
  auto it = std::find_if(r.begin(), r.end(), [&](const Entry& e) { return e.id == id; });
  if (it == r.end()) throw ParseError("unknown property id " + id);
  return *it;
}

}  // namespace

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const Entry& e : registry()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::string property_summary(const std::string& id) { return find(id).summary; }

PropertyReport run_property(const std::string& id, const PropertyOptions& options) {
  return find(id).run(options);
}

}  // namespace nova
