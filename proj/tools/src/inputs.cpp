#include <iostream>

#include "commands.hpp"
#include "nova/errors.hpp"

namespace nova::cli {

namespace {

bool keyword(const std::string& s) { return s == "regular" || s == "regular-trivial" || s == "dual"; }

}  // namespace

Inputs::Inputs(const Options& o, std::size_t min_count, std::size_t max_count, const std::string& usage)
    : o_(o), args_(o.inputs), docs_(o.inputs.size()) {
  if (args_.size() < min_count || args_.size() > max_count) throw ParseError("usage: " + usage);
  std::optional<Field> seen;
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (keyword(args_[i])) continue;
    docs_[i] = load_document(args_[i]);
    const Field f = field_of(*docs_[i]);
    if (seen && *seen != f) throw FieldMismatch(args_[i] + " is over " + f.name() + ", expected " + seen->name());
    seen = f;
  }
  if (o.field) {
    const Field f = Field::parse(*o.field);
    if (seen && *seen != f) throw FieldMismatch("inputs are over " + seen->name() + ", --field says " + f.name());
    seen = f;
  }
  if (!seen) throw ParseError("no document given and no --field");
  field_ = *seen;
}

bool Inputs::is_keyword(std::size_t i) const { return !docs_.at(i).has_value(); }

const Json& Inputs::doc(std::size_t i) {
  if (is_keyword(i)) throw ParseError("'" + args_[i] + "' is not a document here");
  return *docs_[i];
}

Algebra Inputs::algebra(std::size_t i) { return algebra_from(doc(i)); }

BimodNov Inputs::context(std::size_t i, const Algebra& alg) {
  const std::string& a = args_.at(i);
  if (a == "regular") return regular(alg, false);
  if (a == "regular-trivial") return with_trivial_product(Bimodule::regular(alg));
  if (a == "dual") return dual_context(alg);
  BimodNov ctx = bimodnov_from(doc(i));
  if (ctx.base() != alg) throw ParseError(a + ": context acts on a different algebra");
  return ctx;
}

Matrix Inputs::map(std::size_t i) { return linmap_from(doc(i)); }
Tensor2 Inputs::tensor(std::size_t i) { return tensor2_from(doc(i)); }
BilForm Inputs::form(std::size_t i) { return bilform_from(doc(i)); }
PostNov Inputs::post(std::size_t i) { return postnov_from(doc(i)); }

MassParams Inputs::masses() const {
  return {scalar(o_.weight), scalar(o_.kappa), scalar(o_.mu), scalar(o_.epsilon)};
}

Json witness_json(const Witness& w) {
  return {{"identity", w.identity}, {"tuple", w.tuple}, {"value", vec_json(w.value)}};
}

Json report(const std::string& check, bool flag, bool residual_zero, const Residual& witnesses,
            double elapsed_ms, bool verbose) {
  Json j;
  j["check"] = check;
  j["flag"] = flag;
  j["residual_norm_zero"] = residual_zero;
  j["witness"] = flag || witnesses.zero() ? Json(nullptr) : witness_json(witnesses.witnesses().front());
  j["elapsed_ms"] = static_cast<long long>(elapsed_ms);
  if (verbose) {
    Json all = Json::array();
    for (const Witness& w : witnesses.witnesses()) all.push_back(witness_json(w));
    j["residuals"] = std::move(all);
  }
  return j;
}

int emit(const Json& r) {
  std::cout << r.dump() << "\n";
  const bool flag = r.value("flag", false);
  std::cerr << r.value("check", std::string("?")) << ": " << (flag ? "pass" : "FAIL");
  if (!flag && r.contains("witness") && !r["witness"].is_null() && r["witness"].contains("identity"))
    std::cerr << " (" << r["witness"]["identity"].get<std::string>() << " at "
              << r["witness"]["tuple"].dump() << ")";
  std::cerr << "\n";
  return flag ? kPass : kFail;
}

}  // namespace nova::cli
