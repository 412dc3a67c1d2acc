#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "nova/errors.hpp"
#include "nova/properties.hpp"
#include "nova/solver.hpp"

#ifndef NOVA_GOLDEN_DEFAULT
#define NOVA_GOLDEN_DEFAULT "golden"
#endif

namespace nova::cli {

namespace {

Json counterexample_json(const Counterexample& c) {
  Json j;
  j["instance"] = c.instance;
  j["detail"] = c.detail;
  auto named = [](const auto& list) {
    Json out = Json::object();
    for (const auto& [name, value] : list) out[name] = document(value);
    return out;
  };
  j["algebras"] = named(c.algebras);
  j["contexts"] = named(c.contexts);
  j["maps"] = named(c.maps);
  j["tensors"] = named(c.tensors);
  Json scalars = Json::object();
  for (const auto& [name, value] : c.scalars) scalars[name] = scalar_json(value);
  j["scalars"] = std::move(scalars);
  return j;
}

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::pair<std::size_t, std::size_t> parse_shard(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) throw ParseError("");
    std::size_t used_i = 0, used_k = 0;
    const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    const unsigned long i = std::stoul(a, &used_i), k = std::stoul(b, &used_k);
    if (used_i != a.size() || used_k != b.size() || k == 0 || i >= k) throw ParseError("");
    return {i, k};
  } catch (const std::exception&) {
    throw ParseError("--shard must be i/k with 0 <= i < k, got '" + s + "'");
  }
}

SearchSpec build_spec(SearchKind kind, const Options& o) {
  SearchSpec spec;
  spec.kind = kind;
  const bool novikov = kind == SearchKind::NovikovAlgebra;
  const bool ext = kind == SearchKind::ExtOOperator;
  const std::size_t want = novikov ? 0 : ext ? 3 : 1;
  Inputs in(o, want, want,
            "solve " + search_kind_name(kind) + (novikov ? " --field F --dim N" : ext ? " ALG CTX BETA" : " ALG"));
  spec.field = in.field();
  spec.masses = in.masses();
  if (novikov) {
    spec.dim = o.dim;
  } else {
    spec.algebra = in.algebra(0);
    if (ext) {
      spec.context = in.context(1, *spec.algebra);
      spec.beta = in.map(2);
    }
  }
  std::tie(spec.shard, spec.shards) = parse_shard(o.shard);
  return spec;
}

std::filesystem::path golden_dir() {
  if (const char* env = std::getenv("NOVA_GOLDEN_DIR"); env && *env) return env;
  return NOVA_GOLDEN_DEFAULT;
}

std::filesystem::path golden_path(const SearchSpec& spec) {
  return golden_dir() /
         ("solve-" + search_kind_name(spec.kind) + "-" + spec.field.name() + "-" + hex(context_hash(spec)) + ".json");
}

}  // namespace

int cmd_prop(const std::string& id, const Options& o) {
  PropertyOptions po;
  po.trials = o.trials;
  po.seed = o.seed;
  if (o.field) po.field = Field::parse(*o.field);
  po.dims = o.dims;
  po.jobs = o.jobs;
  const PropertyReport rep = run_property(id, po);

  Json j;
  j["check"] = rep.id;
  j["flag"] = rep.passed();
  j["field"] = rep.field.name();
  j["instances"] = rep.instances;
  j["hypotheses_met"] = rep.hypotheses_met;
  j["failures"] = rep.failures;
  Json tallies = Json::object();
  for (const auto& [name, count] : rep.tallies) tallies[name] = count;
  j["tallies"] = std::move(tallies);
  Json ces = Json::array();
  for (const Counterexample& c : rep.counterexamples) ces.push_back(counterexample_json(c));
  j["witness"] = ces.empty() ? Json(nullptr) : ces.front();
  if (o.verbose) j["counterexamples"] = std::move(ces);
  j["elapsed_ms"] = static_cast<long long>(rep.elapsed_ms);
  std::cout << j.dump() << "\n";
  std::cerr << rep.id << " over " << rep.field.name() << ": " << rep.instances << " instances, "
            << rep.hypotheses_met << " with premise, " << rep.failures << " failures\n";
  return rep.passed() ? kPass : kFail;
}

int cmd_solve(const std::string& kind_name, const Options& o) {
  const SearchKind kind = parse_search_kind(kind_name);
  const SearchSpec spec = build_spec(kind, o);
  if ((o.golden || o.write_golden) && spec.shards != 1)
    throw ParseError("golden files pin unsharded runs; drop --shard");
  const SearchResult res = enumerate(spec, o.jobs);
  const std::string ctx = hex(context_hash(spec));
  const std::string name = search_kind_name(kind);

  bool verified = true;
  for (const Solution& s : res.solutions) verified = verified && verify_solution(spec, s);

  if (!o.count_only) {
    for (const Solution& s : res.solutions)
      std::cout << Json{{"kind", name}, {"index", s.index}, {"coeffs", s.coeffs}, {"context_hash", ctx}}.dump()
                << "\n";
  }

  Json summary{{"kind", name},
               {"field", spec.field.name()},
               {"count", res.solutions.size()},
               {"candidates", res.candidates},
               {"total", res.total},
               {"hash", hex(res.hash)},
               {"context_hash", ctx}};
  int code = verified ? kPass : kFail;
  if (!verified) std::cerr << "a listed solution failed re-verification\n";

  if (o.write_golden) {
    const auto path = golden_path(spec);
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path.string());
    Json g = summary;
    g.erase("candidates");
    out << g.dump(2) << "\n";
    std::cerr << "wrote " << path.string() << "\n";
  }
  if (o.golden) {
    const auto path = golden_path(spec);
    const Json g = [&] {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw ParseError("no golden file " + path.string());
      std::stringstream ss;
      ss << in.rdbuf();
      try {
        return Json::parse(ss.str());
      } catch (const Json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
      }
    }();
    const bool match = g.value("count", std::size_t{0}) == res.solutions.size() &&
                       g.value("hash", std::string()) == hex(res.hash);
    summary["golden"] = {{"file", path.string()}, {"match", match}};
    if (!match) {
      std::cerr << "golden mismatch: expected count " << g.value("count", std::size_t{0}) << ", got "
                << res.solutions.size() << "\n";
      code = kFail;
    }
  }
  if (o.count_only || o.golden) std::cout << summary.dump() << "\n";
  std::cerr << name << " over " << spec.field.name() << ": " << res.solutions.size() << " of "
            << res.candidates << " candidates\n";
  return code;
}

}  // namespace nova::cli
