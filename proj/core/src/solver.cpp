#include "nova/solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

#include "nova/errors.hpp"
#include "nova/ybe.hpp"

namespace nova {

namespace {

const std::vector<std::pair<SearchKind, const char*>> kKindNames = {
    {SearchKind::NovikovAlgebra, "novikov-algebra"},
    {SearchKind::NybeSolution, "nybe-solution"},
    {SearchKind::EnybeSolution, "enybe-solution"},
    {SearchKind::ExtOOperator, "ext-o-operator"},
    {SearchKind::RotaBaxter, "rota-baxter"},
    {SearchKind::InvariantSymmetricTensor, "invariant-symmetric-tensor"},
    {SearchKind::QuadraticForm, "quadratic-form"},
};

constexpr std::uint64_t kSpaceLimit = std::uint64_t{1} << 32;
constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv_bytes(std::uint64_t& h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
}

void fnv_u64(std::uint64_t& h, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  fnv_bytes(h, b, 8);
}

void fnv_string(std::uint64_t& h, const std::string& s) {
  fnv_u64(h, s.size());
  fnv_bytes(h, s.data(), s.size());
}

void check_field(const SearchSpec& spec) {
  const Field& f = spec.field;
  if (f.is_rational()) throw FieldMismatch("enumeration needs a prime field");
  const std::uint32_t p = f.p();
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw FieldMismatch("enumeration supports F2, F3, F5 and F7, got " + f.name());
  if (spec.algebra && spec.algebra->field() != f)
    throw FieldMismatch("algebra is over " + spec.algebra->field().name());
  if (spec.context && spec.context->field() != f)
    throw FieldMismatch("context is over " + spec.context->field().name());
  if (spec.shards == 0 || spec.shard >= spec.shards)
    throw DimMismatch("shard index must be below the shard count");
}

const Algebra& need_algebra(const SearchSpec& spec) {
  if (!spec.algebra) throw DimMismatch(search_kind_name(spec.kind) + " needs an algebra");
  return *spec.algebra;
}

bool invariant_symmetric(const Algebra& alg, const Tensor2& s) {
  if (!s.is_symmetric()) return false;
  const Matrix id = Matrix::identity(alg.field(), alg.dim());
  for (std::size_t x = 0; x < alg.dim(); ++x) {
    const LRMatrices m = lr_matrices(alg, alg.basis(x));
    if (!(apply_each(s, m.left, id) + apply_each(s, id, m.left_star)).is_zero()) return false;
  }
  return true;
}

// Novikov identities on raw residues, used by the scan. verify_solution goes through the
// Scalar-based residual instead, so every listed algebra is checked by two separate paths.
bool novikov_residues(const std::vector<std::uint32_t>& c, std::size_t n, std::uint32_t p) {
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; };
  // (e_i e_j) e_k and e_i (e_j e_k), coordinate t.
  auto left_first = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t t) {
    std::uint64_t s = 0;
    for (std::size_t m = 0; m < n; ++m) s += std::uint64_t{at(i, j, m)} * at(m, k, t);
    return s % p;
  };
  auto right_first = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t t) {
    std::uint64_t s = 0;
    for (std::size_t m = 0; m < n; ++m) s += std::uint64_t{at(j, k, m)} * at(i, m, t);
    return s % p;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t) {
          const std::uint64_t ijk = left_first(i, j, k, t);
          if (ijk != left_first(i, k, j, t)) return false;
          const std::uint64_t lhs = ijk + right_first(j, i, k, t);
          const std::uint64_t rhs = left_first(j, i, k, t) + right_first(i, j, k, t);
          if (lhs % p != rhs % p) return false;
        }
  return true;
}

// Candidate test for one decoded coefficient vector.
class Checker {
 public:
  explicit Checker(const SearchSpec& spec) : spec_(spec) {
    if (spec.kind == SearchKind::ExtOOperator) {
      if (!spec.context || !spec.beta) throw DimMismatch("ext-o-operator needs a context and beta");
      const BimodNov& ctx = *spec.context;
      const Matrix& beta = *spec.beta;
      side_ok_ = balanced_residual(ctx, beta, Eval::FailFast).zero() &&
                 invariant_residual(ctx, beta, spec.masses.kappa, Eval::FailFast).zero() &&
                 equivalent_residual(ctx, beta, spec.masses.mu, Eval::FailFast).zero();
    }
  }

  bool operator()(const std::vector<std::uint32_t>& c) const {
    const Field& f = spec_.field;
    switch (spec_.kind) {
      case SearchKind::NovikovAlgebra:
        return is_novikov(algebra_from_coeffs(f, spec_.dim, c));
      case SearchKind::NybeSolution: {
        const Algebra& alg = *spec_.algebra;
        return nybe_residual(alg, tensor_from_coeffs(f, alg.dim(), c)).is_zero();
      }
      case SearchKind::EnybeSolution: {
        const Algebra& alg = *spec_.algebra;
        return enybe_residual(alg, tensor_from_coeffs(f, alg.dim(), c), spec_.masses.epsilon)
            .is_zero();
      }
      case SearchKind::ExtOOperator: {
        if (!side_ok_) return false;
        const BimodNov& ctx = *spec_.context;
        const Matrix alpha = matrix_from_coeffs(f, ctx.dim(), ctx.mdim(), c);
        return ext_o_equation(ctx, alpha, *spec_.beta, spec_.masses, Eval::FailFast).zero();
      }
      case SearchKind::RotaBaxter: {
        const Algebra& alg = *spec_.algebra;
        const Matrix t = matrix_from_coeffs(f, alg.dim(), alg.dim(), c);
        return rota_baxter_residual(alg, t, spec_.masses.lambda, Eval::FailFast).zero();
      }
      case SearchKind::InvariantSymmetricTensor: {
        const Algebra& alg = *spec_.algebra;
        return invariant_symmetric(alg, tensor_from_coeffs(f, alg.dim(), c));
      }
      case SearchKind::QuadraticForm: {
        const Algebra& alg = *spec_.algebra;
        return is_quadratic(alg, BilForm{matrix_from_coeffs(f, alg.dim(), alg.dim(), c)});
      }
    }
    return false;
  }

 private:
  const SearchSpec& spec_;
  bool side_ok_ = true;
};

}  // namespace

SearchKind parse_search_kind(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n) return k;
  // Short forms used on the command line.
  static const std::map<std::string, SearchKind> shortcuts = {
      {"novikov", SearchKind::NovikovAlgebra},
      {"nybe", SearchKind::NybeSolution},
      {"enybe", SearchKind::EnybeSolution},
      {"ext-o", SearchKind::ExtOOperator},
      {"invariant-tensor", SearchKind::InvariantSymmetricTensor},
      {"quadratic", SearchKind::QuadraticForm},
  };
  auto it = shortcuts.find(name);
  if (it == shortcuts.end()) throw ParseError("unknown search kind '" + name + "'");
  return it->second;
}

std::string search_kind_name(SearchKind k) {
  for (const auto& [kind, n] : kKindNames)
    if (kind == k) return n;
  return "?";
}

std::size_t coefficient_count(const SearchSpec& spec) {
  switch (spec.kind) {
    case SearchKind::NovikovAlgebra:
      return spec.dim * spec.dim * spec.dim;
    case SearchKind::ExtOOperator:
      if (!spec.context) throw DimMismatch("ext-o-operator needs a context");
      return spec.context->dim() * spec.context->mdim();
    default: {
      const std::size_t n = need_algebra(spec).dim();
      return n * n;
    }
  }
}

std::uint64_t space_size(const SearchSpec& spec) {
  check_field(spec);
  const std::size_t count = coefficient_count(spec);
  const std::uint64_t p = spec.field.p();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < count; ++i) {
    total *= p;
    if (total > kSpaceLimit)
      throw SpaceTooLarge(std::to_string(p) + "^" + std::to_string(count) +
                          " candidates exceed 2^32");
  }
  return total;
}

std::vector<std::uint32_t> decode(std::uint64_t index, std::size_t count, std::uint32_t p) {
  std::vector<std::uint32_t> c(count);
  for (std::size_t i = count; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return c;
}

Algebra algebra_from_coeffs(Field f, std::size_t dim, const std::vector<std::uint32_t>& c) {
  if (c.size() != dim * dim * dim) throw DimMismatch("coefficient count");
  Algebra alg(f, dim);
  std::size_t k = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t l = 0; l < dim; ++l) alg.coeff(i, j, l) = Scalar(f, c[k++]);
  return alg;
}

Tensor2 tensor_from_coeffs(Field f, std::size_t dim, const std::vector<std::uint32_t>& c) {
  if (c.size() != dim * dim) throw DimMismatch("coefficient count");
  Tensor2 t(f, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) t.at(i, j) = Scalar(f, c[i * dim + j]);
  return t;
}

Matrix matrix_from_coeffs(Field f, std::size_t rows, std::size_t cols,
                          const std::vector<std::uint32_t>& c) {
  if (c.size() != rows * cols) throw DimMismatch("coefficient count");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar(f, c[i * cols + j]);
  return m;
}

bool verify_solution(const SearchSpec& spec, const Solution& s) {
  check_field(spec);
  if (s.coeffs.size() != coefficient_count(spec)) return false;
  return Checker(spec)(s.coeffs);
}

std::uint64_t fnv1a(const std::vector<Solution>& sols) {
  std::uint64_t h = kFnvOffset;
  for (const auto& s : sols) {
    fnv_u64(h, s.index);
    for (std::uint32_t c : s.coeffs) fnv_u64(h, c);
  }
  return h;
}

std::uint64_t context_hash(const SearchSpec& spec) {
  std::uint64_t h = kFnvOffset;
  fnv_string(h, search_kind_name(spec.kind));
  fnv_string(h, spec.field.name());
  fnv_u64(h, spec.dim);
  auto add_matrix = [&](const Matrix& m) {
    fnv_u64(h, m.rows());
    fnv_u64(h, m.cols());
    for (const auto& e : m.entries()) fnv_string(h, e.to_string());
  };
  auto add_algebra = [&](const Algebra& a) {
    fnv_u64(h, a.dim());
    for (const auto& e : a.constants()) fnv_string(h, e.to_string());
  };
  if (spec.algebra) add_algebra(*spec.algebra);
  if (spec.context) {
    add_algebra(spec.context->base());
    for (const auto& m : spec.context->bimod.l) add_matrix(m);
    for (const auto& m : spec.context->bimod.r) add_matrix(m);
    add_algebra(spec.context->product);
  }
  if (spec.beta) add_matrix(*spec.beta);
  for (const Scalar* s : {&spec.masses.lambda, &spec.masses.kappa, &spec.masses.mu,
                          &spec.masses.epsilon})
    fnv_string(h, s->to_string());
  return h;
}

SearchResult enumerate(const SearchSpec& spec, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = space_size(spec);
  const std::size_t count = coefficient_count(spec);
  if (spec.kind != SearchKind::NovikovAlgebra && spec.kind != SearchKind::ExtOOperator)
    need_algebra(spec);
  const Checker slow_check(spec);
  const std::uint32_t p = spec.field.p();
  auto check = [&](const std::vector<std::uint32_t>& c) {
    if (spec.kind == SearchKind::NovikovAlgebra) return novikov_residues(c, spec.dim, p);
    return slow_check(c);
  };

  // Candidates of this shard are shard + shards * j for j = 0, 1, ...
  const std::uint64_t mine =
      total > spec.shard ? (total - spec.shard + spec.shards - 1) / spec.shards : 0;
  jobs = std::max(1u, jobs);
  std::vector<std::vector<Solution>> found(jobs);
  auto work = [&](unsigned w) {
    for (std::uint64_t j = w; j < mine; j += jobs) {
      const std::uint64_t idx = spec.shard + spec.shards * j;
      std::vector<std::uint32_t> c = decode(idx, count, p);
      if (check(c)) found[w].push_back({idx, std::move(c)});
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  SearchResult out;
  for (auto& v : found)
    for (auto& s : v) out.solutions.push_back(std::move(s));
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const Solution& a, const Solution& b) { return a.index < b.index; });
  out.candidates = mine;
  out.total = total;
  out.hash = fnv1a(out.solutions);
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

const std::vector<Algebra>& novikov_algebras(Field f, std::size_t dim) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::size_t>, std::vector<Algebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(f.p(), dim);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  SearchSpec spec;
  spec.kind = SearchKind::NovikovAlgebra;
  spec.field = f;
  spec.dim = dim;
  std::vector<Algebra> algs;
  for (const auto& s : enumerate(spec).solutions) algs.push_back(algebra_from_coeffs(f, dim, s.coeffs));
  return cache.emplace(key, std::move(algs)).first->second;
}

std::uint64_t Rng::next(std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(eng_);
}

Scalar Rng::scalar(const Field& f) {
  if (f.is_rational()) return Scalar(f, static_cast<long long>(next(7)) - 3);
  return Scalar(f, static_cast<long long>(next(f.p())));
}

Scalar Rng::nonzero(const Field& f) {
  for (;;) {
    Scalar s = scalar(f);
    if (!s.is_zero()) return s;
  }
}

Matrix Rng::matrix(const Field& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = scalar(f);
  return m;
}

Tensor2 Rng::tensor(const Field& f, std::size_t dim) {
  Tensor2 t(f, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) t.at(i, j) = scalar(f);
  return t;
}

Matrix Rng::invertible(const Field& f, std::size_t dim) {
  for (;;) {
    Matrix m = matrix(f, dim, dim);
    if (rank(m) == dim) return m;
  }
}

Algebra trunc_poly(Field f, std::size_t n, const Scalar& scale) {
  Algebra alg(f, n);
  // x^i o x^j = scale * j x^(i+j)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j)
      alg.coeff(i, j, i + j) = scale * Scalar(f, static_cast<long long>(j));
  return alg;
}

Algebra change_basis(const Algebra& alg, const Matrix& basis) {
  auto inv = inverse(basis);
  if (!inv) throw SingularT("change of basis is singular");
  const std::size_t n = alg.dim();
  Algebra out(alg.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.set_mul(i, j, inv->apply(alg.product(basis.column(i), basis.column(j))));
  return out;
}

Family parse_family(const std::string& name) {
  if (name == "trunc-poly" || name == "trunc-poly-novikov") return Family::TruncPoly;
  if (name == "enumerated-dim2") return Family::EnumeratedDim2;
  if (name == "random-maps" || name == "random-maps-over-fp") return Family::RandomMaps;
  throw ParseError("unknown family '" + name + "'");
}

Instance random_instance(std::uint64_t seed, const InstanceRequest& req) {
  Rng rng(seed);
  Instance out;
  switch (req.family) {
    case Family::TruncPoly: {
      const Scalar s = rng.nonzero(req.field);
      out.algebra = change_basis(trunc_poly(req.field, req.dim, s), rng.invertible(req.field, req.dim));
      break;
    }
    case Family::EnumeratedDim2: {
      if (req.field.is_rational()) throw FieldMismatch("enumerated-dim2 needs a prime field");
      const auto& algs = novikov_algebras(req.field, 2);
      out.algebra = algs[seed % algs.size()];
      break;
    }
    case Family::RandomMaps:
      for (std::size_t i = 0; i < req.maps; ++i)
        out.maps.push_back(rng.matrix(req.field, req.dim, req.dim));
      break;
  }
  return out;
}

}  // namespace nova
