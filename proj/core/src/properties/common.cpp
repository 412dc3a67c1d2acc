#include "common.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "nova/errors.hpp"
#include "nova/ybe.hpp"

namespace nova::props {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

std::vector<Scalar> coords_of(const Matrix& m) { return m.entries(); }

void append(std::vector<Scalar>& out, const Vec& v) {
  out.insert(out.end(), v.coords().begin(), v.coords().end());
}

Matrix unit_matrix(const Field& f, std::size_t rows, std::size_t cols, std::size_t q) {
  Matrix m(f, rows, cols);
  m.at(q / cols, q % cols) = Scalar::one(f);
  return m;
}

}  // namespace

void Verdict::fail(const std::string& what) {
  if (out_.ok) out_.detail = what;
  else out_.detail += "; " + what;
  out_.ok = false;
}

Verdict& Verdict::same(const std::string& what, bool lhs, bool rhs) {
  if (lhs != rhs)
    fail(what + ": " + (lhs ? "left side holds, right side fails" : "left side fails, right side holds"));
  else
    out_.tallies.push_back(what + (lhs ? ": both hold" : ": both fail"));
  return *this;
}

Verdict& Verdict::require(const std::string& what, const Residual& r) {
  if (!r.zero()) fail(what + ": " + r.summary(2));
  return *this;
}

Verdict& Verdict::require(const std::string& what, bool ok, const std::string& witness) {
  if (!ok) fail(witness.empty() ? what : what + ": " + witness);
  return *this;
}

Verdict& Verdict::tally(const std::string& what) {
  out_.tallies.push_back(what);
  return *this;
}

Verdict& Verdict::note(const std::string& name, const Matrix& m) {
  out_.maps.emplace_back(name, m);
  return *this;
}

Outcome Verdict::premise_failed(const std::string& tally) {
  Outcome o;
  o.premise = false;
  o.tallies.push_back(tally);
  return o;
}

Inst& Inst::alg(const std::string& name, const Algebra& a) {
  ce.algebras.emplace_back(name, a);
  return *this;
}
Inst& Inst::ctx(const std::string& name, const BimodNov& c) {
  ce.contexts.emplace_back(name, c);
  return *this;
}
Inst& Inst::map(const std::string& name, const Matrix& m) {
  ce.maps.emplace_back(name, m);
  return *this;
}
Inst& Inst::tensor(const std::string& name, const Tensor2& t) {
  ce.tensors.emplace_back(name, t);
  return *this;
}
Inst& Inst::scalar(const std::string& name, const Scalar& s) {
  ce.scalars.emplace_back(name, s);
  return *this;
}
Inst& Inst::masses(const MassParams& m) {
  return scalar("lambda", m.lambda).scalar("kappa", m.kappa).scalar("mu", m.mu);
}

void Harness::add(Inst inst, std::function<Outcome()> run) {
  cases_.push_back({std::move(inst.ce), std::move(run)});
}

PropertyReport Harness::run(unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(cases_.size());
  auto work = [&](unsigned w, unsigned stride) {
    for (std::size_t i = w; i < cases_.size(); i += stride) {
      try {
        outcomes[i] = cases_[i].run();
      } catch (const std::exception& e) {
        outcomes[i].ok = false;
        outcomes[i].detail = std::string("threw ") + e.what();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cases_.size())));
  if (jobs <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w, jobs);
    for (auto& t : pool) t.join();
  }

  PropertyReport rep;
  rep.id = id_;
  rep.field = field_;
  std::vector<std::pair<std::string, std::size_t>>& tallies = rep.tallies;
  for (std::size_t i = 0; i < cases_.size(); ++i) {
    const Outcome& o = outcomes[i];
    ++rep.instances;
    if (o.premise) ++rep.hypotheses_met;
    for (const auto& t : o.tallies) {
      auto it = std::find_if(tallies.begin(), tallies.end(),
                             [&](const auto& p) { return p.first == t; });
      if (it == tallies.end()) tallies.emplace_back(t, 1);
      else ++it->second;
    }
    if (!o.ok) {
      ++rep.failures;
      if (rep.counterexamples.size() < kMaxCounterexamples) {
        Counterexample ce = cases_[i].ce;
        ce.detail = o.detail;
        for (const auto& m : o.maps) ce.maps.push_back(m);
        rep.counterexamples.push_back(std::move(ce));
      }
    }
  }
  std::sort(tallies.begin(), tallies.end());
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Setup resolve(const PropertyOptions& o, Field default_field, std::vector<std::size_t> default_dims) {
  Setup s{o.field.value_or(default_field), o.dims.empty() ? std::move(default_dims) : o.dims,
          o.trials, o.seed};
  if (!s.field.is_rational()) {
    const std::uint32_t p = s.field.p();
    if (p != 2 && p != 3 && p != 5 && p != 7)
      throw FieldMismatch("properties run over Q, F2, F3, F5 or F7, got " + s.field.name());
  }
  for (std::size_t d : s.dims)
    if (d == 0 || d > 4) throw DimMismatch("property dimensions must be between 1 and 4");
  return s;
}

void require_half(const Field& f, const std::string& id) {
  if (!f.has_half()) throw NoHalf(id + " divides by 2 and cannot run over " + f.name());
}

bool has_dim(const Setup& s, std::size_t d) {
  return std::find(s.dims.begin(), s.dims.end(), d) != s.dims.end();
}

Algebra a2(Field f) {
  Algebra a(f, 2);
  a.set_mul(0, 0, Vec::of(f, {1, 0}));
  a.set_mul(0, 1, Vec::of(f, {0, 1}));
  a.set_mul(1, 0, Vec::of(f, {0, 1}));
  return a;
}

Matrix t2(Field f) { return Matrix::of(f, 2, 2, {-2, 0, 4, 1}); }
Matrix beta2(Field f) { return Matrix::of(f, 2, 2, {1, 0, 3, 1}); }

std::vector<Algebra> sweep_algebras(const Field& f) {
  if (!f.is_rational()) return novikov_algebras(f, 2);
  return {a2(f), trunc_poly(f, 2, Scalar::one(f)), Algebra(f, 2)};
}

Algebra random_algebra(Rng& rng, const Field& f, std::size_t dim) {
  if (dim == 1) {
    Algebra a(f, 1);
    a.coeff(0, 0, 0) = rng.scalar(f);
    return a;
  }
  if (dim == 2) {
    if (!f.is_rational()) {
      const auto& algs = novikov_algebras(f, 2);
      return algs[rng.next(algs.size())];
    }
    const Algebra base = rng.next(2) == 0 ? a2(f) : trunc_poly(f, 2, rng.nonzero(f));
    return change_basis(base, rng.invertible(f, 2));
  }
  return change_basis(trunc_poly(f, dim, rng.nonzero(f)), rng.invertible(f, dim));
}

Algebra scaled(const Algebra& a, const Scalar& c) {
  Algebra out(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) out.coeff(i, j, k) = c * a.coeff(i, j, k);
  return out;
}

std::vector<Matrix> all_maps(const Field& f, std::size_t rows, std::size_t cols,
                             std::uint64_t limit) {
  if (f.is_rational()) return {};
  const std::size_t count = rows * cols;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < count; ++i) {
    total *= f.p();
    if (total > limit) return {};
  }
  std::vector<Matrix> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx)
    out.push_back(matrix_from_coeffs(f, rows, cols, decode(idx, count, f.p())));
  return out;
}

std::vector<Tensor2> all_tensors(const Field& f, std::size_t n, std::uint64_t limit) {
  std::vector<Tensor2> out;
  for (const Matrix& m : all_maps(f, n, n, limit)) out.push_back(Tensor2::from_grid(m));
  return out;
}

std::vector<Matrix> span_of(const Field& f, const std::vector<Matrix>& basis, std::size_t rows,
                            std::size_t cols, std::uint64_t limit) {
  if (f.is_rational()) return {};
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    total *= f.p();
    if (total > limit) return {};
  }
  std::vector<Matrix> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const auto c = decode(idx, basis.size(), f.p());
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < basis.size(); ++i) m += Scalar(f, c[i]) * basis[i];
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> solution_basis(const Field& f, std::size_t rows, std::size_t cols,
                                   const LinearFn& fn) {
  const std::size_t unknowns = rows * cols;
  std::vector<std::vector<Scalar>> columns;
  for (std::size_t q = 0; q < unknowns; ++q) columns.push_back(fn(unit_matrix(f, rows, cols, q)));
  const std::size_t conditions = unknowns ? columns[0].size() : 0;
  Matrix system(f, conditions, unknowns);
  for (std::size_t q = 0; q < unknowns; ++q)
    for (std::size_t c = 0; c < conditions; ++c) system.at(c, q) = columns[q][c];
  std::vector<Matrix> out;
  for (const Vec& v : kernel_basis(system)) {
    Matrix m(f, rows, cols);
    for (std::size_t q = 0; q < unknowns; ++q) m.at(q / cols, q % cols) = v[q];
    out.push_back(std::move(m));
  }
  return out;
}

Matrix random_combination(Rng& rng, const Field& f, const std::vector<Matrix>& basis,
                          std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (const Matrix& b : basis) m += rng.scalar(f) * b;
  return m;
}

LinearFn balanced_conditions(const BimodNov& ctx) {
  return [ctx](const Matrix& beta) {
    std::vector<Scalar> out;
    const Bimodule& b = ctx.bimod;
    for (std::size_t u = 0; u < b.mdim; ++u)
      for (std::size_t v = 0; v < b.mdim; ++v)
        append(out, b.l_of(beta.column(u)).column(v) - b.r_of(beta.column(v)).column(u));
    return out;
  };
}

LinearFn homomorphism_conditions(const BimodNov& ctx) {
  return [ctx](const Matrix& beta) {
    std::vector<Scalar> out;
    const Bimodule& b = ctx.bimod;
    const Algebra& a = b.base;
    for (std::size_t x = 0; x < a.dim(); ++x)
      for (std::size_t u = 0; u < b.mdim; ++u) {
        append(out, a.product(a.basis(x), beta.column(u)) - beta.apply(b.l[x].column(u)));
        append(out, a.product(beta.column(u), a.basis(x)) - beta.apply(b.r[x].column(u)));
      }
    return out;
  };
}

LinearFn both(LinearFn a, LinearFn b) {
  return [a, b](const Matrix& m) {
    std::vector<Scalar> out = a(m);
    const std::vector<Scalar> more = b(m);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  };
}

LinearFn invariant_symmetric_conditions(const Algebra& alg) {
  return [alg](const Matrix& g) {
    const Tensor2 s = Tensor2::from_grid(g);
    std::vector<Scalar> out = coords_of(g - g.transpose());
    const Matrix id = Matrix::identity(alg.field(), alg.dim());
    for (std::size_t x = 0; x < alg.dim(); ++x) {
      const LRMatrices m = lr_matrices(alg, alg.basis(x));
      const Tensor2 t = apply_each(s, m.left, id) + apply_each(s, id, m.left_star);
      out.insert(out.end(), t.entries().begin(), t.entries().end());
    }
    return out;
  };
}

LinearFn invariant_form_conditions(const Algebra& alg) {
  return [alg](const Matrix& g) {
    std::vector<Scalar> out = coords_of(g - g.transpose());
    const Algebra st = star(alg);
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          // B(e_i e_j, e_k) + B(e_j, e_i * e_k)
          Scalar s = Scalar::zero(alg.field());
          const Vec ij = alg.mul(i, j), ik = st.mul(i, k);
          for (std::size_t t = 0; t < n; ++t) s += ij[t] * g.at(t, k) + g.at(j, t) * ik[t];
          out.push_back(s);
        }
    return out;
  };
}

LinearFn adjoint_conditions(const Matrix& gram, int sign) {
  return [gram, sign](const Matrix& t) {
    const Matrix lhs = t.transpose() * gram;
    const Matrix rhs = gram * t;
    return coords_of(sign > 0 ? lhs - rhs : lhs + rhs);
  };
}

LinearFn derivation_conditions(std::vector<Algebra> algs) {
  return [algs](const Matrix& d) {
    std::vector<Scalar> out;
    for (const Algebra& a : algs)
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
          append(out, d.apply(a.mul(i, j)) - a.product(d.column(i), a.basis(j)) -
                          a.product(a.basis(i), d.column(j)));
    return out;
  };
}

std::vector<Tensor2> tensors_with_invariant_sym(Rng& rng, const Algebra& alg, std::size_t samples) {
  const Field& f = alg.field();
  const std::size_t n = alg.dim();
  std::vector<Matrix> basis = solution_basis(f, n, n, invariant_symmetric_conditions(alg));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix skew(f, n, n);
      skew.at(i, j) = Scalar::one(f);
      skew.at(j, i) = -Scalar::one(f);
      // Over F2 the "skew" unit is symmetric; it still belongs to the sampled set.
      basis.push_back(std::move(skew));
    }
  std::vector<Tensor2> out;
  std::vector<Matrix> every = span_of(f, basis, n, n, std::max<std::uint64_t>(samples, 1));
  if (!every.empty()) {
    for (const Matrix& m : every) out.push_back(Tensor2::from_grid(m));
    return out;
  }
  out.push_back(Tensor2(f, n));
  for (std::size_t i = 1; i < samples; ++i)
    out.push_back(Tensor2::from_grid(random_combination(rng, f, basis, n, n)));
  return out;
}

std::vector<Scalar> field_values(const Field& f) {
  std::vector<Scalar> out;
  if (f.is_rational()) {
    for (long long v : {-2, -1, 0, 1, 3}) out.emplace_back(f, v);
    return out;
  }
  for (std::uint32_t v = 0; v < f.p(); ++v) out.emplace_back(f, v);
  return out;
}

BimodNov scaled_regular(const Algebra& alg, const Scalar& c) {
  return BimodNov{Bimodule::regular(alg), scaled(alg, c)};
}

OperatorInstance operator_instance(Rng& rng, const BimodNov& ctx, const Scalar& scale,
                                   const std::vector<Matrix>& beta_space, bool allow_search,
                                   bool unit_kappa) {
  const Field& f = ctx.field();
  const std::size_t n = ctx.dim(), m = ctx.mdim();
  OperatorInstance out;
  out.beta = rng.next(8) == 0 ? Matrix(f, n, m) : random_combination(rng, f, beta_space, n, m);
  const Scalar lambda = rng.scalar(f);

  // a id + b beta solves the equation on a scaled_regular context when a is 0 or
  // -lambda c, with kappa = -b^2 and mu c = -b (2a + lambda c).
  auto constructed = [&](OperatorInstance& o) {
    const Scalar lc = lambda * scale;
    const Scalar a = rng.next(2) == 0 ? Scalar::zero(f) : -lc;
    const Scalar b = unit_kappa ? (rng.next(2) == 0 ? Scalar::one(f) : -Scalar::one(f))
                                : rng.scalar(f);
    o.alpha = a * Matrix::identity(f, n) + b * o.beta;
    Scalar mu = scale.is_zero() ? rng.scalar(f)
                                : -(b * (Scalar(f, 2) * a + lc)) / scale;
    o.masses = MassParams{lambda, -(b * b), mu, Scalar::zero(f)};
    o.how = "a id + b beta";
  };

  const std::uint64_t pick = rng.next(4);
  if (pick == 0 || n != m) {
    out.alpha = rng.matrix(f, n, m);
    if (unit_kappa) {
      out.masses = MassParams{lambda, -Scalar::one(f),
                              rng.next(2) == 0 ? lambda : -lambda, Scalar::zero(f)};
    } else {
      out.masses = MassParams{lambda, rng.scalar(f), rng.scalar(f), Scalar::zero(f)};
    }
    out.how = "random";
    return out;
  }
  constructed(out);
  if (pick == 3 && allow_search) {
    // Same masses, every alpha: keep a random solution.
    std::vector<Matrix> sols;
    for (const Matrix& a : all_maps(f, n, m, 2401))
      if (ext_o_equation(ctx, a, out.beta, out.masses, Eval::FailFast).zero()) sols.push_back(a);
    if (!sols.empty()) {
      out.alpha = sols[rng.next(sols.size())];
      out.how = "searched";
    }
  }
  return out;
}

}  // namespace nova::props
