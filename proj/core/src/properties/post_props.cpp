// Post-Novikov structures: associated algebra, bimodule, compatibility, homomorphism and
// the trialgebra construction.

#include "common.hpp"

#include <optional>

#include "nova/errors.hpp"
#include "nova/ybe.hpp"

namespace nova::props {

namespace {

// k[x]/(x^n) with its multiplication, basis 1, x, ..., x^(n-1).
Algebra truncated_ring(const Field& f, std::size_t n) {
  Algebra a(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) a.coeff(i, j, i + j) = Scalar::one(f);
  return a;
}

bool invertible(const Matrix& m) { return m.rows() == m.cols() && inverse(m).has_value(); }

bool commutative_associative(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a.mul(i, j) != a.mul(j, i)) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (a.product(a.mul(i, j), a.basis(k)) != a.product(a.basis(i), a.mul(j, k))) return false;
    }
  return true;
}

struct PostDraw {
  std::string label;
  PostNov post;
  // Set when the structure came from an operator alpha of weight lambda on ctx.
  std::optional<BimodNov> ctx;
  std::optional<Matrix> alpha;
  Scalar lambda;
  std::optional<CommTrialgebra> tri;
  bool rota_baxter = false;  // alpha acts on the regular context
};

class PostSource {
 public:
  PostSource(const Setup& s) : s_(s), f_(s.field), rng_(s.seed) {}

  std::vector<PostDraw> draws() {
    worked_examples();
    if (!f_.is_rational() && has_dim(s_, 2)) {
      const auto algs = sweep_algebras(f_);
      for (std::size_t i = 0; i < algs.size(); ++i) sweep(algs[i], "enumerated #" + std::to_string(i));
    }
    for (std::size_t t = 0; t < s_.trials; ++t) random(t);
    return std::move(out_);
  }

 private:
  void add_operator(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda,
                    const std::string& label, bool rb = false) {
    const OperatorPost op = post_from_o(ctx, alpha, lambda);
    out_.push_back({label, op.post, ctx, alpha, lambda, std::nullopt, rb});
  }

  // Trialgebras failing their identities are kept with a zero structure; the property
  // treats them as premise failures.
  void add_trialgebra(const CommTrialgebra& t, const std::string& label) {
    const bool valid = trialgebra_residual(t, Eval::FailFast).zero() &&
                       derivation_residual(t, Eval::FailFast).zero();
    out_.push_back({label, valid ? post_from_trialgebra(t) : PostNov::zero(f_, t.dot.dim()),
                    std::nullopt, std::nullopt, Scalar::zero(f_), t});
  }

  void worked_examples() {
    const Algebra a = a2(f_);
    add_operator(regular(a, false), Matrix::identity(f_, 2), -Scalar::one(f_), "A2, id of weight -1", true);
    add_operator(regular(a, false), Matrix(f_, 2, 2), Scalar::one(f_), "A2, zero map", true);
    const Algebra dot = truncated_ring(f_, 3);
    const Matrix euler = Matrix::of(f_, 3, 3, {0, 0, 0, 0, 1, 0, 0, 0, 2});
    add_trialgebra({dot, scaled(dot, -Scalar::one(f_)), euler}, "trunc ring k[x]/(x^3), x d/dx");
  }

  // Weight-lambda Rota-Baxter operators of alg: every one for tiny fields, otherwise
  // the scalar ones.
  std::vector<Matrix> rota_baxter_ops(const Algebra& alg, const Scalar& lambda) {
    std::vector<Matrix> out;
    const std::size_t n = alg.dim();
    std::vector<Matrix> cands = all_maps(f_, n, n, 81);
    if (cands.empty()) {
      cands = {Matrix(f_, n, n), -lambda * Matrix::identity(f_, n)};
      for (int i = 0; i < 8; ++i) cands.push_back(rng_.matrix(f_, n, n));
    }
    for (const Matrix& t : cands)
      if (rota_baxter_residual(alg, t, lambda, Eval::FailFast).zero()) out.push_back(t);
    return out;
  }

  template <class T>
  const T& pick(const std::vector<T>& v) { return v[rng_.next(v.size())]; }

  void sweep(const Algebra& alg, const std::string& label) {
    const std::size_t n = alg.dim();
    for (long long w : {0, 1, -1}) {
      const Scalar lambda(f_, w);
      const auto ops = rota_baxter_ops(alg, lambda);
      if (!ops.empty())
        add_operator(regular(alg, false), pick(ops), lambda,
                     label + ", Rota-Baxter of weight " + std::to_string(w), true);
    }
    // Line module with zero product: every map of weight 0.
    std::vector<BimodNov> lines;
    for (const Matrix& m : all_maps(f_, 2, n, 625)) {
      Bimodule b = Bimodule::zero(alg, 1);
      for (std::size_t i = 0; i < n; ++i) {
        b.l[i].at(0, 0) = m.at(0, i);
        b.r[i].at(0, 0) = m.at(1, i);
      }
      if (bimodule_residual(b, Eval::FailFast).zero()) lines.push_back(with_trivial_product(b));
    }
    if (!lines.empty()) {
      const BimodNov ctx = pick(lines);
      std::vector<Matrix> ops;
      for (const Matrix& a : all_maps(f_, n, 1))
        if (o_operator_residual(ctx, a, Scalar::zero(f_), Eval::FailFast).zero()) ops.push_back(a);
      if (!ops.empty()) add_operator(ctx, pick(ops), Scalar::zero(f_), label + ", line module");
    }
    if (commutative_associative(alg)) {
      const auto ders = solution_basis(f_, n, n, derivation_conditions({alg}));
      const Matrix d = random_combination(rng_, f_, ders, n, n);
      add_trialgebra({alg, scaled(alg, -Scalar::one(f_)), d}, label + ", trialgebra");
      add_trialgebra({alg, Algebra(f_, n), d}, label + ", trialgebra with zero second product");
    }
    if (f_.has_half() && rng_.next(4) == 0) {
      for (const Tensor2& r : tensors_with_invariant_sym(rng_, alg, 16))
        if (nybe_residual(alg, r).is_zero()) {
          const NybePost np = post_from_nybe(alg, r);
          out_.push_back({label + ", tensor solution " + r.to_string(), np.dual, std::nullopt,
                          std::nullopt, Scalar::zero(f_), std::nullopt});
          break;
        }
    }
  }

  void random(std::size_t t) {
    const std::string label = "random #" + std::to_string(t);
    const std::size_t d = s_.dims[t % s_.dims.size()];
    switch (rng_.next(4)) {
      case 0: {  // regular context with the module product scaled, searched operator
        const Algebra alg = random_algebra(rng_, f_, d);
        const Scalar lambda = rng_.scalar(f_);
        const auto ops = rota_baxter_ops(alg, lambda);
        if (!ops.empty()) add_operator(regular(alg, false), pick(ops), lambda, label + ", Rota-Baxter", true);
        break;
      }
      case 1: {  // truncated ring in a random basis with a random derivation
        const Matrix basis = rng_.invertible(f_, d);
        const Algebra dot = change_basis(truncated_ring(f_, d), basis);
        const auto ders = solution_basis(f_, d, d, derivation_conditions({dot}));
        const Matrix der = random_combination(rng_, f_, ders, d, d);
        const Algebra circ = rng_.next(2) == 0 ? scaled(dot, -Scalar::one(f_)) : Algebra(f_, d);
        add_trialgebra({dot, circ, der}, label + ", truncated ring");
        break;
      }
      case 2: {  // dual module of the regular one with zero product, zero-weight operators
        const Algebra alg = random_algebra(rng_, f_, d);
        const BimodNov ctx = with_trivial_product(dual_bimodule(Bimodule::regular(alg), false));
        Matrix alpha(f_, d, d);
        if (rng_.next(2) == 0) {
          const Matrix cand = rng_.matrix(f_, d, d);
          if (o_operator_residual(ctx, cand, Scalar::zero(f_), Eval::FailFast).zero()) alpha = cand;
        }
        add_operator(ctx, alpha, Scalar::zero(f_), label + ", dual module");
        break;
      }
      default: {  // three random products: usually not post-Novikov
        PostNov p{random_algebra(rng_, f_, d), Algebra(f_, d), Algebra(f_, d)};
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
              p.tri_l.coeff(i, j, k) = rng_.scalar(f_);
              p.tri_r.coeff(i, j, k) = rng_.scalar(f_);
            }
        out_.push_back({label + ", random products", p, std::nullopt, std::nullopt, Scalar::zero(f_),
                        std::nullopt});
        break;
      }
    }
  }

  const Setup& s_;
  Field f_;
  Rng rng_;
  std::vector<PostDraw> out_;
};

Inst post_inst(const PostDraw& d) {
  Inst in(d.label);
  in.alg("circ", d.post.circ).alg("tri_l", d.post.tri_l).alg("tri_r", d.post.tri_r);
  if (d.ctx) in.ctx("context", *d.ctx).map("alpha", *d.alpha).scalar("lambda", d.lambda);
  if (d.tri) in.alg("dot", d.tri->dot).alg("second", d.tri->circ).map("derivation", d.tri->derivation);
  return in;
}

template <class Check>
PropertyReport run_posts(const std::string& id, const PropertyOptions& o, Check check) {
  const Setup s = resolve(o, Field::prime(3));
  Harness h(id, s.field);
  for (PostDraw& d : PostSource(s).draws()) {
    Inst in = post_inst(d);
    h.add(std::move(in), [d = std::move(d), check] { return check(d); });
  }
  return h.run(o.jobs);
}

}  // namespace

PropertyReport prop_assoc(const PropertyOptions& o) {
  return run_posts("P-ASSOC", o, [](const PostDraw& d) {
    if (!is_post_novikov(d.post)) return Verdict::premise_failed("not post-Novikov");
    Verdict v;
    v.require("associated algebra is Novikov", novikov_residual(associated(d.post)));
    v.tally("post-Novikov");
    return v.done();
  });
}

PropertyReport prop_lrbimod(const PropertyOptions& o) {
  return run_posts("P-LRBIMOD", o, [](const PostDraw& d) {
    if (!is_post_novikov(d.post)) return Verdict::premise_failed("not post-Novikov");
    Verdict v;
    v.require("(circ, L|>, R<|) is a bimodule Novikov algebra", bimodnov_residual(lr_bimodule(d.post)));
    v.tally("post-Novikov");
    return v.done();
  });
}

PropertyReport prop_compat(const PropertyOptions& o) {
  return run_posts("P-COMPAT", o, [](const PostDraw& d) {
    if (!is_post_novikov(d.post)) return Verdict::premise_failed("not post-Novikov");
    const Field& f = d.post.field();
    const std::size_t n = d.post.dim();
    Verdict v;
    // From the structure: the identity is an invertible weight-1 operator that recovers it.
    const BimodNov ctx = lr_bimodule(d.post);
    const Matrix id = Matrix::identity(f, n);
    v.require("identity is a weight-1 operator", o_operator_residual(ctx, id, Scalar::one(f)));
    v.require("round trip recovers the products", post_from_o(ctx, id, Scalar::one(f)).post == d.post);
    // From an invertible weight-1 operator: the pushed-forward structure is compatible.
    if (d.alpha && d.lambda.is_one() && invertible(*d.alpha)) {
      const PostNov pushed = push_forward(d.post, *d.alpha);
      v.require("pushed-forward structure has associated algebra A",
                associated(pushed) == d.ctx->base());
      v.tally("invertible weight-1 operator");
    }
    if (d.rota_baxter && invertible(*d.alpha)) {
      v.require("invertible Rota-Baxter structure is compatible",
                post_from_rb_invertible(d.ctx->base(), *d.alpha, d.lambda).associated_matches);
      v.tally("invertible Rota-Baxter");
    }
    v.tally("post-Novikov");
    return v.done();
  });
}

PropertyReport prop_hom(const PropertyOptions& o) {
  return run_posts("P-HOM", o, [](const PostDraw& d) {
    if (!d.ctx) return Verdict::premise_failed("not from an operator");
    Verdict v;
    const OperatorPost op = post_from_o(*d.ctx, *d.alpha, d.lambda);
    v.require("reported homomorphism", op.homomorphism);
    v.require("alpha(x (*) y) = alpha(x) alpha(y)",
              homomorphism_identity(associated(op.post), d.ctx->base(), *d.alpha));
    v.tally("operator");
    return v.done();
  });
}

PropertyReport prop_tri(const PropertyOptions& o) {
  return run_posts("P-TRI", o, [](const PostDraw& d) {
    if (!d.tri) return Verdict::premise_failed("not from a trialgebra");
    if (!trialgebra_residual(*d.tri, Eval::FailFast).zero() ||
        !derivation_residual(*d.tri, Eval::FailFast).zero())
      return Verdict::premise_failed("not a trialgebra with derivation");
    Verdict v;
    v.require("post-Novikov", post_residual(post_from_trialgebra(*d.tri)));
    v.tally("trialgebra");
    return v.done();
  });
}

}  // namespace nova::props
