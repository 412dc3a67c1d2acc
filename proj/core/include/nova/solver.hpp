#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nova/algebra.hpp"
#include "nova/operators.hpp"
#include "nova/tensor.hpp"

namespace nova {

enum class SearchKind {
  NovikovAlgebra,            // structure constants of a dim-n product
  NybeSolution,              // tensors in A (x) A
  EnybeSolution,             // same, mass from masses.epsilon
  ExtOOperator,              // maps M -> A for a fixed context, beta and masses
  RotaBaxter,                // endomorphisms of A, weight masses.lambda
  InvariantSymmetricTensor,  // tensors in A (x) A
  QuadraticForm,             // Gram matrices of forms on A
};
SearchKind parse_search_kind(const std::string& name);
std::string search_kind_name(SearchKind k);

struct SearchSpec {
  SearchKind kind = SearchKind::NovikovAlgebra;
  Field field = Field::prime(2);
  std::size_t dim = 0;             // NovikovAlgebra only
  std::optional<Algebra> algebra;  // tensor and endomorphism kinds
  std::optional<BimodNov> context;  // ExtOOperator
  std::optional<Matrix> beta;       // ExtOOperator
  MassParams masses = MassParams::zero(Field::prime(2));
  std::size_t shard = 0, shards = 1;
};

// One solution: its candidate index and its coefficients in F_p, in the order used for
// decoding (most significant first).
struct Solution {
  std::uint64_t index = 0;
  std::vector<std::uint32_t> coeffs;
};

struct SearchResult {
  std::vector<Solution> solutions;  // increasing index
  std::uint64_t candidates = 0;     // scanned by this shard
  std::uint64_t total = 0;          // size of the whole space
  double elapsed_ms = 0;
  std::uint64_t hash = 0;           // FNV-1a over indices and coefficients
};

// Number of coefficients and size of the space; throws SpaceTooLarge beyond 2^32 and
// DimMismatch/ParseError-style errors on incomplete specs.
std::size_t coefficient_count(const SearchSpec& spec);
std::uint64_t space_size(const SearchSpec& spec);

// Scans the shard's candidates in lexicographic order with fail-fast residuals, using up to
// `jobs` threads; the result does not depend on `jobs`.
SearchResult enumerate(const SearchSpec& spec, unsigned jobs = 1);

// Decodes a candidate index into coefficients, and coefficients into the object they stand
// for (algebra, tensor grid or map).
std::vector<std::uint32_t> decode(std::uint64_t index, std::size_t count, std::uint32_t p);
Algebra algebra_from_coeffs(Field f, std::size_t dim, const std::vector<std::uint32_t>& c);
Tensor2 tensor_from_coeffs(Field f, std::size_t dim, const std::vector<std::uint32_t>& c);
Matrix matrix_from_coeffs(Field f, std::size_t rows, std::size_t cols,
                          const std::vector<std::uint32_t>& c);

// Re-runs the kind's residual on a solution.
bool verify_solution(const SearchSpec& spec, const Solution& s);

// Sets the shard/thread-independent hash of a result.
std::uint64_t fnv1a(const std::vector<Solution>& sols);
// Hash of everything in the spec except the shard layout.
std::uint64_t context_hash(const SearchSpec& spec);

// All dim-n Novikov algebras over F_p, cached per (p, n).
const std::vector<Algebra>& novikov_algebras(Field f, std::size_t dim);

// Seeded generator of random field elements and objects.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next(std::uint64_t bound);  // uniform in [0, bound)
  // Uniform in F_p; in [-3, 3] over Q.
  Scalar scalar(const Field& f);
  Scalar nonzero(const Field& f);
  Matrix matrix(const Field& f, std::size_t rows, std::size_t cols);
  Tensor2 tensor(const Field& f, std::size_t dim);
  Matrix invertible(const Field& f, std::size_t dim);

 private:
  std::mt19937_64 eng_;
};

// k[x]/(x^n) with a o b = s a (x d/dx)(b), a Novikov algebra for any scale s.
Algebra trunc_poly(Field f, std::size_t n, const Scalar& scale);
// Transport of the structure constants along an invertible change of basis.
Algebra change_basis(const Algebra& alg, const Matrix& basis);

enum class Family { TruncPoly, EnumeratedDim2, RandomMaps };
Family parse_family(const std::string& name);

struct InstanceRequest {
  Family family = Family::TruncPoly;
  Field field = Field::rational();
  std::size_t dim = 3;   // trunc-poly dimension; size of random maps
  std::size_t maps = 1;  // number of random maps
};
struct Instance {
  Algebra algebra;            // TruncPoly, EnumeratedDim2
  std::vector<Matrix> maps;   // RandomMaps
};
// Reproducible from the seed. TruncPoly uses a random nonzero scale and a random change
// of basis; EnumeratedDim2 returns the (seed mod count)-th enumerated algebra.
Instance random_instance(std::uint64_t seed, const InstanceRequest& req);

}  // namespace nova
