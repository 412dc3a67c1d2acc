#pragma once

// Versioned JSON documents for every domain object.
//
//   {"format": 1, "kind": "algebra", "field": {"kind": "prime", "p": 3},
//    "dim": 2, "mul": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]}
//
// mul[i][j] is the coefficient array of e_i o e_j (the A2 example above). Matrices are
// row-major arrays of rows; rational scalars are strings "num/den", prime-field scalars
// integers. Integers are accepted for rationals on input.

#include <map>
#include <string>

#include <json.hpp>

#include "nova/algebra.hpp"
#include "nova/postnov.hpp"
#include "nova/tensor.hpp"
#include "nova/ybe.hpp"

namespace nova::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kFormat = 1;

Json field_json(const Field& f);
Field field_from(const Json& j);

Json scalar_json(const Scalar& s);
Scalar scalar_from(const Field& f, const Json& j);
Json vec_json(const Vec& v);
Json matrix_rows(const Matrix& m);
Matrix matrix_from_rows(const Field& f, const Json& rows);
Json mul_json(const Algebra& a);
Algebra algebra_from_mul(const Field& f, const Json& mul);

// Documents: the envelope plus the kind's payload.
Json document(const Algebra& a);
Json document(const Bimodule& b);
Json document(const BimodNov& b);
Json document(const Matrix& m);
Json document(const Tensor2& t);
Json document(const PostNov& p);
Json document(const BilForm& b);
Json bundle(const Field& f, const std::map<std::string, Json>& items);

// Reading checks the format version and kind and throws ParseError.
Json parse_document(const std::string& text, const std::string& source = "input");
Json load_document(const std::string& path);
std::string kind_of(const Json& doc);
Field field_of(const Json& doc);

Algebra algebra_from(const Json& doc);
Bimodule bimodule_from(const Json& doc);
// Accepts bimodnov documents and bimodule documents (zero module product).
BimodNov bimodnov_from(const Json& doc);
Matrix linmap_from(const Json& doc);
Tensor2 tensor2_from(const Json& doc);
PostNov postnov_from(const Json& doc);
BilForm bilform_from(const Json& doc);
// Named items of a doc-bundle.
const Json& bundle_item(const Json& doc, const std::string& name);

}  // namespace nova::cli
