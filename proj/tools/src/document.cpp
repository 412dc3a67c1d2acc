#include "nova/cli/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "nova/errors.hpp"

namespace nova::cli {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

Json envelope(const Field& f, const char* kind) {
  Json j;
  j["format"] = kFormat;
  j["kind"] = kind;
  j["field"] = field_json(f);
  return j;
}

void expect_kind(const Json& doc, const std::string& kind) {
  if (kind_of(doc) != kind) throw ParseError("expected kind " + kind + ", got " + kind_of(doc));
}

Json bimodule_payload(Json j, const Bimodule& b) {
  j["algebra"] = {{"dim", b.base.dim()}, {"mul", mul_json(b.base)}};
  j["mdim"] = b.mdim;
  Json l = Json::array(), r = Json::array();
  for (std::size_t i = 0; i < b.base.dim(); ++i) {
    l.push_back(matrix_rows(b.l[i]));
    r.push_back(matrix_rows(b.r[i]));
  }
  j["l"] = std::move(l);
  j["r"] = std::move(r);
  return j;
}

Bimodule bimodule_payload_from(const Field& f, const Json& doc) {
  const Json& alg = member(doc, "algebra");
  Bimodule b;
  b.base = algebra_from_mul(f, member(alg, "mul"));
  if (b.base.dim() != size_field(alg, "dim")) throw ParseError("algebra dim does not match mul");
  b.mdim = size_field(doc, "mdim");
  const Json& l = member(doc, "l");
  const Json& r = member(doc, "r");
  if (!l.is_array() || !r.is_array() || l.size() != b.base.dim() || r.size() != b.base.dim())
    throw ParseError("l and r need one matrix per basis vector of the algebra");
  for (std::size_t i = 0; i < b.base.dim(); ++i) {
    b.l.push_back(matrix_from_rows(f, l[i]));
    b.r.push_back(matrix_from_rows(f, r[i]));
    for (const Matrix* m : {&b.l.back(), &b.r.back()})
      if (m->rows() != b.mdim || m->cols() != b.mdim) throw ParseError("action matrices must be mdim x mdim");
  }
  return b;
}

Matrix square_grid(const Field& f, const Json& doc) {
  const std::size_t n = size_field(doc, "dim");
  Matrix g = matrix_from_rows(f, member(doc, "grid"));
  if (g.rows() != n || g.cols() != n) throw ParseError("grid must be dim x dim");
  return g;
}

}  // namespace

Json field_json(const Field& f) {
  if (f.is_rational()) return {{"kind", "rational"}};
  return {{"kind", "prime"}, {"p", f.p()}};
}

Field field_from(const Json& j) {
  if (j.is_string()) return Field::parse(j.get<std::string>());
  const std::string kind = member(j, "kind").get<std::string>();
  if (kind == "rational") return Field::rational();
  if (kind == "prime") return Field::prime(member(j, "p").get<std::uint32_t>());
  throw ParseError("unknown field kind '" + kind + "'");
}

Json scalar_json(const Scalar& s) {
  if (!s.field().is_rational()) return s.residue();
  const mpq_class& q = s.rational();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar scalar_from(const Field& f, const Json& j) {
  if (j.is_number_integer()) return Scalar(f, j.get<long long>());
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  throw ParseError("scalar must be an integer or a \"num/den\" string, got " + j.dump());
}

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const Scalar& s : v.coords()) out.push_back(scalar_json(s));
  return out;
}

Json matrix_rows(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_rows(const Field& f, const Json& rows) {
  if (!rows.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) throw ParseError("matrix rows differ in length");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = scalar_from(f, rows[i][j]);
  }
  return m;
}

Json mul_json(const Algebra& a) {
  Json mul = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(vec_json(a.mul(i, j)));
    mul.push_back(std::move(row));
  }
  return mul;
}

Algebra algebra_from_mul(const Field& f, const Json& mul) {
  if (!mul.is_array()) throw ParseError("mul must be an array");
  const std::size_t n = mul.size();
  Algebra a(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!mul[i].is_array() || mul[i].size() != n) throw ParseError("mul must be dim x dim");
    for (std::size_t j = 0; j < n; ++j) {
      const Json& v = mul[i][j];
      if (!v.is_array() || v.size() != n) throw ParseError("each product needs dim coefficients");
      for (std::size_t k = 0; k < n; ++k) a.coeff(i, j, k) = scalar_from(f, v[k]);
    }
  }
  return a;
}

Json document(const Algebra& a) {
  Json j = envelope(a.field(), "algebra");
  j["dim"] = a.dim();
  j["mul"] = mul_json(a);
  if (!a.labels.empty()) j["labels"] = a.labels;
  return j;
}

Json document(const Bimodule& b) { return bimodule_payload(envelope(b.field(), "bimodule"), b); }

Json document(const BimodNov& b) {
  Json j = bimodule_payload(envelope(b.field(), "bimodnov"), b.bimod);
  j["product"] = mul_json(b.product);
  return j;
}

Json document(const Matrix& m) {
  Json j = envelope(m.field(), "linmap");
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["matrix"] = matrix_rows(m);
  return j;
}

Json document(const Tensor2& t) {
  Json j = envelope(t.field(), "tensor2");
  j["dim"] = t.dim();
  j["grid"] = matrix_rows(t.grid());
  return j;
}

Json document(const PostNov& p) {
  Json j = envelope(p.field(), "postnov");
  j["dim"] = p.dim();
  j["circ"] = mul_json(p.circ);
  j["tri_l"] = mul_json(p.tri_l);
  j["tri_r"] = mul_json(p.tri_r);
  return j;
}

Json document(const BilForm& b) {
  Json j = envelope(b.grid.field(), "bilform");
  j["dim"] = b.grid.rows();
  j["grid"] = matrix_rows(b.grid);
  return j;
}

Json bundle(const Field& f, const std::map<std::string, Json>& items) {
  Json j = envelope(f, "doc-bundle");
  Json it = Json::object();
  for (const auto& [name, doc] : items) it[name] = doc;
  j["items"] = std::move(it);
  return j;
}

Json parse_document(const std::string& text, const std::string& source) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(source + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(source + ": document must be a JSON object");
  const Json& fmt = member(j, "format");
  if (!fmt.is_number_integer() || fmt.get<int>() != kFormat)
    throw ParseError(source + ": unsupported format " + fmt.dump());
  static const char* kinds[] = {"algebra", "bimodule", "bimodnov", "linmap",
                                "tensor2", "postnov",  "bilform",  "doc-bundle"};
  const std::string kind = member(j, "kind").get<std::string>();
  if (std::find(std::begin(kinds), std::end(kinds), kind) == std::end(kinds))
    throw ParseError(source + ": unknown kind '" + kind + "'");
  field_from(member(j, "field"));
  return j;
}

Json load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

std::string kind_of(const Json& doc) { return member(doc, "kind").get<std::string>(); }
Field field_of(const Json& doc) { return field_from(member(doc, "field")); }

Algebra algebra_from(const Json& doc) {
  expect_kind(doc, "algebra");
  Algebra a = algebra_from_mul(field_of(doc), member(doc, "mul"));
  if (a.dim() != size_field(doc, "dim")) throw ParseError("dim does not match mul");
  if (doc.contains("labels")) {
    a.labels = doc.at("labels").get<std::vector<std::string>>();
    if (a.labels.size() != a.dim()) throw ParseError("one label per basis vector");
  }
  return a;
}

Bimodule bimodule_from(const Json& doc) {
  expect_kind(doc, "bimodule");
  return bimodule_payload_from(field_of(doc), doc);
}

BimodNov bimodnov_from(const Json& doc) {
  const Field f = field_of(doc);
  if (kind_of(doc) == "bimodule") return with_trivial_product(bimodule_payload_from(f, doc));
  expect_kind(doc, "bimodnov");
  BimodNov b{bimodule_payload_from(f, doc), algebra_from_mul(f, member(doc, "product"))};
  if (b.product.dim() != b.bimod.mdim) throw ParseError("module product must have dimension mdim");
  return b;
}

Matrix linmap_from(const Json& doc) {
  expect_kind(doc, "linmap");
  const Field f = field_of(doc);
  Matrix m = matrix_from_rows(f, member(doc, "matrix"));
  const std::size_t rows = size_field(doc, "rows"), cols = size_field(doc, "cols");
  if (rows == 0 || cols == 0) return Matrix(f, rows, cols);
  if (m.rows() != rows || m.cols() != cols) throw ParseError("matrix does not match rows x cols");
  return m;
}

Tensor2 tensor2_from(const Json& doc) {
  expect_kind(doc, "tensor2");
  return Tensor2::from_grid(square_grid(field_of(doc), doc));
}

PostNov postnov_from(const Json& doc) {
  expect_kind(doc, "postnov");
  const Field f = field_of(doc);
  PostNov p{algebra_from_mul(f, member(doc, "circ")), algebra_from_mul(f, member(doc, "tri_l")),
            algebra_from_mul(f, member(doc, "tri_r"))};
  const std::size_t n = size_field(doc, "dim");
  if (p.circ.dim() != n || p.tri_l.dim() != n || p.tri_r.dim() != n)
    throw ParseError("all three products need dimension dim");
  return p;
}

BilForm bilform_from(const Json& doc) {
  expect_kind(doc, "bilform");
  return BilForm{square_grid(field_of(doc), doc)};
}

const Json& bundle_item(const Json& doc, const std::string& name) {
  expect_kind(doc, "doc-bundle");
  const Json& items = member(doc, "items");
  if (!items.contains(name)) throw ParseError("bundle has no item '" + name + "'");
  return items.at(name);
}

}  // namespace nova::cli
