#include "nova/scalar.hpp"

#include <cctype>

#include "nova/errors.hpp"

namespace nova {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t acc = 1;
  b %= p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw ParseError("not a supported prime: " + std::to_string(p));
  return Field(Kind::Prime, p);
}

Field Field::parse(const std::string& name) {
  if (name == "Q" || name == "q") return rational();
  if (name.size() >= 2 && (name[0] == 'F' || name[0] == 'f')) {
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        throw ParseError("bad field name '" + name + "'");
    return prime(static_cast<std::uint32_t>(std::stoul(name.substr(1))));
  }
  throw ParseError("bad field name '" + name + "'");
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(Field f, long long n) : field_(f) {
  if (f.is_rational()) {
    value_ = mpq_class(static_cast<long>(n));
  } else {
    long long r = n % static_cast<long long>(f.p());
    if (r < 0) r += f.p();
    value_ = static_cast<std::uint32_t>(r);
  }
}

Scalar::Scalar(Field f, const mpq_class& q) : field_(f) {
  if (f.is_rational()) {
    mpq_class c = q;
    c.canonicalize();
    value_ = c;
    return;
  }
  std::uint32_t den = reduce(q.get_den(), f.p());
  if (den == 0) throw DivisionByZero("denominator vanishes in " + f.name());
  std::uint64_t num = reduce(q.get_num(), f.p());
  value_ = static_cast<std::uint32_t>(num * pow_mod(den, f.p() - 2, f.p()) % f.p());
}

Scalar Scalar::parse(Field f, const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw ParseError("bad scalar '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return Scalar(f, q);
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(rational()) == 0;
  return residue() == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return rational() == 1;
  return residue() == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar out = *this;
  if (field_.is_rational()) {
    out.value_ = mpq_class(1) / rational();
  } else {
    out.value_ = pow_mod(residue(), field_.p() - 2, field_.p());
  }
  return out;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return rational().get_str();
  return std::to_string(residue());
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch(field_.name() + " vs " + o.field_.name());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += o.rational();
  } else {
    std::uint32_t s = residue() + o.residue();
    if (s >= field_.p()) s -= field_.p();
    value_ = s;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= o.rational();
  } else {
    std::uint32_t a = residue(), b = o.residue();
    value_ = a >= b ? a - b : a + field_.p() - b;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= o.rational();
  } else {
    value_ = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(residue()) * o.residue() % field_.p());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational()) {
    out.value_ = -rational();
  } else {
    out.value_ = residue() == 0 ? 0u : field_.p() - residue();
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (a.field_.is_rational()) return a.rational() == b.rational();
  return a.residue() == b.residue();
}

}  // namespace nova
