#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace nova {

// Ground field: Q or F_p with p prime, p < 2^31.
class Field {
 public:
  enum class Kind : std::uint8_t { Rational, Prime };

  Field() : Field(Kind::Rational, 0) {}

  static Field rational() { return Field(Kind::Rational, 0); }
  static Field prime(std::uint32_t p);
  // Accepts "Q", "F2", "F3", ... (case-insensitive leading letter).
  static Field parse(const std::string& name);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  std::uint32_t p() const { return p_; }
  std::uint32_t characteristic() const { return p_; }
  bool has_half() const { return p_ != 2; }
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

class Scalar {
 public:
  // Rational zero; containers need a default.
  Scalar() : field_(Field::rational()), value_(mpq_class(0)) {}
  Scalar(Field f, long long n);
  Scalar(Field f, const mpq_class& q);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  // "n" or "n/d"; reduced into F_p when f is prime.
  static Scalar parse(Field f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;
  std::string to_string() const;

  // F_p representative in [0, p); only valid for prime fields.
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  // Exact value; only valid for the rational field.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

}  // namespace nova
