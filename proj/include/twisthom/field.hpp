#pragma once

#include <gmpxx.h>

#include <string>

#include "twisthom/errors.hpp"

namespace twisthom::exactfield {

/// Tag for the ground field of a computation: the rationals, the Gaussian
/// rationals Q(i), or a real quadratic field Q(sqrt m) with m square-free.
/// Q embeds in either extension; the two extensions never mix.
class Field {
 public:
  enum class Kind { Rationals, Gaussian, Quadratic };

  Field() = default;

  static Field rationals() { return Field(); }
  static Field gaussian() {
    Field f;
    f.kind_ = Kind::Gaussian;
    f.m_ = -1;
    return f;
  }
  /// Q(sqrt m).  Requires m > 1 and square-free.
  static Field quadratic(long m);

  Kind kind() const { return kind_; }
  /// m for Quadratic, -1 for Gaussian, 0 for the rationals.
  long radicand() const { return m_; }

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && m_ == o.m_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  /// Smallest common field of the two tags.  Throws FieldMismatchError when
  /// the tags are distinct proper extensions.
  static Field join(const Field& a, const Field& b);

  std::string name() const;  // "Q", "Q(i)", "Q(sqrt 2)"
  static Field parse(const std::string& s);

 private:
  Kind kind_ = Kind::Rationals;
  long m_ = 0;
};

/// An exact element a + b*w of Q, Q(i) (w = i) or Q(sqrt m) (w = sqrt m).
/// Every operation keeps the value in canonical reduced form; elements with
/// b = 0 normalize back to the rational tag, which realizes the embedding
/// of Q into either extension.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : a_(n) {}  // NOLINT: implicit by design
  Scalar(const mpq_class& q) : a_(q) {}

  static Scalar rational(long num, long den);
  static Scalar in_field(const Field& f, mpq_class a, mpq_class b);
  /// The element i of Q(i).
  static Scalar imaginary_unit() {
    return in_field(Field::gaussian(), 0, 1);
  }
  /// The element sqrt(m) of Q(sqrt m).
  static Scalar sqrt_of(long m) {
    return in_field(Field::quadratic(m), 0, 1);
  }

  const Field& field() const { return field_; }
  const mpq_class& rational_part() const { return a_; }
  const mpq_class& extension_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return field_.kind() == Field::Kind::Rationals; }
  /// The value as a rational number; throws unless is_rational().
  const mpq_class& rational_value() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Values in distinct proper extensions are never equal.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Field conjugation: i -> -i, sqrt m -> -sqrt m; identity on Q.
  Scalar conjugate() const;
  /// Multiplicative inverse; throws on zero.
  Scalar inverse() const;

  /// Sign of the value under the real embedding sending sqrt(m) to
  /// embedding_sign * sqrt(m).  Defined for Q and Q(sqrt m) only.
  int sign_at_embedding(int embedding_sign = +1) const;

  std::string str() const;
  static Scalar parse(const std::string& s);

 private:
  mpq_class a_{0};
  mpq_class b_{0};
  Field field_{};

  void normalize() {
    if (b_ == 0) field_ = Field::rationals();
  }
  friend class FieldOps;
};

}  // namespace twisthom::exactfield
