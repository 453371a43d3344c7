#include "twisthom/field.hpp"

#include <cctype>
#include <sstream>

namespace twisthom::exactfield {

Field Field::quadratic(long m) {
  if (m <= 1) throw ValidationError("Q(sqrt m) requires m > 1");
  for (long d = 2; d * d <= m; ++d) {
    if (m % (d * d) == 0)
      throw ValidationError("Q(sqrt m) requires square-free m, got m = " +
                            std::to_string(m));
  }
  Field f;
  f.kind_ = Kind::Quadratic;
  f.m_ = m;
  return f;
}

Field Field::join(const Field& a, const Field& b) {
  if (a == b) return a;
  if (a.kind_ == Kind::Rationals) return b;
  if (b.kind_ == Kind::Rationals) return a;
  throw FieldMismatchError("cannot combine elements of " + a.name() +
                           " and " + b.name());
}

std::string Field::name() const {
  switch (kind_) {
    case Kind::Rationals:
      return "Q";
    case Kind::Gaussian:
      return "Q(i)";
    case Kind::Quadratic:
      return "Q(sqrt " + std::to_string(m_) + ")";
  }
  return "?";
}

Field Field::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s == "Q(i)") return gaussian();
  if (s.rfind("Q(sqrt ", 0) == 0 && s.back() == ')') {
    const std::string inner = s.substr(7, s.size() - 8);
    try {
      return quadratic(std::stol(inner));
    } catch (const std::logic_error&) {
      throw ValidationError("bad field name: " + s);
    }
  }
  throw ValidationError("bad field name: " + s);
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw ValidationError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::in_field(const Field& f, mpq_class a, mpq_class b) {
  if (f.kind() == Field::Kind::Rationals && b != 0)
    throw ValidationError("rational scalar with nonzero extension part");
  Scalar s;
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.field_ = f;
  s.normalize();
  return s;
}

const mpq_class& Scalar::rational_value() const {
  if (!is_rational())
    throw FieldMismatchError("scalar " + str() + " is not rational");
  return a_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  r.field_ = Field::join(field_, o.field_);
  r.a_ = a_ + o.a_;
  r.b_ = b_ + o.b_;
  r.normalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r;
  r.field_ = Field::join(field_, o.field_);
  r.a_ = a_ - o.a_;
  r.b_ = b_ - o.b_;
  r.normalize();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  r.field_ = Field::join(field_, o.field_);
  // (a1 + b1 w)(a2 + b2 w) = a1 a2 + b1 b2 w^2 + (a1 b2 + b1 a2) w,
  // with w^2 = -1 for Q(i) and w^2 = m for Q(sqrt m).
  r.a_ = a_ * o.a_;
  if (b_ != 0 && o.b_ != 0) {
    const long w2 = r.field_.kind() == Field::Kind::Gaussian
                        ? -1
                        : r.field_.radicand();
    r.a_ += b_ * o.b_ * w2;
  }
  r.b_ = a_ * o.b_ + b_ * o.a_;
  r.normalize();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && a_ == o.a_ && b_ == o.b_;
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (is_rational()) return Scalar(mpq_class(1) / a_);
  // 1/(a + b w) = (a - b w) / (a^2 - b^2 w^2); the norm is nonzero because
  // w is irrational.
  const long w2 =
      field_.kind() == Field::Kind::Gaussian ? -1 : field_.radicand();
  mpq_class norm = a_ * a_ - b_ * b_ * w2;
  Scalar r;
  r.field_ = field_;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.normalize();
  return r;
}

int Scalar::sign_at_embedding(int embedding_sign) const {
  if (field_.kind() == Field::Kind::Gaussian)
    throw Error("Q(i) has no real embedding");
  if (is_rational()) return sgn(a_);
  mpq_class t = embedding_sign >= 0 ? b_ : mpq_class(-b_);
  const int sa = sgn(a_);
  const int st = sgn(t);
  if (sa == 0) return st;
  if (st == 0) return sa;
  if (sa == st) return sa;
  // Opposite signs: compare a^2 with m t^2 (equality impossible, m is not
  // a rational square).
  mpq_class lhs = a_ * a_;
  mpq_class rhs = t * t * field_.radicand();
  return lhs > rhs ? sa : st;
}

namespace {

std::string q_str(const mpq_class& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::string Scalar::str() const {
  if (is_rational()) return q_str(a_);
  const std::string unit = field_.kind() == Field::Kind::Gaussian
                               ? "i"
                               : "sqrt(" + std::to_string(field_.radicand()) +
                                     ")";
  std::string ext = q_str(abs(b_)) + "*" + unit;
  if (a_ == 0) return (sgn(b_) < 0 ? "-" : "") + ext;
  return q_str(a_) + (sgn(b_) < 0 ? "-" : "+") + ext;
}

namespace {

// Splits "lhs OP rhs" at the single top-level +/- separating the rational
// part from the extension term.  A leading sign belongs to the first term.
mpq_class parse_q(const std::string& s) {
  if (s.empty()) throw ValidationError("empty rational literal");
  for (size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                    (i == 0 && (c == '-' || c == '+'));
    if (!ok) throw ValidationError("bad rational literal: " + s);
  }
  try {
    mpq_class q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ValidationError("bad rational literal: " + s);
  }
}

}  // namespace

Scalar Scalar::parse(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ValidationError("empty scalar literal");

  size_t split = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' &&
        s[i - 1] != '-')
      split = i;  // last top-level sign; extension term comes second
  }

  auto parse_term = [](const std::string& term, mpq_class& rat,
                       mpq_class& ext, Field& f) {
    std::string body = term;
    mpq_class sign = 1;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
      if (body[0] == '-') sign = -1;
      body = body.substr(1);
    }
    const size_t star = body.find('*');
    std::string coeff = star == std::string::npos ? body : body.substr(0, star);
    std::string unit = star == std::string::npos ? "" : body.substr(star + 1);
    if (unit.empty() && (body == "i" || body.rfind("sqrt(", 0) == 0)) {
      unit = body;
      coeff = "1";
    }
    if (unit.empty()) {
      rat += sign * parse_q(coeff);
      return;
    }
    Field tf;
    if (unit == "i") {
      tf = Field::gaussian();
    } else if (unit.rfind("sqrt(", 0) == 0 && unit.back() == ')') {
      long m = 0;
      try {
        m = std::stol(unit.substr(5, unit.size() - 6));
      } catch (const std::logic_error&) {
        throw ValidationError("bad scalar literal: " + term);
      }
      tf = Field::quadratic(m);
    } else {
      throw ValidationError("bad scalar literal: " + term);
    }
    f = Field::join(f, tf);
    ext += sign * parse_q(coeff);
  };

  mpq_class rat = 0, ext = 0;
  Field f = Field::rationals();
  if (split == std::string::npos) {
    parse_term(s, rat, ext, f);
  } else {
    parse_term(s.substr(0, split), rat, ext, f);
    parse_term(s.substr(split), rat, ext, f);
  }
  if (f.kind() == Field::Kind::Rationals) return Scalar(rat);
  return Scalar::in_field(f, rat, ext);
}

}  // namespace twisthom::exactfield
