#pragma once

// Exact scalar arithmetic for action values: arbitrary-precision rationals and
// elements of a real quadratic field Q(sqrt(d)), with total certified
// comparison, exact floor, and certified decimal rendering.  All spectrum,
// capacity and gap computations in this library are carried out in these
// types; doubles never enter a comparison.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reebspec {

using Int = boost::multiprecision::cpp_int;

// floor(sqrt(v)) for v >= 0; throws std::domain_error for v < 0.
Int isqrt(const Int& v);

// Floor division (quotient rounded toward minus infinity); b != 0.
Int floor_div(const Int& a, const Int& b);

// True if d > 1 and no square divides d.
bool is_square_free(std::int64_t d);

struct ParseError : std::invalid_argument {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Raised when two scalars from distinct quadratic fields meet in an operation
// or comparison.  A rational scalar is compatible with every field.
struct FieldMismatchError : std::domain_error {
  using std::domain_error::domain_error;
};

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }
  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Exact cross-multiplied comparison.
  int cmp(const Rational& o) const {
    Int lhs = num_ * o.den_;
    Int rhs = o.num_ * den_;
    return lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
  }
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return cmp(o) < 0; }
  bool operator<=(const Rational& o) const { return cmp(o) <= 0; }
  bool operator>(const Rational& o) const { return cmp(o) > 0; }
  bool operator>=(const Rational& o) const { return cmp(o) >= 0; }

  Rational abs() const { return num_ < 0 ? -*this : *this; }
  Int floor() const { return floor_div(num_, den_); }

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  // Accepts "p", "-p", "p/q", "-p/q".
  static Rational from_string(std::string_view text);

 private:
  struct raw_tag {};
  Rational(Int n, Int d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();

  Int num_;
  Int den_;  // > 0, gcd(num_, den_) == 1
};

inline bool is_zero(const Rational& x) { return x.sign() == 0; }

// Sign of r + s*sqrt(d), d square-free > 1, computed exactly.
int quadratic_sign(const Rational& r, const Rational& s, std::int64_t d);

// Element of Q or of Q(sqrt(d)): value = rat + quad * sqrt(d).  The radicand
// is part of the value; d == 0 exactly when the value is rational.  Binary
// operations promote a rational operand into the other operand's field and
// reject operands from two distinct quadratic fields.
class ExactScalar {
 public:
  ExactScalar() : d_(0) {}
  ExactScalar(long long n) : rat_(n), d_(0) {}  // NOLINT: implicit by design
  ExactScalar(Rational r) : rat_(std::move(r)), d_(0) {}  // NOLINT
  ExactScalar(Rational rat, Rational quad, std::int64_t d);

  const Rational& rational_part() const { return rat_; }
  const Rational& quad_part() const { return quad_; }
  std::int64_t radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  int sign() const {
    return d_ == 0 ? rat_.sign() : quadratic_sign(rat_, quad_, d_);
  }

  ExactScalar operator-() const;
  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar operator/(const ExactScalar& o) const;
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

  int cmp(const ExactScalar& o) const { return (*this - o).sign(); }
  bool operator==(const ExactScalar& o) const { return cmp(o) == 0; }
  bool operator!=(const ExactScalar& o) const { return cmp(o) != 0; }
  bool operator<(const ExactScalar& o) const { return cmp(o) < 0; }
  bool operator<=(const ExactScalar& o) const { return cmp(o) <= 0; }
  bool operator>(const ExactScalar& o) const { return cmp(o) > 0; }
  bool operator>=(const ExactScalar& o) const { return cmp(o) >= 0; }

  ExactScalar abs() const { return sign() < 0 ? -*this : *this; }

  // Exact floor, via integer square root on scaled values.
  Int floor() const;

  // Truncated decimal rendering of |value| with `digits` fractional digits and
  // leading sign; the printed value v certifies |value| in [|v|, |v| + 10^-digits).
  std::string decimal(unsigned digits = 12) const;

  // Re-parseable form, e.g. "3/2", "-2", "1/2*sqrt(2)", "1-1/2*sqrt(2)".
  std::string to_string() const;

  double approx() const;  // nearest-double estimate, display/tests only

 private:
  Rational rat_;
  Rational quad_;
  std::int64_t d_;
};

// Parses the axis-token grammar:
//   scalar  := '-'? primary (('+'|'-') quadterm)?
//   primary := quadterm | rat
//   quadterm:= (rat '*')? 'sqrt(' uint ')'
//   rat     := uint ('/' uint)?
// Throws ParseError with a character position on malformed input; the
// radicand must be square-free and > 1.
ExactScalar parse_exact_scalar(std::string_view text);

// Common-field check: returns the radicand shared by both scalars, or throws
// FieldMismatchError when both are irrational with different radicands.
std::int64_t common_radicand(const ExactScalar& a, const ExactScalar& b);

// Filtration level: -infinity (level of the zero vector), a finite exact
// scalar, or +infinity (dual level of the zero functional).
class Level {
 public:
  static Level bottom() { return Level(Kind::Bottom); }
  static Level top() { return Level(Kind::Top); }
  Level(ExactScalar v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT

  bool is_bottom() const { return kind_ == Kind::Bottom; }
  bool is_top() const { return kind_ == Kind::Top; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const ExactScalar& finite() const {
    if (!is_finite()) throw std::logic_error("level is not finite");
    return value_;
  }

  int cmp(const Level& o) const {
    if (kind_ != o.kind_) return static_cast<int>(kind_) < static_cast<int>(o.kind_) ? -1 : 1;
    if (kind_ != Kind::Finite) return 0;
    return value_.cmp(o.value_);
  }
  bool operator==(const Level& o) const { return cmp(o) == 0; }
  bool operator!=(const Level& o) const { return cmp(o) != 0; }
  bool operator<(const Level& o) const { return cmp(o) < 0; }
  bool operator<=(const Level& o) const { return cmp(o) <= 0; }
  bool operator>(const Level& o) const { return cmp(o) > 0; }
  bool operator>=(const Level& o) const { return cmp(o) >= 0; }

  std::string to_string() const;

 private:
  enum class Kind { Bottom = 0, Finite = 1, Top = 2 };
  explicit Level(Kind k) : kind_(k) {}

  Kind kind_;
  ExactScalar value_;
};

}  // namespace reebspec
