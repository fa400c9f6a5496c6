#include "reebspec/exact.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <cmath>
#include <limits>
#include <utility>

namespace reebspec {

Int isqrt(const Int& v) {
  if (v < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(v);
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("floor_div by zero");
  Int q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_square_free(std::int64_t d) {
  if (d <= 1) return false;
  if (d % 4 == 0) return false;
  for (std::int64_t p = 3; p * p <= d; p += 2) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

void Rational::normalize() {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::to_string() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

Rational Rational::from_string(std::string_view text) {
  bool neg = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t at) {
    std::size_t j = at;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == at) throw ParseError("expected digits", at);
    return j;
  };
  std::size_t end_num = digits(i);
  Int num(std::string(text.substr(i, end_num - i)));
  Int den = 1;
  if (end_num < text.size() && text[end_num] == '/') {
    std::size_t end_den = digits(end_num + 1);
    den = Int(std::string(text.substr(end_num + 1, end_den - end_num - 1)));
    end_num = end_den;
  }
  if (end_num != text.size()) throw ParseError("trailing characters in rational", end_num);
  if (neg) num = -num;
  return Rational(num, den);
}

int quadratic_sign(const Rational& r, const Rational& s, std::int64_t d) {
  int sr = r.sign();
  int ss = s.sign();
  if (ss == 0) return sr;
  if (sr == 0) return ss;
  if (sr == ss) return sr;
  // Opposite signs: the larger of |r| and |s|*sqrt(d) decides.  Compare
  // r^2 and s^2*d exactly: r = a/b, s = c/e gives a^2 e^2 vs c^2 b^2 d.
  Int lhs = r.num() * r.num() * s.den() * s.den();
  Int rhs = s.num() * s.num() * r.den() * r.den() * d;
  if (lhs == rhs) return 0;  // unreachable for square-free d > 1
  return lhs > rhs ? sr : ss;
}

ExactScalar::ExactScalar(Rational rat, Rational quad, std::int64_t d)
    : rat_(std::move(rat)), quad_(std::move(quad)), d_(d) {
  if (quad_.sign() == 0) {
    quad_ = Rational();
    d_ = 0;
    return;
  }
  if (!is_square_free(d_)) {
    throw std::invalid_argument("radicand must be square-free and > 1, got " +
                                std::to_string(d_));
  }
}

std::int64_t common_radicand(const ExactScalar& a, const ExactScalar& b) {
  if (a.radicand() == 0) return b.radicand();
  if (b.radicand() == 0 || a.radicand() == b.radicand()) return a.radicand();
  throw FieldMismatchError("mixed quadratic fields: sqrt(" +
                           std::to_string(a.radicand()) + ") vs sqrt(" +
                           std::to_string(b.radicand()) + ")");
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r;
  r.rat_ = -rat_;
  r.quad_ = -quad_;
  r.d_ = d_;
  return r;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  std::int64_t d = common_radicand(*this, o);
  ExactScalar r;
  r.rat_ = rat_ + o.rat_;
  r.quad_ = quad_ + o.quad_;
  r.d_ = r.quad_.sign() == 0 ? 0 : d;
  return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  std::int64_t d = common_radicand(*this, o);
  ExactScalar r;
  r.rat_ = rat_ * o.rat_ + quad_ * o.quad_ * Rational(d);
  r.quad_ = rat_ * o.quad_ + quad_ * o.rat_;
  r.d_ = r.quad_.sign() == 0 ? 0 : d;
  return r;
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
  if (o.sign() == 0) throw std::domain_error("exact scalar division by zero");
  std::int64_t d = common_radicand(*this, o);
  if (o.d_ == 0) {
    ExactScalar r;
    r.rat_ = rat_ / o.rat_;
    r.quad_ = quad_ / o.rat_;
    r.d_ = r.quad_.sign() == 0 ? 0 : d;
    return r;
  }
  // Multiply by the conjugate; the norm r^2 - s^2 d is rational and nonzero.
  ExactScalar conj;
  conj.rat_ = o.rat_;
  conj.quad_ = -o.quad_;
  conj.d_ = o.d_;
  Rational norm = o.rat_ * o.rat_ - o.quad_ * o.quad_ * Rational(d);
  return (*this * conj) / ExactScalar(norm);
}

Int ExactScalar::floor() const {
  if (d_ == 0) return rat_.floor();
  // value = (A + B*sqrt(d)) / C with C > 0.
  Int A = rat_.num() * quad_.den();
  Int B = quad_.num() * rat_.den();
  Int C = rat_.den() * quad_.den();
  Int b2d = B * B * d_;
  Int t;
  if (B >= 0) {
    t = isqrt(b2d);  // floor(B*sqrt(d))
  } else {
    Int s = isqrt(b2d);
    t = -(s + (s * s == b2d ? 0 : 1));  // floor(-x) = -ceil(x)
  }
  return floor_div(A + t, C);
}

std::string ExactScalar::decimal(unsigned digits) const {
  Int pow10 = boost::multiprecision::pow(Int(10), digits);
  ExactScalar mag = abs();
  Int scaled = (mag * ExactScalar(Rational(pow10))).floor();
  Int int_part = scaled / pow10;
  Int frac = scaled % pow10;
  std::string f = frac.str();
  if (f.size() < digits) f.insert(f.begin(), digits - f.size(), '0');
  std::string out;
  if (sign() < 0) out += "-";
  out += int_part.str();
  if (digits > 0) out += "." + f;
  return out;
}

std::string ExactScalar::to_string() const {
  if (d_ == 0) return rat_.to_string();
  std::string quad;
  Rational qa = quad_.abs();
  if (qa == Rational(1)) {
    quad = "sqrt(" + std::to_string(d_) + ")";
  } else {
    quad = qa.to_string() + "*sqrt(" + std::to_string(d_) + ")";
  }
  if (rat_.sign() == 0) {
    return (quad_.sign() < 0 ? "-" : "") + quad;
  }
  return rat_.to_string() + (quad_.sign() < 0 ? "-" : "+") + quad;
}

double ExactScalar::approx() const {
  auto rat_double = [](const Rational& r) {
    return r.num().convert_to<double>() / r.den().convert_to<double>();
  };
  double v = rat_double(rat_);
  if (d_ != 0) v += rat_double(quad_) * std::sqrt(static_cast<double>(d_));
  return v;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  ExactScalar parse() {
    bool neg = eat('-');
    ExactScalar value = primary(neg);
    while (!done()) {
      char c = text_[pos_];
      if (c != '+' && c != '-') throw ParseError("unexpected character", pos_);
      ++pos_;
      value += quadterm(c == '-');
    }
    return value;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  bool eat(char c) {
    if (!done() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts_with(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
  }

  Int uint_token() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected digits", start);
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rat_token() {
    Int num = uint_token();
    if (eat('/')) {
      std::size_t dpos = pos_;
      Int den = uint_token();
      if (den == 0) throw ParseError("zero denominator", dpos);
      return Rational(num, den);
    }
    return Rational(num);
  }

  ExactScalar sqrt_token(const Rational& coeff, bool neg) {
    // at "sqrt("
    pos_ += 5;
    std::size_t rad_pos = pos_;
    Int rad = uint_token();
    if (!eat(')')) throw ParseError("expected ')'", pos_);
    if (rad > Int(std::numeric_limits<std::int64_t>::max()) ||
        !is_square_free(rad.convert_to<std::int64_t>())) {
      throw ParseError("radicand must be square-free and > 1", rad_pos);
    }
    Rational c = neg ? -coeff : coeff;
    return ExactScalar(Rational(), c, rad.convert_to<std::int64_t>());
  }

  ExactScalar quadterm(bool neg) {
    if (starts_with("sqrt(")) return sqrt_token(Rational(1), neg);
    Rational coeff = rat_token();
    if (!eat('*')) throw ParseError("expected '*sqrt(...)'", pos_);
    if (!starts_with("sqrt(")) throw ParseError("expected 'sqrt('", pos_);
    return sqrt_token(coeff, neg);
  }

  ExactScalar primary(bool neg) {
    if (starts_with("sqrt(")) return sqrt_token(Rational(1), neg);
    Rational r = rat_token();
    if (eat('*')) {
      if (!starts_with("sqrt(")) throw ParseError("expected 'sqrt('", pos_);
      return sqrt_token(r, neg);
    }
    return ExactScalar(neg ? -r : r);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactScalar parse_exact_scalar(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar", 0);
  return ScalarParser(text).parse();
}

std::string Level::to_string() const {
  switch (kind_) {
    case Kind::Bottom: return "-inf";
    case Kind::Top: return "+inf";
    default: return value_.to_string();
  }
}

}  // namespace reebspec
