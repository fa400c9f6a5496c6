#pragma once

// Coefficient fields for the filtered calculus: the rationals (reebspec::Rational)
// and the two-element field F2.  Generic code relies only on F(0), F(1), the
// four arithmetic operators, unary minus, operator== and is_zero().

#include "reebspec/exact.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace reebspec {

struct F2 {
  std::uint8_t v = 0;
  F2() = default;
  F2(long long n) : v(static_cast<std::uint8_t>(((n % 2) + 2) % 2)) {}  // NOLINT

  F2 operator-() const { return *this; }
  F2 operator+(F2 o) const { return F2(v ^ o.v); }
  F2 operator-(F2 o) const { return F2(v ^ o.v); }
  F2 operator*(F2 o) const { return F2(v & o.v); }
  F2 operator/(F2 o) const {
    if (o.v == 0) throw std::domain_error("F2 division by zero");
    return *this;
  }
  bool operator==(F2 o) const { return v == o.v; }
  bool operator!=(F2 o) const { return v != o.v; }
};

inline bool is_zero(F2 x) { return x.v == 0; }

template <class F>
struct FieldInfo;

template <>
struct FieldInfo<Rational> {
  static constexpr const char* name = "Q";
  static std::string to_string(const Rational& x) { return x.to_string(); }
  static Rational from_string(std::string_view s) { return Rational::from_string(s); }
};

template <>
struct FieldInfo<F2> {
  static constexpr const char* name = "F2";
  static std::string to_string(F2 x) { return x.v ? "1" : "0"; }
  static F2 from_string(std::string_view s) {
    if (s == "0") return F2(0);
    if (s == "1") return F2(1);
    throw std::invalid_argument("F2 coefficient must be \"0\" or \"1\", got \"" +
                                std::string(s) + "\"");
  }
};

}  // namespace reebspec
