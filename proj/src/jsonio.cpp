#include "reebspec/jsonio.hpp"

#include <limits>

namespace reebspec {

Json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

Int int_from_json(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  throw std::invalid_argument("expected integer or decimal string in JSON");
}

namespace {

Json scalar_fields(const ExactScalar& x, const char* sp_key, const char* sq_key) {
  Json j;
  j["p"] = int_to_json(x.rational_part().num());
  j["q"] = int_to_json(x.rational_part().den());
  j[sp_key] = int_to_json(x.quad_part().num());
  j[sq_key] = int_to_json(x.quad_part().den());
  j["d"] = x.radicand();
  return j;
}

ExactScalar scalar_read(const Json& j, const char* sp_key, const char* sq_key) {
  Rational rat(int_from_json(j.at("p")), int_from_json(j.at("q")));
  Rational quad(int_from_json(j.at(sp_key)), int_from_json(j.at(sq_key)));
  std::int64_t d = j.at("d").get<std::int64_t>();
  if (quad.sign() == 0) return ExactScalar(rat);
  return ExactScalar(rat, quad, d);
}

}  // namespace

Json scalar_to_json_short(const ExactScalar& x) { return scalar_fields(x, "sp", "sq"); }

ExactScalar scalar_from_json_short(const Json& j) { return scalar_read(j, "sp", "sq"); }

Json scalar_to_json_long(const ExactScalar& x) {
  return scalar_fields(x, "sqrt_coeff_p", "sqrt_coeff_q");
}

ExactScalar scalar_from_json_long(const Json& j) {
  return scalar_read(j, "sqrt_coeff_p", "sqrt_coeff_q");
}

Json scalar_to_json_with_decimal(const ExactScalar& x) {
  Json j = scalar_to_json_short(x);
  j["dec"] = x.decimal(12);
  return j;
}

}  // namespace reebspec
