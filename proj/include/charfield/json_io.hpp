// JSON encodings of cyclotomic values and abelian fields.
//
//   cyclotomic: 3 | [num, den] | {"n": modulus, "coeffs": [[num, den], ...]}
//   field:      {"n": modulus, "stabilizer": [residues]}
#pragma once

#include "charfield/cyclotomic.hpp"
#include "charfield/expression.hpp"
#include "charfield/numfield.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace charfield {

using Json = nlohmann::json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Json integer_to_json(const Integer& v) {
  if (!v.fits_slong_p()) return v.get_str();
  return static_cast<std::int64_t>(v.get_si());
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw SchemaError("expected an integer, got " + j.dump());
}

inline Json rational_pair(const Rational& r) { return Json::array({integer_to_json(r.get_num()), integer_to_json(r.get_den())}); }

inline Rational rational_from_pair(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw SchemaError("expected [num, den], got " + j.dump());
  const Integer den = integer_from_json(j[1]);
  if (den <= 0) throw SchemaError("rational denominator must be positive: " + j.dump());
  return make_rational(integer_from_json(j[0]), den);
}

}  // namespace detail

inline Json cyclotomic_to_json(const Cyclotomic& z) {
  if (z.is_integer()) return detail::integer_to_json(z.rational_value().get_num());
  if (z.is_rational()) return detail::rational_pair(z.rational_value());
  Json coeffs = Json::array();
  for (const auto& c : z.coefficients()) coeffs.push_back(detail::rational_pair(c));
  return Json{{"n", z.modulus()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_number_integer()) return Cyclotomic(Rational(detail::integer_from_json(j)));
  if (j.is_string()) return parse_expression(j.get<std::string>());
  if (j.is_array()) return Cyclotomic(detail::rational_from_pair(j));
  if (j.is_object()) {
    if (!j.contains("n") || !j.contains("coeffs")) throw SchemaError("cyclotomic object needs \"n\" and \"coeffs\"");
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 1 || n % 4 == 2) throw SchemaError("cyclotomic modulus must be positive and not 2 mod 4: " + std::to_string(n));
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(detail::rational_from_pair(c));
    if (static_cast<std::int64_t>(coeffs.size()) != euler_phi(n))
      throw SchemaError("cyclotomic with modulus " + std::to_string(n) + " needs phi(n) coefficients");
    return Cyclotomic::from_coefficients(n, std::move(coeffs));
  }
  throw SchemaError("not a cyclotomic value: " + j.dump());
}

inline Json field_to_json(const AbelianField& f) { return Json{{"n", f.modulus()}, {"stabilizer", f.stabilizer()}}; }

inline AbelianField field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("stabilizer")) throw SchemaError("field needs \"n\" and \"stabilizer\"");
  try {
    return AbelianField::from_stabilizer(j.at("n").get<std::int64_t>(), j.at("stabilizer").get<std::vector<std::int64_t>>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace charfield
