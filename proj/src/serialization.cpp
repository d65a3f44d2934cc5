#include "jetfields/serialization.hpp"

#include "jetfields/errors.hpp"

#include <string>
#include <utility>
#include <vector>

namespace jetfields {

using nlohmann::json;

Coefficient coefficient_from_strings(const std::string& num, const std::string& den) {
  mpz_class p, q;
  if (p.set_str(num, 10) != 0) throw DomainError("malformed numerator '" + num + "'");
  if (q.set_str(den, 10) != 0) throw DomainError("malformed denominator '" + den + "'");
  if (sgn(q) == 0) throw DomainError("zero denominator");
  Coefficient c(p, q);
  c.canonicalize();
  return c;
}

json to_json(const Jet& f) {
  json terms = json::array();
  for (const auto& t : f.terms())
    terms.push_back({{"exp", f.exponents(t)},
                     {"num", t.coef.get_num().get_str()},
                     {"den", t.coef.get_den().get_str()}});
  return {{"n", f.variables()}, {"order", f.order()}, {"terms", std::move(terms)}};
}

json to_json(const FormalMap& s) {
  json images = json::array();
  for (const auto& img : s.images()) images.push_back(to_json(img));
  return {{"n", s.variables()}, {"order", s.order()}, {"images", std::move(images)}};
}

json to_json(const Derivation& d) {
  json coeffs = json::array();
  for (const auto& a : d.coefficients()) coeffs.push_back(to_json(a));
  return {{"n", d.variables()}, {"order", d.order()}, {"coefficients", std::move(coeffs)}};
}

namespace {

template <typename T>
T field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw DomainError(std::string("key '") + key + "' has the wrong type");
  }
}

} // namespace

Jet jet_from_json(const json& j) {
  const auto n = field_of<std::size_t>(j, "n");
  const auto order = field_of<int>(j, "order");
  if (n == 0) throw DimensionError("jet needs n >= 1");
  if (order < 0) throw PrecisionError("jet order must be non-negative");
  std::vector<std::pair<MultiIndex, Coefficient>> terms;
  for (const auto& t : field_of<json>(j, "terms")) {
    auto e = field_of<MultiIndex>(t, "exp");
    if (e.size() != n) throw DimensionError("exponent vector length does not match n");
    terms.emplace_back(std::move(e),
                       coefficient_from_strings(field_of<std::string>(t, "num"), field_of<std::string>(t, "den")));
  }
  return Jet::from_terms(n, order, terms);
}

namespace {

std::vector<Jet> jets_from_json(const json& j, const char* key) {
  const auto n = field_of<std::size_t>(j, "n");
  const auto order = field_of<int>(j, "order");
  std::vector<Jet> out;
  for (const auto& item : field_of<json>(j, key)) {
    Jet f = jet_from_json(item);
    if (f.variables() != n || f.order() != order)
      throw DimensionError(std::string("entry of '") + key + "' disagrees with the declared n/order");
    out.push_back(std::move(f));
  }
  if (out.size() != n) throw DimensionError(std::string("'") + key + "' must have n entries");
  return out;
}

} // namespace

FormalMap map_from_json(const json& j) { return FormalMap(jets_from_json(j, "images")); }

Derivation field_from_json(const json& j) { return Derivation(jets_from_json(j, "coefficients")); }

} // namespace jetfields
