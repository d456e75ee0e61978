#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schub/errors.hpp"
#include "schub/monomial.hpp"
#include "schub/permutation.hpp"
#include "schub/pipedream.hpp"
#include "schub/polynomial.hpp"
#include "schub/schubert.hpp"
#include "schub/witness.hpp"

namespace schub {

using Json = nlohmann::json;

// Polynomials travel as a list of terms, coefficients as decimal strings so
// no consumer has to guess an integer width:
//   [ {"exponents": [2, 1], "coeff": "3"}, ... ]
inline Json polynomial_to_json(const SparsePolynomial& p) {
  Json arr = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json term;
    term["exponents"] = m.exponents();
    term["coeff"] = to_decimal(c);
    arr.push_back(std::move(term));
  }
  return arr;
}

namespace detail {

inline Integer integer_from_json(const Json& j, const char* what) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  throw parse_error(std::string(what) + " must be a decimal string or integer");
}

inline std::vector<int> int_vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const Json& v : j) {
    if (!v.is_number_integer() && !v.is_number_unsigned())
      throw parse_error(std::string(what) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace detail

inline SparsePolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("polynomial must be an array of terms");
  SparsePolynomial p;
  for (const Json& term : j) {
    if (!term.is_object() || !term.contains("exponents") || !term.contains("coeff"))
      throw parse_error("polynomial term needs \"exponents\" and \"coeff\"");
    std::vector<int> exps = detail::int_vector_from_json(term["exponents"], "exponents");
    for (int e : exps)
      if (e < 0) throw parse_error("exponents must be nonnegative");
    p.add_term(Monomial(std::move(exps)), detail::integer_from_json(term["coeff"], "coeff"));
  }
  return p;
}

// {"ambient_rank": N, "terms": [{"w": [..], "coeff": ".."}, ...], "signed": b}
// with terms sorted by one-line notation.
inline Json expansion_to_json(const SchubertExpansion& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms) {
    Json t;
    t["w"] = w.trimmed_window();
    t["coeff"] = to_decimal(c);
    terms.push_back(std::move(t));
  }
  Json out;
  out["ambient_rank"] = e.ambient_rank;
  out["terms"] = std::move(terms);
  out["signed"] = e.is_signed;
  return out;
}

inline SchubertExpansion expansion_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient_rank") || !j.contains("terms") ||
      !j.contains("signed"))
    throw parse_error("expansion needs \"ambient_rank\", \"terms\" and \"signed\"");
  SchubertExpansion e;
  if (!j["ambient_rank"].is_number_integer() && !j["ambient_rank"].is_number_unsigned())
    throw parse_error("ambient_rank must be an integer");
  e.ambient_rank = j["ambient_rank"].get<int>();
  if (!j["signed"].is_boolean()) throw parse_error("signed must be a boolean");
  e.is_signed = j["signed"].get<bool>();
  if (!j["terms"].is_array()) throw parse_error("terms must be an array");
  for (const Json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("w") || !t.contains("coeff"))
      throw parse_error("expansion term needs \"w\" and \"coeff\"");
    try {
      Permutation w(detail::int_vector_from_json(t["w"], "w"));
      e.terms[w] = detail::integer_from_json(t["coeff"], "coeff");
    } catch (const invalid_input_error& err) {
      throw parse_error(std::string("invalid expansion term: ") + err.what());
    }
  }
  return e;
}

// {"num_vars": s, "polynomials": [<polynomial>, ...]}
inline Json system_to_json(const PolySystem& sys) {
  Json out;
  out["num_vars"] = sys.num_vars;
  Json polys = Json::array();
  for (const SparsePolynomial& f : sys.polynomials) polys.push_back(polynomial_to_json(f));
  out["polynomials"] = std::move(polys);
  return out;
}

inline PolySystem system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num_vars") || !j.contains("polynomials"))
    throw parse_error("system needs \"num_vars\" and \"polynomials\"");
  if (!j["num_vars"].is_number_integer() && !j["num_vars"].is_number_unsigned())
    throw parse_error("num_vars must be an integer");
  if (!j["polynomials"].is_array())
    throw parse_error("polynomials must be an array");
  std::vector<SparsePolynomial> polys;
  for (const Json& f : j["polynomials"]) polys.push_back(polynomial_from_json(f));
  try {
    return PolySystem(j["num_vars"].get<int>(), std::move(polys));
  } catch (const invalid_input_error& e) {
    throw parse_error(std::string("invalid system: ") + e.what());
  }
}

// {"prime": p, "point": [r_1, ..., r_s]}
inline Json witness_to_json(const ModPWitness& cert) {
  Json out;
  out["prime"] = cert.prime;
  out["point"] = cert.point;
  return out;
}

inline ModPWitness witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("prime") || !j.contains("point"))
    throw parse_error("certificate needs \"prime\" and \"point\"");
  ModPWitness cert;
  Integer prime = detail::integer_from_json(j["prime"], "prime");
  if (prime < 2 || prime > UINT64_MAX)
    throw parse_error("prime out of range");
  cert.prime = prime.convert_to<std::uint64_t>();
  if (!j["point"].is_array()) throw parse_error("point must be an array");
  for (const Json& v : j["point"]) {
    Integer r = detail::integer_from_json(v, "point entry");
    if (r < 0 || r > UINT64_MAX) throw parse_error("point entry out of range");
    cert.point.push_back(r.convert_to<std::uint64_t>());
  }
  return cert;
}

inline Json pipe_dream_to_json(const PipeDream& d) {
  Json out;
  out["n"] = d.n;
  Json crossings = Json::array();
  for (const auto& [i, j] : d.crossings) crossings.push_back(Json::array({i, j}));
  out["crossings"] = std::move(crossings);
  out["weight"] = d.weight().exponents();
  return out;
}

}  // namespace schub
