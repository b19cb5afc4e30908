#ifndef MCKAY_IO_HPP
#define MCKAY_IO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mckay/catalog.hpp"
#include "mckay/cyclotomic.hpp"
#include "mckay/epoly.hpp"
#include "mckay/error.hpp"
#include "mckay/group.hpp"
#include "mckay/rational.hpp"
#include "mckay/series.hpp"

namespace mckay {

using json = nlohmann::json;

namespace detail {

inline Rational coeff_from_json(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(static_cast<long>(value.get<long long>()));
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const precondition_error& e) {
      throw precondition_error(where + ": " + e.what());
    }
  }
  throw precondition_error(where + ": coefficients must be integers or \"p/q\" strings");
}

inline Cyclotomic entry_from_json(const json& value, long order, const std::string& where) {
  std::vector<Rational> coeffs;
  if (value.is_array()) {
    if (value.size() > static_cast<std::size_t>(order))
      throw precondition_error(where + ": entry has more than cyclotomic_order coefficients");
    for (const auto& c : value) coeffs.push_back(coeff_from_json(c, where));
  } else {
    coeffs.push_back(coeff_from_json(value, where));
  }
  return Cyclotomic::make(order, std::move(coeffs));
}

}  // namespace detail

/// Group description document:
///   { "cyclotomic_order": M, "size": d,
///     "generators": [ d x d arrays of entries ], "cap": optional }
/// Each matrix entry is a list of up to M coefficients (integers or "p/q"
/// strings) meaning sum_j c_j zeta_M^j; a bare number or string is the
/// constant coefficient.
inline MatrixGroup parse_group_spec(const json& doc, std::size_t default_cap = 10000,
                                    std::optional<std::size_t> cap_override = std::nullopt) {
  if (!doc.is_object()) throw precondition_error("group spec must be a JSON object");
  if (!doc.contains("cyclotomic_order") || !doc["cyclotomic_order"].is_number_integer())
    throw precondition_error("group spec needs an integer 'cyclotomic_order'");
  if (!doc.contains("size") || !doc["size"].is_number_integer())
    throw precondition_error("group spec needs an integer 'size'");
  const long order = doc["cyclotomic_order"].get<long>();
  const long size = doc["size"].get<long>();
  if (order < 1) throw precondition_error("cyclotomic_order must be >= 1");
  if (size < 1) throw precondition_error("size must be >= 1");

  std::size_t cap = default_cap;
  if (doc.contains("cap")) {
    if (!doc["cap"].is_number_integer() || doc["cap"].get<long>() < 1)
      throw precondition_error("cap must be a positive integer");
    cap = doc["cap"].get<std::size_t>();
  }
  if (cap_override) cap = *cap_override;

  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw precondition_error("group spec needs a 'generators' array");
  std::vector<Matrix> generators;
  for (std::size_t g = 0; g < doc["generators"].size(); ++g) {
    const std::string where = "generator " + std::to_string(g);
    const json& rows = doc["generators"][g];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(size))
      throw precondition_error(where + ": expected " + std::to_string(size) + " rows");
    Matrix m(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].is_array() || rows[i].size() != static_cast<std::size_t>(size))
        throw precondition_error(where + ": row " + std::to_string(i) + " must have " +
                                 std::to_string(size) + " entries");
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        m.at(i, j) = detail::entry_from_json(rows[i][j], order, where);
    }
    generators.push_back(std::move(m));
  }
  if (generators.empty()) return MatrixGroup::trivial(static_cast<std::size_t>(size), order);
  return MatrixGroup::closure(generators, ClosureOptions{cap, static_cast<std::size_t>(size)});
}

/// Canonical JSON form of an E-polynomial: a list of {p, q, coeff} triples
/// in lexicographic (p, q) order, coefficients as decimal strings.
inline json epoly_to_json(const EPoly& e) {
  json terms = json::array();
  for (const auto& [exps, coeff] : e.terms())
    terms.push_back({{"p", exps.first}, {"q", exps.second}, {"coeff", to_string(coeff)}});
  return terms;
}

inline EPoly epoly_from_json(const json& terms) {
  if (!terms.is_array()) throw precondition_error("polynomial JSON must be an array of terms");
  EPoly e;
  for (const auto& term : terms) {
    if (!term.contains("p") || !term.contains("q") || !term.contains("coeff"))
      throw precondition_error("polynomial term needs fields p, q, coeff");
    const Rational c = detail::coeff_from_json(term["coeff"], "polynomial term");
    if (!is_integer(c)) throw precondition_error("polynomial coefficients must be integers");
    e += EPoly::term(term["p"].get<long>(), term["q"].get<long>(), c.get_num());
  }
  return e;
}

/// TPoly as a dense ascending list of decimal coefficient strings.
inline json tpoly_to_json(const TPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return coeffs;
}

}  // namespace mckay

#endif  // MCKAY_IO_HPP
