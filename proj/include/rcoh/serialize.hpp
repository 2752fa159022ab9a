#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rcoh/cohomology.hpp"
#include "rcoh/extension.hpp"

namespace rcoh {

using Json = nlohmann::ordered_json;

/// Contents of an algebra description file.
///
///   { "prime": p, "dim": n, "weights": [...], "labels": [...],
///     "brackets": [ {"i": 1, "j": 2, "coeffs": [...]}, ... ],
///     "lambda": [...],            // m_0^lambda(p) only
///     "p_powers": [[...], ...],   // general [p]-operator, one row per basis element
///     "extension_of": {...} }     // provenance for extensions
///
/// Indices i < j are 1-based; coeffs has length dim.
struct AlgebraDocument {
  LieAlgebra algebra;
  std::optional<Vector> lambda;
  std::optional<RestrictedStructure> pmap;
  std::optional<Json> extension_of;

  /// Throws std::logic_error when no p-map is present.
  RestrictedAlgebra restricted() const;
  bool operator==(const AlgebraDocument&) const = default;
};

AlgebraDocument document_for(const RestrictedAlgebra& r);
AlgebraDocument document_for(const ExtensionResult& ext, const Json& base_description);

Json to_json(const AlgebraDocument& doc);
/// Throws std::invalid_argument on schema violations.
AlgebraDocument algebra_from_json(const Json& j);

/// [{"indices": [1-based...], "coefficient": c}, ...], nonzero terms only.
template <std::size_t Degree>
Json to_json(const Cochain<Degree>& c) {
  Json out = Json::array();
  const auto b = c.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!c.coeffs()[i]) continue;
    Json idx = Json::array();
    for (auto k : b.tuple(i)) idx.push_back(k + 1);
    out.push_back({{"indices", idx}, {"coefficient", c.coeffs()[i]}});
  }
  return out;
}

template <std::size_t Degree>
Cochain<Degree> cochain_from_json(Residue p, std::size_t dim, const Json& j) {
  Cochain<Degree> c(p, dim);
  if (!j.is_array()) throw std::invalid_argument("cochain JSON must be an array");
  for (const auto& term : j) {
    const auto& idx = term.at("indices");
    if (idx.size() != Degree) throw std::invalid_argument("cochain term has wrong degree");
    typename Cochain<Degree>::Index key{};
    for (std::size_t i = 0; i < Degree; ++i) {
      const auto one_based = idx[i].get<std::int64_t>();
      if (one_based < 1 || static_cast<std::size_t>(one_based) > dim) throw std::invalid_argument("cochain index out of range");
      key[i] = static_cast<std::size_t>(one_based - 1);
    }
    c.add(key, PrimeField(p).reduce(term.at("coefficient").get<std::int64_t>()));
  }
  return c;
}

/// {"phi": <cochain>, "omega": [n residues]}
Json to_json(const RestrictedTwoCochain& c);
RestrictedTwoCochain restricted_from_json(Residue p, std::size_t dim, const Json& j);

/// {prime, lambda, degree, restricted, dim, kernel_dim, image_dim, representatives}
Json to_json(const CohomologySummary& s);

}  // namespace rcoh
