#include "rcoh/serialize.hpp"

#include <set>

namespace rcoh {
namespace {

Vector residues_from_json(Residue p, const Json& j, std::size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected)
    throw std::invalid_argument(std::string(what) + " must be an array of " + std::to_string(expected) + " residues");
  const PrimeField f(p);
  Vector v;
  for (const auto& x : j) v.push_back(f.reduce(x.get<std::int64_t>()));
  return v;
}

}  // namespace

RestrictedAlgebra AlgebraDocument::restricted() const {
  if (!pmap) throw std::logic_error("algebra has no p-map");
  return RestrictedAlgebra(algebra, *pmap, lambda);
}

AlgebraDocument document_for(const RestrictedAlgebra& r) {
  return {r.algebra(), r.lambda(), r.pmap(), std::nullopt};
}

AlgebraDocument document_for(const ExtensionResult& ext, const Json& base_description) {
  Json prov = base_description;
  prov["cocycle"] = ext.source_cocycle;
  prov["central_index"] = ext.central_index() + 1;
  prov["restricted"] = ext.pmap.has_value();
  return {ext.algebra, std::nullopt, ext.pmap, prov};
}

Json to_json(const AlgebraDocument& doc) {
  const auto& a = doc.algebra;
  Json j;
  j["prime"] = a.prime();
  j["dim"] = a.dim();
  j["weights"] = a.weights();
  j["labels"] = a.labels();
  Json brackets = Json::array();
  for (const auto& [key, coeffs] : a.brackets())
    brackets.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"coeffs", coeffs}});
  j["brackets"] = brackets;
  if (doc.lambda) j["lambda"] = *doc.lambda;
  if (doc.pmap) j["p_powers"] = doc.pmap->basis_p_powers;
  if (doc.extension_of) j["extension_of"] = *doc.extension_of;
  return j;
}

AlgebraDocument algebra_from_json(const Json& j) {
  try {
    const auto p = j.at("prime").get<std::int64_t>();
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument(std::to_string(p) + " is not prime");
    const auto prime = static_cast<Residue>(p);
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<int> weights = j.contains("weights") ? j.at("weights").get<std::vector<int>>() : std::vector<int>{};
    std::vector<std::string> labels =
        j.contains("labels") ? j.at("labels").get<std::vector<std::string>>() : std::vector<std::string>{};
    std::map<LieAlgebra::Pair, Vector> brackets;
    for (const auto& b : j.at("brackets")) {
      const auto i = b.at("i").get<std::int64_t>(), jj = b.at("j").get<std::int64_t>();
      if (i < 1 || jj < 1) throw std::invalid_argument("bracket indices are 1-based");
      const LieAlgebra::Pair key{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1)};
      if (brackets.count(key)) throw std::invalid_argument("duplicate bracket entry");
      brackets.emplace(key, residues_from_json(prime, b.at("coeffs"), dim, "coeffs"));
    }
    AlgebraDocument doc{LieAlgebra(prime, dim, std::move(brackets), std::move(weights), std::move(labels)),
                        std::nullopt, std::nullopt, std::nullopt};
    if (j.contains("lambda")) doc.lambda = residues_from_json(prime, j.at("lambda"), dim, "lambda");
    if (j.contains("p_powers")) {
      const auto& rows = j.at("p_powers");
      if (!rows.is_array() || rows.size() != dim) throw std::invalid_argument("p_powers must have one row per basis element");
      RestrictedStructure pmap;
      for (const auto& row : rows) pmap.basis_p_powers.push_back(residues_from_json(prime, row, dim, "p_powers row"));
      doc.pmap = std::move(pmap);
    } else if (doc.lambda) {
      doc.pmap = make_m0_lambda(prime, *doc.lambda).pmap();
    }
    if (doc.lambda && !(doc.algebra == make_m0(prime))) throw std::invalid_argument("lambda given for an algebra other than m_0(p)");
    if (j.contains("extension_of")) doc.extension_of = j.at("extension_of");
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed algebra JSON: ") + e.what());
  }
}

Json to_json(const RestrictedTwoCochain& c) {
  return {{"phi", to_json(c.phi)}, {"omega", c.omega_basis}};
}

RestrictedTwoCochain restricted_from_json(Residue p, std::size_t dim, const Json& j) {
  return {cochain_from_json<2>(p, dim, j.at("phi")), residues_from_json(p, j.at("omega"), dim, "omega")};
}

Json to_json(const CohomologySummary& s) {
  Json j;
  j["prime"] = s.prime;
  j["lambda"] = s.lambda;
  j["degree"] = s.degree;
  j["restricted"] = s.restricted;
  j["dim"] = s.dimension;
  j["kernel_dim"] = s.kernel_dim;
  j["image_dim"] = s.image_dim;
  j["representatives"] = s.labels;
  return j;
}

}  // namespace rcoh
