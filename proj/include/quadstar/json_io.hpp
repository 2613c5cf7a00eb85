#pragma once

// JSON encodings. Mathematical integers are decimal strings so that big
// values survive any JSON reader; counts are plain numbers.

#include "quadstar/classifier.hpp"
#include "quadstar/families.hpp"
#include "quadstar/numbertheory.hpp"
#include "quadstar/search.hpp"

#include <json.hpp>

namespace quadstar {

using Json = nlohmann::ordered_json;

/// Ascending coefficients as decimal strings.
Json to_json(const IntPoly& p);
/// Accepts decimal strings or JSON integers. Throws InvalidParams.
IntPoly poly_from_json(const Json& j);

/// [{"coeffs": [...], "multiplicity": k}, ...]
Json to_json(const FactoredPoly& f);
FactoredPoly factored_from_json(const Json& j);

Json to_json(const QuadraticCertificate& c);
Json to_json(const SpectralClass& c);
Json to_json(const FamilyInstance& f);
Json to_json(const PellSolution& s);
Json to_json(const CertificationReport& r);

Json spec_json(const StarlikeSpec& s);

}  // namespace quadstar
