#ifndef LIEFAM_JSON_IO_HPP
#define LIEFAM_JSON_IO_HPP

#include "liefam/family.hpp"
#include "liefam/lie_algebra.hpp"
#include "liefam/symmetric.hpp"

#include "json.hpp"

#include <string>

namespace liefam {

/// Malformed input; carries a field path for diagnostics.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// "lie-algebra/v1": {"dim", "field", "basis", "sc": [{"i","j","k","c"}]},
// 1-based indices, i < j required on write; read accepts any indices so that
// validate() can diagnose bad tables.
nlohmann::json lie_algebra_to_json(const LieAlgebra& g);
LieAlgebra lie_algebra_from_json(const nlohmann::json& j);

// "involution/v1": {"algebra": <lie-algebra/v1>, "matrix": [[scalar,...],...]}.
nlohmann::json involution_to_json(const Involution& inv);
Involution involution_from_json(const nlohmann::json& j);

// "family/v1": {"rank","basis","sc":[{"i","j","k","c":[coeffs ascending]}],
// "involution": "coefficient-conjugation" | null, "real": bool}.
nlohmann::json family_to_json(const Family& fam);
Family family_from_json(const nlohmann::json& j);

nlohmann::json fingerprint_to_json(const Fingerprint& fp);
nlohmann::json validation_report_to_json(const ValidationReport& rep);

std::string dump_canonical(const nlohmann::json& j);

}  // namespace liefam

#endif
