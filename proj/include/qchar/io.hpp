#pragma once

#include <string>

#include "json.hpp"
#include "qchar/minaff.hpp"
#include "qchar/tableaux.hpp"
#include "qchar/tsystem.hpp"

namespace qchar::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json cartan_to_json(const CartanData& cd);
/// Accepts a name string ("B3") or {"matrix": [[..]], "symmetrizers": [..]}.
/// Objects carrying a "name" of a built-in type rebuild that type.
CartanData cartan_from_json(const json& j);

json diagnostics_to_json(const FmDiagnostics& d);
FmDiagnostics diagnostics_from_json(const json& j);

/// Envelope {schema_version, cartan, head, terms, diagnostics}; terms in
/// graded order (grade, then monomial).
json character_to_json(const CartanData& cd, const QCharacter& chi);
/// Inverse of character_to_json; throws on a schema_version mismatch.
QCharacter character_from_json(const json& j);

/// One "monomial  mult" line per term, graded order.
std::string character_text(const CartanData& cd, const QCharacter& chi);

json property_to_json(const PropertyResult& p);
json report_to_json(const CartanData& cd, const PropertyReport& rep);

ProductIdentity identity_from_json(const json& j);
SkewShape shape_from_json(const json& j);

}  // namespace qchar::io
