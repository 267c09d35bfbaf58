#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "posrep/conditions.hpp"
#include "posrep/families.hpp"
#include "posrep/filters.hpp"
#include "posrep/poset.hpp"
#include "posrep/representation.hpp"
#include "posrep/search.hpp"

namespace posrep {

using Json = nlohmann::json;

struct ParsedPoset {
  Poset poset;
  BuildMode mode = BuildMode::Covers;
  /// Strict pairs added by closing the input relation (order mode input that was not transitive).
  std::size_t closure_added = 0;
};

/// Reads {"elements": [...], "covers": [[a,b],...]} or {"elements": [...], "order": [[a,b],...]}.
/// Malformed JSON and schema problems throw SchemaError; the message carries the
/// byte offset or the JSON pointer of the offending value.
ParsedPoset parse_poset(std::string_view text);
ParsedPoset poset_from_json(const Json& j);

/// Shared poset schema in covers form.
Json to_json(const Poset& p);

Json arity_json(Arity a);
Json signature_json(Signature s);
Json element_set_json(const Poset& p, ElementSet s);

/// {"ground": [...], "map": {label: [points...]}, "alpha": ..., "beta": ...}
Json to_json(const Poset& p, const Representation& h);
Representation representation_from_json(const Poset& p, const Json& j);

Json to_json(const Poset& p, const FilterViolation& v);
Json to_json(const Poset& p, const SeparationReport& r);
Json to_json(const SpectrumReport& r);
Json to_json(const Poset& p, const RepresentationViolation& v);
Json to_json(const Poset& p, const ConditionReport& r);
Json to_json(const Poset& p, const LatticeProfile& r);
Json to_json(const Poset& p, const CompleteRepresentability& r);
Json to_json(const Poset& p, const Envelope& e);
Json to_json(const Claim& c);

/// Sorted keys, two-space indent, trailing newline.
std::string emit_json(const Json& j);
/// Human summary: one "path: value" line per scalar.
std::string emit_text(const Json& j);

}  // namespace posrep
