#pragma once

#include <string>

#include "json.hpp"
#include "mckay/an_characters.hpp"
#include "mckay/sn_characters.hpp"

namespace mckay {

using Json = nlohmann::json;

// Bumped whenever the table layout or a labelling convention changes; older
// cache files are then rebuilt.
inline constexpr int kTableFormatVersion = 1;

// Documents carry "format", "version", the table body with every integer as a
// decimal string, and "content_hash", the SHA-256 of the canonical dump of
// the document without that field.
Json sn_table_to_json(const SnTable& table);
Json an_table_to_json(const AnTable& table);

// Throw IoError on format, version, hash or shape problems. Values are not
// re-validated here; callers run validate_* when they want that.
SnTable sn_table_from_json(const Json& doc);
AnTable an_table_from_json(const Json& doc);

Json quad_to_json(const QuadValue& x);
QuadValue quad_from_json(const Json& j);

// Canonical text: sorted keys, no whitespace, trailing newline.
std::string canonical_dump(const Json& doc);

}  // namespace mckay
