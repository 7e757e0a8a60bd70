#pragma once

#include <string>

#include "json.hpp"
#include "ko/lsa.hpp"

namespace ko {

using Json = nlohmann::ordered_json;

/// Structure constants as a JSON document with fields "p", "labels", "basis",
/// "parity", "degree", "sc" and "pmap".  Each basis entry is a list of
/// [multi-index, coefficient] terms; sc holds [i, j, k, value] for every
/// nonzero coefficient; pmap holds [i, [[k, value], ...]].
Json export_lsa(const LSA& g);
/// Inverse of export_lsa.  Throws Error on malformed input or when the
/// structure constants break degree or parity additivity.
LSA import_lsa(const Json& doc);

/// p-character from JSON: an array of values (one per basis element) or an
/// object keyed by basis label or by comma-separated multi-index.
PChar pchar_from_json(const LSA& g, const Json& doc);
Json pchar_to_json(const LSA& g, const PChar& chi);

}  // namespace ko
