#pragma once

#include <string>

#include <json.hpp>

#include "durfee/marked.hpp"

namespace durfee {

// SymbolDocument: {"flavor", "d", "vectors": [{"alpha", "beta"}, ...],
// "derived": {"weight", "ranks", "balanced_numbers"}}. Vector 1 first.
nlohmann::json to_document(const KMarkedSymbol& s);

// Reads a SymbolDocument (or an object carrying one under "symbol").
// "derived" is optional; when present it must match the recomputed values.
// Throws durfee::Error on malformed or invalid documents.
KMarkedSymbol from_document(const nlohmann::json& doc);

// Single-line JSON, stable key order.
std::string render(const KMarkedSymbol& s);

// Two-row display in the traditional order (vector k leftmost) with the
// vector index as a subscript on every part, e.g. "4₃ 4₃ 3₂ 3₂ 2₂ 2₁".
std::string pretty(const KMarkedSymbol& s);

}  // namespace durfee
