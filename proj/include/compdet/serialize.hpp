#pragma once

// JSON dumps. These layouts are the stable interchange format; the text
// renderings used by the CLI are for people and may change.

#include <json.hpp>

#include <span>

#include "compdet/closed_forms.hpp"
#include "compdet/matrix.hpp"
#include "compdet/verifier.hpp"

namespace compdet {

/// {family, domain, n, k, order, row_order: [[parts...]], entries: [[polynomial-string]]}
nlohmann::ordered_json matrix_to_json(const SymbolicMatrix& m);

/// {scalar: "p/q", factors: [{base: polynomial-string, exp: int}]}
nlohmann::ordered_json factored_to_json(const FactoredForm& f);

/// One JSON-lines record. elapsed_ms is emitted only when include_timing is
/// set, so that repeated runs produce byte-identical output by default.
nlohmann::ordered_json report_to_json(const VerificationReport& r, bool include_timing);

nlohmann::ordered_json compositions_to_json(std::span<const Composition> cs);

}  // namespace compdet
