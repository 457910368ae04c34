// Canonical serialization of results.
//
// JSON output uses sorted object keys and exact scalars rendered as canonical
// strings ("p/q", "p/q+r/s*i"), so identical inputs always produce identical
// bytes.  Doubles are only emitted on an explicit numeric request and are
// printed with round-trip precision.

#pragma once

#include <string>

#include "json.hpp"

#include "charderiv/exact.hpp"
#include "charderiv/rmt.hpp"
#include "charderiv/verify.hpp"

namespace charderiv {

using Json = nlohmann::json;

Json scalar_json(const ExactScalar& v);          // canonical string
Json tpoly_json(const TPoly& p);                 // [["m", "coeff"], ...]
Json ginibre_result_json(const GinibreMomentResult& r);
Json verify_results_json(const std::vector<VerifyCaseResult>& results);

// Dump with two-space indentation and a trailing newline; nlohmann keeps
// object keys sorted, which is exactly the canonical order we promise.
std::string canonical_dump(const Json& j);

// CSV with a header row; fields are written verbatim (all our fields are
// free of commas and quotes by construction).
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

// Write to the given path, or to stdout when the path is empty.
void write_output(const std::string& text, const std::string& path);

// Round-trip double formatting for --numeric output.
std::string double_str(double v);

}  // namespace charderiv
