#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "magicsq/magic.hpp"
#include "magicsq/search.hpp"

namespace magicsq {

using json = nlohmann::ordered_json;

/// JSON array of scalar strings, e.g. ["8","-2","5/2"]; dimension implied by
/// length. Plain numbers are accepted on input.
json hyper_to_json(const Hyper& h);
Hyper hyper_from_json(const json& j);

/// {"dim": n, "A": [...], "P": [...], "convention": tag, "entries": [[...]],
///  "constant": "c"} with provenance fields present when known.
json matrix_to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const json& j);

/// One candidate per line; the timestamp field is opt-in so that seeded runs
/// stay byte-identical.
json candidate_to_json(const Candidate& c, Convention conv, bool with_timestamp);
std::string candidate_to_jsonl(const Candidate& c, Convention conv, bool with_timestamp);

/// Fixed-width grid with explicit minus signs for eyeball comparison.
std::string grid_to_string(const SquareMatrix& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace magicsq
