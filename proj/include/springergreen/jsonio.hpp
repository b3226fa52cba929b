#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "springergreen/verify.hpp"

namespace sg {

using nlohmann::json;

// {"coeffs": ["c0", "c1", ...]} with decimal-string big integers.
json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const json& j);

// {"degree": n, "terms": [{"partition": "2,1", "poly": {...}}]}
json symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const json& j);

// Character table with format version and content checksum.
json chartable_to_json(const WeylTable& t);
// Rejects wrong versions, bad checksums and malformed payloads.
std::optional<WeylTable> chartable_from_json(const json& j);

// CSV dump: header rows with class labels, sizes and centralizer orders,
// then one row per irreducible character.
std::string chartable_to_csv(const WeylTable& t);

json report_to_json(const Report& r);

// Cache path {family}{n}.json under dir; loads a valid cached table or
// rebuilds and rewrites it.  With an empty dir this is just weyl_table().
const WeylTable& cached_weyl_table(WeylFamily f, int n, const std::string& cache_dir);

std::string fnv1a_hex(const std::string& data);

} // namespace sg
