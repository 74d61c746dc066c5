#pragma once

#include "sph/catalog.hpp"
#include "sph/fano.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace sph {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace schemas {
const char* skeleton();
const char* augmented();
const char* report();
}  // namespace schemas

// "skeleton", "augmented" or "report". SKELETON_SCHEMA_PATH, when set, names either a
// replacement skeleton schema file or a directory holding <name>.schema.json files.
Json load_schema(const std::string& name);

// Draft 2020-12 subset: type, const, enum, properties, required, additionalProperties,
// items, minItems, maxItems, uniqueItems, minimum, maximum, minLength, pattern, anyOf, local $ref.
std::vector<Violation> schema_validate(const Json& schema, const Json& doc);
void require_schema(const std::string& name, const Json& doc);  // throws SchemaViolation

Json read_json_file(const std::string& path);  // throws ParseError

Json rational_json(const Rational& q);
Json rational_json(const RatVector& v);
Rational rational_from_json(const Json& j);  // integer or "p/q"

// Index lists (sp, moved_by) are 1-based in documents.
Json to_json(const SphericalSkeleton& sk);
// Schema check, then structural decoding. Throws SchemaViolation or ParseError.
SphericalSkeleton skeleton_from_json(const Json& j);

struct AugmentedDocument {
    AugmentedData data;
    std::optional<std::vector<RatVector>> polytope;
};

Json to_json(const AugmentedDocument& doc);
AugmentedDocument augmented_from_json(const Json& j);

Json to_json(const std::vector<Violation>& vs);
Json to_json(const PInvariantReport& rep, const SphericalSkeleton& sk);
Json to_json(const TablesReport& rep, std::size_t max_rank);
Json to_json(const EqualityReport& rep, std::size_t max_rank);
Json to_json(const SmoothnessResult& res, const std::set<std::string>& ids);

// Report envelope; the payload goes under key.
Json make_report(const std::string& command, bool ok);

std::string csv_escape(const std::string& s);
std::string to_csv(const PInvariantReport& rep);
std::string to_csv(const TablesReport& rep);
std::string to_csv(const EqualityReport& rep);

}  // namespace sph
