#pragma once

#include "fibrant/report.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace fibrant::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

json fiber_to_json(const miranda::MirandaFiber& fiber);
json collision_to_json(const blowup::CollisionRecord& collision);
json report_to_json(const miranda::ClassificationReport& report);
std::string report_to_markdown(const miranda::ClassificationReport& report);

// Report schema as shipped in docs/report.schema.json.
const json& report_schema();
const char* report_schema_text();

// Violations of `schema` by `doc`, as "path: message" strings. Supports the
// keywords the report schema uses: type, enum, required, properties,
// additionalProperties (boolean), items, minItems, maxItems.
std::vector<std::string> validate(const json& doc, const json& schema);

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Exit codes: 0 success, 2 rejected input or non-generic parameters, 1 internal error.
CommandResult run(const std::vector<std::string>& args);

}  // namespace fibrant::cli
