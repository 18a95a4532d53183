#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "dpo/spine.hpp"

namespace dpo::io {

using nlohmann::json;

inline constexpr int format_version = 1;

struct ParseError : Error {
    using Error::Error;
};

// Every artifact is a self-describing JSON object with a "kind"
// discriminator and a format version.

json to_json(const Graph& g);
json to_json(const GraphMorphism& m);  // vmap/emap only; dom and cod from context
json to_json(const SubgraphHandle& h);  // vset/eset only
json to_json(const Rule& r);
json to_json(const DerivationStep& s);
json to_json(const Derivation& d);
json to_json(const MovedPair& grid);
json to_json(const RestrictionCertificate& cert);
json to_json(const IndependenceReport& report);

Graph graph_from_json(const json& j);
Rule rule_from_json(const json& j);
SubgraphHandle handle_from_json(const json& j, const Graph& host);
GraphMorphism morphism_from_json(const json& j, const Graph& dom, const Graph& cod);
Derivation derivation_from_json(const json& j);

struct ScriptFile {
    std::filesystem::path start;            // graph file, relative to the script
    std::vector<std::filesystem::path> rules;  // rule files
    std::vector<ScriptEntry> entries;
};

ScriptFile script_from_json(const json& j);

json load(const std::filesystem::path& path);
void save(const std::filesystem::path& path, const json& j);
std::string dump(const json& j);  // canonical text form used for files

std::string kind_of(const json& j);

Graph load_graph(const std::filesystem::path& path);
Rule load_rule(const std::filesystem::path& path);
Derivation load_derivation(const std::filesystem::path& path);

/// Re-runs the dumped steps through apply() with the recorded matches
/// and fresh ids; the result must reproduce the dump bit-identically.
Derivation replay(const Derivation& d);

}  // namespace dpo::io
