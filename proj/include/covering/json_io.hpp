#pragma once

// JSON schemas shared by the library and the CLI. Parsing failures of any
// kind surface as Error(MalformedInput).

#include <json.hpp>

#include <vector>

#include "covering/approximation.hpp"
#include "covering/harness.hpp"
#include "covering/inradius.hpp"
#include "covering/witness.hpp"

namespace covering::io {

using Json = nlohmann::ordered_json;

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json to_json(const Body& b);
Body body_from_json(const Json& j);

Json to_json(const InscribedBall& ib);
Json to_json(const OuterPolytope& w);

Json to_json(const CoveringInstance& inst);
CoveringInstance instance_from_json(const Json& j);

Json to_json(const WitnessReport& r);

/// Either a bare array of plank objects or {"planks": [...]}.
std::vector<Plank> planks_from_json(const Json& j);

Json to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j);

Json to_json(const VerificationResult& v);

/// Reads and parses a whole file.
Json read_file(const std::string& path);

}  // namespace covering::io
