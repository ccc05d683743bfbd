#pragma once

#include <string>

#include "json.hpp"

#include "conehull/conic.hpp"
#include "conehull/hull.hpp"
#include "conehull/samplers.hpp"

namespace conehull {

// Versioned JSON documents; readers reject unknown schema tags.
inline constexpr const char* hull_schema = "conehull.hull.v1";
inline constexpr const char* poisson_sample_schema = "conehull.poisson_sample.v1";
inline constexpr const char* cone_sample_schema = "conehull.cone_sample.v1";
inline constexpr const char* cache_schema = "conehull.cache.v1";

nlohmann::json to_json(const Hull& h);
Hull hull_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PoissonSample& s);
PoissonSample poisson_sample_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConeSample& c);
ConeSample cone_sample_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConicProfile& p);

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

} // namespace conehull
