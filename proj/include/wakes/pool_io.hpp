#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "wakes/components.hpp"

namespace wakes {

// Pool JSON schema, components sorted by (period, theta_minus):
//   {"max_period": n,
//    "components": [{"period": n, "theta_minus": "p/q",
//                    "theta_plus": "p/q", "kneading": "BABB"}, ...]}
std::string pool_to_json(const ComponentPool& pool);
ComponentPool pool_from_json(const std::string& text);

void save_pool(const ComponentPool& pool, const std::filesystem::path& file);
ComponentPool load_pool(const std::filesystem::path& file);

// Cache directory: the WAKES_CACHE_DIR environment variable wins, then the
// "cache_dir" entry of ~/.config/wakes/config.json, then ~/.cache/wakes.
std::filesystem::path default_cache_dir();
std::filesystem::path pool_cache_file(uint32_t max_period);

// Loads the pool from the explicit file or the cache when valid; otherwise
// builds it (and refreshes the cache). A corrupt cache is rebuilt, with the
// complaint appended to warnings.
ComponentPool load_or_build_pool(uint32_t max_period,
                                 const std::optional<std::filesystem::path>& file,
                                 std::string* warnings = nullptr);

}  // namespace wakes
