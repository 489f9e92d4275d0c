#include "wakes/pool_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wakes {

namespace fs = std::filesystem;
using nlohmann::json;

std::string pool_to_json(const ComponentPool& pool) {
    json out;
    out["max_period"] = pool.max_period;
    json comps = json::array();
    for (const auto& c : pool.components) {
        json e;
        e["period"] = c.period;
        e["theta_minus"] = c.theta_minus.str();
        e["theta_plus"] = c.theta_plus.str();
        std::string k;
        for (Sym s : c.kneading.head) k += sym_str(s);
        e["kneading"] = k;
        comps.push_back(e);
    }
    out["components"] = comps;
    return out.dump(2);
}

ComponentPool pool_from_json(const std::string& text) {
    json in = json::parse(text);
    ComponentPool pool;
    pool.max_period = in.at("max_period").get<uint32_t>();
    for (const auto& e : in.at("components")) {
        HyperbolicComponent c;
        c.period = e.at("period").get<uint32_t>();
        c.theta_minus = Angle::parse(e.at("theta_minus").get<std::string>());
        c.theta_plus = Angle::parse(e.at("theta_plus").get<std::string>());
        c.kneading = Word::from_string(e.at("kneading").get<std::string>());
        if (c.kneading.size() != c.period)
            throw std::invalid_argument("kneading length disagrees with period");
        c.discarded = Word::finite_word(c.kneading.prefix(c.period - 1));
        pool.components.push_back(std::move(c));
    }
    return pool;
}

void save_pool(const ComponentPool& pool, const fs::path& file) {
    if (file.has_parent_path()) fs::create_directories(file.parent_path());
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write pool file " + file.string());
    out << pool_to_json(pool) << "\n";
}

ComponentPool load_pool(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read pool file " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return pool_from_json(buf.str());
}

fs::path default_cache_dir() {
    if (const char* env = std::getenv("WAKES_CACHE_DIR")) return fs::path(env);
    const char* home = std::getenv("HOME");
    fs::path base = home ? fs::path(home) : fs::temp_directory_path();
    fs::path config = base / ".config" / "wakes" / "config.json";
    if (fs::exists(config)) {
        try {
            std::ifstream in(config);
            json j = json::parse(in);
            if (j.contains("cache_dir")) return fs::path(j["cache_dir"].get<std::string>());
        } catch (...) {
            // Unreadable config falls through to the default location.
        }
    }
    return base / ".cache" / "wakes";
}

fs::path pool_cache_file(uint32_t max_period) {
    return default_cache_dir() / ("pool-p" + std::to_string(max_period) + ".json");
}

namespace {

// A cache entry is trusted only after its kneadings recompute cleanly.
bool pool_valid(const ComponentPool& pool, uint32_t max_period) {
    if (pool.max_period < max_period) return false;
    for (const auto& c : pool.components) {
        if (c.theta_plus <= c.theta_minus) return false;
        if (c.theta_minus.exact_period() != c.period) return false;
        if (!(kneading(c.theta_minus, c.period) == c.kneading)) return false;
    }
    return true;
}

ComponentPool restrict_pool(ComponentPool pool, uint32_t max_period) {
    if (pool.max_period == max_period) return pool;
    ComponentPool out;
    out.max_period = max_period;
    for (auto& c : pool.components)
        if (c.period <= max_period) out.components.push_back(std::move(c));
    return out;
}

}  // namespace

ComponentPool load_or_build_pool(uint32_t max_period,
                                 const std::optional<fs::path>& file,
                                 std::string* warnings) {
    fs::path path = file.value_or(pool_cache_file(max_period));
    if (fs::exists(path)) {
        try {
            ComponentPool pool = load_pool(path);
            if (pool_valid(pool, max_period)) return restrict_pool(std::move(pool), max_period);
            if (warnings) *warnings += "pool cache " + path.string() + " is stale or corrupt; rebuilding\n";
        } catch (const std::exception& e) {
            if (warnings)
                *warnings += "pool cache " + path.string() + " unreadable (" + e.what() +
                             "); rebuilding\n";
        }
    }
    ComponentPool pool = pair_periodic_angles(max_period);
    try {
        save_pool(pool, path);
    } catch (const std::exception& e) {
        if (warnings) *warnings += std::string("pool cache not saved: ") + e.what() + "\n";
    }
    return pool;
}

}  // namespace wakes
