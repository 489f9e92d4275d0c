#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "wakes/pool_io.hpp"
#include "wakes/sweep.hpp"

using namespace wakes;

namespace {

bool same_results(const PoolSweepResult& a, const PoolSweepResult& b) {
    if (a.results.size() != b.results.size()) return false;
    for (size_t i = 0; i < a.results.size(); ++i) {
        const auto& x = a.results[i];
        const auto& y = b.results[i];
        if (!(x.h == y.h) || x.covered != y.covered ||
            x.residual_count != y.residual_count || x.remark_holds != y.remark_holds ||
            x.structural_ok != y.structural_ok || x.overlap_ok != y.overlap_ok ||
            x.converse_evidence != y.converse_evidence || x.flip != y.flip)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("pool sweep: serial reference and OpenMP kernel agree") {
    ComponentPool pool = pair_periodic_angles(7);
    PoolSweepResult serial = sweep_verify_serial(pool);
    PoolSweepResult parallel = sweep_verify_parallel(pool, 0);
    CHECK(same_results(serial, parallel));
    CHECK(serial.all_ok());
    // Two runs of the parallel kernel are deterministic.
    CHECK(same_results(parallel, sweep_verify_parallel(pool, 2)));
}

TEST_CASE("corollary sweep: serial reference and OpenMP kernel agree") {
    ComponentPool pool = pair_periodic_angles(5);
    std::vector<Angle> angles = angle_grid(255);
    auto grid2 = angle_grid(256);
    angles.insert(angles.end(), grid2.begin(), grid2.end());

    CorollaryCounts serial = sweep_corollary_serial(pool, 5, angles);
    CorollaryCounts parallel = sweep_corollary_parallel(pool, 5, angles, 0);
    CHECK(serial.pairs == parallel.pairs);
    CHECK(serial.disc_hits == parallel.disc_hits);
    CHECK(serial.exceptional == parallel.exceptional);
    CHECK(serial.equivalence_failures == parallel.equivalence_failures);
    CHECK(serial.difference_failures == parallel.difference_failures);
    CHECK(serial.parse_errors == parallel.parse_errors);

    CHECK(serial.ok());
    CHECK(serial.pairs == pool.components.size() * angles.size());
    CHECK(serial.disc_hits > 0);
}

TEST_CASE("angle grid reduces and covers") {
    auto grid = angle_grid(6);
    REQUIRE(grid.size() == 6);
    CHECK(grid[0] == Angle(0, 1));
    CHECK(grid[1] == Angle(1, 6));
    CHECK(grid[2] == Angle(1, 3));
    CHECK(grid[3] == Angle(1, 2));
}

TEST_CASE("pool JSON round trip") {
    ComponentPool pool = pair_periodic_angles(5);
    std::string text = pool_to_json(pool);
    ComponentPool back = pool_from_json(text);
    CHECK(back.max_period == pool.max_period);
    REQUIRE(back.components.size() == pool.components.size());
    for (size_t i = 0; i < pool.components.size(); ++i) {
        CHECK(back.components[i] == pool.components[i]);
        CHECK(back.components[i].kneading == pool.components[i].kneading);
        CHECK(back.components[i].discarded == pool.components[i].discarded);
    }
}

TEST_CASE("pool cache: load, restrict, and rebuild on corruption") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "wakes-test-cache";
    fs::remove_all(dir);
    fs::path file = dir / "pool.json";

    std::string warnings;
    ComponentPool p6 = load_or_build_pool(6, file, &warnings);
    CHECK(warnings.empty());
    CHECK(fs::exists(file));
    CHECK(p6.components.size() == pair_periodic_angles(6).components.size());

    // A larger cached pool restricts to the requested period.
    ComponentPool p4 = load_or_build_pool(4, file, &warnings);
    CHECK(p4.max_period == 4);
    for (const auto& c : p4.components) CHECK(c.period <= 4);

    // Corruption triggers a rebuild with a warning.
    {
        std::ofstream out(file);
        out << "{ not json";
    }
    warnings.clear();
    ComponentPool again = load_or_build_pool(4, file, &warnings);
    CHECK(!warnings.empty());
    CHECK(again.components.size() == p4.components.size());
    fs::remove_all(dir);
}
