#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wakes/render.hpp"
#include "wakes/report.hpp"

using namespace wakes;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("appendix report matches the golden file byte for byte") {
    ComponentPool pool = pair_periodic_angles(6);
    std::string got = appendix_a_text(pool);
    CHECK(got == read_file("tests/golden/appendix_a.txt"));
}

TEST_CASE("appendix report carries the published data") {
    ComponentPool pool = pair_periodic_angles(6);
    std::string r = appendix_a_text(pool);
    // Kneadings of the four subjects.
    CHECK(r.find("K(H_Lob) = BABBA") != std::string::npos);
    CHECK(r.find("Khat(H_Lob) = BABB") != std::string::npos);
    CHECK(r.find("K(H_4) = BABB") != std::string::npos);
    CHECK(r.find("K(H_6) = BABBBB") != std::string::npos);
    CHECK(r.find("K(H_6') = BBABBB") != std::string::npos);
    // Orbit tables with the printed numerators and e-marks.
    CHECK(r.find("[26e, 36e] -> [52e, 10e] -> [42e, 20e]") != std::string::npos);
    CHECK(r.find("[18, 20e] u [42e, 44] -> [36, 40e] u [22e, 26] -> "
                 "[10, 18e] u [44e, 52]") != std::string::npos);
    CHECK(r.find("(4e, 6e) -> (8e, 2e) -> (6e, 4e)") != std::string::npos);
    CHECK(r.find("(37, 50e) u (76e, 89) -> (74, 100e) u (26e, 52)") !=
          std::string::npos);
    CHECK(r.find("(20e, 34e) -> (40e, 68e) -> (80e, 10e) -> (34e, 20e)") !=
          std::string::npos);
    // The corrected wake angle of H_6 and the conspicuous sets.
    CHECK(r.find("[26/63, 37/63]") != std::string::npos);
    CHECK(r.find("K(H'_4) = BBAA") != std::string::npos);
    CHECK(r.find("K(H'_5) = BBABA") != std::string::npos);
    CHECK(r.find("denominator 62") != std::string::npos);
    CHECK(r.find("denominator 10") != std::string::npos);
    CHECK(r.find("denominator 126") != std::string::npos);
}

TEST_CASE("report and figure output is deterministic") {
    ComponentPool pool = pair_periodic_angles(6);
    CHECK(appendix_a_text(pool) == appendix_a_text(pool));
    CHECK(appendix_a_json(pool) == appendix_a_json(pool));

    RenderSpec spec;
    spec.component = *pool.find(Angle(13, 31), Angle(18, 31));
    CHECK(render_svg(spec, pool) == render_svg(spec, pool));
}

TEST_CASE("appendix JSON mirrors the table data") {
    ComponentPool pool = pair_periodic_angles(6);
    json j = json::parse(appendix_a_json(pool));
    REQUIRE(j["examples"].size() == 4);
    const auto& ex1 = j["examples"][0];
    CHECK(ex1["component"] == "H_Lob");
    CHECK(ex1["kneading"] == "BABBA");
    CHECK(ex1["denominator"] == 62);
    const auto& rows = ex1["rows"];
    REQUIRE(rows.size() == 2);
    // Row 1 stage 1 is [26,36] marked at both ends.
    const auto& first = rows[0]["stages"][0]["arcs"][0];
    CHECK(first["start"] == 26);
    CHECK(first["end"] == 36);
    CHECK(first["marks"].size() == 2);
    const auto& ex3 = j["examples"][2];
    CHECK(ex3["theta_minus"] == "26/63");
    CHECK(ex3["conspicuous"].size() == 2);
}

TEST_CASE("rq trace JSON uses the common denominator and e-marks") {
    ComponentPool pool = pair_periodic_angles(5);
    RQTrace t = rq_trace(*pool.find(Angle(13, 31), Angle(18, 31)), pool);
    json j = json::parse(rq_trace_json(t));
    CHECK(j["denominator"] == 62);
    CHECK(j["return_times"] == json::array({3}));
    REQUIRE(j["steps"].size() == 6);
    const auto& r1 = j["steps"][1]["R"][0];
    CHECK(r1["start"] == 26);
    CHECK(r1["end"] == 36);
    CHECK(r1["start_closed"] == true);
    CHECK(r1["marks"] == json::array({26, 36}));
}

TEST_CASE("filmstrip SVG renders every step with labels") {
    ComponentPool pool = pair_periodic_angles(5);
    RenderSpec spec;
    spec.component = *pool.find(Angle(13, 31), Angle(18, 31));
    std::string svg = render_svg(spec, pool);
    CHECK(svg.starts_with("<svg"));
    CHECK(svg.find("</svg>") != std::string::npos);
    // One disk per step 0..5.
    size_t disks = 0;
    for (size_t pos = 0; (pos = svg.find("n = ", pos)) != std::string::npos; ++pos)
        ++disks;
    CHECK(disks == 6);
    // Marked numerators appear as labels.
    CHECK(svg.find(">26e<") != std::string::npos);
    CHECK(svg.find(">36e<") != std::string::npos);
    // Q arcs drawn black on top of grey R arcs.
    CHECK(svg.find("#999999") != std::string::npos);
    CHECK(svg.find("#000000") != std::string::npos);

    RenderSpec one = spec;
    one.step = 2;
    std::string single = render_svg(one, pool);
    CHECK(single.find("n = 2") != std::string::npos);
    CHECK(single.find("n = 3") == std::string::npos);

    one.step = 9;
    CHECK_THROWS_AS(render_svg(one, pool), std::invalid_argument);
}
