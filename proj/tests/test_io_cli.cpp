#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tdesign/construct.hpp"
#include "tdesign/io.hpp"
#include "tdesign/render.hpp"

using namespace tdesign;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("tdesign_test_" + name);
}

#ifdef TDESIGN_CLI_PATH
int run_cli(const std::string& args, const fs::path& stdout_path) {
    const std::string cmd =
        std::string(TDESIGN_CLI_PATH) + " " + args + " > " + stdout_path.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

nlohmann::json slurp_json(const fs::path& path) {
    std::ifstream in(path);
    nlohmann::json j;
    in >> j;
    return j;
}
#endif

}  // namespace

TEST_CASE("design file round trip preserves verification bit for bit") {
    const WeightedPointSet x = tight_polygon_design(4, {1.0, 2.0});
    const DesignFile file = make_design_file(x, "polygon", {{"t", 4}}, 4);
    const nlohmann::json j = to_json(file);
    const DesignFile back = design_file_from_json(nlohmann::json::parse(j.dump()));
    const WeightedPointSet y = to_point_set(back);

    const DesignReport before = verify_euclidean_design(x, 4);
    const DesignReport after = verify_euclidean_design(y, 4);
    CHECK(before.pass == after.pass);
    CHECK(before.max_residual == after.max_residual);  // decimals round-trip binary64
    for (std::size_t d = 0; d < before.residuals.size(); ++d)
        CHECK(before.residuals[d].worst == after.residuals[d].worst);
}

TEST_CASE("interval design file round trip") {
    const IntervalDesign d = build_interval_design(4, 7);
    const DesignFile file = make_design_file(d, "interval");
    CHECK(file.kind == "interval");
    const IntervalDesign back =
        to_interval_design(design_file_from_json(nlohmann::json::parse(to_json(file).dump())));
    CHECK(back.n == 4);
    CHECK(back.t == 7);
    CHECK(back.nodes == d.nodes);
    CHECK(back.weights == d.weights);
    CHECK(verify_interval_design(back, 7).pass);
}

TEST_CASE("design file validation") {
    nlohmann::json good = to_json(make_design_file(tight_polygon_design(5, {1.0})));
    SUBCASE("missing keys") {
        nlohmann::json j = good;
        j.erase("points");
        CHECK_THROWS_AS(design_file_from_json(j), std::invalid_argument);
    }
    SUBCASE("unknown kind") {
        nlohmann::json j = good;
        j["kind"] = "banana";
        CHECK_THROWS_AS(design_file_from_json(j), std::invalid_argument);
    }
    SUBCASE("length mismatch") {
        nlohmann::json j = good;
        j["weights"].push_back(1.0);
        CHECK_THROWS_AS(design_file_from_json(j), std::invalid_argument);
    }
    SUBCASE("bad version") {
        nlohmann::json j = good;
        j["format_version"] = 99;
        CHECK_THROWS_AS(design_file_from_json(j), std::invalid_argument);
    }
    SUBCASE("euclidean/interval conversions enforce kind") {
        const DesignFile file = design_file_from_json(good);
        CHECK_THROWS_AS(to_interval_design(file), std::invalid_argument);
    }
}

TEST_CASE("svg rendering") {
    const DesignFile hex = make_design_file(tight_polygon_design(5, {1.0}), "polygon");
    const std::string svg = render_svg(hex);
    CHECK(svg.find("<svg") == 0);
    // 6 markers + 1 guide circle
    std::size_t count = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++count;
        pos += 7;
    }
    CHECK(count == 7);
    CHECK(svg == render_svg(hex));  // deterministic bytes

    const DesignFile two = make_design_file(tight_polygon_design(4, {1.0, 2.0}), "polygon");
    const std::string svg2 = render_svg(two);
    std::size_t count2 = 0;
    pos = 0;
    while ((pos = svg2.find("<circle", pos)) != std::string::npos) {
        ++count2;
        pos += 7;
    }
    CHECK(count2 == 8);  // 6 markers + 2 guides

    const DesignFile interval = make_design_file(build_interval_design(3, 3), "interval");
    CHECK_THROWS_AS(render_svg(interval), std::invalid_argument);

    const DesignFile d3 = make_design_file(fg_design(make_fg_case(FGCaseTag::d3t5, 2.0)));
    CHECK_THROWS_AS(render_svg(d3), std::invalid_argument);
}

#ifdef TDESIGN_CLI_PATH
TEST_CASE("cli: bound") {
    const fs::path out = temp_file("bound.json");
    CHECK(run_cli("bound -n 3 -p 2 -t 5", out) == 0);
    const nlohmann::json j = slurp_json(out);
    CHECK(j.at("N") == 14);
    CHECK(j.at("antipodality_required") == true);
    CHECK(run_cli("bound -n 2 -p 1 -t 5", out) == 0);
    CHECK(slurp_json(out).at("N") == 6);
    CHECK(run_cli("bound -n 4 -p 2 -t 7", out) == 0);
    CHECK(slurp_json(out).at("N") == 48);
    // usage error
    CHECK(run_cli("bound -n 3", out) == 2);
    CHECK(run_cli("bound -n 1 -p 1 -t 3", out) == 2);
}

TEST_CASE("cli: construct, verify, render round trip") {
    const fs::path design = temp_file("hexagon.json");
    const fs::path out = temp_file("out.json");
    CHECK(run_cli("construct polygon -t 5 -r 1 -o " + design.string(), out) == 0);

    CHECK(run_cli("verify " + design.string() + " -t 5", out) == 0);
    nlohmann::json j = slurp_json(out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("tight") == "tight");

    CHECK(run_cli("verify " + design.string() + " -t 5 --method both", out) == 0);
    j = slurp_json(out);
    CHECK(j.at("agree") == true);
    CHECK(j.at("moments").at("pass") == true);
    CHECK(j.at("harmonic").at("pass") == true);

    // hexagon cannot be a 6-design
    CHECK(run_cli("verify " + design.string() + " -t 6", out) == 1);

    const fs::path svg = temp_file("hexagon.svg");
    CHECK(run_cli("render " + design.string() + " -o " + svg.string(), out) == 0);
    std::ifstream in(svg);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("<svg") == 0);
}

TEST_CASE("cli: construct fg and lift") {
    const fs::path fg = temp_file("fg.json");
    const fs::path out = temp_file("out2.json");
    CHECK(run_cli("construct fg --case d3t5 --lambda 2 -o " + fg.string(), out) == 0);
    const nlohmann::json j = slurp_json(fg);
    CHECK(j.at("points").size() == 14);
    CHECK(run_cli("verify " + fg.string() + " --method both", out) == 0);

    const fs::path hex = temp_file("hex2.json");
    CHECK(run_cli("construct polygon -t 5 -r 1 -o " + hex.string(), out) == 0);
    const fs::path lifted = temp_file("lifted.json");
    CHECK(run_cli("construct lift --in " + hex.string() + " -t 5 --dim 3 -o " + lifted.string(),
                  out) == 0);
    CHECK(slurp_json(lifted).at("points").size() == 18);
    CHECK(run_cli("verify " + lifted.string(), out) == 0);

    const fs::path interval = temp_file("interval.json");
    CHECK(run_cli("construct interval -n 3 -t 9 -o " + interval.string(), out) == 0);
    CHECK(run_cli("verify " + interval.string(), out) == 0);
    CHECK(run_cli("render " + interval.string(), out) == 2);
}

TEST_CASE("cli: TDESIGN_TOL overrides the default tolerance") {
    const fs::path design = temp_file("hex_tol.json");
    const fs::path out = temp_file("out_tol.json");
    REQUIRE(run_cli("construct polygon -t 5 -r 1 -o " + design.string(), out) == 0);
    CHECK(run_cli("verify " + design.string() + " -t 6", out) == 1);
    const std::string cmd = "TDESIGN_TOL=10 " + std::string(TDESIGN_CLI_PATH) + " verify " +
                            design.string() + " -t 6 > " + out.string() + " 2>/dev/null";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
}

TEST_CASE("cli: IO and usage failures") {
    const fs::path out = temp_file("err.json");
    CHECK(run_cli("verify /nonexistent.json -t 3", out) == 2);
    const fs::path bad = temp_file("bad.json");
    std::ofstream(bad) << "{ not json";
    CHECK(run_cli("verify " + bad.string() + " -t 3", out) == 2);
    CHECK(run_cli("construct polygon -t 5 -r 1,1 -o " + temp_file("dup.json").string(), out) ==
          2);
    CHECK(run_cli("frobnicate", out) == 2);
}
#endif
