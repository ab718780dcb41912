#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxwalk/json_io.hpp"
#include "coxwalk/ncore.hpp"

using namespace coxwalk;

namespace {

AffineWeyl affine_of(const char* tag) {
    return AffineWeyl(WeylGroup::build(RootSystem::build(tag)));
}

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("float formatting is stable and avoids negative zero") {
    CHECK(format_float(0.0) == "0");
    CHECK(format_float(-0.0) == "0");
    CHECK(format_float(1.0) == "1");
    CHECK(format_float(0.5) == "0.5");
    CHECK(format_float(-2.25) == "-2.25");
    // twelve significant digits
    CHECK(format_float(1.0 / 3.0) == "0.333333333333");
    CHECK(round_float(1.0 / 3.0) == 0.333333333333);
    CHECK(round_float(0.5) == 0.5);
    CHECK(round_float(-0.0) == 0.0);
}

TEST_CASE("canonical reduced words recover the element") {
    auto aw = affine_of("B2");
    // breadth-first ball of radius 5
    std::vector<AffineElement> ball{aw.identity_element()};
    std::set<AffineElement> seen{aw.identity_element()};
    for (std::size_t k = 0; k < ball.size(); ++k) {
        if (aw.length(ball[k]) >= 5) continue;
        for (int i = 0; i <= aw.rank(); ++i) {
            AffineElement y = aw.left_mul_gen(i, ball[k]);
            if (seen.insert(y).second) ball.push_back(y);
        }
    }
    CHECK(ball.size() > 40);
    for (const AffineElement& x : ball) {
        auto word = reduced_word(aw, x);
        CHECK(static_cast<long long>(word.size()) == aw.length(x));
        CHECK(aw.from_word(word) == x);
    }
    CHECK(reduced_word(aw, aw.identity_element()).empty());
}

TEST_CASE("word strings") {
    auto aw = affine_of("A2");
    CHECK(word_string(aw.weyl(), aw.weyl().identity()) == "e");
    CHECK(word_string(aw, aw.identity_element()) == "e");
    std::string s = word_string(aw, aw.from_word({0, 1}));
    CHECK(s.find('0') != std::string::npos);
    CHECK(s.find('1') != std::string::npos);
}

TEST_CASE("element json carries word, finite type, and translation") {
    auto aw = affine_of("A2");
    AffineElement x = aw.translation({1, 1});
    OrderedJson j = element_json(aw, x);
    REQUIRE(j.contains("word"));
    REQUIRE(j.contains("type"));
    REQUIRE(j.contains("lambda"));
    CHECK(j["lambda"] == OrderedJson::array({1, 1}));
    CHECK(j["type"] == "e");  // pure translation has trivial finite part
    CHECK(aw.from_word(j["word"].get<std::vector<int>>()) == x);
}

TEST_CASE("chain report fields and dump determinism") {
    auto wg = WeylGroup::build(RootSystem::build("A2"));
    auto chain = build_chain(wg);
    auto zeta = stationary_distribution(chain);
    auto chambers = chamber_probabilities(zeta);
    auto dir = psi(*wg, zeta);
    OrderedJson j = chain_report_json(chain, zeta, dir, chambers);
    CHECK(j["type"] == "A2");
    CHECK(j["weights"] == "uniform");
    REQUIRE(j["zeta"].is_array());
    REQUIRE(j["zeta"].size() == 6);
    CHECK(j["zeta"][0]["word"] == "e");
    CHECK(j["zeta"][0]["value"] == "2/9");
    CHECK(j["psi"]["coords"] == OrderedJson::array({1, 1}));
    REQUIRE(j["chambers"].is_array());
    CHECK(j["chambers"][0]["value"] == "1/9");

    OrderedJson again = chain_report_json(chain, zeta, dir, chambers);
    CHECK(j.dump(2) == again.dump(2));
    // insertion order is part of the format
    std::string dumped = j.dump();
    CHECK(dumped.find("\"type\"") < dumped.find("\"weights\""));
    CHECK(dumped.find("\"weights\"") < dumped.find("\"zeta\""));
    CHECK(dumped.find("\"zeta\"") < dumped.find("\"psi\""));
    CHECK(dumped.find("\"psi\"") < dumped.find("\"chambers\""));
}

TEST_CASE("probe report json") {
    OrderedJson j = probes_json(conjecture_probes(RootSystem::build("A2")));
    CHECK(j["type"] == "A2");
    CHECK(j["identity_over_longest"] == "2");
    CHECK(j["binomial_product"] == "9");
    CHECK(j["identity_ratio_matches_product"] == false);
    CHECK(j["uniform_spread"] == "2");
}

TEST_CASE("distribution json sums its masses") {
    auto aw = affine_of("A2");
    auto dist = exact_distribution(aw, 3, WalkVariant::delayed);
    OrderedJson j = distribution_json(aw, dist);
    CHECK(j["steps"] == 3);
    CHECK(j["variant"] == "delayed");
    REQUIRE(j["entries"].is_array());
    CHECK(j["entries"].size() == dist.probabilities.size());
    Rational total = 0;
    for (const auto& entry : j["entries"])
        total += parse_fraction(entry["value"].get<std::string>());
    CHECK(total == 1);
}

TEST_CASE("trajectory csv has one row per step") {
    auto aw = affine_of("A2");
    auto traj = simulate(aw, 5, WalkVariant::free, 9);
    std::string csv = trajectory_csv(aw, traj);
    CHECK(csv.rfind("step,word,lambda,length", 0) == 0);
    std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == 7);  // header + six states
}

TEST_CASE("sign strings") {
    auto aw = affine_of("A2");
    CHECK(sign_string(region_of(aw, aw.identity_element())) == "000");
    ShiRegion region;
    region.sign = {-1, 0, 1};
    CHECK(sign_string(region) == "-0+");
}

TEST_CASE("gamma graph json matches the graph shape") {
    auto aw = affine_of("A2");
    auto graph = build_gamma(aw);
    OrderedJson j = gamma_json(graph);
    CHECK(j["type"] == "A2");
    CHECK(j["source"] == graph.source);
    REQUIRE(j["vertices"].size() == graph.vertices.size());
    std::size_t marked_absorbing = 0;
    for (const auto& entry : j["vertices"]) {
        CHECK(entry["edges"].size() > 0);
        if (entry["absorbing"].get<bool>()) ++marked_absorbing;
    }
    CHECK(marked_absorbing == graph.absorbing.size());

    OrderedJson r = region_probabilities_json(graph, region_hitting_probabilities(graph));
    CHECK(r["regions"].size() == 16);
    // chamber translates are the regions whose sign string has no zero
    Rational total_chambers = 0;
    for (const auto& entry : r["regions"]) {
        std::string signs = entry["region"].get<std::string>();
        if (signs.find('0') == std::string::npos)
            total_chambers += parse_fraction(entry["probability"].get<std::string>());
    }
    CHECK(total_chambers == 1);
}

TEST_CASE("core json is the bare row list") {
    CorePartition core{{3, 1, 1}, 3};
    OrderedJson j = core_json(core);
    REQUIRE(j.is_array());
    CHECK(j == OrderedJson::array({3, 1, 1}));
    CHECK(core_json(CorePartition{{}, 4}) == OrderedJson::array());
}

TEST_CASE("profile csv and svg") {
    CorePartition core{{2, 1}, 3};
    BoundaryProfile profile = boundary_profile(core, 1);
    std::string csv = profile_csv(profile);
    CHECK(csv.rfind("x,y", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + profile.vertices.size());

    std::string svg = profile_svg({profile, limit_curve(3).profile});
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<path") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("-0 ") == std::string::npos);  // no negative zero coordinates
}

TEST_CASE("limit curve and first row json") {
    OrderedJson j = limit_curve_json(limit_curve(4));
    CHECK(j["n"] == 4);
    CHECK(j["alpha"] == "1/10");
    CHECK(j["area_scale_constant"] == "1/5");
    CHECK(j["enclosed_area"] == "1/10");
    CHECK(j["direction_verified"] == true);
    REQUIRE(j["vertices"].is_array());
    CHECK(j["vertices"].size() == 4);

    OrderedJson f = first_row_json(first_row_statistics(4, 1000, FirstRowForm::by_degree));
    CHECK(f["form"] == "degree");
    CHECK(f["predicted_value"] == 600.0);
}

}  // TEST_SUITE
