#include <doctest.h>

#include "crn/preset_registry.hpp"
#include "crn/report.hpp"

TEST_CASE("analysis report carries the schema fields") {
    const auto net = crn::schmitz_subnetwork();
    const auto k = crn::schmitz_ndk_kinetics(net);
    const crn::Json j = crn::analysis_report("preset:schmitz-ndk", net, k);
    CHECK(j["schema_version"] == 1);
    CHECK(j["network"]["stats"]["s"] == 5);
    CHECK(j["network"]["stats"]["deficiency"] == 0);
    CHECK(j["kinetics"]["classification"] == "PL-NDK");
    CHECK(j["f_decomposition"]["independent"] == true);
    CHECK(j["f_decomposition"]["incidence_independent"] == true);
    CHECK(j["f_decomposition"]["w"] == 2);
    CHECK(j["f_decomposition"]["classes"][0]["reactions"] ==
          crn::Json::array({"R1", "R2", "R3", "R4"}));
    CHECK(j["f_decomposition"]["classes"][1]["reactions"] ==
          crn::Json::array({"R5", "R6", "R7", "R8"}));
    CHECK(j["multistationarity_precheck"] == "requires cf-ri+ transform (PL-NDK input)");
}

TEST_CASE("reports are byte-identical across runs") {
    const auto make = [] {
        const auto preset = crn::make_preset("schmitz-ndk");
        return crn::analysis_report("preset:schmitz-ndk", preset.network, preset.kinetics)
            .dump(2);
    };
    const std::string a = make();
    const std::string b = make();
    CHECK(a == b);
}

TEST_CASE("text output is rendered from the json report") {
    const auto net = crn::schmitz_subnetwork();
    const crn::Json j = crn::analysis_report("preset:schmitz", net, std::nullopt);
    const std::string text = crn::render_text(j);
    CHECK(text.find("independent=yes") != std::string::npos);
    CHECK(text.find("Type III") != std::string::npos);
    CHECK(text.find("deficiency=0") != std::string::npos);
    CHECK(text.find("R5 R6 R7 R8") != std::string::npos);
}

TEST_CASE("transform report embeds the rewritten DSL and verification") {
    const auto net = crn::schmitz_subnetwork();
    const auto k = crn::schmitz_ndk_kinetics(net);
    const auto result = crn::cf_ri_plus(net, k);
    const auto verification = crn::verify_transform(net, k, result);
    const crn::Json j =
        crn::transform_report("preset:schmitz-ndk", net, k, result, verification);
    CHECK(j["method"] == "cf-ri+");
    CHECK(j["rewritten"] == crn::Json::array({"R5"}));
    CHECK(j["output_classification"] == "PL-RDK");
    CHECK(j["verification"]["all_pass"] == true);
    const std::string dsl = j["transformed_dsl"].get<std::string>();
    CHECK(dsl.find("R5: 2M1 -> M1 + M3") != std::string::npos);
    const std::string text = crn::render_text(j);
    CHECK(text.find("all checks pass") != std::string::npos);
}

TEST_CASE("check report aggregates invariant results") {
    const auto net = crn::schmitz_subnetwork();
    const auto results = crn::check_invariants(net);
    const crn::Json j = crn::check_report("preset:schmitz", results);
    CHECK(j["all_pass"] == true);
    CHECK(j["invariants"].size() == results.size());
}
