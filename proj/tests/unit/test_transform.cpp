#include <doctest.h>

#include <set>

#include "crn/parser.hpp"
#include "crn/presets.hpp"
#include "crn/transform.hpp"

using crn::Complex;
using crn::KineticsClass;
using crn::Rational;

namespace {

std::set<std::string> id_set(const std::vector<std::string>& v) {
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("RDK input short-circuits to the identity transform") {
    const auto net = crn::schmitz_subnetwork();
    const auto k = crn::mass_action_kinetics(net);
    for (const auto method : {crn::cf_rm_plus, crn::cf_ri_plus}) {
        const auto result = method(net, k);
        CHECK(result.network == net);
        CHECK(result.rewritten.empty());
        CHECK(result.added_complexes.empty());
        for (const auto& [from, to] : result.reaction_map)
            CHECK(from == to);
        CHECK(crn::verify_transform(net, k, result).all_pass());
    }
}

TEST_CASE("Schmitz NDK preset: exactly R5 moves to 2M1 -> M1 + M3") {
    const auto net = crn::schmitz_subnetwork();
    const auto k = crn::schmitz_ndk_kinetics(net);
    for (const auto method : {crn::cf_rm_plus, crn::cf_ri_plus}) {
        const auto result = method(net, k);
        CHECK(result.rewritten == std::vector<std::string>{"R5"});
        const auto& r5 = result.network.reactions()[result.network.reaction_index("R5")];
        CHECK(r5.reactant == Complex::single("M1", 2));
        Complex expected_product;
        expected_product.add("M1", 1);
        expected_product.add("M3", 1);
        CHECK(r5.product == expected_product);
        CHECK(crn::classify_plk(result.network, result.kinetics) ==
              KineticsClass::ReactantDetermined);
        CHECK(crn::verify_transform(net, k, result).all_pass());
        CHECK(crn::analyze_f_decomposition(result.network).independent);
    }
}

TEST_CASE("three singleton CF-subsets relocate to the smallest fresh multiples") {
    const auto model = crn::parse_model(
        "R1: A -> B\n"
        "R2: A -> C\n"
        "R3: A -> D\n"
        "kinetics:\n"
        "R1: A=1\n"
        "R2: A=2\n"
        "R3: A=3\n");
    const auto& net = model.network;
    const auto result = crn::cf_rm_plus(net, *model.kinetics);
    CHECK(id_set(result.rewritten) == std::set<std::string>{"R2", "R3"});

    // Brute-force oracle: enumerate multiples of A against the complex set as
    // the transform would have seen it.
    std::set<Complex> complexes(net.complexes().begin(), net.complexes().end());
    const Complex a = Complex::single("A");
    const auto smallest_fresh = [&](const Complex& product) {
        for (crn::Int k = 2;; ++k) {
            if (!complexes.count(a.scaled(k)) &&
                !complexes.count(a.scaled(k - 1) + product)) {
                complexes.insert(a.scaled(k));
                complexes.insert(a.scaled(k - 1) + product);
                return a.scaled(k);
            }
        }
    };
    const Complex expected_r2 = smallest_fresh(Complex::single("C"));
    const Complex expected_r3 = smallest_fresh(Complex::single("D"));
    CHECK(expected_r2 == a.scaled(2));
    CHECK(expected_r3 == a.scaled(3));
    CHECK(result.network.reactions()[result.network.reaction_index("R2")].reactant ==
          expected_r2);
    CHECK(result.network.reactions()[result.network.reaction_index("R3")].reactant ==
          expected_r3);
    CHECK(crn::verify_transform(net, *model.kinetics, result).all_pass());
}

TEST_CASE("CF-RI+ drags the reverse subset with the same catalytic complex") {
    // A hosts two reversible CF-subsets; the moved pair must stay mutual.
    const auto model = crn::parse_model(
        "R1|R2: A <-> B\n"
        "R3|R4: A <-> D\n"
        "kinetics:\n"
        "R1: A=1\n"
        "R2: B=1\n"
        "R3: A=2\n"
        "R4: D=1\n");
    const auto& net = model.network;
    CHECK(crn::classify_plk(net, *model.kinetics) == KineticsClass::NonReactantDetermined);

    const auto result = crn::cf_ri_plus(net, *model.kinetics);
    CHECK(id_set(result.rewritten) == std::set<std::string>{"R3", "R4"});
    const auto& out = result.network;
    const auto& r3 = out.reactions()[out.reaction_index("R3")];
    const auto& r4 = out.reactions()[out.reaction_index("R4")];
    CHECK(r3.reactant == Complex::single("A", 2));
    Complex da;
    da.add("D", 1);
    da.add("A", 1);
    CHECK(r3.product == da);
    CHECK(r4.reactant == da);
    CHECK(r4.product == Complex::single("A", 2));
    CHECK(*r3.reverse_of == "R4");
    CHECK(*r4.reverse_of == "R3");
    CHECK(out.reversible_pair_count() == net.reversible_pair_count());
    CHECK(out.irreversible_count() == net.irreversible_count());
    CHECK(crn::verify_transform(net, *model.kinetics, result).all_pass());

    // Same input under CF-RM+ breaks the R3/R4 pairing.
    const auto rm = crn::cf_rm_plus(net, *model.kinetics);
    CHECK(rm.network.reversible_pair_count() < net.reversible_pair_count());
    const auto& rm_r3 = rm.network.reactions()[rm.network.reaction_index("R3")];
    CHECK_FALSE(rm_r3.reverse_of.has_value());
}

TEST_CASE("CF-RI+ falls back to CF-RM+ without reversible reactions") {
    const auto model = crn::parse_model(
        "R1: A -> B\n"
        "R2: A -> C\n"
        "R3: B -> C\n"
        "kinetics:\n"
        "R1: A=1\n"
        "R2: A=1/2\n"
        "R3: B=1\n");
    const auto rm = crn::cf_rm_plus(model.network, *model.kinetics);
    const auto ri = crn::cf_ri_plus(model.network, *model.kinetics);
    CHECK(rm.network == ri.network);
    CHECK(rm.rewritten == ri.rewritten);
}

TEST_CASE("CF-RI+ is idempotent") {
    const auto net = crn::schmitz_subnetwork();
    const auto k = crn::schmitz_ndk_kinetics(net);
    const auto once = crn::cf_ri_plus(net, k);
    const auto twice = crn::cf_ri_plus(once.network, once.kinetics);
    CHECK(twice.network == once.network);
    CHECK(twice.rewritten.empty());
}

TEST_CASE("complex count never decreases; reaction count is preserved") {
    const auto net = crn::schmitz_subnetwork();
    const auto k = crn::schmitz_ndk_kinetics(net);
    for (const auto method : {crn::cf_rm_plus, crn::cf_ri_plus}) {
        const auto result = method(net, k);
        CHECK(result.network.complexes().size() >= net.complexes().size());
        CHECK(result.network.reactions().size() == net.reactions().size());
    }
}

TEST_CASE("CF-RI+ keeps the fundamental classes coordinate-for-coordinate") {
    const auto net = crn::schmitz_subnetwork();
    const auto k = crn::schmitz_ndk_kinetics(net);
    const auto result = crn::cf_ri_plus(net, k);
    // Ids and reaction order survive, so the partitions must be identical,
    // class for class: reaction vectors are preserved, hence Ker L_O admits
    // the same basis on both sides.
    CHECK(crn::same_partition(crn::f_decomposition(net),
                              crn::f_decomposition(result.network)));
    const auto p_before = crn::p_decomposition(net, crn::default_orientation(net));
    const auto p_after =
        crn::p_decomposition(result.network, crn::default_orientation(result.network));
    CHECK(crn::same_partition(p_before, p_after));
    CHECK(p_before.zero_classes == p_after.zero_classes);
}

TEST_CASE("an NF node at the zero complex is rejected") {
    const auto model = crn::parse_model(
        "R1: 0 -> A\n"
        "R2: 0 -> B\n"
        "kinetics:\n"
        "R1: A=1\n"
        "R2: B=1\n");
    CHECK_THROWS_AS(crn::cf_rm_plus(model.network, *model.kinetics), crn::Error);
    CHECK_THROWS_AS(crn::cf_ri_plus(model.network, *model.kinetics), crn::Error);
}

TEST_CASE("verify_transform reports a detailed diff on corruption") {
    const auto net = crn::schmitz_subnetwork();
    const auto k = crn::schmitz_ndk_kinetics(net);
    auto result = crn::cf_ri_plus(net, k);
    // Tamper: swap the transform output for a different network.
    result.network = crn::parse_network(
        "species: M1 M2 M3 M4 M5 M6\n"
        "R1: M1 -> M5\nR2: M5 -> M1\nR3: M5 -> M6\nR4: M6 -> M1\n"
        "R5: M1 -> M4\nR6: M3 -> M4\nR7: M4 -> M2\nR8: M2 -> M1\n");
    const auto report = crn::verify_transform(net, k, result);
    CHECK_FALSE(report.all_pass());
    bool vector_check_failed = false;
    for (const auto& c : report.checks)
        if (c.name == "reaction vectors preserved" && !c.pass && !c.detail.empty())
            vector_check_failed = true;
    CHECK(vector_check_failed);
}
