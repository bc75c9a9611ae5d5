#include <doctest.h>

#include <set>

#include "crn/decomposition.hpp"
#include "crn/parser.hpp"
#include "crn/presets.hpp"

#include "../support/oracles.hpp"

using crn::Matrix;
using crn::Orientation;
using crn::Rational;
using crn::ReactionNetwork;
using crn::ReactionPartition;
using crn::SubnetworkType;

namespace {

std::vector<std::string> ids(const ReactionNetwork& net, const std::vector<std::size_t>& rs) {
    std::vector<std::string> out;
    for (std::size_t r : rs)
        out.push_back(net.reactions()[r].id);
    return out;
}

std::set<std::set<std::string>> id_classes(const ReactionNetwork& net,
                                           const ReactionPartition& p) {
    std::set<std::set<std::string>> out;
    for (const auto& cls : p.classes) {
        std::set<std::string> names;
        for (std::size_t r : cls)
            names.insert(net.reactions()[r].id);
        out.insert(std::move(names));
    }
    return out;
}

} // namespace

TEST_CASE("default orientation picks the first direction of each pair") {
    const auto net = crn::schmitz_subnetwork();
    CHECK(ids(net, crn::default_orientation(net).members) ==
          std::vector<std::string>{"R1", "R3", "R4", "R5", "R6", "R7", "R8"});

    const auto pair = crn::parse_network("R1: A <-> B\n");
    CHECK(ids(pair, crn::default_orientation(pair).members) ==
          std::vector<std::string>{"R1f"});

    const auto irr = crn::parse_network("R1: A -> B\nR2: B -> C\n");
    CHECK(crn::default_orientation(irr).members.size() == 2);
}

TEST_CASE("orientation enumeration counts 2^r_rev") {
    CHECK(crn::enumerate_orientations(crn::parse_network("R1: A -> B\n"), 64).size() == 1);
    CHECK(crn::enumerate_orientations(crn::schmitz_subnetwork(), 64).size() == 2);
    CHECK(crn::enumerate_orientations(crn::pd_distributive(1), 64).size() == 4);
    CHECK_THROWS_AS(crn::enumerate_orientations(crn::pd_distributive(4), 64), crn::Error);
}

TEST_CASE("orientation validation") {
    const auto net = crn::schmitz_subnetwork();
    Orientation both{{0, 1, 2, 3, 4, 5, 6, 7}}; // includes R1 and its reverse R2
    CHECK_THROWS_AS(crn::validate_orientation(net, both), crn::Error);
    Orientation missing{{0, 2, 3, 4, 5, 6}}; // misses irreversible R8
    CHECK_THROWS_AS(crn::validate_orientation(net, missing), crn::Error);
}

TEST_CASE("L_O columns are reaction vectors; kernel dimension is r_irr + r_rev - s") {
    const auto simple = crn::parse_network("R1: A -> B\n");
    const Matrix l = crn::l_o_matrix(simple, crn::default_orientation(simple));
    CHECK(l.at(0, 0) == -1);
    CHECK(l.at(1, 0) == 1);

    for (const auto& net :
         {crn::schmitz_subnetwork(), crn::pd_distributive(2), crn::pd_processive(3),
          crn::envz_ompr(), crn::heck_terrestrial(), crn::replicator_game_2x2()}) {
        const auto st = crn::network_stats(net);
        for (const auto& o : crn::enumerate_orientations(net, 64)) {
            const Matrix lo = crn::l_o_matrix(net, o);
            CHECK(crn::kernel_basis(lo).cols() ==
                  st.irreversible_count + st.reversible_pair_count - st.rank);
        }
    }
}

TEST_CASE("Schmitz kernel basis has the published class supports") {
    const auto net = crn::schmitz_subnetwork();
    const Matrix k = crn::kernel_basis(crn::l_o_matrix(net, crn::default_orientation(net)));
    REQUIRE(k.cols() == 2);
    std::set<std::set<std::string>> supports;
    for (std::size_t c = 0; c < 2; ++c) {
        std::set<std::string> support;
        for (std::size_t r = 0; r < k.rows(); ++r)
            if (!k.at(r, c).is_zero())
                support.insert(k.row_labels()[r]);
        supports.insert(std::move(support));
    }
    CHECK(supports == std::set<std::set<std::string>>{{"R1", "R3", "R4"},
                                                      {"R5", "R6", "R7", "R8"}});
}

TEST_CASE("P-decomposition of the running example") {
    const auto net = crn::schmitz_subnetwork();
    const auto p = crn::p_decomposition(net, crn::default_orientation(net));
    CHECK(p.zero_classes.empty());
    CHECK(id_classes(net, p) == std::set<std::set<std::string>>{
                                    {"R1", "R3", "R4"}, {"R5", "R6", "R7", "R8"}});
}

TEST_CASE("trivial kernel puts everything in P0") {
    const auto pair = crn::parse_network("R1: A <-> B\n");
    const auto p = crn::p_decomposition(pair, crn::default_orientation(pair));
    REQUIRE(p.classes.size() == 1);
    CHECK(p.zero_classes == std::vector<std::size_t>{0});
    CHECK(ids(pair, p.classes[0]) == std::vector<std::string>{"R1f"});
    const auto report = crn::analyze_partition(pair, p);
    CHECK(report.w == 0);
}

TEST_CASE("triangle forms a single equivalence class") {
    // Kernel of the 3-cycle is spanned by (1,1,1): all rows proportional.
    const auto net = crn::parse_network("R1: A -> B\nR2: B -> C\nR3: C -> A\n");
    const auto p = crn::p_decomposition(net, crn::default_orientation(net));
    REQUIRE(p.classes.size() == 1);
    CHECK(p.zero_classes.empty());
    CHECK(p.classes[0].size() == 3);
}

TEST_CASE("P-classes are invariant under kernel basis recombination") {
    oracle::Rng rng(99);
    for (const auto& net : {crn::schmitz_subnetwork(), crn::pd_distributive(2),
                            crn::heck_terrestrial(), crn::envz_ompr()}) {
        const Orientation o = crn::default_orientation(net);
        const Matrix kernel = crn::kernel_basis(crn::l_o_matrix(net, o));
        const auto reference = crn::p_decomposition(net, o);
        for (int trial = 0; trial < 5; ++trial) {
            const Matrix u = oracle::random_unimodular(rng, kernel.cols());
            const auto recombined = crn::detail::p_classes_from_kernel(o, kernel * u);
            CHECK(crn::same_partition(reference, recombined));
            CHECK(recombined.zero_classes == reference.zero_classes);
        }
    }
}

TEST_CASE("F-decomposition of the running example") {
    const auto net = crn::schmitz_subnetwork();
    const auto f = crn::f_decomposition(net);
    CHECK(id_classes(net, f) == std::set<std::set<std::string>>{
                                    {"R1", "R2", "R3", "R4"}, {"R5", "R6", "R7", "R8"}});
    CHECK(f.zero_classes.empty());
}

TEST_CASE("F-decomposition is orientation invariant on the preset zoo") {
    for (const auto& net :
         {crn::schmitz_subnetwork(), crn::pd_distributive(2), crn::pd_processive(2),
          crn::pd_erk(), crn::pd_mixed(), crn::envz_ompr(), crn::replicator_game_2x2(),
          crn::heck_terrestrial()}) {
        const auto reference = crn::f_decomposition(net);
        for (const auto& o : crn::enumerate_orientations(net, 64))
            CHECK(crn::same_partition(crn::f_decomposition_from(net, o), reference));
    }
}

TEST_CASE("P-class stoichiometric subspaces coincide across orientations") {
    const auto net = crn::pd_distributive(2);
    const Matrix n = crn::stoichiometric_matrix(net);
    const auto orientations = crn::enumerate_orientations(net, 64);
    const auto reference = crn::p_decomposition(net, orientations.front());
    // Match classes between orientations through pair orbits, then compare
    // the column spans.
    const auto orbit_classes = [&](const ReactionPartition& p) {
        std::map<std::set<std::size_t>, std::vector<std::size_t>> by_orbit;
        for (const auto& cls : p.classes) {
            std::set<std::size_t> orbits;
            for (std::size_t r : cls)
                orbits.insert(std::min(r, net.reverse_index(r).value_or(r)));
            by_orbit[orbits] = cls;
        }
        return by_orbit;
    };
    const auto ref_orbits = orbit_classes(reference);
    for (const auto& o : orientations) {
        const auto got = orbit_classes(crn::p_decomposition(net, o));
        REQUIRE(got.size() == ref_orbits.size());
        for (const auto& [orbit, cls] : got) {
            REQUIRE(ref_orbits.count(orbit));
            const Matrix a = n.columns(cls);
            const Matrix b = n.columns(ref_orbits.at(orbit));
            const std::size_t ra = crn::rank(a);
            CHECK(ra == crn::rank(b));
            CHECK(ra == crn::rank(crn::hconcat({a, b})));
        }
    }
}

TEST_CASE("analyze_partition on the Schmitz F-decomposition") {
    const auto net = crn::schmitz_subnetwork();
    const auto report = crn::analyze_partition(net, crn::f_decomposition(net));
    CHECK(report.independent);
    CHECK(report.incidence_independent);
    CHECK(report.bi_independent);
    CHECK_FALSE(report.c_decomposition);
    CHECK(report.w == 2);
    CHECK(report.sum_n_minus_l == 5);
    CHECK(report.ground_complexes - report.ground_linkage == 5);
    REQUIRE(report.class_stats.size() == 2);
    CHECK(report.class_stats[0].complexes == 3);
    CHECK(report.class_stats[0].linkage == 1);
    CHECK(report.class_stats[0].rank == 2); // the M1-M5-M6 triangle
    CHECK(report.class_stats[1].complexes == 4);
    CHECK(report.class_stats[1].linkage == 1);
    CHECK(report.class_stats[1].rank == 3); // the M1-M3-M4-M2 cycle
    REQUIRE(report.types.size() == 2);
    CHECK(*report.types[0] == SubnetworkType::TypeIII);
    CHECK(*report.types[1] == SubnetworkType::TypeIII);
}

TEST_CASE("P- and F-decomposition properties agree (theorem)") {
    for (const auto& net :
         {crn::schmitz_subnetwork(), crn::pd_distributive(3), crn::pd_processive(2),
          crn::pd_erk(), crn::pd_mixed(), crn::envz_ompr(), crn::replicator_game_2x2(),
          crn::heck_terrestrial(), crn::cycle_chain({3, 4})}) {
        const auto freport = crn::analyze_f_decomposition(net);
        for (const auto& o : crn::enumerate_orientations(net, 64)) {
            const auto preport = crn::analyze_partition(net, crn::p_decomposition(net, o));
            CHECK(preport.independent == freport.independent);
            CHECK(preport.incidence_independent == freport.incidence_independent);
            CHECK(preport.bi_independent == freport.bi_independent);
        }
    }
}

TEST_CASE("the Heck network's fundamental classes match the published ones") {
    const auto net = crn::heck_terrestrial();
    const auto f = crn::f_decomposition(net);
    CHECK(id_classes(net, f) ==
          std::set<std::set<std::string>>{{"R1"},
                                          {"R2"},
                                          {"R3", "R4", "R8", "R9"},
                                          {"R6"},
                                          {"R5", "R10"},
                                          {"R7"}});
    const auto report = crn::analyze_partition(net, f);
    CHECK(report.w == 6);
    CHECK(report.ground_rank == 4);
    CHECK_FALSE(report.independent);        // w > s
    CHECK(report.incidence_independent);    // despite not being a C-decomposition
    CHECK_FALSE(report.c_decomposition);    // but not a C-decomposition
}

TEST_CASE("linkage classes of the distributive PD are not independent") {
    const auto net = crn::pd_distributive(2);
    const auto linkage = crn::linkage_partition(net);
    CHECK(linkage.classes.size() == 2);
    const auto report = crn::analyze_partition(net, linkage);
    CHECK_FALSE(report.independent);
    CHECK(report.incidence_independent); // linkage classes always are
    CHECK(report.c_decomposition);
}

TEST_CASE("classify_type on the running example's classes") {
    const auto net = crn::schmitz_subnetwork();
    const auto o = crn::default_orientation(net);
    const auto idx = [&](const char* id) { return net.reaction_index(id); };
    CHECK(crn::classify_type(net, {idx("R1"), idx("R2"), idx("R3"), idx("R4")}, o.members) ==
          SubnetworkType::TypeIII);
    CHECK(crn::classify_type(net, {idx("R5"), idx("R6"), idx("R7"), idx("R8")}, o.members) ==
          SubnetworkType::TypeIII);
}

TEST_CASE("a single reaction is Type I") {
    const auto net = crn::parse_network("R1: A -> B\n");
    CHECK(crn::classify_type(net, {0}, {0}) == SubnetworkType::TypeI);
}

TEST_CASE("the EnvZ-OmpR network is one Type II class") {
    const auto net = crn::envz_ompr();
    const auto report = crn::analyze_f_decomposition(net);
    REQUIRE(report.partition.classes.size() == 1);
    CHECK(report.partition.classes[0].size() == net.reactions().size());
    CHECK(*report.types[0] == SubnetworkType::TypeII);
    CHECK(report.class_stats[0].deficiency == 1);
    CHECK(crn::network_stats(net).deficiency == 1);
}

TEST_CASE("classify_type rejects non-minimal dependence") {
    // Triangle plus a chord: nullity 2.
    const auto chord = crn::parse_network("R1: A -> B\nR2: B -> C\nR3: C -> A\nR4: A -> C\n");
    CHECK_THROWS_AS(crn::classify_type(chord, {0, 1, 2, 3}, {0, 1, 2, 3}), crn::Error);
    // Triangle plus a detached edge: the unique dependency has a zero entry.
    const auto padded = crn::parse_network("R1: A -> B\nR2: B -> C\nR3: C -> A\nR4: D -> E\n");
    CHECK_THROWS_AS(crn::classify_type(padded, {0, 1, 2, 3}, {0, 1, 2, 3}), crn::Error);
}

TEST_CASE("O-decomposition is trivial and preserves the deficiency") {
    for (const auto& net :
         {crn::schmitz_subnetwork(), crn::pd_distributive(2), crn::envz_ompr(),
          crn::heck_terrestrial()}) {
        const auto st = crn::network_stats(net);
        const auto report = crn::o_decomposition(net, crn::default_orientation(net));
        CHECK(report.trivial.value_or(false));
        CHECK(report.class_stats.front().deficiency == st.deficiency);
        const std::size_t expected_blocks = net.reversible_pair_count() ? 2 : 1;
        CHECK(report.partition.classes.size() == expected_blocks);
    }
    const auto irr = crn::parse_network("R1: A -> B\nR2: B -> C\n");
    CHECK(crn::o_decomposition(irr, crn::default_orientation(irr)).partition.classes.size() ==
          1);
}

TEST_CASE("analyze_partition rejects malformed partitions") {
    const auto net = crn::schmitz_subnetwork();
    ReactionPartition missing;
    missing.kind = crn::PartitionKind::User;
    missing.classes = {{0, 1, 2}};
    CHECK_THROWS_AS(crn::analyze_partition(net, missing), crn::Error);
    ReactionPartition overlapping;
    overlapping.kind = crn::PartitionKind::User;
    overlapping.classes = {{0, 1, 2, 3, 4, 5, 6, 7}, {0}};
    CHECK_THROWS_AS(crn::analyze_partition(net, overlapping), crn::Error);
}

TEST_CASE("bounds short-circuit from quoted figures alone") {
    // Anaerobic yeast fermentation model: s = 7, w = 11. No network needed.
    crn::BoundsInput erm0g;
    erm0g.w = 11;
    erm0g.rank = 7;
    const auto checks = crn::bounds_report(erm0g);
    bool found = false;
    for (const auto& b : checks)
        if (b.name == "w <= s") {
            found = true;
            CHECK(b.applicable);
            CHECK_FALSE(b.satisfied);
            CHECK(b.implication == "not independent");
        } else {
            CHECK_FALSE(b.applicable);
        }
    CHECK(found);

    // Terrestrial carbon recovery: s = 4, w = 6.
    crn::BoundsInput heck;
    heck.w = 6;
    heck.rank = 4;
    for (const auto& b : crn::bounds_report(heck))
        if (b.name == "w <= s")
            CHECK_FALSE(b.satisfied);
}

TEST_CASE("bounds on the Schmitz report") {
    const auto net = crn::schmitz_subnetwork();
    const auto report = crn::analyze_f_decomposition(net);
    const auto checks = crn::bounds_report(crn::bounds_input_from(net, report));
    for (const auto& b : checks)
        if (b.applicable)
            CHECK(b.satisfied);
    // w >= r_irr + r_rev - s is tight here: 2 >= 7 - 5.
    CHECK(report.w == 2);
    CHECK(net.irreversible_count() + net.reversible_pair_count() - report.ground_rank == 2);
}

TEST_CASE("type-dependent bounds stay inapplicable for unclassified partitions") {
    // The species partition carries no Type I/II/III classification, so the
    // delta <= w_II bound must not run with an unknowing w_II of zero.
    const auto [net, kinetics] = crn::s_system_network(crn::s_system_selfreg(3));
    const auto report = crn::analyze_partition(net, crn::species_partition(net));
    CHECK(report.types.empty());
    CHECK(report.independent);
    for (const auto& b : crn::bounds_report(crn::bounds_input_from(net, report))) {
        if (b.name.rfind("delta <=", 0) == 0)
            CHECK_FALSE(b.applicable);
        else if (b.applicable)
            CHECK(b.satisfied);
    }
}

TEST_CASE("the independent all-Type-II bound fires on EnvZ-OmpR") {
    const auto net = crn::envz_ompr();
    const auto report = crn::analyze_f_decomposition(net);
    REQUIRE(report.independent); // single class, trivially
    REQUIRE(report.w == report.w_type_ii);
    bool seen = false;
    for (const auto& b : crn::bounds_report(crn::bounds_input_from(net, report)))
        if (b.name == "delta <= s (independent, all Type II)") {
            seen = true;
            CHECK(b.applicable);
            CHECK(b.satisfied); // delta = 1 <= s = 5
        }
    CHECK(seen);
}

TEST_CASE("partition sums dominate the ground values on arbitrary partitions") {
    oracle::Rng rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        crn::RandomNetworkParams params;
        params.species = 2 + rng.below(4);
        params.reactions = 4 + rng.below(7);
        params.reversible_percent = 30;
        const auto net = crn::random_network(1000 + trial, params);
        // Random user partition of the reaction set.
        const std::size_t buckets = 1 + rng.below(net.reactions().size());
        std::vector<std::vector<std::size_t>> classes(buckets);
        for (std::size_t r = 0; r < net.reactions().size(); ++r)
            classes[rng.below(buckets)].push_back(r);
        ReactionPartition partition;
        partition.kind = crn::PartitionKind::User;
        for (auto& cls : classes)
            if (!cls.empty())
                partition.classes.push_back(std::move(cls));
        const auto report = crn::analyze_partition(net, partition);
        CHECK(report.sum_rank >= report.ground_rank);
        CHECK(report.sum_n_minus_l >= report.ground_complexes - report.ground_linkage);
        CHECK(report.independent == (report.sum_rank == report.ground_rank));
        CHECK(report.incidence_independent ==
              (report.sum_n_minus_l == report.ground_complexes - report.ground_linkage));
        if (report.independent)
            CHECK(report.ground_deficiency <= report.sum_deficiency);
        if (report.incidence_independent)
            CHECK(report.ground_deficiency >= report.sum_deficiency);
        CHECK(report.bi_independent ==
              ((report.independent || report.incidence_independent) &&
               report.sum_deficiency == report.ground_deficiency));
    }
}

TEST_CASE("multistationarity precheck") {
    const auto ab = crn::parse_network("R1: A -> B\n");
    CHECK(crn::multistationarity_precheck(ab, crn::mass_action_kinetics(ab)) ==
          crn::Precheck::NoCapacity);

    const auto rev = crn::parse_network("R1: A <-> B\n");
    CHECK(crn::multistationarity_precheck(rev, crn::mass_action_kinetics(rev)) ==
          crn::Precheck::Inconclusive);

    const auto schmitz = crn::schmitz_subnetwork();
    CHECK(crn::multistationarity_precheck(schmitz, crn::mass_action_kinetics(schmitz)) ==
          crn::Precheck::Inconclusive);
    CHECK_THROWS_AS(
        crn::multistationarity_precheck(schmitz, crn::schmitz_ndk_kinetics(schmitz)),
        crn::Error);
}

TEST_CASE("refinement") {
    const auto net = crn::cycle_chain({3, 4}, true); // broken: F == linkage
    const auto f = crn::f_decomposition(net);
    const auto linkage = crn::linkage_partition(net);
    CHECK(crn::analyze_partition(net, f).c_decomposition);
    CHECK(crn::is_refinement(linkage, f));
    CHECK(crn::is_refinement(f, f));

    ReactionPartition singletons;
    singletons.kind = crn::PartitionKind::User;
    for (std::size_t i = 0; i < net.reactions().size(); ++i)
        singletons.classes.push_back({i});
    CHECK(crn::is_refinement(singletons, f));
    CHECK_FALSE(crn::is_refinement(f, singletons));

    ReactionPartition other;
    other.kind = crn::PartitionKind::User;
    other.classes = {{0, 1}};
    CHECK_THROWS_AS(crn::is_refinement(other, f), crn::Error);
}

TEST_CASE("S-system F-decomposition equals the species decomposition with reversible species") {
    // Two reversible species (R_j = P_j) plus one irreversible: the zero
    // kernel rows must still split per species.
    crn::SSystemSpec spec;
    spec.rules.resize(3);
    spec.rules[0].inflow_regulators = {0};
    spec.rules[0].outflow_regulators = {0}; // reversible
    spec.rules[1].inflow_regulators = {1, 2};
    spec.rules[1].outflow_regulators = {1, 2}; // reversible
    spec.rules[2].inflow_regulators = {0, 1};
    spec.rules[2].outflow_regulators = {2}; // irreversible
    const auto [net, kinetics] = crn::s_system_network(spec);
    CHECK(net.reversible_pair_count() == 2);
    const auto f = crn::f_decomposition(net);
    CHECK(crn::same_partition(f, crn::species_partition(net)));
    const auto report = crn::analyze_partition(net, f);
    CHECK(report.independent);
    CHECK(report.ground_rank == 3);
}
