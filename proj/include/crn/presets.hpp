#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crn/kinetics.hpp"
#include "crn/network.hpp"

namespace crn {

namespace detail {

inline Complex cx(std::initializer_list<std::pair<const char*, int>> terms) {
    Complex c;
    for (const auto& [name, coeff] : terms)
        c.add(name, coeff);
    return c;
}

/// Appends "id: from -> to"; with `reversible`, also the reverse "idr".
inline void push(std::vector<Reaction>& out, const std::string& id, const Complex& from,
                 const Complex& to, bool reversible = false) {
    out.push_back({id, from, to, std::nullopt});
    if (reversible)
        out.push_back({id + "r", to, from, std::nullopt});
}

} // namespace detail

/// The eight-reaction carbon cycle subnetwork used as the running fixture:
/// a reversible M1/M5 exchange, the M5-M6-M1 triangle and the M1-M3-M4-M2
/// cycle. Species M1..M6 in pinned order.
inline ReactionNetwork schmitz_subnetwork() {
    using detail::cx;
    std::vector<Reaction> rs;
    rs.push_back({"R1", cx({{"M1", 1}}), cx({{"M5", 1}}), std::nullopt});
    rs.push_back({"R2", cx({{"M5", 1}}), cx({{"M1", 1}}), std::nullopt});
    rs.push_back({"R3", cx({{"M5", 1}}), cx({{"M6", 1}}), std::nullopt});
    rs.push_back({"R4", cx({{"M6", 1}}), cx({{"M1", 1}}), std::nullopt});
    rs.push_back({"R5", cx({{"M1", 1}}), cx({{"M3", 1}}), std::nullopt});
    rs.push_back({"R6", cx({{"M3", 1}}), cx({{"M4", 1}}), std::nullopt});
    rs.push_back({"R7", cx({{"M4", 1}}), cx({{"M2", 1}}), std::nullopt});
    rs.push_back({"R8", cx({{"M2", 1}}), cx({{"M1", 1}}), std::nullopt});
    return ReactionNetwork::from_reactions(std::move(rs),
                                           {"M1", "M2", "M3", "M4", "M5", "M6"});
}

/// Placeholder kinetic orders that make M1 an NF node (R1 and R5 branch from
/// M1 with different rows). Published orders can be supplied through the DSL
/// for exact replication of the source model.
inline PowerLawKinetics schmitz_ndk_kinetics(const ReactionNetwork& net) {
    std::map<std::string, std::map<std::string, Rational>> orders;
    orders["R1"]["M1"] = 1;
    orders["R2"]["M5"] = 1;
    orders["R3"]["M5"] = 1;
    orders["R4"]["M6"] = 1;
    orders["R5"]["M1"] = parse_rational("0.36");
    orders["R6"]["M3"] = 1;
    orders["R7"]["M4"] = 1;
    orders["R8"]["M2"] = 1;
    return make_kinetics(net, orders);
}

/// k-site processive phosphorylation/dephosphorylation: two complexation
/// chains with a final irreversible release step each.
inline ReactionNetwork pd_processive(std::size_t k) {
    if (k < 1)
        throw Error("k must be >= 1");
    using detail::cx;
    const auto s = [](std::size_t i) { return "S" + std::to_string(i); };
    std::vector<Reaction> rs;
    std::size_t id = 0;
    const auto next = [&] { return "R" + std::to_string(++id); };
    // S0+K <-> S0K <-> S1K <-> ... <-> S(k-1)K -> Sk+K
    detail::push(rs, next(), cx({{s(0).c_str(), 1}, {"K", 1}}), Complex::single(s(0) + "K"), true);
    for (std::size_t i = 0; i + 1 < k; ++i)
        detail::push(rs, next(), Complex::single(s(i) + "K"), Complex::single(s(i + 1) + "K"),
                     true);
    detail::push(rs, next(), Complex::single(s(k - 1) + "K"),
                 cx({{s(k).c_str(), 1}, {"K", 1}}));
    // Sk+F <-> SkF <-> ... <-> S1F -> S0+F
    detail::push(rs, next(), cx({{s(k).c_str(), 1}, {"F", 1}}), Complex::single(s(k) + "F"), true);
    for (std::size_t i = k; i > 1; --i)
        detail::push(rs, next(), Complex::single(s(i) + "F"), Complex::single(s(i - 1) + "F"),
                     true);
    detail::push(rs, next(), Complex::single(s(1) + "F"), cx({{s(0).c_str(), 1}, {"F", 1}}));
    return ReactionNetwork::from_reactions(std::move(rs));
}

/// k-site distributive phosphorylation/dephosphorylation: binding reversible,
/// release irreversible, substrate freed at every site.
inline ReactionNetwork pd_distributive(std::size_t k) {
    if (k < 1)
        throw Error("k must be >= 1");
    using detail::cx;
    const auto s = [](std::size_t i) { return "S" + std::to_string(i); };
    std::vector<Reaction> rs;
    std::size_t id = 0;
    const auto next = [&] { return "R" + std::to_string(++id); };
    for (std::size_t i = 0; i < k; ++i) {
        detail::push(rs, next(), cx({{s(i).c_str(), 1}, {"K", 1}}), Complex::single(s(i) + "K"),
                     true);
        detail::push(rs, next(), Complex::single(s(i) + "K"),
                     cx({{s(i + 1).c_str(), 1}, {"K", 1}}));
    }
    for (std::size_t i = 0; i < k; ++i) {
        detail::push(rs, next(), cx({{s(i + 1).c_str(), 1}, {"F", 1}}),
                     Complex::single(s(i + 1) + "F"), true);
        detail::push(rs, next(), Complex::single(s(i + 1) + "F"),
                     cx({{s(i).c_str(), 1}, {"F", 1}}));
    }
    return ReactionNetwork::from_reactions(std::move(rs));
}

/// Dual-site phosphorylation with the ERK mechanism.
inline ReactionNetwork pd_erk() {
    using detail::cx;
    std::vector<Reaction> rs;
    std::size_t id = 0;
    const auto next = [&] { return "R" + std::to_string(++id); };
    detail::push(rs, next(), cx({{"S00", 1}, {"K", 1}}), Complex::single("S00K"), true);
    detail::push(rs, next(), Complex::single("S00K"), Complex::single("S01K"));
    detail::push(rs, next(), Complex::single("S01K"), cx({{"S11", 1}, {"K", 1}}));
    detail::push(rs, next(), cx({{"S11", 1}, {"F", 1}}), Complex::single("S11F"), true);
    detail::push(rs, next(), Complex::single("S11F"), Complex::single("S10F"));
    detail::push(rs, next(), Complex::single("S10F"), cx({{"S00", 1}, {"F", 1}}));
    detail::push(rs, next(), Complex::single("S01K"), cx({{"S01", 1}, {"K", 1}}), true);
    detail::push(rs, next(), Complex::single("S10F"), cx({{"S10", 1}, {"F", 1}}), true);
    detail::push(rs, next(), cx({{"S10", 1}, {"K", 1}}), Complex::single("S10K"), true);
    detail::push(rs, next(), Complex::single("S10K"), cx({{"S11", 1}, {"K", 1}}));
    detail::push(rs, next(), cx({{"S01", 1}, {"F", 1}}), Complex::single("S01F"), true);
    detail::push(rs, next(), Complex::single("S01F"), cx({{"S00", 1}, {"F", 1}}));
    return ReactionNetwork::from_reactions(std::move(rs));
}

/// Dual-site phosphorylation, mixed processive/distributive mechanism.
inline ReactionNetwork pd_mixed() {
    using detail::cx;
    std::vector<Reaction> rs;
    std::size_t id = 0;
    const auto next = [&] { return "R" + std::to_string(++id); };
    detail::push(rs, next(), cx({{"S0", 1}, {"K", 1}}), Complex::single("S0K"), true);
    detail::push(rs, next(), Complex::single("S0K"), Complex::single("S1K"));
    detail::push(rs, next(), Complex::single("S1K"), cx({{"S2", 1}, {"K", 1}}));
    detail::push(rs, next(), cx({{"S2", 1}, {"F", 1}}), Complex::single("S2F"), true);
    detail::push(rs, next(), Complex::single("S2F"), cx({{"S1", 1}, {"F", 1}}));
    detail::push(rs, next(), cx({{"S1", 1}, {"F", 1}}), Complex::single("S1F"), true);
    detail::push(rs, next(), Complex::single("S1F"), cx({{"S0", 1}, {"F", 1}}));
    return ReactionNetwork::from_reactions(std::move(rs));
}

/// EnvZ-OmpR osmoregulation network of E. coli.
inline ReactionNetwork envz_ompr() {
    using detail::cx;
    std::vector<Reaction> rs;
    std::size_t id = 0;
    const auto next = [&] { return "R" + std::to_string(++id); };
    detail::push(rs, next(), Complex::single("X"), Complex::single("XT"), true);
    detail::push(rs, next(), Complex::single("XT"), Complex::single("Xp"));
    detail::push(rs, next(), cx({{"Xp", 1}, {"Y", 1}}), Complex::single("XpY"), true);
    detail::push(rs, next(), Complex::single("XpY"), cx({{"X", 1}, {"Yp", 1}}));
    detail::push(rs, next(), cx({{"XT", 1}, {"Yp", 1}}), Complex::single("XTYp"), true);
    detail::push(rs, next(), Complex::single("XTYp"), cx({{"XT", 1}, {"Y", 1}}));
    return ReactionNetwork::from_reactions(std::move(rs));
}

/// Replicator dynamics of a symmetric 2x2 "playing the field" game as a
/// power-law system: growth, decay and crowding reactions per strategy.
inline ReactionNetwork replicator_game_2x2() {
    using detail::cx;
    std::vector<Reaction> rs;
    for (int i = 1; i <= 2; ++i) {
        const std::string x = "x" + std::to_string(i);
        rs.push_back({"G" + std::to_string(i), Complex::single(x), Complex::single(x, 2),
                      std::nullopt});
        rs.push_back({"D" + std::to_string(i), Complex::single(x), Complex::zero(),
                      std::nullopt});
        rs.push_back({"C" + std::to_string(i), Complex::single(x, 2), Complex::single(x),
                      std::nullopt});
    }
    return ReactionNetwork::from_reactions(std::move(rs), {"x1", "x2"});
}

/// Terrestrial carbon recovery network, R1..R10.
inline ReactionNetwork heck_terrestrial() {
    using detail::cx;
    std::vector<Reaction> rs;
    rs.push_back({"R1", cx({{"A1", 1}, {"A2", 2}}), cx({{"A1", 2}, {"A2", 1}}), std::nullopt});
    rs.push_back({"R2", cx({{"A1", 1}, {"A2", 1}}), cx({{"A2", 2}}), std::nullopt});
    rs.push_back({"R3", cx({{"A2", 1}}), cx({{"A3", 1}}), std::nullopt});
    rs.push_back({"R4", cx({{"A3", 1}}), cx({{"A2", 1}}), std::nullopt});
    rs.push_back({"R5", cx({{"A4", 1}, {"A5", 1}}), cx({{"A4", 2}}), std::nullopt});
    rs.push_back({"R6", cx({{"A1", 1}, {"A4", 2}}), cx({{"A1", 2}, {"A4", 1}}), std::nullopt});
    rs.push_back({"R7", cx({{"A1", 1}, {"A4", 1}}), cx({{"A4", 2}}), std::nullopt});
    rs.push_back({"R8", cx({{"A4", 1}}), cx({{"A3", 1}}), std::nullopt});
    rs.push_back({"R9", cx({{"A3", 1}}), cx({{"A4", 1}}), std::nullopt});
    rs.push_back({"R10", cx({{"A1", 1}, {"A2", 1}, {"A4", 1}}),
                  cx({{"A5", 1}, {"A2", 1}, {"A4", 1}}), std::nullopt});
    return ReactionNetwork::from_reactions(std::move(rs), {"A1", "A2", "A3", "A4", "A5"});
}

/// One inflow and one outflow reaction per species. The inflow of species j
/// turns the sum of its inflow regulators A into A + x_j; the outflow turns
/// B + x_j into the sum of its outflow regulators B. Species j is reversible
/// exactly when the two regulator sets coincide.
struct SSystemSpec {
    struct SpeciesRule {
        std::vector<std::size_t> inflow_regulators;  // indices into the species list
        std::vector<std::size_t> outflow_regulators;
        std::map<std::size_t, Rational> inflow_orders;  // per regulator; default 1
        std::map<std::size_t, Rational> outflow_orders;
    };
    std::vector<SpeciesRule> rules; // one per species x1..xm
};

/// The self-regulating, non-regulated variant: x_i -> 2x_i and x_i -> 0.
inline SSystemSpec s_system_selfreg(std::size_t species) {
    SSystemSpec spec;
    for (std::size_t j = 0; j < species; ++j) {
        SSystemSpec::SpeciesRule rule;
        rule.inflow_regulators = {j};
        spec.rules.push_back(std::move(rule));
    }
    return spec;
}

inline std::pair<ReactionNetwork, PowerLawKinetics> s_system_network(const SSystemSpec& spec) {
    if (spec.rules.empty())
        throw Error("an S-system needs at least one species");
    const auto name = [](std::size_t j) { return "x" + std::to_string(j + 1); };
    std::vector<std::string> species;
    for (std::size_t j = 0; j < spec.rules.size(); ++j)
        species.push_back(name(j));

    std::vector<Reaction> rs;
    std::map<std::string, std::map<std::string, Rational>> orders;
    for (std::size_t j = 0; j < spec.rules.size(); ++j) {
        const auto& rule = spec.rules[j];
        Complex inflow_base;
        for (std::size_t reg : rule.inflow_regulators)
            inflow_base.add(name(reg), 1);
        Complex outflow_base;
        for (std::size_t reg : rule.outflow_regulators)
            outflow_base.add(name(reg), 1);
        const std::string in_id = "IN" + std::to_string(j + 1);
        const std::string out_id = "OUT" + std::to_string(j + 1);
        rs.push_back({in_id, inflow_base, inflow_base + Complex::single(name(j)), std::nullopt});
        rs.push_back({out_id, outflow_base + Complex::single(name(j)), outflow_base,
                      std::nullopt});
        for (std::size_t reg : rule.inflow_regulators) {
            auto it = rule.inflow_orders.find(reg);
            orders[in_id][name(reg)] = it == rule.inflow_orders.end() ? Rational(1) : it->second;
        }
        for (std::size_t reg : rule.outflow_regulators) {
            auto it = rule.outflow_orders.find(reg);
            orders[out_id][name(reg)] =
                it == rule.outflow_orders.end() ? Rational(1) : it->second;
        }
    }
    ReactionNetwork net = ReactionNetwork::from_reactions(std::move(rs), species);
    PowerLawKinetics kinetics = make_kinetics(net, orders);
    return {std::move(net), std::move(kinetics)};
}

/// A chain of directed monomolecular cycles (lengths >= 3); consecutive
/// cycles share exactly one complex unless `broken`, in which case the
/// cycles are disjoint. `attach` picks which vertex of the previous cycle is
/// shared (any position except its own attachment point).
inline ReactionNetwork cycle_chain(const std::vector<std::size_t>& lengths, bool broken = false,
                                   std::size_t attach = 1) {
    if (lengths.empty())
        throw Error("cycle_chain needs at least one cycle");
    for (std::size_t len : lengths)
        if (len < 3)
            throw Error("cycle lengths must be >= 3");
    std::vector<Reaction> rs;
    std::size_t species_counter = 0;
    std::size_t reaction_counter = 0;
    const auto fresh = [&] { return "X" + std::to_string(++species_counter); };
    std::vector<std::string> previous; // vertex species of the previous cycle
    for (std::size_t c = 0; c < lengths.size(); ++c) {
        std::vector<std::string> vertices;
        if (c > 0 && !broken) {
            if (attach == 0 || attach >= previous.size())
                throw Error("attach position out of range");
            vertices.push_back(previous[attach]);
        } else {
            vertices.push_back(fresh());
        }
        while (vertices.size() < lengths[c])
            vertices.push_back(fresh());
        for (std::size_t v = 0; v < vertices.size(); ++v)
            rs.push_back({"R" + std::to_string(++reaction_counter),
                          Complex::single(vertices[v]),
                          Complex::single(vertices[(v + 1) % vertices.size()]), std::nullopt});
        previous = std::move(vertices);
    }
    return ReactionNetwork::from_reactions(std::move(rs));
}

struct RandomNetworkParams {
    std::size_t species = 4;
    std::size_t reactions = 8;          // target reaction count (reverses included)
    unsigned reversible_percent = 25;   // chance that a reaction gets a reverse
    std::size_t max_molecularity = 2;   // largest stoichiometric coefficient
    bool allow_zero_complex = true;
};

namespace detail {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline Complex random_complex(SplitMix64& rng, const RandomNetworkParams& p) {
    if (p.allow_zero_complex && rng.below(10) == 0)
        return Complex::zero();
    Complex c;
    const std::size_t terms = 1 + rng.below(2);
    for (std::size_t t = 0; t < terms; ++t) {
        const std::string name = "M" + std::to_string(1 + rng.below(p.species));
        const Rational coeff(1 + rng.below(p.max_molecularity));
        if (c.coefficient(name).is_zero())
            c.add(name, coeff);
    }
    if (c.is_zero())
        return random_complex(rng, p);
    return c;
}

} // namespace detail

/// Deterministic random network per seed; the property-test corpus.
inline ReactionNetwork random_network(std::uint64_t seed, const RandomNetworkParams& params) {
    if (params.species == 0 || params.reactions == 0 || params.max_molecularity == 0)
        throw Error("random_network parameters must be positive");
    detail::SplitMix64 rng(seed);
    std::vector<Reaction> rs;
    std::set<std::pair<Complex, Complex>> pairs;
    std::size_t attempts = 0;
    std::size_t id = 0;
    while (rs.size() < params.reactions) {
        if (++attempts > 10000)
            throw Error("random_network: unsatisfiable parameters");
        const Complex from = detail::random_complex(rng, params);
        const Complex to = detail::random_complex(rng, params);
        if (from == to || pairs.count({from, to}))
            continue;
        pairs.emplace(from, to);
        rs.push_back({"R" + std::to_string(++id), from, to, std::nullopt});
        if (rs.size() < params.reactions && rng.below(100) < params.reversible_percent &&
            !pairs.count({to, from})) {
            pairs.emplace(to, from);
            rs.push_back({"R" + std::to_string(++id), to, from, std::nullopt});
        }
    }
    return ReactionNetwork::from_reactions(std::move(rs));
}

/// Random power-law kinetics. Reactant-determined by construction unless
/// `force_ndk`, which needs a non-zero reactant complex with at least two
/// branching reactions and returns nothing when the network has none. Rows
/// at the zero complex always stay equal, so the transforms stay applicable.
inline std::optional<PowerLawKinetics> random_kinetics(std::uint64_t seed,
                                                       const ReactionNetwork& net,
                                                       bool force_ndk) {
    detail::SplitMix64 rng(seed ^ 0x5bf03635u);
    const auto random_order = [&]() -> Rational {
        static const int nums[] = {0, 1, 1, 2, 3, -1, 1, 9};
        static const int dens[] = {1, 1, 2, 1, 2, 1, 5, 25};
        const std::size_t pick = rng.below(8);
        return Rational(nums[pick], dens[pick]);
    };

    // One row per reactant complex.
    std::map<Complex, std::map<std::string, Rational>> row_of;
    for (const Reaction& r : net.reactions()) {
        if (row_of.count(r.reactant))
            continue;
        std::map<std::string, Rational> row;
        if (!r.reactant.is_zero())
            for (const auto& [species, coeff] : r.reactant.terms())
                row[species] = rng.below(2) ? coeff : random_order();
        row_of.emplace(r.reactant, std::move(row));
    }
    std::map<std::string, std::map<std::string, Rational>> orders;
    for (const Reaction& r : net.reactions())
        orders[r.id] = row_of.at(r.reactant);

    if (force_ndk) {
        std::map<Complex, std::vector<std::string>> fibers;
        for (const Reaction& r : net.reactions())
            if (!r.reactant.is_zero())
                fibers[r.reactant].push_back(r.id);
        std::vector<const std::vector<std::string>*> branching;
        for (const auto& [reactant, ids] : fibers)
            if (ids.size() >= 2)
                branching.push_back(&ids);
        if (branching.empty())
            return std::nullopt;
        const auto& ids = *branching[rng.below(branching.size())];
        const std::string& victim = ids[1 + rng.below(ids.size() - 1)];
        const Complex& reactant = net.reactions()[net.reaction_index(victim)].reactant;
        const std::string& species = reactant.terms().begin()->first;
        orders[victim][species] += 1;
    }
    return make_kinetics(net, orders);
}

} // namespace crn
