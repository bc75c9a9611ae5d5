#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crn/presets.hpp"

namespace crn {

struct Preset {
    ReactionNetwork network;
    std::optional<PowerLawKinetics> kinetics;
};

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "schmitz",          "schmitz-ndk",      "pd-processive:<k>", "pd-distributive:<k>",
        "pd-erk",           "pd-mixed",         "envz-ompr",         "replicator-2x2",
        "heck-terrestrial", "s-system:<m>",     "cycle-chain:<l1,l2,...[,broken]>",
        "random:<seed[,m,r,rev%,mol]>",
    };
    return names;
}

/// Resolves preset names of the form "name" or "name:args".
inline Preset make_preset(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);

    const auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (start <= s.size()) {
            std::size_t end = s.find(',', start);
            if (end == std::string::npos)
                end = s.size();
            parts.push_back(s.substr(start, end - start));
            if (end == s.size())
                break;
            start = end + 1;
        }
        return parts;
    };
    const auto count_arg = [&](const std::string& what) -> std::size_t {
        try {
            const long long v = std::stoll(args);
            if (v < 1)
                throw Error("");
            return static_cast<std::size_t>(v);
        } catch (...) {
            throw Error("preset " + name + " needs a positive " + what +
                        " argument, e.g. " + name + ":3");
        }
    };

    if (name == "schmitz")
        return {schmitz_subnetwork(), std::nullopt};
    if (name == "schmitz-ndk") {
        ReactionNetwork net = schmitz_subnetwork();
        PowerLawKinetics k = schmitz_ndk_kinetics(net);
        return {std::move(net), std::move(k)};
    }
    if (name == "pd-processive")
        return {pd_processive(count_arg("site count")), std::nullopt};
    if (name == "pd-distributive")
        return {pd_distributive(count_arg("site count")), std::nullopt};
    if (name == "pd-erk")
        return {pd_erk(), std::nullopt};
    if (name == "pd-mixed")
        return {pd_mixed(), std::nullopt};
    if (name == "envz-ompr")
        return {envz_ompr(), std::nullopt};
    if (name == "replicator-2x2")
        return {replicator_game_2x2(), std::nullopt};
    if (name == "heck-terrestrial")
        return {heck_terrestrial(), std::nullopt};
    if (name == "s-system") {
        auto [net, kinetics] = s_system_network(s_system_selfreg(count_arg("species count")));
        return {std::move(net), std::move(kinetics)};
    }
    if (name == "cycle-chain") {
        std::vector<std::size_t> lengths;
        bool broken = false;
        for (const std::string& part : split(args)) {
            if (part == "broken") {
                broken = true;
            } else {
                try {
                    lengths.push_back(static_cast<std::size_t>(std::stoull(part)));
                } catch (...) {
                    throw Error("bad cycle-chain argument '" + part + "'");
                }
            }
        }
        return {cycle_chain(lengths, broken), std::nullopt};
    }
    if (name == "random") {
        const std::vector<std::string> parts = split(args);
        if (parts.empty() || parts.front().empty())
            throw Error("preset random needs a seed, e.g. random:42");
        RandomNetworkParams params;
        try {
            const std::uint64_t seed = std::stoull(parts[0]);
            if (parts.size() > 1)
                params.species = std::stoull(parts[1]);
            if (parts.size() > 2)
                params.reactions = std::stoull(parts[2]);
            if (parts.size() > 3)
                params.reversible_percent = static_cast<unsigned>(std::stoul(parts[3]));
            if (parts.size() > 4)
                params.max_molecularity = std::stoull(parts[4]);
            return {random_network(seed, params), std::nullopt};
        } catch (const Error&) {
            throw;
        } catch (...) {
            throw Error("bad random preset arguments '" + args + "'");
        }
    }
    std::string known;
    for (const std::string& p : preset_names())
        known += (known.empty() ? "" : ", ") + p;
    throw Error("unknown preset '" + name + "'; available: " + known);
}

} // namespace crn
