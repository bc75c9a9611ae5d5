#pragma once

#include <map>
#include <string>
#include <vector>

#include "crn/network.hpp"

namespace crn {

/// Power-law kinetics: an r x m kinetic order matrix F (row per reaction,
/// column per species) plus a positive rate constant per reaction. Rate
/// constants are carried for round-tripping only; no analysis reads them.
struct PowerLawKinetics {
    Matrix order_matrix;
    std::map<std::string, Rational> rates;

    std::vector<Rational> order_row(std::size_t reaction) const {
        return order_matrix.row(reaction);
    }
};

namespace detail {

inline void check_binding(const ReactionNetwork& net, const PowerLawKinetics& k) {
    if (k.order_matrix.rows() != net.reactions().size() ||
        k.order_matrix.cols() != net.species().size())
        throw Error("kinetic order matrix shape does not match the network");
    for (std::size_t i = 0; i < net.reactions().size(); ++i)
        if (k.order_matrix.row_labels().at(i) != net.reactions()[i].id)
            throw Error("kinetic order matrix rows must follow the reaction order");
    for (const auto& [id, rate] : k.rates) {
        net.reaction_index(id);
        if (rate <= 0)
            throw Error("rate constant for " + id + " must be positive");
    }
}

} // namespace detail

/// Builds kinetics from per-reaction order assignments. Unassigned entries
/// default to zero; rates default to 1.
inline PowerLawKinetics make_kinetics(
    const ReactionNetwork& net,
    const std::map<std::string, std::map<std::string, Rational>>& orders,
    const std::map<std::string, Rational>& rates = {}) {
    PowerLawKinetics k;
    k.order_matrix = Matrix(net.reactions().size(), net.species().size());
    for (const Reaction& r : net.reactions())
        k.order_matrix.row_labels().push_back(r.id);
    k.order_matrix.col_labels() = net.species();
    for (const auto& [id, row] : orders) {
        const std::size_t i = net.reaction_index(id);
        for (const auto& [species, order] : row)
            k.order_matrix.at(i, net.species_index(species)) = order;
    }
    for (const Reaction& r : net.reactions()) {
        auto it = rates.find(r.id);
        k.rates[r.id] = it == rates.end() ? Rational(1) : it->second;
    }
    detail::check_binding(net, k);
    return k;
}

/// Mass action: the kinetic order row of each reaction is its reactant
/// complex, i.e. F is the transpose of Y restricted to reactant columns.
inline PowerLawKinetics mass_action_kinetics(const ReactionNetwork& net) {
    std::map<std::string, std::map<std::string, Rational>> orders;
    for (const Reaction& r : net.reactions()) {
        auto& row = orders[r.id];
        for (const auto& [species, coeff] : r.reactant.terms())
            row[species] = coeff;
    }
    return make_kinetics(net, orders);
}

/// CF-subsets: for every reactant complex, its reactions grouped by exact
/// equality of kinetic order rows. A reactant with more than one group is an
/// NF-node and makes the system non-reactant-determined.
struct CFSubsets {
    struct Node {
        std::size_t reactant;                          // complex index
        std::vector<std::vector<std::size_t>> subsets; // reaction indices
    };
    std::vector<Node> nodes;           // one per reactant complex, complex order
    std::vector<std::size_t> nf_nodes; // complex indices with >= 2 subsets
};

inline CFSubsets cf_subsets(const ReactionNetwork& net, const PowerLawKinetics& k) {
    detail::check_binding(net, k);
    std::map<std::size_t, std::map<std::vector<Rational>, std::vector<std::size_t>>> grouped;
    for (std::size_t i = 0; i < net.reactions().size(); ++i) {
        const std::size_t reactant = net.complex_index(net.reactions()[i].reactant);
        grouped[reactant][k.order_matrix.row(i)].push_back(i);
    }
    CFSubsets out;
    for (auto& [reactant, by_row] : grouped) {
        CFSubsets::Node node;
        node.reactant = reactant;
        for (auto& [row, members] : by_row)
            node.subsets.push_back(members);
        std::sort(node.subsets.begin(), node.subsets.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        if (node.subsets.size() > 1)
            out.nf_nodes.push_back(reactant);
        out.nodes.push_back(std::move(node));
    }
    return out;
}

enum class KineticsClass {
    ReactantDetermined,    // PL-RDK
    NonReactantDetermined, // PL-NDK
};

inline KineticsClass classify_plk(const ReactionNetwork& net, const PowerLawKinetics& k) {
    return cf_subsets(net, k).nf_nodes.empty() ? KineticsClass::ReactantDetermined
                                               : KineticsClass::NonReactantDetermined;
}

inline const char* to_string(KineticsClass c) {
    return c == KineticsClass::ReactantDetermined ? "PL-RDK" : "PL-NDK";
}

} // namespace crn
