#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crn/decomposition.hpp"
#include "crn/kinetics.hpp"
#include "crn/network.hpp"

namespace crn {

enum class TransformMethod { CfRmPlus, CfRiPlus };

inline const char* to_string(TransformMethod m) {
    return m == TransformMethod::CfRmPlus ? "cf-rm+" : "cf-ri+";
}

/// Result of a CF-RM+/CF-RI+ run. Reaction ids are stable: the map records
/// the (identity) correspondence, `rewritten` lists the ids whose complexes
/// changed, and every mapped reaction keeps its reaction vector and kinetic
/// order row.
struct TransformResult {
    ReactionNetwork network;
    PowerLawKinetics kinetics;
    TransformMethod method = TransformMethod::CfRmPlus;
    std::map<std::string, std::string> reaction_map;
    std::vector<Complex> added_complexes;
    std::vector<std::string> rewritten;
};

namespace detail {

struct TransformState {
    const ReactionNetwork* net = nullptr;
    const PowerLawKinetics* kinetics = nullptr;
    std::vector<Complex> reactants, products; // by original reaction position
    std::set<Complex> seen;                   // freshness set, grows monotonically
    std::vector<Complex> added;

    explicit TransformState(const ReactionNetwork& n, const PowerLawKinetics& k)
        : net(&n), kinetics(&k) {
        for (const Reaction& r : n.reactions()) {
            reactants.push_back(r.reactant);
            products.push_back(r.product);
        }
        for (const Complex& c : n.complexes())
            seen.insert(c);
    }

    std::optional<std::size_t> partner(std::size_t i) const {
        for (std::size_t j = 0; j < reactants.size(); ++j)
            if (j != i && reactants[j] == products[i] && products[j] == reactants[i])
                return j;
        return std::nullopt;
    }

    /// CF-subsets of the current reaction list at one reactant complex.
    std::vector<std::vector<std::size_t>> subsets_at(const Complex& y) const {
        std::map<std::vector<Rational>, std::vector<std::size_t>> by_row;
        for (std::size_t i = 0; i < reactants.size(); ++i)
            if (reactants[i] == y)
                by_row[kinetics->order_matrix.row(i)].push_back(i);
        std::vector<std::vector<std::size_t>> out;
        for (auto& [row, members] : by_row)
            out.push_back(members);
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        return out;
    }

    /// NF nodes of the current state, in first-appearance order.
    std::vector<Complex> nf_nodes() const {
        std::vector<Complex> nodes;
        std::set<Complex> noted;
        for (const Complex& y : reactants)
            if (noted.insert(y).second && subsets_at(y).size() > 1)
                nodes.push_back(y);
        return nodes;
    }

    bool subset_has_reversible(const std::vector<std::size_t>& subset) const {
        for (std::size_t i : subset)
            if (partner(i))
                return true;
        return false;
    }

    void note_fresh(const Complex& c) {
        if (seen.insert(c).second)
            added.push_back(c);
    }

    /// Relocates one CF-subset to the smallest fresh reactant multiple k*y,
    /// k >= 2; products move to (k-1)*y + p.
    void relocate_by_multiple(const Complex& y, const std::vector<std::size_t>& subset) {
        if (y.is_zero())
            throw Error("cannot relocate a CF-subset at the zero complex: "
                        "it has no distinct reactant multiples");
        for (Int k = 2;; ++k) {
            if (k > 1000000)
                throw Error("internal: no fresh reactant multiple found");
            const Complex new_reactant = y.scaled(k);
            if (seen.count(new_reactant))
                continue;
            const Complex shift = y.scaled(k - 1);
            bool fresh = true;
            for (std::size_t i : subset)
                if (seen.count(shift + products[i])) {
                    fresh = false;
                    break;
                }
            if (!fresh)
                continue;
            note_fresh(new_reactant);
            for (std::size_t i : subset) {
                products[i] = shift + products[i];
                reactants[i] = new_reactant;
                note_fresh(products[i]);
            }
            return;
        }
    }

    /// Relocates a CF-subset containing reversible reactions: the catalytic
    /// complex c = (k-1)*y is added to both sides of every subset member and
    /// of each member's reverse partner, so every pair stays mutual. The
    /// partners leave their own CF-subsets behind; since distinct moved
    /// partners always have distinct reactants, each lands alone on a fresh
    /// complex and no node gains a second kinetic-order row. When a partner
    /// was the last member of an NF-node's conflicting subset, that node
    /// drops off the worklist by itself.
    void relocate_with_catalyst(const Complex& y, const std::vector<std::size_t>& subset) {
        if (y.is_zero())
            throw Error("cannot relocate a CF-subset at the zero complex: "
                        "it has no distinct reactant multiples");
        std::set<std::size_t> closure(subset.begin(), subset.end());
        for (std::size_t i : subset)
            if (const auto p = partner(i))
                closure.insert(*p);
        for (Int k = 2;; ++k) {
            if (k > 1000000)
                throw Error("internal: no fresh catalytic complex found");
            const Complex catalyst = y.scaled(k - 1);
            bool fresh = true;
            for (std::size_t i : closure) {
                if (seen.count(reactants[i] + catalyst) || seen.count(products[i] + catalyst)) {
                    fresh = false;
                    break;
                }
            }
            if (!fresh)
                continue;
            for (std::size_t i : closure) {
                reactants[i] = reactants[i] + catalyst;
                products[i] = products[i] + catalyst;
                note_fresh(reactants[i]);
                note_fresh(products[i]);
            }
            return;
        }
    }
};

inline TransformResult identity_transform(const ReactionNetwork& net,
                                          const PowerLawKinetics& kinetics,
                                          TransformMethod method) {
    TransformResult result{net, kinetics, method, {}, {}, {}};
    for (const Reaction& r : net.reactions())
        result.reaction_map.emplace(r.id, r.id);
    return result;
}

inline TransformResult run_transform(const ReactionNetwork& net,
                                     const PowerLawKinetics& kinetics,
                                     TransformMethod method) {
    if (classify_plk(net, kinetics) == KineticsClass::ReactantDetermined)
        return identity_transform(net, kinetics, method);

    TransformState state(net, kinetics);
    const bool preserve_reversibility = method == TransformMethod::CfRiPlus;

    for (std::size_t guard = 0;; ++guard) {
        if (guard > 10000)
            throw Error("internal: transform failed to converge");
        const std::vector<Complex> nf = state.nf_nodes();
        if (nf.empty())
            break;
        const Complex y = nf.front();
        auto subsets = state.subsets_at(y);

        // Keep one subset in place; reversible subsets are the most expensive
        // to move, so under CF-RI+ they are preferred for keeping.
        std::sort(subsets.begin(), subsets.end(), [&](const auto& a, const auto& b) {
            if (preserve_reversibility) {
                const bool ra = state.subset_has_reversible(a);
                const bool rb = state.subset_has_reversible(b);
                if (ra != rb)
                    return ra;
            }
            if (a.size() != b.size())
                return a.size() > b.size();
            return a.front() < b.front();
        });

        // One relocation per pass: dragging a reverse partner's subset can
        // rearrange other nodes, so everything is recomputed afterwards.
        std::size_t mover = 1;
        if (preserve_reversibility)
            for (std::size_t i = 1; i < subsets.size(); ++i)
                if (!state.subset_has_reversible(subsets[i])) {
                    mover = i;
                    break;
                }
        if (preserve_reversibility && state.subset_has_reversible(subsets[mover]))
            state.relocate_with_catalyst(y, subsets[mover]);
        else
            state.relocate_by_multiple(y, subsets[mover]);
    }

    std::vector<Reaction> rebuilt;
    for (std::size_t i = 0; i < net.reactions().size(); ++i)
        rebuilt.push_back({net.reactions()[i].id, state.reactants[i], state.products[i],
                           std::nullopt});
    TransformResult result;
    result.method = method;
    result.network = ReactionNetwork::from_reactions(std::move(rebuilt), net.species());
    result.kinetics = kinetics;
    detail::check_binding(result.network, result.kinetics);
    result.added_complexes = std::move(state.added);
    for (std::size_t i = 0; i < net.reactions().size(); ++i) {
        const Reaction& before = net.reactions()[i];
        result.reaction_map.emplace(before.id, before.id);
        if (before.reactant != state.reactants[i] || before.product != state.products[i])
            result.rewritten.push_back(before.id);
    }
    if (classify_plk(result.network, result.kinetics) != KineticsClass::ReactantDetermined)
        throw Error("internal: transform output is not reactant-determined");
    return result;
}

} // namespace detail

/// CF-RM+: per NF node, the largest CF-subset stays and every other subset
/// moves to a fresh reactant multiple. Reversible pairings may break.
inline TransformResult cf_rm_plus(const ReactionNetwork& net, const PowerLawKinetics& kinetics) {
    return detail::run_transform(net, kinetics, TransformMethod::CfRmPlus);
}

/// CF-RI+: like CF-RM+ but reversibility/irreversibility preserving. CF
/// subsets containing a reversible reaction move (when they must move) by a
/// catalytic complex added to both sides of both directions.
inline TransformResult cf_ri_plus(const ReactionNetwork& net, const PowerLawKinetics& kinetics) {
    return detail::run_transform(net, kinetics, TransformMethod::CfRiPlus);
}

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const VerifyCheck& c) { return c.pass; });
    }
};

/// The regression harness for the transforms: stoichiometric column space,
/// per-reaction vectors, orientation size, F-decomposition independence
/// equivalence, output class, and (for CF-RI+) reversibility preservation.
inline VerifyReport verify_transform(const ReactionNetwork& net,
                                     const PowerLawKinetics& kinetics,
                                     const TransformResult& result) {
    VerifyReport report;
    const ReactionNetwork& out = result.network;

    {
        VerifyCheck c;
        c.name = "stoichiometric column space equality";
        if (net.species() != out.species()) {
            c.detail = "species universes differ";
        } else {
            const Matrix a = stoichiometric_matrix(net);
            const Matrix b = stoichiometric_matrix(out);
            const std::size_t ra = rank(a), rb = rank(b), rj = rank(hconcat({a, b}));
            c.pass = ra == rb && rb == rj;
            if (!c.pass)
                c.detail = "rank(N)=" + std::to_string(ra) + ", rank(N')=" + std::to_string(rb) +
                           ", joint=" + std::to_string(rj);
        }
        report.checks.push_back(c);
    }
    {
        VerifyCheck c;
        c.name = "reaction vectors preserved";
        c.pass = true;
        for (const Reaction& r : net.reactions()) {
            const std::string& mapped = result.reaction_map.at(r.id);
            const std::size_t i = net.reaction_index(r.id);
            const std::size_t j = out.reaction_index(mapped);
            if (net.reaction_vector(i) != out.reaction_vector(j)) {
                c.pass = false;
                c.detail = "vector of " + r.id + " changed";
                break;
            }
            if (kinetics.order_matrix.row(i) != result.kinetics.order_matrix.row(j)) {
                c.pass = false;
                c.detail = "kinetic order row of " + r.id + " changed";
                break;
            }
        }
        report.checks.push_back(c);
    }
    {
        VerifyCheck c;
        c.name = "orientation size preserved";
        const std::size_t before = net.irreversible_count() + net.reversible_pair_count();
        const std::size_t after = out.irreversible_count() + out.reversible_pair_count();
        c.pass = before == after;
        if (!c.pass)
            c.detail = "|O|=" + std::to_string(before) + " vs " + std::to_string(after);
        report.checks.push_back(c);
    }
    {
        VerifyCheck c;
        c.name = "F-decomposition independence equivalence";
        const bool before = analyze_f_decomposition(net).independent;
        const bool after = analyze_f_decomposition(out).independent;
        c.pass = before == after;
        if (!c.pass)
            c.detail = std::string("input ") + (before ? "independent" : "dependent") +
                       ", output " + (after ? "independent" : "dependent");
        report.checks.push_back(c);
    }
    {
        VerifyCheck c;
        c.name = "output is reactant-determined";
        c.pass = classify_plk(out, result.kinetics) == KineticsClass::ReactantDetermined;
        if (!c.pass)
            c.detail = "output still classifies PL-NDK";
        report.checks.push_back(c);
    }
    if (result.method == TransformMethod::CfRiPlus) {
        VerifyCheck c;
        c.name = "reversibility preserved";
        c.pass = true;
        for (std::size_t i = 0; i < net.reactions().size(); ++i) {
            const Reaction& before = net.reactions()[i];
            const Reaction& after = out.reactions()[out.reaction_index(
                result.reaction_map.at(before.id))];
            const bool was_paired = before.reverse_of.has_value();
            const bool is_paired = after.reverse_of.has_value();
            if (was_paired != is_paired ||
                (was_paired && *after.reverse_of != result.reaction_map.at(*before.reverse_of))) {
                c.pass = false;
                c.detail = "pairing of " + before.id + " changed";
                break;
            }
        }
        report.checks.push_back(c);
    }
    return report;
}

} // namespace crn
