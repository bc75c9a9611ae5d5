#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crn/matrix.hpp"

namespace crn {

/// A complex is a formal combination of species with strictly positive
/// coefficients; the empty combination is the zero complex "0". Identity is
/// structural: two complexes with the same term map are the same complex.
class Complex {
public:
    Complex() = default;

    static Complex zero() { return {}; }

    static Complex single(const std::string& species, Rational coeff = 1) {
        Complex c;
        c.add(species, coeff);
        return c;
    }

    void add(const std::string& species, const Rational& coeff) {
        if (species.empty())
            throw Error("complex term with empty species name");
        if (coeff <= 0)
            throw Error("complex coefficient must be positive");
        terms_[species] += coeff;
    }

    const std::map<std::string, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const std::string& species) const {
        auto it = terms_.find(species);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Complex scaled(const Int& factor) const {
        if (factor <= 0)
            throw Error("complex scale factor must be positive");
        Complex out;
        for (const auto& [name, coeff] : terms_)
            out.terms_.emplace(name, coeff * Rational(factor));
        return out;
    }

    friend Complex operator+(const Complex& a, const Complex& b) {
        Complex out = a;
        for (const auto& [name, coeff] : b.terms_)
            out.terms_[name] += coeff;
        return out;
    }

    friend bool operator==(const Complex& a, const Complex& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
    friend bool operator<(const Complex& a, const Complex& b) { return a.terms_ < b.terms_; }

private:
    std::map<std::string, Rational> terms_;
};

struct Reaction {
    std::string id;
    Complex reactant;
    Complex product;
    /// Id of the structurally reverse reaction, when present in the network.
    /// Filled in by ReactionNetwork::from_reactions; the pairing is mutual.
    std::optional<std::string> reverse_of;

    friend bool operator==(const Reaction& a, const Reaction& b) {
        return a.id == b.id && a.reactant == b.reactant && a.product == b.product &&
               a.reverse_of == b.reverse_of;
    }
};

struct NetworkStats {
    std::size_t species_count = 0;          // m
    std::size_t complex_count = 0;          // n
    std::size_t reaction_count = 0;         // r
    std::size_t irreversible_count = 0;     // r_irr
    std::size_t reversible_pair_count = 0;  // r_rev
    std::size_t linkage_class_count = 0;    // l
    std::size_t strong_class_count = 0;     // sl
    std::size_t rank = 0;                   // s
    std::size_t deficiency = 0;             // n - l - s
    bool weakly_reversible = false;
    std::vector<std::vector<std::size_t>> terminal_strong_classes; // complex indices
};

/// Immutable network triple (species, complexes, reactions). Complexes are
/// deduplicated structurally in first-appearance order; the species universe
/// is inferred from the reactions unless an explicit ordering is supplied.
/// Reversibility is a structural property: two reactions are a reversible
/// pair exactly when each one's reactant is the other's product.
class ReactionNetwork {
public:
    static ReactionNetwork from_reactions(std::vector<Reaction> reactions,
                                          std::vector<std::string> species_order = {}) {
        if (reactions.empty())
            throw Error("a reaction network needs at least one reaction");

        ReactionNetwork net;
        std::set<std::pair<Complex, Complex>> seen_pairs;
        std::set<std::string> seen_ids;
        for (const Reaction& r : reactions) {
            if (r.id.empty())
                throw Error("reaction with empty id");
            if (!seen_ids.insert(r.id).second)
                throw Error("duplicate reaction id '" + r.id + "'");
            if (r.reactant == r.product)
                throw Error("reaction " + r.id + ": reactant equals product");
            if (!seen_pairs.emplace(r.reactant, r.product).second)
                throw Error("duplicate reaction " + r.id);
        }

        // Species universe.
        const auto note_species = [&](const Complex& c) {
            for (const auto& [name, coeff] : c.terms()) {
                (void)coeff;
                if (!net.species_index_.count(name)) {
                    net.species_index_.emplace(name, net.species_.size());
                    net.species_.push_back(name);
                }
            }
        };
        if (!species_order.empty()) {
            for (const std::string& name : species_order) {
                if (name.empty())
                    throw Error("empty species name");
                if (!net.species_index_.emplace(name, net.species_.size()).second)
                    throw Error("duplicate species '" + name + "' in species list");
                net.species_.push_back(name);
            }
            for (const Reaction& r : reactions)
                for (const Complex* c : {&r.reactant, &r.product})
                    for (const auto& [name, coeff] : c->terms()) {
                        (void)coeff;
                        if (!net.species_index_.count(name))
                            throw Error("species '" + name + "' missing from species list");
                    }
        } else {
            for (const Reaction& r : reactions) {
                note_species(r.reactant);
                note_species(r.product);
            }
        }

        // Complex list, first appearance order.
        const auto note_complex = [&](const Complex& c) {
            if (!net.complex_index_.count(c)) {
                net.complex_index_.emplace(c, net.complexes_.size());
                net.complexes_.push_back(c);
            }
        };
        for (const Reaction& r : reactions) {
            note_complex(r.reactant);
            note_complex(r.product);
        }

        // Structural reversibility pairing.
        std::map<std::pair<Complex, Complex>, std::size_t> by_pair;
        for (std::size_t i = 0; i < reactions.size(); ++i)
            by_pair.emplace(std::make_pair(reactions[i].reactant, reactions[i].product), i);
        for (std::size_t i = 0; i < reactions.size(); ++i) {
            auto partner = by_pair.find(std::make_pair(reactions[i].product, reactions[i].reactant));
            if (partner != by_pair.end()) {
                const std::string& declared = reactions[partner->second].id;
                if (reactions[i].reverse_of && *reactions[i].reverse_of != declared)
                    throw Error("reaction " + reactions[i].id + ": declared reverse '" +
                                *reactions[i].reverse_of + "' does not match structure");
                reactions[i].reverse_of = declared;
            } else if (reactions[i].reverse_of) {
                throw Error("reaction " + reactions[i].id + ": declared reverse '" +
                            *reactions[i].reverse_of + "' is not present");
            }
        }

        net.reactions_ = std::move(reactions);
        for (std::size_t i = 0; i < net.reactions_.size(); ++i)
            net.reaction_index_.emplace(net.reactions_[i].id, i);

        std::size_t paired = 0;
        for (const Reaction& r : net.reactions_)
            if (r.reverse_of)
                ++paired;
        net.reversible_pairs_ = paired / 2;
        net.irreversible_ = net.reactions_.size() - paired;
        return net;
    }

    const std::vector<std::string>& species() const noexcept { return species_; }
    const std::vector<Complex>& complexes() const noexcept { return complexes_; }
    const std::vector<Reaction>& reactions() const noexcept { return reactions_; }

    std::size_t species_index(const std::string& name) const {
        auto it = species_index_.find(name);
        if (it == species_index_.end())
            throw Error("unknown species '" + name + "'");
        return it->second;
    }

    std::size_t complex_index(const Complex& c) const {
        auto it = complex_index_.find(c);
        if (it == complex_index_.end())
            throw Error("unknown complex");
        return it->second;
    }

    std::size_t reaction_index(const std::string& id) const {
        auto it = reaction_index_.find(id);
        if (it == reaction_index_.end())
            throw Error("unknown reaction '" + id + "'");
        return it->second;
    }

    bool has_reaction(const std::string& id) const { return reaction_index_.count(id) != 0; }

    std::size_t irreversible_count() const noexcept { return irreversible_; }
    std::size_t reversible_pair_count() const noexcept { return reversible_pairs_; }

    std::optional<std::size_t> reverse_index(std::size_t reaction) const {
        const auto& rev = reactions_.at(reaction).reverse_of;
        if (!rev)
            return std::nullopt;
        return reaction_index(*rev);
    }

    std::vector<Rational> species_vector(const Complex& c) const {
        std::vector<Rational> v(species_.size());
        for (const auto& [name, coeff] : c.terms())
            v[species_index(name)] = coeff;
        return v;
    }

    /// product - reactant, indexed by species.
    std::vector<Rational> reaction_vector(std::size_t reaction) const {
        const Reaction& r = reactions_.at(reaction);
        std::vector<Rational> v = species_vector(r.product);
        for (const auto& [name, coeff] : r.reactant.terms())
            v[species_index(name)] -= coeff;
        return v;
    }

    friend bool operator==(const ReactionNetwork& a, const ReactionNetwork& b) {
        return a.species_ == b.species_ && a.reactions_ == b.reactions_;
    }

private:
    std::vector<std::string> species_;
    std::vector<Complex> complexes_;
    std::vector<Reaction> reactions_;
    std::size_t irreversible_ = 0;
    std::size_t reversible_pairs_ = 0;
    std::map<std::string, std::size_t> species_index_;
    std::map<Complex, std::size_t> complex_index_;
    std::map<std::string, std::size_t> reaction_index_;
};

/// Y: species x complexes, Y_ij = coefficient of species i in complex j.
inline Matrix molecularity_matrix(const ReactionNetwork& net) {
    Matrix y(net.species().size(), net.complexes().size());
    y.row_labels() = net.species();
    for (std::size_t j = 0; j < net.complexes().size(); ++j) {
        for (const auto& [name, coeff] : net.complexes()[j].terms())
            y.at(net.species_index(name), j) = coeff;
        y.col_labels().push_back("C" + std::to_string(j + 1));
    }
    return y;
}

/// I_a: complexes x reactions, one -1 at the reactant and +1 at the product
/// per column.
inline Matrix incidence_matrix(const ReactionNetwork& net) {
    Matrix ia(net.complexes().size(), net.reactions().size());
    for (std::size_t j = 0; j < net.reactions().size(); ++j) {
        const Reaction& r = net.reactions()[j];
        ia.at(net.complex_index(r.reactant), j) = -1;
        ia.at(net.complex_index(r.product), j) = 1;
        ia.col_labels().push_back(r.id);
    }
    for (std::size_t i = 0; i < net.complexes().size(); ++i)
        ia.row_labels().push_back("C" + std::to_string(i + 1));
    return ia;
}

/// N = Y * I_a, columns are the reaction vectors. The factorization is
/// checked entry-wise against the directly assembled reaction vectors.
inline Matrix stoichiometric_matrix(const ReactionNetwork& net) {
    Matrix n = molecularity_matrix(net) * incidence_matrix(net);
    for (std::size_t j = 0; j < net.reactions().size(); ++j) {
        const std::vector<Rational> direct = net.reaction_vector(j);
        for (std::size_t i = 0; i < net.species().size(); ++i)
            if (n.at(i, j) != direct[i])
                throw Error("stoichiometric matrix factorization mismatch");
    }
    return n;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> normalize_classes(
    std::vector<std::vector<std::size_t>> classes) {
    for (auto& c : classes)
        std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

} // namespace detail

/// Connected components of the undirected reaction graph on complexes.
inline std::vector<std::vector<std::size_t>> linkage_classes(const ReactionNetwork& net) {
    const std::size_t n = net.complexes().size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i)
        parent[i] = i;
    const auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Reaction& r : net.reactions()) {
        std::size_t a = find(net.complex_index(r.reactant));
        std::size_t b = find(net.complex_index(r.product));
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i)
        groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups)
        out.push_back(std::move(members));
    return detail::normalize_classes(std::move(out));
}

/// Strongly connected components of the directed reaction graph.
inline std::vector<std::vector<std::size_t>> strong_linkage_classes(const ReactionNetwork& net) {
    const std::size_t n = net.complexes().size();
    std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
    for (const Reaction& r : net.reactions()) {
        const std::size_t a = net.complex_index(r.reactant);
        const std::size_t b = net.complex_index(r.product);
        fwd[a].push_back(b);
        bwd[b].push_back(a);
    }
    // Kosaraju, iterative.
    std::vector<char> visited(n, 0);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start])
            continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
        visited[start] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < fwd[v].size()) {
                const std::size_t to = fwd[v][next++];
                if (!visited[to]) {
                    visited[to] = 1;
                    stack.emplace_back(to, 0);
                }
            } else {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }
    std::vector<std::vector<std::size_t>> components;
    std::vector<char> assigned(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (assigned[*it])
            continue;
        std::vector<std::size_t> comp;
        std::vector<std::size_t> stack{*it};
        assigned[*it] = 1;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::size_t to : bwd[v])
                if (!assigned[to]) {
                    assigned[to] = 1;
                    stack.push_back(to);
                }
        }
        components.push_back(std::move(comp));
    }
    return detail::normalize_classes(std::move(components));
}

/// Strong classes with no reaction leaving the class.
inline std::vector<std::vector<std::size_t>> terminal_strong_linkage_classes(
    const ReactionNetwork& net) {
    const auto strong = strong_linkage_classes(net);
    std::vector<std::size_t> component_of(net.complexes().size());
    for (std::size_t c = 0; c < strong.size(); ++c)
        for (std::size_t v : strong[c])
            component_of[v] = c;
    std::vector<char> has_exit(strong.size(), 0);
    for (const Reaction& r : net.reactions()) {
        const std::size_t a = component_of[net.complex_index(r.reactant)];
        const std::size_t b = component_of[net.complex_index(r.product)];
        if (a != b)
            has_exit[a] = 1;
    }
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t c = 0; c < strong.size(); ++c)
        if (!has_exit[c])
            out.push_back(strong[c]);
    return out;
}

inline NetworkStats network_stats(const ReactionNetwork& net) {
    NetworkStats st;
    st.species_count = net.species().size();
    st.complex_count = net.complexes().size();
    st.reaction_count = net.reactions().size();
    st.irreversible_count = net.irreversible_count();
    st.reversible_pair_count = net.reversible_pair_count();
    st.linkage_class_count = linkage_classes(net).size();
    st.strong_class_count = strong_linkage_classes(net).size();
    st.rank = rank(stoichiometric_matrix(net));
    const std::size_t nl = st.complex_count - st.linkage_class_count;
    if (nl < st.rank)
        throw Error("internal: negative deficiency");
    st.deficiency = nl - st.rank;
    st.weakly_reversible = st.strong_class_count == st.linkage_class_count;
    st.terminal_strong_classes = terminal_strong_linkage_classes(net);
    return st;
}

/// True iff x - x* lies in the stoichiometric subspace (exact rank test).
inline bool same_stoichiometric_class(const ReactionNetwork& net,
                                      const std::vector<Rational>& x,
                                      const std::vector<Rational>& x_star) {
    const std::size_t m = net.species().size();
    if (x.size() != m || x_star.size() != m)
        throw Error("species vector length must be " + std::to_string(m));
    const Matrix n = stoichiometric_matrix(net);
    Matrix diff(m, 1);
    diff.row_labels() = net.species();
    for (std::size_t i = 0; i < m; ++i)
        diff.at(i, 0) = x[i] - x_star[i];
    return rank(hconcat({n, diff})) == rank(n);
}

} // namespace crn
