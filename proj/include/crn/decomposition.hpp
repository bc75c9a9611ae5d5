#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crn/kinetics.hpp"
#include "crn/network.hpp"

namespace crn {

/// An orientation keeps every irreversible reaction and exactly one
/// direction of every reversible pair. Members are reaction indices in
/// network order.
struct Orientation {
    std::vector<std::size_t> members;
};

inline void validate_orientation(const ReactionNetwork& net, const Orientation& o) {
    std::set<std::size_t> chosen(o.members.begin(), o.members.end());
    if (chosen.size() != o.members.size())
        throw Error("orientation repeats a reaction");
    for (std::size_t i = 0; i < net.reactions().size(); ++i) {
        const auto partner = net.reverse_index(i);
        if (!partner) {
            if (!chosen.count(i))
                throw Error("orientation misses irreversible reaction " + net.reactions()[i].id);
        } else if (chosen.count(i) == chosen.count(*partner)) {
            throw Error("orientation must pick exactly one direction of the pair " +
                        net.reactions()[i].id + "/" + net.reactions()[*partner].id);
        }
    }
}

/// All irreversible reactions plus the first-listed direction of each
/// reversible pair.
inline Orientation default_orientation(const ReactionNetwork& net) {
    Orientation o;
    for (std::size_t i = 0; i < net.reactions().size(); ++i) {
        const auto partner = net.reverse_index(i);
        if (!partner || i < *partner)
            o.members.push_back(i);
    }
    return o;
}

/// All 2^r_rev orientations; refuses when that count exceeds `cap`.
inline std::vector<Orientation> enumerate_orientations(const ReactionNetwork& net,
                                                       std::size_t cap) {
    const std::size_t pairs = net.reversible_pair_count();
    if (pairs >= 63 || (std::size_t{1} << pairs) > cap)
        throw Error("2^" + std::to_string(pairs) +
                    " orientations exceed the cap of " + std::to_string(cap));
    std::vector<std::pair<std::size_t, std::size_t>> pair_list;
    std::vector<std::size_t> fixed;
    for (std::size_t i = 0; i < net.reactions().size(); ++i) {
        const auto partner = net.reverse_index(i);
        if (!partner)
            fixed.push_back(i);
        else if (i < *partner)
            pair_list.emplace_back(i, *partner);
    }
    std::vector<Orientation> out;
    const std::size_t total = std::size_t{1} << pairs;
    out.reserve(total);
    for (std::size_t mask = 0; mask < total; ++mask) {
        Orientation o;
        o.members = fixed;
        for (std::size_t p = 0; p < pair_list.size(); ++p)
            o.members.push_back((mask >> p) & 1 ? pair_list[p].second : pair_list[p].first);
        std::sort(o.members.begin(), o.members.end());
        out.push_back(std::move(o));
    }
    return out;
}

/// Columns are the reaction vectors of the orientation members; equal to the
/// corresponding columns of the stoichiometric matrix.
inline Matrix l_o_matrix(const ReactionNetwork& net, const Orientation& o) {
    validate_orientation(net, o);
    Matrix l(net.species().size(), o.members.size());
    l.row_labels() = net.species();
    for (std::size_t j = 0; j < o.members.size(); ++j) {
        const std::vector<Rational> v = net.reaction_vector(o.members[j]);
        for (std::size_t i = 0; i < v.size(); ++i)
            l.at(i, j) = v[i];
        l.col_labels().push_back(net.reactions()[o.members[j]].id);
    }
    return l;
}

enum class PartitionKind { P, F, Linkage, Species, C, OrientationSplit, User };

inline const char* to_string(PartitionKind k) {
    switch (k) {
    case PartitionKind::P: return "P";
    case PartitionKind::F: return "F";
    case PartitionKind::Linkage: return "linkage";
    case PartitionKind::Species: return "species";
    case PartitionKind::C: return "C";
    case PartitionKind::OrientationSplit: return "orientation";
    case PartitionKind::User: return "user";
    }
    return "?";
}

/// A partition of reaction indices. P-kind partitions cover an orientation;
/// every other kind covers the full reaction set. `zero_classes` indexes the
/// classes whose kernel coordinates vanish (P0 and its extensions).
struct ReactionPartition {
    PartitionKind kind = PartitionKind::User;
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> zero_classes;

    bool is_zero_class(std::size_t class_index) const {
        return std::find(zero_classes.begin(), zero_classes.end(), class_index) !=
               zero_classes.end();
    }
};

/// Set-of-sets equality, ignoring kind and class order.
inline bool same_partition(const ReactionPartition& a, const ReactionPartition& b) {
    auto canon = [](const ReactionPartition& p) {
        std::vector<std::vector<std::size_t>> c = p.classes;
        for (auto& cls : c)
            std::sort(cls.begin(), cls.end());
        std::sort(c.begin(), c.end());
        return c;
    };
    return canon(a) == canon(b);
}

namespace detail {

/// Classes ordered by smallest member; zero classes listed first.
inline void order_partition(ReactionPartition& p) {
    std::vector<std::pair<int, std::vector<std::size_t>>> keyed;
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        std::sort(p.classes[i].begin(), p.classes[i].end());
        keyed.emplace_back(p.is_zero_class(i) ? 0 : 1, std::move(p.classes[i]));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first < b.first;
        return a.second.front() < b.second.front();
    });
    p.classes.clear();
    p.zero_classes.clear();
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (keyed[i].first == 0)
            p.zero_classes.push_back(i);
        p.classes.push_back(std::move(keyed[i].second));
    }
}

inline std::vector<Rational> normalized_row(const std::vector<Rational>& row) {
    for (const Rational& v : row)
        if (!v.is_zero()) {
            std::vector<Rational> out(row.size());
            for (std::size_t i = 0; i < row.size(); ++i)
                out[i] = row[i] / v;
            return out;
        }
    return row;
}

} // namespace detail

namespace detail {

/// Groups orientation members by their rows in a kernel basis. Rows must be
/// indexed like the orientation; any basis of Ker L_O yields the same
/// partition, which the basis-invariance tests exercise.
inline ReactionPartition p_classes_from_kernel(const Orientation& o, const Matrix& kernel) {
    ReactionPartition p;
    p.kind = PartitionKind::P;

    std::vector<std::size_t> zero_members;
    std::map<std::vector<Rational>, std::vector<std::size_t>> groups;
    for (std::size_t j = 0; j < o.members.size(); ++j) {
        std::vector<Rational> row = kernel.row(j);
        const bool zero = std::all_of(row.begin(), row.end(),
                                      [](const Rational& v) { return v.is_zero(); });
        if (zero)
            zero_members.push_back(o.members[j]);
        else
            groups[normalized_row(row)].push_back(o.members[j]);
    }
    if (!zero_members.empty()) {
        p.zero_classes.push_back(p.classes.size());
        p.classes.push_back(std::move(zero_members));
    }
    for (auto& [row, members] : groups)
        p.classes.push_back(std::move(members));
    order_partition(p);
    return p;
}

} // namespace detail

/// Equivalence classes of the orientation: reactions whose kernel-basis rows
/// vanish land in the designated zeroth class P0; the rest are grouped by
/// exact row proportionality (nonzero rational multiple). When the kernel is
/// trivial every reaction lands in P0.
inline ReactionPartition p_decomposition(const ReactionNetwork& net, const Orientation& o) {
    return detail::p_classes_from_kernel(o, kernel_basis(l_o_matrix(net, o)));
}

/// Fundamental classes: each nonzero equivalence class absorbs the reverse
/// partners of its members; a zero-row reaction forms its own fundamental
/// class together with its reverse partner (if any). The result is the same
/// partition for every orientation, which the tests exercise.
inline ReactionPartition f_decomposition_from(const ReactionNetwork& net, const Orientation& o) {
    const ReactionPartition p = p_decomposition(net, o);
    ReactionPartition f;
    f.kind = PartitionKind::F;
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
        const bool zero = p.is_zero_class(c);
        if (zero) {
            for (std::size_t member : p.classes[c]) {
                std::vector<std::size_t> cls{member};
                if (const auto partner = net.reverse_index(member))
                    cls.push_back(*partner);
                f.zero_classes.push_back(f.classes.size());
                f.classes.push_back(std::move(cls));
            }
        } else {
            std::vector<std::size_t> cls = p.classes[c];
            for (std::size_t member : p.classes[c])
                if (const auto partner = net.reverse_index(member))
                    cls.push_back(*partner);
            f.classes.push_back(std::move(cls));
        }
    }
    detail::order_partition(f);
    return f;
}

inline ReactionPartition f_decomposition(const ReactionNetwork& net) {
    return f_decomposition_from(net, default_orientation(net));
}

inline ReactionPartition linkage_partition(const ReactionNetwork& net) {
    const auto classes = linkage_classes(net);
    std::vector<std::size_t> component_of(net.complexes().size());
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (std::size_t v : classes[c])
            component_of[v] = c;
    ReactionPartition p;
    p.kind = PartitionKind::Linkage;
    p.classes.resize(classes.size());
    for (std::size_t i = 0; i < net.reactions().size(); ++i)
        p.classes[component_of[net.complex_index(net.reactions()[i].reactant)]].push_back(i);
    p.classes.erase(std::remove_if(p.classes.begin(), p.classes.end(),
                                   [](const auto& c) { return c.empty(); }),
                    p.classes.end());
    detail::order_partition(p);
    return p;
}

/// Groups reactions by the single species their reaction vector changes.
/// Defined only for networks (S-systems, replicator games) where every
/// reaction vector is supported on one species.
inline ReactionPartition species_partition(const ReactionNetwork& net) {
    std::map<std::size_t, std::vector<std::size_t>> by_species;
    for (std::size_t i = 0; i < net.reactions().size(); ++i) {
        const std::vector<Rational> v = net.reaction_vector(i);
        std::optional<std::size_t> support;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) {
                if (support)
                    throw Error("species decomposition undefined: reaction " +
                                net.reactions()[i].id + " changes more than one species");
                support = j;
            }
        by_species[*support].push_back(i);
    }
    ReactionPartition p;
    p.kind = PartitionKind::Species;
    for (auto& [species, members] : by_species)
        p.classes.push_back(std::move(members));
    detail::order_partition(p);
    return p;
}

enum class SubnetworkType { TypeI, TypeII, TypeIII };

inline const char* to_string(SubnetworkType t) {
    switch (t) {
    case SubnetworkType::TypeI: return "I";
    case SubnetworkType::TypeII: return "II";
    case SubnetworkType::TypeIII: return "III";
    }
    return "?";
}

namespace detail {

struct InducedStats {
    std::size_t complexes = 0;  // n_i
    std::size_t linkage = 0;    // l_i
    std::size_t rank = 0;       // s_i
    std::size_t deficiency = 0; // n_i - l_i - s_i
};

/// Stats of the subnetwork induced by a reaction set: the touched complexes,
/// the components they form, and the rank of the reaction-vector block.
inline InducedStats induced_stats(const ReactionNetwork& net, const Matrix& n,
                                  const std::vector<std::size_t>& reactions) {
    InducedStats st;
    std::map<std::size_t, std::size_t> local; // complex index -> local id
    std::vector<std::size_t> parent;
    const auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t r : reactions) {
        for (const Complex* c : {&net.reactions()[r].reactant, &net.reactions()[r].product}) {
            const std::size_t idx = net.complex_index(*c);
            if (!local.count(idx)) {
                local.emplace(idx, parent.size());
                parent.push_back(parent.size());
            }
        }
        const std::size_t a = find(local.at(net.complex_index(net.reactions()[r].reactant)));
        const std::size_t b = find(local.at(net.complex_index(net.reactions()[r].product)));
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    st.complexes = local.size();
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < parent.size(); ++i)
        roots.insert(find(i));
    st.linkage = roots.size();
    st.rank = rank(n.columns(reactions));
    st.deficiency = st.complexes - st.linkage - st.rank;
    return st;
}

} // namespace detail

/// Classifies the generating equivalence class of a fundamental class:
/// linearly independent reaction vectors (Type I, forest, deficiency 0);
/// minimally dependent vectors on a forest (Type II, deficiency 1); or
/// minimally dependent vectors on a single cycle of length >= 3 (Type III,
/// deficiency 0). Anything else violates the trichotomy and throws.
inline SubnetworkType classify_type(const ReactionNetwork& net,
                                    const std::vector<std::size_t>& class_reactions,
                                    const std::vector<std::size_t>& orientation_members) {
    std::set<std::size_t> oriented(orientation_members.begin(), orientation_members.end());
    std::vector<std::size_t> p_class;
    for (std::size_t r : class_reactions)
        if (oriented.count(r))
            p_class.push_back(r);
    if (p_class.empty())
        throw Error("class has no reaction in the orientation");

    const Matrix n = stoichiometric_matrix(net);
    const Matrix block = n.columns(p_class);
    const std::size_t k = p_class.size();
    const std::size_t r = rank(block);
    if (r == k)
        return SubnetworkType::TypeI;
    if (r + 1 != k)
        throw Error("class is neither independent nor minimally dependent (rank " +
                    std::to_string(r) + " of " + std::to_string(k) + ")");
    const Matrix dependency = kernel_basis(block);
    for (std::size_t i = 0; i < dependency.rows(); ++i)
        if (dependency.at(i, 0).is_zero())
            throw Error("class is not minimally dependent: zero coefficient in the dependency");

    // Single undirected cycle: connected, every complex of degree 2, and as
    // many complexes as reactions.
    std::map<std::size_t, std::size_t> degree;
    for (std::size_t idx : p_class) {
        ++degree[net.complex_index(net.reactions()[idx].reactant)];
        ++degree[net.complex_index(net.reactions()[idx].product)];
    }
    const auto st = detail::induced_stats(net, n, p_class);
    const bool cycle = st.linkage == 1 && degree.size() == k && k >= 3 &&
                       std::all_of(degree.begin(), degree.end(),
                                   [](const auto& d) { return d.second == 2; });
    return cycle ? SubnetworkType::TypeIII : SubnetworkType::TypeII;
}

struct ClassStats {
    std::size_t complexes = 0;
    std::size_t linkage = 0;
    std::size_t rank = 0;
    std::size_t deficiency = 0;
};

struct DecompositionReport {
    ReactionPartition partition;
    std::vector<ClassStats> class_stats;
    std::vector<std::optional<SubnetworkType>> types; // set for P/F partitions

    std::size_t w = 0; // number of nonzero classes
    std::size_t w_type_i = 0, w_type_ii = 0, w_type_iii = 0;

    bool independent = false;
    bool incidence_independent = false;
    bool bi_independent = false;
    bool c_decomposition = false;

    // Stats of the decomposed (sub)network and the per-class sums.
    std::size_t ground_complexes = 0, ground_linkage = 0, ground_rank = 0,
                ground_deficiency = 0;
    std::size_t sum_rank = 0, sum_n_minus_l = 0, sum_deficiency = 0;

    std::optional<bool> trivial; // orientation decompositions only
};

/// Independence, incidence-independence and the per-class statistics of a
/// partition. P-kind partitions decompose the orientation subnetwork; all
/// other kinds must cover the full reaction set.
inline DecompositionReport analyze_partition(const ReactionNetwork& net,
                                             const ReactionPartition& partition) {
    DecompositionReport report;
    report.partition = partition;

    std::set<std::size_t> ground;
    for (const auto& cls : partition.classes) {
        if (cls.empty())
            throw Error("partition contains an empty class");
        for (std::size_t r : cls) {
            if (r >= net.reactions().size())
                throw Error("partition references an unknown reaction index");
            if (!ground.insert(r).second)
                throw Error("partition classes overlap on " + net.reactions()[r].id);
        }
    }
    if (partition.kind == PartitionKind::P) {
        Orientation o{std::vector<std::size_t>(ground.begin(), ground.end())};
        validate_orientation(net, o);
    } else if (ground.size() != net.reactions().size()) {
        throw Error("partition does not cover the reaction set");
    }

    const Matrix n = stoichiometric_matrix(net);
    const std::vector<std::size_t> ground_list(ground.begin(), ground.end());
    const auto ground_stats = detail::induced_stats(net, n, ground_list);
    report.ground_complexes = ground_stats.complexes;
    report.ground_linkage = ground_stats.linkage;
    report.ground_rank = ground_stats.rank;
    report.ground_deficiency = ground_stats.deficiency;

    std::vector<Matrix> blocks;
    std::vector<std::set<std::size_t>> complex_sets;
    for (const auto& cls : partition.classes) {
        const auto st = detail::induced_stats(net, n, cls);
        report.class_stats.push_back({st.complexes, st.linkage, st.rank, st.deficiency});
        report.sum_rank += st.rank;
        report.sum_n_minus_l += st.complexes - st.linkage;
        report.sum_deficiency += st.deficiency;
        blocks.push_back(n.columns(cls));
        std::set<std::size_t> touched;
        for (std::size_t r : cls) {
            touched.insert(net.complex_index(net.reactions()[r].reactant));
            touched.insert(net.complex_index(net.reactions()[r].product));
        }
        complex_sets.push_back(std::move(touched));
    }

    report.independent = spans_direct_sum(blocks);
    report.incidence_independent =
        report.sum_n_minus_l == report.ground_complexes - report.ground_linkage;
    report.bi_independent = report.independent && report.incidence_independent;

    report.c_decomposition = true;
    for (std::size_t i = 0; i < complex_sets.size() && report.c_decomposition; ++i)
        for (std::size_t j = i + 1; j < complex_sets.size() && report.c_decomposition; ++j)
            for (std::size_t c : complex_sets[i])
                if (complex_sets[j].count(c)) {
                    report.c_decomposition = false;
                    break;
                }

    report.w = partition.classes.size() - partition.zero_classes.size();

    if (partition.kind == PartitionKind::P || partition.kind == PartitionKind::F) {
        const std::vector<std::size_t> orientation_members =
            partition.kind == PartitionKind::P ? ground_list
                                               : default_orientation(net).members;
        for (std::size_t c = 0; c < partition.classes.size(); ++c) {
            const SubnetworkType t =
                classify_type(net, partition.classes[c], orientation_members);
            report.types.emplace_back(t);
            if (partition.is_zero_class(c))
                continue;
            switch (t) {
            case SubnetworkType::TypeI: ++report.w_type_i; break;
            case SubnetworkType::TypeII: ++report.w_type_ii; break;
            case SubnetworkType::TypeIII: ++report.w_type_iii; break;
            }
        }
    }
    // Other partition kinds fall outside the trichotomy lemma; types stays
    // empty and the type counts stay unknown rather than zero.
    return report;
}

inline DecompositionReport analyze_f_decomposition(const ReactionNetwork& net) {
    return analyze_partition(net, f_decomposition(net));
}

/// Two-block split of the reaction set into the orientation and its
/// complement (the complement block is absent when every reaction is
/// irreversible). Always trivial: the orientation block carries the full
/// stoichiometric subspace.
inline DecompositionReport o_decomposition(const ReactionNetwork& net, const Orientation& o) {
    validate_orientation(net, o);
    ReactionPartition p;
    p.kind = PartitionKind::OrientationSplit;
    p.classes.push_back(o.members);
    std::set<std::size_t> chosen(o.members.begin(), o.members.end());
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < net.reactions().size(); ++i)
        if (!chosen.count(i))
            rest.push_back(i);
    if (!rest.empty())
        p.classes.push_back(std::move(rest));
    DecompositionReport report = analyze_partition(net, p);
    report.trivial = report.class_stats.front().rank == report.ground_rank;
    return report;
}

/// True iff every class of `a` is contained in some class of `b`.
inline bool is_refinement(const ReactionPartition& a, const ReactionPartition& b) {
    std::set<std::size_t> ga, gb;
    for (const auto& cls : a.classes)
        ga.insert(cls.begin(), cls.end());
    std::map<std::size_t, std::size_t> class_of;
    for (std::size_t c = 0; c < b.classes.size(); ++c)
        for (std::size_t r : b.classes[c]) {
            gb.insert(r);
            class_of[r] = c;
        }
    if (ga != gb)
        throw Error("partitions cover different reaction sets");
    for (const auto& cls : a.classes) {
        for (std::size_t r : cls)
            if (class_of.at(r) != class_of.at(cls.front()))
                return false;
    }
    return true;
}

/// Inequality checks that need only counts, never rank computations. Absent
/// inputs make the dependent checks inapplicable.
struct BoundsInput {
    std::optional<std::size_t> w, w_type_ii;
    std::optional<std::size_t> rank;          // s
    std::optional<std::size_t> complexes;     // n
    std::optional<std::size_t> linkage;       // l
    std::optional<std::size_t> irreversible;  // r_irr
    std::optional<std::size_t> reversible;    // r_rev
    std::optional<std::size_t> deficiency;    // delta
    std::optional<bool> independent;
    std::optional<bool> c_decomposition;
};

inline BoundsInput bounds_input_from(const ReactionNetwork& net,
                                     const DecompositionReport& report) {
    BoundsInput in;
    in.w = report.w;
    if (!report.types.empty())
        in.w_type_ii = report.w_type_ii;
    in.rank = report.ground_rank;
    in.complexes = report.ground_complexes;
    in.linkage = report.ground_linkage;
    in.irreversible = net.irreversible_count();
    in.reversible = net.reversible_pair_count();
    in.deficiency = report.ground_deficiency;
    in.independent = report.independent;
    in.c_decomposition = report.c_decomposition;
    return in;
}

struct BoundCheck {
    std::string name;
    bool applicable = false;
    bool satisfied = true;
    std::string values;
    std::string implication; // consequence of a violation, when one exists
};

/// Evaluates the count-only necessary conditions. A violated necessary
/// condition settles the corresponding property without any rank work, which
/// is reported through `implication`.
inline std::vector<BoundCheck> bounds_report(const BoundsInput& in) {
    std::vector<BoundCheck> out;
    const auto num = [](std::size_t v) { return std::to_string(v); };

    {
        BoundCheck b;
        b.name = "w >= r_irr + r_rev - s";
        if (in.w && in.irreversible && in.reversible && in.rank) {
            b.applicable = true;
            const std::size_t lhs = *in.irreversible + *in.reversible;
            b.satisfied = *in.w + *in.rank >= lhs;
            b.values = "w=" + num(*in.w) + ", r_irr+r_rev=" + num(lhs) + ", s=" + num(*in.rank);
            if (!b.satisfied)
                b.implication = "internal inconsistency: fewer classes than the kernel dimension";
        }
        out.push_back(b);
    }
    {
        BoundCheck b;
        b.name = "w <= s";
        if (in.w && in.rank) {
            b.applicable = true;
            b.satisfied = *in.w <= *in.rank;
            b.values = "w=" + num(*in.w) + ", s=" + num(*in.rank);
            if (!b.satisfied)
                b.implication = "not independent";
        }
        out.push_back(b);
    }
    {
        BoundCheck b;
        b.name = "w <= n - l";
        if (in.w && in.complexes && in.linkage) {
            b.applicable = true;
            const std::size_t nl = *in.complexes - *in.linkage;
            b.satisfied = *in.w <= nl;
            b.values = "w=" + num(*in.w) + ", n-l=" + num(nl);
            if (!b.satisfied)
                b.implication = "neither independent nor incidence-independent";
        }
        out.push_back(b);
    }
    {
        BoundCheck b;
        b.name = "n - l <= r_irr + r_rev";
        if (in.complexes && in.linkage && in.irreversible && in.reversible) {
            b.applicable = true;
            b.satisfied = *in.complexes - *in.linkage <= *in.irreversible + *in.reversible;
            b.values = "n-l=" + num(*in.complexes - *in.linkage) +
                       ", r_irr+r_rev=" + num(*in.irreversible + *in.reversible);
            if (!b.satisfied)
                b.implication = "internal inconsistency: incidence rank exceeds the orientation size";
        }
        out.push_back(b);
    }
    {
        BoundCheck b;
        b.name = "2w <= n (C-decomposition)";
        if (in.c_decomposition && *in.c_decomposition && in.w && in.complexes) {
            b.applicable = true;
            b.satisfied = 2 * *in.w <= *in.complexes;
            b.values = "w=" + num(*in.w) + ", n=" + num(*in.complexes);
            if (!b.satisfied)
                b.implication = "not a C-decomposition";
        }
        out.push_back(b);
    }
    {
        BoundCheck b;
        b.name = "delta <= w_II (independent)";
        if (in.independent && *in.independent && in.deficiency && in.w_type_ii) {
            b.applicable = true;
            b.satisfied = *in.deficiency <= *in.w_type_ii;
            b.values = "delta=" + num(*in.deficiency) + ", w_II=" + num(*in.w_type_ii);
            if (!b.satisfied)
                b.implication = "not independent";
        }
        out.push_back(b);
    }
    {
        BoundCheck b;
        b.name = "delta <= s (independent, all Type II)";
        if (in.independent && *in.independent && in.w && in.w_type_ii && *in.w == *in.w_type_ii &&
            *in.w > 0 && in.deficiency && in.rank) {
            b.applicable = true;
            b.satisfied = *in.deficiency <= *in.rank;
            b.values = "delta=" + num(*in.deficiency) + ", s=" + num(*in.rank);
            if (!b.satisfied)
                b.implication = "not an independent Type II decomposition";
        }
        out.push_back(b);
    }
    return out;
}

enum class Precheck { NoCapacity, Inconclusive };

inline const char* to_string(Precheck p) {
    return p == Precheck::NoCapacity ? "no-capacity" : "inconclusive";
}

/// Multistationarity precheck for reactant-determined systems: a trivial
/// kernel together with at least one irreversible reaction rules out the
/// capacity for multiple equilibria. Never claims capacity.
inline Precheck multistationarity_precheck(const ReactionNetwork& net,
                                           const PowerLawKinetics& kinetics) {
    if (classify_plk(net, kinetics) == KineticsClass::NonReactantDetermined)
        throw Error("PL-NDK system: apply the cf-ri+ transform first");
    const Matrix l = l_o_matrix(net, default_orientation(net));
    const bool trivial_kernel = rank(l) == l.cols();
    return trivial_kernel && net.irreversible_count() >= 1 ? Precheck::NoCapacity
                                                           : Precheck::Inconclusive;
}

} // namespace crn
