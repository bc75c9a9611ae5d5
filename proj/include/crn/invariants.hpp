#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crn/decomposition.hpp"
#include "crn/parser.hpp"

namespace crn {

struct InvariantResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

inline const std::vector<std::string>& invariant_names() {
    static const std::vector<std::string> names = {
        "matrix-consistency",
        "roundtrip",
        "rank-nullity",
        "f-orientation-invariance",
        "pf-equivalence",
        "w-lower-bound",
        "independence-bounds",
        "incidence-bounds",
        "bi-characterization",
        "type-trichotomy",
        "o-decomposition-trivial",
        "nl-bound",
        "c-decomposition-incidence",
        "zero-deficiency-no-type-ii",
        "full-orientation-type-i",
        "cf-subsets-refine-fibers",
        "w-nl-probe",
    };
    return names;
}

/// Runs the structural property battery on one network. Orientation-indexed
/// checks enumerate all orientations when there are at most `orientation_cap`
/// of them and fall back to the default orientation otherwise.
inline std::vector<InvariantResult> check_invariants(
    const ReactionNetwork& net, const std::optional<PowerLawKinetics>& kinetics = {},
    const std::vector<std::string>& which = {}, std::size_t orientation_cap = 64) {
    for (const std::string& w : which) {
        const auto& names = invariant_names();
        if (std::find(names.begin(), names.end(), w) == names.end())
            throw Error("unknown invariant '" + w + "'");
    }
    const auto wanted = [&](const std::string& name) {
        return which.empty() ||
               std::find(which.begin(), which.end(), name) != which.end();
    };

    std::vector<InvariantResult> results;
    const auto emit = [&](const std::string& name, bool pass, const std::string& detail = "") {
        if (wanted(name))
            results.push_back({name, pass, detail});
    };

    const NetworkStats stats = network_stats(net);
    const std::size_t orientation_size = stats.irreversible_count + stats.reversible_pair_count;
    const ReactionPartition fdec = f_decomposition(net);
    const DecompositionReport freport = analyze_partition(net, fdec);

    std::vector<Orientation> orientations;
    bool exhaustive = false;
    if (stats.reversible_pair_count < 63 &&
        (std::size_t{1} << stats.reversible_pair_count) <= orientation_cap) {
        orientations = enumerate_orientations(net, orientation_cap);
        exhaustive = true;
    } else {
        orientations.push_back(default_orientation(net));
    }

    if (wanted("matrix-consistency")) {
        bool pass = true;
        std::string detail;
        try {
            const Matrix ia = incidence_matrix(net);
            (void)stoichiometric_matrix(net); // throws if N != Y * I_a
            for (std::size_t j = 0; j < ia.cols() && pass; ++j) {
                Rational sum;
                std::size_t minus = 0, plus = 0, nonzero = 0;
                for (std::size_t i = 0; i < ia.rows(); ++i) {
                    const Rational& v = ia.at(i, j);
                    sum += v;
                    if (v == -1)
                        ++minus;
                    if (v == 1)
                        ++plus;
                    if (!v.is_zero())
                        ++nonzero;
                }
                if (!sum.is_zero() || minus != 1 || plus != 1 || nonzero != 2) {
                    pass = false;
                    detail = "incidence column " + std::to_string(j) + " malformed";
                }
            }
        } catch (const Error& e) {
            pass = false;
            detail = e.what();
        }
        emit("matrix-consistency", pass, detail);
    }

    if (wanted("roundtrip")) {
        bool pass = true;
        std::string detail;
        try {
            const ParsedModel round = parse_model(render_model(net, kinetics));
            pass = round.network == net;
            if (pass && kinetics)
                pass = round.kinetics && round.kinetics->order_matrix == kinetics->order_matrix &&
                       round.kinetics->rates == kinetics->rates;
            if (!pass)
                detail = "parse(render(net)) differs";
        } catch (const Error& e) {
            pass = false;
            detail = e.what();
        }
        emit("roundtrip", pass, detail);
    }

    if (wanted("rank-nullity")) {
        bool pass = true;
        std::string detail;
        for (const Orientation& o : orientations) {
            const Matrix l = l_o_matrix(net, o);
            const std::size_t nullity = kernel_basis(l).cols();
            if (nullity != orientation_size - stats.rank) {
                pass = false;
                detail = "dim Ker L_O = " + std::to_string(nullity) + ", expected " +
                         std::to_string(orientation_size - stats.rank);
                break;
            }
        }
        emit("rank-nullity", pass, detail);
    }

    if (wanted("f-orientation-invariance")) {
        bool pass = true;
        std::string detail = exhaustive ? "" : "single orientation only";
        for (const Orientation& o : orientations)
            if (!same_partition(f_decomposition_from(net, o), fdec)) {
                pass = false;
                detail = "F-decomposition differs between orientations";
                break;
            }
        emit("f-orientation-invariance", pass, detail);
    }

    if (wanted("pf-equivalence")) {
        bool pass = true;
        std::string detail;
        for (const Orientation& o : orientations) {
            const DecompositionReport preport = analyze_partition(net, p_decomposition(net, o));
            if (preport.independent != freport.independent ||
                preport.incidence_independent != freport.incidence_independent ||
                preport.bi_independent != freport.bi_independent) {
                pass = false;
                detail = "P- and F-decomposition property flags disagree";
                break;
            }
        }
        emit("pf-equivalence", pass, detail);
    }

    emit("w-lower-bound", freport.w + stats.rank >= orientation_size,
         "w=" + std::to_string(freport.w));

    {
        bool pass = true;
        std::string detail;
        if (freport.independent) {
            pass = freport.w <= stats.rank &&
                   freport.w <= stats.complex_count - stats.linkage_class_count &&
                   stats.deficiency <= freport.sum_deficiency &&
                   stats.deficiency <= freport.w_type_ii;
            if (!pass)
                detail = "an independence consequence fails";
        }
        emit("independence-bounds", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        if (freport.incidence_independent) {
            pass = freport.w <= stats.complex_count - stats.linkage_class_count &&
                   stats.deficiency >= freport.sum_deficiency;
            if (!pass)
                detail = "an incidence-independence consequence fails";
        }
        emit("incidence-bounds", pass, detail);
    }

    emit("bi-characterization",
         freport.bi_independent ==
             ((freport.independent || freport.incidence_independent) &&
              freport.sum_deficiency == stats.deficiency));

    if (wanted("type-trichotomy")) {
        bool pass = true;
        std::string detail;
        if (freport.types.size() != fdec.classes.size()) {
            pass = false;
            detail = "classification missing";
        } else {
            for (std::size_t c = 0; c < fdec.classes.size() && pass; ++c) {
                if (!freport.types[c]) {
                    pass = false;
                    detail = "unclassified class";
                    break;
                }
                const std::size_t delta = freport.class_stats[c].deficiency;
                switch (*freport.types[c]) {
                case SubnetworkType::TypeI:
                case SubnetworkType::TypeIII:
                    pass = delta == 0;
                    break;
                case SubnetworkType::TypeII:
                    pass = delta == 1;
                    break;
                }
                if (!pass)
                    detail = "class deficiency contradicts its type";
            }
        }
        emit("type-trichotomy", pass, detail);
    }

    if (wanted("o-decomposition-trivial")) {
        const DecompositionReport oreport = o_decomposition(net, default_orientation(net));
        const bool pass = oreport.trivial.value_or(false) &&
                          oreport.class_stats.front().deficiency == stats.deficiency;
        emit("o-decomposition-trivial", pass);
    }

    emit("nl-bound", stats.complex_count - stats.linkage_class_count <= orientation_size);

    if (wanted("c-decomposition-incidence")) {
        bool pass = true;
        std::string detail;
        const ReactionPartition linkage = linkage_partition(net);
        const DecompositionReport lreport = analyze_partition(net, linkage);
        if (!lreport.c_decomposition || !lreport.incidence_independent) {
            pass = false;
            detail = "linkage decomposition must be an incidence-independent C-decomposition";
        } else if (freport.c_decomposition) {
            pass = freport.incidence_independent && 2 * freport.w <= stats.complex_count &&
                   is_refinement(linkage, fdec);
            if (!pass)
                detail = "C-decomposition consequences fail for the F-decomposition";
        }
        emit("c-decomposition-incidence", pass, detail);
    }

    emit("zero-deficiency-no-type-ii",
         !(freport.independent && freport.w_type_ii == 0) || stats.deficiency == 0);

    if (wanted("full-orientation-type-i")) {
        bool pass = true;
        if (stats.rank == orientation_size) {
            pass = stats.deficiency == 0;
            for (const auto& t : freport.types)
                pass = pass && t && *t == SubnetworkType::TypeI;
        }
        emit("full-orientation-type-i", pass);
    }

    if (wanted("cf-subsets-refine-fibers")) {
        bool pass = true;
        std::string detail;
        if (kinetics) {
            const CFSubsets subsets = cf_subsets(net, *kinetics);
            for (const auto& node : subsets.nodes)
                for (const auto& subset : node.subsets)
                    for (std::size_t r : subset)
                        if (net.complex_index(net.reactions()[r].reactant) != node.reactant) {
                            pass = false;
                            detail = "CF-subset crosses reactant fibers";
                        }
        } else {
            detail = "no kinetics supplied";
        }
        emit("cf-subsets-refine-fibers", pass, detail);
    }

    {
        // Informational probe for the open question whether w <= n - l holds
        // unconditionally; never fails, only reports a counterexample.
        const std::size_t nl = stats.complex_count - stats.linkage_class_count;
        emit("w-nl-probe", true,
             freport.w <= nl ? "w <= n - l holds"
                             : "counterexample: w=" + std::to_string(freport.w) +
                                   " > n-l=" + std::to_string(nl));
    }

    return results;
}

} // namespace crn
