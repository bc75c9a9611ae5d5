#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crn/decomposition.hpp"
#include "crn/invariants.hpp"
#include "crn/parser.hpp"
#include "crn/presets.hpp"
#include "crn/transform.hpp"

namespace crn {

/// All report JSON uses insertion-ordered objects and string-encoded
/// rationals, so identical inputs produce byte-identical output.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline Json stats_json(const ReactionNetwork& net, const NetworkStats& st) {
    Json j;
    j["m"] = st.species_count;
    j["n"] = st.complex_count;
    j["r"] = st.reaction_count;
    j["r_irr"] = st.irreversible_count;
    j["r_rev"] = st.reversible_pair_count;
    j["l"] = st.linkage_class_count;
    j["sl"] = st.strong_class_count;
    j["s"] = st.rank;
    j["deficiency"] = st.deficiency;
    j["weakly_reversible"] = st.weakly_reversible;
    Json terminal = Json::array();
    for (const auto& cls : st.terminal_strong_classes) {
        Json group = Json::array();
        for (std::size_t c : cls)
            group.push_back(render_complex(net.complexes()[c], net.species()));
        terminal.push_back(group);
    }
    j["terminal_strong_linkage_classes"] = terminal;
    return j;
}

inline Json network_json(const ReactionNetwork& net) {
    Json j;
    j["species"] = net.species();
    Json complexes = Json::array();
    for (const Complex& c : net.complexes())
        complexes.push_back(render_complex(c, net.species()));
    j["complexes"] = complexes;
    Json reactions = Json::array();
    for (const Reaction& r : net.reactions()) {
        Json jr;
        jr["id"] = r.id;
        jr["reactant"] = render_complex(r.reactant, net.species());
        jr["product"] = render_complex(r.product, net.species());
        jr["reverse_of"] = r.reverse_of ? Json(*r.reverse_of) : Json(nullptr);
        reactions.push_back(jr);
    }
    j["reactions"] = reactions;
    j["stats"] = stats_json(net, network_stats(net));
    return j;
}

inline Json kinetics_json(const ReactionNetwork& net, const PowerLawKinetics& k) {
    Json j;
    j["classification"] = crn::to_string(classify_plk(net, k));
    const CFSubsets subsets = cf_subsets(net, k);
    Json nf = Json::array();
    for (std::size_t node : subsets.nf_nodes)
        nf.push_back(render_complex(net.complexes()[node], net.species()));
    j["nf_nodes"] = nf;
    Json orders;
    for (std::size_t i = 0; i < net.reactions().size(); ++i) {
        Json row;
        for (std::size_t s = 0; s < net.species().size(); ++s) {
            const Rational& v = k.order_matrix.at(i, s);
            if (!v.is_zero())
                row[net.species()[s]] = to_string(v);
        }
        orders[net.reactions()[i].id] = row;
    }
    j["kinetic_orders"] = orders;
    Json rates;
    for (const Reaction& r : net.reactions())
        rates[r.id] = to_string(k.rates.count(r.id) ? k.rates.at(r.id) : Rational(1));
    j["rates"] = rates;
    return j;
}

inline Json partition_report_json(const ReactionNetwork& net,
                                  const DecompositionReport& report) {
    Json j;
    j["kind"] = crn::to_string(report.partition.kind);
    Json classes = Json::array();
    for (std::size_t c = 0; c < report.partition.classes.size(); ++c) {
        Json jc;
        Json ids = Json::array();
        for (std::size_t r : report.partition.classes[c])
            ids.push_back(net.reactions()[r].id);
        jc["reactions"] = ids;
        jc["zero_class"] = report.partition.is_zero_class(c);
        jc["n"] = report.class_stats[c].complexes;
        jc["l"] = report.class_stats[c].linkage;
        jc["s"] = report.class_stats[c].rank;
        jc["deficiency"] = report.class_stats[c].deficiency;
        if (c < report.types.size() && report.types[c])
            jc["type"] = crn::to_string(*report.types[c]);
        else
            jc["type"] = nullptr;
        classes.push_back(jc);
    }
    j["classes"] = classes;
    j["w"] = report.w;
    if (!report.types.empty()) {
        j["w_I"] = report.w_type_i;
        j["w_II"] = report.w_type_ii;
        j["w_III"] = report.w_type_iii;
    }
    j["independent"] = report.independent;
    j["incidence_independent"] = report.incidence_independent;
    j["bi_independent"] = report.bi_independent;
    j["is_c_decomposition"] = report.c_decomposition;
    Json sums;
    sums["sum_s"] = report.sum_rank;
    sums["sum_n_minus_l"] = report.sum_n_minus_l;
    sums["sum_deficiency"] = report.sum_deficiency;
    sums["s"] = report.ground_rank;
    sums["n_minus_l"] = report.ground_complexes - report.ground_linkage;
    sums["deficiency"] = report.ground_deficiency;
    j["sums"] = sums;
    if (report.trivial)
        j["trivial"] = *report.trivial;
    return j;
}

inline Json bounds_json(const std::vector<BoundCheck>& bounds) {
    Json arr = Json::array();
    for (const BoundCheck& b : bounds) {
        if (!b.applicable)
            continue;
        Json jb;
        jb["bound"] = b.name;
        jb["satisfied"] = b.satisfied;
        jb["values"] = b.values;
        if (!b.satisfied)
            jb["implication"] = b.implication;
        arr.push_back(jb);
    }
    return arr;
}

} // namespace detail

/// The `analyze` report: stats, kinetics classification, F-decomposition
/// with per-class stats and types, bounds table, multistationarity precheck.
inline Json analysis_report(const std::string& source, const ReactionNetwork& net,
                            const std::optional<PowerLawKinetics>& kinetics) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["source"] = source;
    j["network"] = detail::network_json(net);
    j["kinetics"] = kinetics ? detail::kinetics_json(net, *kinetics) : Json(nullptr);

    const DecompositionReport freport = analyze_f_decomposition(net);
    j["f_decomposition"] = detail::partition_report_json(net, freport);
    j["bounds"] = detail::bounds_json(bounds_report(bounds_input_from(net, freport)));

    if (kinetics) {
        if (classify_plk(net, *kinetics) == KineticsClass::ReactantDetermined)
            j["multistationarity_precheck"] =
                crn::to_string(multistationarity_precheck(net, *kinetics));
        else
            j["multistationarity_precheck"] = "requires cf-ri+ transform (PL-NDK input)";
    } else {
        j["multistationarity_precheck"] = nullptr;
    }
    return j;
}

inline Json decompose_report(const std::string& source, const ReactionNetwork& net,
                             const DecompositionReport& report) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["source"] = source;
    j["network"] = detail::network_json(net);
    j["decomposition"] = detail::partition_report_json(net, report);
    j["bounds"] = detail::bounds_json(bounds_report(bounds_input_from(net, report)));
    return j;
}

inline Json transform_report(const std::string& source, const ReactionNetwork& net,
                             const std::optional<PowerLawKinetics>& kinetics,
                             const TransformResult& result,
                             const std::optional<VerifyReport>& verification) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["source"] = source;
    j["method"] = crn::to_string(result.method);
    j["transformed_dsl"] = render_model(result.network, result.kinetics);
    Json map;
    for (const auto& [from, to] : result.reaction_map)
        map[from] = to;
    j["reaction_map"] = map;
    j["rewritten"] = result.rewritten;
    Json added = Json::array();
    for (const Complex& c : result.added_complexes)
        added.push_back(render_complex(c, result.network.species()));
    j["added_complexes"] = added;
    j["output_classification"] =
        crn::to_string(classify_plk(result.network, result.kinetics));
    if (verification) {
        Json v;
        Json checks = Json::array();
        for (const VerifyCheck& c : verification->checks) {
            Json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            if (!c.detail.empty())
                jc["detail"] = c.detail;
            checks.push_back(jc);
        }
        v["checks"] = checks;
        v["all_pass"] = verification->all_pass();
        j["verification"] = v;
    } else {
        j["verification"] = nullptr;
    }
    (void)net;
    (void)kinetics;
    return j;
}

inline Json check_report(const std::string& source,
                         const std::vector<InvariantResult>& results) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["source"] = source;
    Json arr = Json::array();
    bool all = true;
    for (const InvariantResult& r : results) {
        Json jr;
        jr["invariant"] = r.name;
        jr["pass"] = r.pass;
        if (!r.detail.empty())
            jr["detail"] = r.detail;
        arr.push_back(jr);
        all = all && r.pass;
    }
    j["invariants"] = arr;
    j["all_pass"] = all;
    return j;
}

/// Text rendering is derived from the JSON report, which stays the source of
/// truth for every value.
inline std::string render_text(const Json& j) {
    std::ostringstream os;
    const auto yesno = [](const Json& v) { return v.get<bool>() ? "yes" : "no"; };

    os << "source: " << j["source"].get<std::string>() << "\n";
    if (j.contains("network")) {
        const Json& net = j["network"];
        const Json& st = net["stats"];
        os << "species (" << st["m"] << "):";
        for (const auto& s : net["species"])
            os << ' ' << s.get<std::string>();
        os << "\n";
        os << "complexes (" << st["n"] << "):";
        for (const auto& c : net["complexes"])
            os << "  " << c.get<std::string>();
        os << "\n";
        os << "reactions (" << st["r"] << "):\n";
        for (const auto& r : net["reactions"]) {
            os << "  " << r["id"].get<std::string>() << ": "
               << r["reactant"].get<std::string>() << " -> "
               << r["product"].get<std::string>();
            if (!r["reverse_of"].is_null())
                os << "  (reverse of " << r["reverse_of"].get<std::string>() << ")";
            os << "\n";
        }
        os << "stats: n=" << st["n"] << " r=" << st["r"] << " r_irr=" << st["r_irr"]
           << " r_rev=" << st["r_rev"] << " l=" << st["l"] << " sl=" << st["sl"]
           << " s=" << st["s"] << " deficiency=" << st["deficiency"]
           << " weakly_reversible=" << yesno(st["weakly_reversible"]) << "\n";
        if (!st["terminal_strong_linkage_classes"].empty()) {
            os << "terminal strong linkage classes:";
            for (const auto& cls : st["terminal_strong_linkage_classes"]) {
                os << " {";
                bool first = true;
                for (const auto& c : cls) {
                    os << (first ? "" : ", ") << c.get<std::string>();
                    first = false;
                }
                os << "}";
            }
            os << "\n";
        }
    }
    if (j.contains("kinetics") && !j["kinetics"].is_null()) {
        const Json& k = j["kinetics"];
        os << "kinetics: " << k["classification"].get<std::string>();
        if (!k["nf_nodes"].empty()) {
            os << " (NF nodes:";
            for (const auto& n : k["nf_nodes"])
                os << ' ' << n.get<std::string>();
            os << ")";
        }
        os << "\n";
        os << "kinetic orders:\n";
        for (const auto& [id, row] : k["kinetic_orders"].items()) {
            os << "  " << id << ":";
            for (const auto& [species, order] : row.items())
                os << ' ' << species << '=' << order.get<std::string>();
            os << "  rate=" << k["rates"][id].get<std::string>() << "\n";
        }
    }
    const auto print_partition = [&](const Json& d, const std::string& title) {
        os << title << ": " << d["classes"].size() << " classes, w=" << d["w"];
        if (d.contains("w_I"))
            os << " (I=" << d["w_I"] << " II=" << d["w_II"] << " III=" << d["w_III"] << ")";
        os << "\n";
        std::size_t index = 0;
        for (const auto& cls : d["classes"]) {
            os << "  class " << ++index;
            if (!cls["type"].is_null())
                os << " [Type " << cls["type"].get<std::string>() << "]";
            if (cls["zero_class"].get<bool>())
                os << " [zero]";
            os << ":";
            for (const auto& id : cls["reactions"])
                os << ' ' << id.get<std::string>();
            os << "  (n=" << cls["n"] << " l=" << cls["l"] << " s=" << cls["s"]
               << " deficiency=" << cls["deficiency"] << ")\n";
        }
        os << "  independent=" << yesno(d["independent"])
           << " incidence_independent=" << yesno(d["incidence_independent"])
           << " bi_independent=" << yesno(d["bi_independent"])
           << " C-decomposition=" << yesno(d["is_c_decomposition"]);
        if (d.contains("trivial"))
            os << " trivial=" << yesno(d["trivial"]);
        os << "\n";
        const Json& sums = d["sums"];
        os << "  sums: s=" << sums["s"] << " vs sum_s=" << sums["sum_s"]
           << "; n-l=" << sums["n_minus_l"] << " vs sum=" << sums["sum_n_minus_l"]
           << "; deficiency=" << sums["deficiency"] << " vs sum=" << sums["sum_deficiency"]
           << "\n";
    };
    if (j.contains("f_decomposition"))
        print_partition(j["f_decomposition"], "F-decomposition");
    if (j.contains("decomposition"))
        print_partition(j["decomposition"],
                        j["decomposition"]["kind"].get<std::string>() + "-decomposition");
    if (j.contains("bounds")) {
        os << "bounds:\n";
        for (const auto& b : j["bounds"]) {
            os << "  " << b["bound"].get<std::string>() << " : "
               << b["values"].get<std::string>() << " : "
               << (b["satisfied"].get<bool>() ? "ok" : "violated");
            if (b.contains("implication"))
                os << " => " << b["implication"].get<std::string>();
            os << "\n";
        }
    }
    if (j.contains("multistationarity_precheck") && !j["multistationarity_precheck"].is_null())
        os << "multistationarity precheck: "
           << j["multistationarity_precheck"].get<std::string>() << "\n";
    if (j.contains("method")) {
        os << "method: " << j["method"].get<std::string>() << "\n";
        os << "rewritten:";
        for (const auto& id : j["rewritten"])
            os << ' ' << id.get<std::string>();
        os << "\n";
        os << "added complexes:";
        for (const auto& c : j["added_complexes"])
            os << "  " << c.get<std::string>();
        os << "\n";
        os << "reaction map:";
        for (const auto& [from, to] : j["reaction_map"].items())
            if (from != to.get<std::string>())
                os << ' ' << from << "->" << to.get<std::string>();
        os << " (ids preserved)\n";
        os << "output classification: " << j["output_classification"].get<std::string>()
           << "\n";
        if (!j["verification"].is_null()) {
            os << "verification:\n";
            for (const auto& c : j["verification"]["checks"]) {
                os << "  " << (c["pass"].get<bool>() ? "pass" : "FAIL") << "  "
                   << c["name"].get<std::string>();
                if (c.contains("detail"))
                    os << "  (" << c["detail"].get<std::string>() << ")";
                os << "\n";
            }
            os << "  all checks " << (j["verification"]["all_pass"].get<bool>() ? "pass" : "FAIL")
               << "\n";
        }
        os << "transformed network:\n" << j["transformed_dsl"].get<std::string>();
    }
    if (j.contains("invariants")) {
        for (const auto& r : j["invariants"]) {
            os << (r["pass"].get<bool>() ? "pass" : "FAIL") << "  "
               << r["invariant"].get<std::string>();
            if (r.contains("detail"))
                os << "  (" << r["detail"].get<std::string>() << ")";
            os << "\n";
        }
        os << "all invariants " << (j["all_pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    }
    return os.str();
}

} // namespace crn
