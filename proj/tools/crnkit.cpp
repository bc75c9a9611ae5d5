// crnkit: analyze, decompose, transform and check chemical reaction networks
// written in the line-oriented DSL documented in the README.
//
// Exit codes: 0 success, 1 property-check failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "crn/crn.hpp"
#include "crn/preset_registry.hpp"

namespace {

struct InputOptions {
    std::string file;
    std::string preset;
};

struct LoadedInput {
    std::string source;
    crn::ReactionNetwork network;
    std::optional<crn::PowerLawKinetics> kinetics;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("file", in.file, "input network file (DSL)");
    cmd->add_option("--preset", in.preset, "built-in network preset, e.g. schmitz or pd-distributive:3");
}

LoadedInput load_input(const InputOptions& in) {
    if (!in.preset.empty() && !in.file.empty())
        throw crn::Error("give either a file or --preset, not both");
    if (!in.preset.empty()) {
        crn::Preset preset = crn::make_preset(in.preset);
        return {"preset:" + in.preset, std::move(preset.network), std::move(preset.kinetics)};
    }
    if (in.file.empty())
        throw crn::Error("no input: give a file or --preset");
    std::ifstream stream(in.file);
    if (!stream)
        throw crn::Error("cannot open '" + in.file + "'");
    std::stringstream buffer;
    buffer << stream.rdbuf();
    crn::ParsedModel model = crn::parse_model(buffer.str());
    return {"file:" + in.file, std::move(model.network), std::move(model.kinetics)};
}

void print_report(const crn::Json& report, const std::string& format) {
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << crn::render_text(report);
}

crn::ReactionPartition load_user_partition(const std::string& path,
                                           const crn::ReactionNetwork& net) {
    std::ifstream stream(path);
    if (!stream)
        throw crn::Error("cannot open partition file '" + path + "'");
    crn::ReactionPartition p;
    p.kind = crn::PartitionKind::User;
    std::string line;
    while (std::getline(stream, line)) {
        if (const std::size_t hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream words(line);
        std::vector<std::size_t> cls;
        std::string id;
        while (words >> id)
            cls.push_back(net.reaction_index(id));
        if (!cls.empty())
            p.classes.push_back(std::move(cls));
    }
    if (p.classes.empty())
        throw crn::Error("partition file '" + path + "' lists no classes");
    return p;
}

crn::Orientation parse_orientation_list(const std::string& list,
                                        const crn::ReactionNetwork& net) {
    crn::Orientation o;
    std::string id;
    std::istringstream stream(list);
    while (std::getline(stream, id, ','))
        if (!id.empty())
            o.members.push_back(net.reaction_index(id));
    std::sort(o.members.begin(), o.members.end());
    crn::validate_orientation(net, o);
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chemical reaction network decomposition toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    InputOptions analyze_in;
    CLI::App* analyze = app.add_subcommand("analyze", "full structural analysis report");
    add_input_options(analyze, analyze_in);

    InputOptions decompose_in;
    std::string orientation_arg = "auto";
    std::string partition_arg = "f";
    CLI::App* decompose = app.add_subcommand("decompose", "report for a chosen decomposition");
    add_input_options(decompose, decompose_in);
    decompose->add_option("--orientation", orientation_arg,
                          "auto or a comma-separated reaction id list");
    decompose->add_option("--partition", partition_arg,
                          "f, p, o, linkage, species, or user:<file>");

    InputOptions transform_in;
    std::string method_arg = "cf-ri+";
    bool verify = false;
    CLI::App* transform = app.add_subcommand("transform", "rewrite to a PL-RDK system");
    add_input_options(transform, transform_in);
    transform->add_option("--method", method_arg, "transformation method")
        ->check(CLI::IsMember({"cf-rm+", "cf-ri+"}))
        ->capture_default_str();
    transform->add_flag("--verify", verify, "run the preservation checks");

    InputOptions check_in;
    std::string invariants_arg = "all";
    CLI::App* check = app.add_subcommand("check", "run the structural invariant battery");
    add_input_options(check, check_in);
    check->add_option("--invariants", invariants_arg, "all or a comma-separated name list");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            const LoadedInput in = load_input(analyze_in);
            print_report(crn::analysis_report(in.source, in.network, in.kinetics), format);
            return 0;
        }
        if (*decompose) {
            const LoadedInput in = load_input(decompose_in);
            crn::Orientation o = orientation_arg == "auto"
                                     ? crn::default_orientation(in.network)
                                     : parse_orientation_list(orientation_arg, in.network);
            crn::DecompositionReport report;
            if (partition_arg == "f")
                report = crn::analyze_partition(
                    in.network, crn::f_decomposition_from(in.network, o));
            else if (partition_arg == "p")
                report = crn::analyze_partition(in.network,
                                                crn::p_decomposition(in.network, o));
            else if (partition_arg == "o")
                report = crn::o_decomposition(in.network, o);
            else if (partition_arg == "linkage")
                report = crn::analyze_partition(in.network,
                                                crn::linkage_partition(in.network));
            else if (partition_arg == "species")
                report = crn::analyze_partition(in.network,
                                                crn::species_partition(in.network));
            else if (partition_arg.rfind("user:", 0) == 0)
                report = crn::analyze_partition(
                    in.network, load_user_partition(partition_arg.substr(5), in.network));
            else
                throw crn::Error("unknown partition kind '" + partition_arg + "'");
            print_report(crn::decompose_report(in.source, in.network, report), format);
            return 0;
        }
        if (*transform) {
            const LoadedInput in = load_input(transform_in);
            if (!in.kinetics)
                throw crn::Error("the transform needs kinetics (a 'kinetics:' block)");
            const crn::TransformResult result =
                method_arg == "cf-rm+" ? crn::cf_rm_plus(in.network, *in.kinetics)
                                       : crn::cf_ri_plus(in.network, *in.kinetics);
            std::optional<crn::VerifyReport> verification;
            if (verify)
                verification = crn::verify_transform(in.network, *in.kinetics, result);
            print_report(
                crn::transform_report(in.source, in.network, in.kinetics, result, verification),
                format);
            return verification && !verification->all_pass() ? 1 : 0;
        }
        if (*check) {
            const LoadedInput in = load_input(check_in);
            std::vector<std::string> which;
            if (invariants_arg != "all") {
                std::istringstream stream(invariants_arg);
                std::string name;
                while (std::getline(stream, name, ','))
                    if (!name.empty())
                        which.push_back(name);
            }
            const auto results = crn::check_invariants(in.network, in.kinetics, which);
            const crn::Json report = crn::check_report(in.source, results);
            print_report(report, format);
            return report["all_pass"].get<bool>() ? 0 : 1;
        }
    } catch (const crn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
