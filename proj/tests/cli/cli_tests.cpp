// Exercises the crnkit binary end to end: argv[1] is the binary path,
// argv[2] the test data directory.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run(const std::string& command) {
    const std::string out_path = "/tmp/crnkit_cli_test_out.txt";
    const int status = std::system((command + " > " + out_path + " 2>&1").c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    return result;
}

void expect(bool cond, const std::string& what, const RunResult& r) {
    if (cond) {
        std::cout << "ok: " << what << "\n";
    } else {
        ++failures;
        std::cout << "FAIL: " << what << "\n--- output ---\n" << r.output << "\n---\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_tests <crnkit-binary> <data-dir>\n";
        return 2;
    }
    const std::string bin = argv[1];
    const std::string data = argv[2];

    {
        const auto r = run(bin + " --format json analyze --preset schmitz");
        expect(r.exit_code == 0, "analyze --preset schmitz exits 0", r);
        const auto j = nlohmann::json::parse(r.output);
        expect(j["f_decomposition"]["independent"] == true &&
                   j["f_decomposition"]["incidence_independent"] == true,
               "schmitz analysis reports bi-independence", r);
        expect(j["f_decomposition"]["classes"][0]["reactions"] ==
                       nlohmann::json::array({"R1", "R2", "R3", "R4"}) &&
                   j["f_decomposition"]["classes"][1]["reactions"] ==
                       nlohmann::json::array({"R5", "R6", "R7", "R8"}),
               "schmitz classes match the running example", r);

        const auto again = run(bin + " --format json analyze --preset schmitz");
        expect(again.output == r.output, "json output is byte-identical across runs", r);
    }

    {
        const auto r =
            run(bin + " --format json transform --preset schmitz-ndk --method cf-ri+ --verify");
        expect(r.exit_code == 0, "transform --verify exits 0", r);
        const auto j = nlohmann::json::parse(r.output);
        const std::string dsl = j["transformed_dsl"].get<std::string>();
        expect(dsl.find("R5: 2M1 -> M1 + M3") != std::string::npos,
               "transformed DSL rewrites R5 to 2M1 -> M1 + M3", r);
        expect(j["verification"]["all_pass"] == true, "verification passes", r);
        expect(j["output_classification"] == "PL-RDK", "output is PL-RDK", r);
    }

    {
        const auto r = run(bin + " analyze " + data + "/schmitz.crn");
        expect(r.exit_code == 0, "analyze on a DSL file exits 0", r);
        expect(r.output.find("PL-NDK") != std::string::npos,
               "file analysis sees the NDK kinetics", r);
    }

    {
        const auto r = run("printf '' | " + bin + " analyze /dev/stdin");
        expect(r.exit_code == 2, "analyze on an empty file exits 2", r);
    }

    {
        const auto r = run(bin + " analyze " + data + "/broken.crn");
        expect(r.exit_code == 2, "syntax errors exit 2", r);
        expect(r.output.find("line") != std::string::npos, "diagnostic carries a line number",
               r);
    }

    {
        const auto r = run(bin + " --format json decompose --preset heck-terrestrial"
                                 " --partition linkage");
        expect(r.exit_code == 0, "decompose --partition linkage exits 0", r);
        const auto j = nlohmann::json::parse(r.output);
        expect(j["decomposition"]["kind"] == "linkage" &&
                   j["decomposition"]["is_c_decomposition"] == true,
               "linkage partition is a C-decomposition", r);
    }

    {
        const auto r = run(bin + " --format json decompose --preset schmitz --partition user:" +
                           data + "/schmitz_linkage_partition.txt");
        expect(r.exit_code == 0, "user partition file is accepted", r);
        const auto j = nlohmann::json::parse(r.output);
        expect(j["decomposition"]["kind"] == "user", "user partition analyzed", r);
    }

    {
        const auto r = run(bin + " --format json decompose --preset schmitz --partition p"
                                 " --orientation R1,R3,R4,R5,R6,R7,R8");
        expect(r.exit_code == 0, "explicit orientation accepted", r);
        const auto j = nlohmann::json::parse(r.output);
        expect(j["decomposition"]["w"] == 2, "P-decomposition has w=2", r);
    }

    {
        const auto r = run(bin + " check --preset schmitz");
        expect(r.exit_code == 0, "check --preset schmitz exits 0", r);
        const auto bad = run(bin + " check --preset schmitz --invariants no-such-invariant");
        expect(bad.exit_code == 2, "unknown invariant name exits 2", bad);
        const auto with_kinetics = run(bin + " --format json check " + data + "/schmitz.crn");
        expect(with_kinetics.exit_code == 0, "check on a kinetics-bearing file exits 0",
               with_kinetics);
        const auto j = nlohmann::json::parse(with_kinetics.output);
        bool cf_checked = false;
        for (const auto& inv : j["invariants"])
            if (inv["invariant"] == "cf-subsets-refine-fibers" && inv["pass"] == true &&
                !inv.contains("detail"))
                cf_checked = true;
        expect(cf_checked, "kinetics invariants run against the file's kinetics block",
               with_kinetics);
    }

    {
        const auto r = run(bin + " transform --preset schmitz");
        expect(r.exit_code == 2, "transform without kinetics exits 2", r);
    }

    std::cout << (failures ? "CLI TESTS FAILED\n" : "cli tests passed\n");
    return failures ? 1 : 0;
}
