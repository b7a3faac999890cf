#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "mirrorcheck/errors.hpp"
#include "mirrorcheck/pipeline.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 2;
constexpr int exit_precondition = 3;

} // namespace

int main(int argc, char **argv)
{
    using namespace mirrorcheck;

    CLI::App app{"Exact-arithmetic checks: quantum cohomology, Picard-Fuchs reduction, mirror map and instanton numbers"};
    app.require_subcommand(1);

    int order = 12;
    bool as_json = false;
    std::string dataset_path;
    std::string source = "computed";
    app.add_option("--order,-N", order, "Truncation order N (q^0..q^N)")->capture_default_str();
    app.add_flag("--json", as_json, "Emit the report as JSON");
    app.add_option("--dataset", dataset_path, "Replace the embedded dataset with a JSON file");
    app.add_option("--stage-source", source, "Input of downstream stages: listed data or the computed chain")
        ->check(CLI::IsMember({"paper", "computed"}))
        ->capture_default_str();

    const std::vector<std::pair<std::string, stage_report (*)(pipeline &)>> commands{
        {"ring", cmd_ring},
        {"wdvv", cmd_wdvv},
        {"qde", cmd_qde},
        {"twist", cmd_twist},
        {"mirror", cmd_mirror},
        {"instanton", cmd_instanton},
        {"verify-all", cmd_verify_all},
        {"dataset", cmd_dataset},
    };
    const std::map<std::string, std::string> help{
        {"ring", "Build the Frobenius ring: products, pairing, dual basis, axiom scan"},
        {"wdvv", "Reconstruct correlators from associativity; check the degree-2 target"},
        {"qde", "Quantum matrix of p and its scalar annihilator P(D)"},
        {"twist", "Hyperplane twist of P(D), left division, comparison with the Picard-Fuchs operator"},
        {"mirror", "Frobenius periods, mirror map, Yukawa coupling and normal-form residuals"},
        {"instanton", "Instanton numbers n_1..n_5"},
        {"verify-all", "Run the whole computed chain and report every mismatch"},
        {"dataset", "Print the dataset in use as JSON"},
    };
    for (const auto &[name, fn] : commands) {
        app.add_subcommand(name, help.at(name))->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_precondition;
    }

    try {
        paper_dataset data = dataset_path.empty() ? embedded_dataset() : load_dataset(dataset_path);
        pipeline p(std::move(data), run_config{order, parse_stage_source(source)});
        for (const auto &[name, fn] : commands) {
            if (app.got_subcommand(name)) {
                const stage_report r = fn(p);
                if (as_json) {
                    nlohmann::json out{{"stage", r.stage}, {"ok", r.ok}, {"report", r.body}};
                    std::cout << out.dump(2) << '\n';
                } else {
                    std::cout << r.text;
                    if (name != "dataset") {
                        std::cout << (r.ok ? "OK" : "MISMATCH") << '\n';
                    }
                }
                return r.ok ? exit_ok : exit_mismatch;
            }
        }
    } catch (const precondition_error &e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return exit_precondition;
    } catch (const truncation_error &e) {
        std::cerr << "truncation: " << e.what() << '\n';
        return exit_precondition;
    } catch (const std::exception &e) {
        std::cerr << "mismatch: " << e.what() << '\n';
        return exit_mismatch;
    }
    return exit_precondition;
}
