// Command-line front end for the scenario runner.
//
// Exit codes: 0 success, 2 configuration error (bad flag or value), 1
// runtime failure.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "aqs/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "Cryptanalysis workbench for arbitrated quantum signature protocols: "
        "runs honest sessions, forgery campaigns, disavowal disputes, and "
        "swap-test calibration, and reports success rates."};

    std::string scenario = "honest";
    std::string protocol = "bell";
    std::size_t n = 8;
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    std::string comparison = "oracle";
    int swap_repetitions = 1;
    std::string variant = "standard";
    std::string format = "text";
    std::string out = "-";

    app.add_option("--scenario", scenario,
                   "honest | forge-existential | forge-universal | "
                   "forge-enumerate | disavow | swaptest-calibration")
        ->capture_default_str();
    app.add_option("--protocol", protocol, "bell | plain")->capture_default_str();
    app.add_option("--n", n, "message length in qubits")->capture_default_str();
    app.add_option("--trials", trials, "number of seeded trials")->capture_default_str();
    app.add_option("--seed", seed, "64-bit experiment seed")->capture_default_str();
    app.add_option("--comparison", comparison, "oracle | physical")
        ->capture_default_str();
    app.add_option("--swap-repetitions", swap_repetitions,
                   "swap tests per qubit in physical mode")
        ->capture_default_str();
    app.add_option("--variant", variant, "standard | trent_retains")
        ->capture_default_str();
    app.add_option("--format", format, "text | json")->capture_default_str();
    app.add_option("--out", out, "output path, '-' for stdout")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        aqs::ScenarioConfig config;
        config.scenario = aqs::scenario_from_string(scenario);
        config.protocol = aqs::protocol_from_string(protocol);
        config.n = n;
        config.trials = trials;
        config.seed = seed;
        config.comparison = aqs::compare_mode_from_string(comparison);
        config.swap_repetitions = swap_repetitions;
        config.variant = aqs::variant_from_string(variant);
        const aqs::ReportFormat report_format = aqs::format_from_string(format);
        config.validate();

        const aqs::Report report = aqs::run_scenario(config);
        aqs::emit_report(report, report_format, out);
        return 0;
    } catch (const aqs::InvalidConfigError& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
