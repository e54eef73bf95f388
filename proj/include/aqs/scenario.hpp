// Seeded scenario runner behind the command-line harness: executes honest
// runs, forgery campaigns, disavowal disputes, and swap-test calibration over
// independent per-trial RNG streams, and aggregates success rates.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "aqs/bell_protocol.hpp"
#include "aqs/common.hpp"
#include "aqs/sequence.hpp"

namespace aqs {

using Json = nlohmann::ordered_json;

enum class Scenario {
    honest,
    forge_existential,
    forge_universal,
    forge_enumerate,
    disavow,
    swaptest_calibration,
};

enum class Protocol { bell, plain };

enum class ReportFormat { json, text };

// String forms used by the CLI and the JSON report. The *_from_string
// parsers throw InvalidConfigError naming the offending value.
std::string to_string(Scenario s);
std::string to_string(Protocol p);
std::string to_string(CompareMode m);
std::string to_string(BellVariant v);
Scenario scenario_from_string(std::string_view s);
Protocol protocol_from_string(std::string_view s);
CompareMode compare_mode_from_string(std::string_view s);
BellVariant variant_from_string(std::string_view s);
ReportFormat format_from_string(std::string_view s);

struct ScenarioConfig {
    Scenario scenario = Scenario::honest;
    Protocol protocol = Protocol::bell;
    std::size_t n = 8;
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    CompareMode comparison = CompareMode::oracle;
    int swap_repetitions = 1;
    BellVariant variant = BellVariant::standard;

    // Throws InvalidConfigError with a field-level message.
    void validate() const;

    Comparison comparison_settings() const {
        return Comparison{comparison, swap_repetitions};
    }

    bool operator==(const ScenarioConfig&) const = default;
};

struct Report {
    ScenarioConfig config;
    Json trials = Json::array();      // one object per trial
    Json aggregates = Json::object(); // name -> {successes, trials, rate, stderr, ...}
    double duration_ms = 0.0;

    // Everything but the wall clock.
    bool operator==(const Report& other) const {
        return config == other.config && trials == other.trials &&
               aggregates == other.aggregates;
    }
};

// Runs all trials of the configured scenario. Deterministic given (config,
// seed) apart from duration_ms: trial t draws from a child stream of (seed,
// t), so trials are order-independent. Throws InvalidConfigError.
Report run_scenario(const ScenarioConfig& config);

Json report_to_json(const Report& report);
Report report_from_json(const Json& j);

// Serializes to the stream; text is a human-readable summary, json the
// versioned schema. Throws IoFailureError if the stream is not writable.
void emit_report(const Report& report, ReportFormat format, std::ostream& out);

// Convenience: "-" writes to stdout, anything else to the named file.
// Throws IoFailureError if the file cannot be opened or written.
void emit_report(const Report& report, ReportFormat format, const std::string& path);

}  // namespace aqs
