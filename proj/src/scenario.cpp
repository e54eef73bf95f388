#include "aqs/scenario.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <utility>
#include <vector>

#include "aqs/attacks.hpp"
#include "aqs/plain_protocol.hpp"
#include "aqs/qotp.hpp"

namespace aqs {

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::honest: return "honest";
        case Scenario::forge_existential: return "forge-existential";
        case Scenario::forge_universal: return "forge-universal";
        case Scenario::forge_enumerate: return "forge-enumerate";
        case Scenario::disavow: return "disavow";
        case Scenario::swaptest_calibration: return "swaptest-calibration";
    }
    return "?";
}

std::string to_string(Protocol p) {
    return p == Protocol::bell ? "bell" : "plain";
}

std::string to_string(CompareMode m) {
    return m == CompareMode::oracle ? "oracle" : "physical";
}

std::string to_string(BellVariant v) {
    return v == BellVariant::standard ? "standard" : "trent_retains";
}

namespace {

[[noreturn]] void bad_value(std::string_view field, std::string_view value) {
    throw InvalidConfigError(std::string(field) + ": unknown value '" +
                             std::string(value) + "'");
}

}  // namespace

Scenario scenario_from_string(std::string_view s) {
    if (s == "honest") return Scenario::honest;
    if (s == "forge-existential") return Scenario::forge_existential;
    if (s == "forge-universal") return Scenario::forge_universal;
    if (s == "forge-enumerate") return Scenario::forge_enumerate;
    if (s == "disavow") return Scenario::disavow;
    if (s == "swaptest-calibration") return Scenario::swaptest_calibration;
    bad_value("scenario", s);
}

Protocol protocol_from_string(std::string_view s) {
    if (s == "bell") return Protocol::bell;
    if (s == "plain") return Protocol::plain;
    bad_value("protocol", s);
}

CompareMode compare_mode_from_string(std::string_view s) {
    if (s == "oracle") return CompareMode::oracle;
    if (s == "physical") return CompareMode::physical;
    bad_value("comparison", s);
}

BellVariant variant_from_string(std::string_view s) {
    if (s == "standard") return BellVariant::standard;
    if (s == "trent_retains") return BellVariant::trent_retains;
    bad_value("variant", s);
}

ReportFormat format_from_string(std::string_view s) {
    if (s == "json") return ReportFormat::json;
    if (s == "text") return ReportFormat::text;
    bad_value("format", s);
}

void ScenarioConfig::validate() const {
    if (n < 1) throw InvalidConfigError("n: must be >= 1");
    if (trials < 1) throw InvalidConfigError("trials: must be >= 1");
    if (swap_repetitions < 1) {
        throw InvalidConfigError("swap_repetitions: must be >= 1");
    }
    if (variant == BellVariant::trent_retains) {
        if (protocol != Protocol::bell) {
            throw InvalidConfigError("variant: trent_retains requires protocol bell");
        }
        if (scenario != Scenario::honest && scenario != Scenario::forge_existential &&
            scenario != Scenario::disavow) {
            throw InvalidConfigError(
                "variant: trent_retains supports only scenarios honest, "
                "forge-existential, disavow");
        }
    }
    if (scenario == Scenario::forge_enumerate && n > 8) {
        throw InvalidConfigError("n: forge-enumerate explores 4^n plans; n must be <= 8");
    }
}

// -- per-trial scenario bodies -----------------------------------------------

namespace {

Json bell_honest_trial(const ScenarioConfig& cfg, Rng& rng) {
    BellSession session = init_session(cfg.n, rng, cfg.variant);
    const QubitSequence message = random_message(cfg.n, rng);
    const BellTranscript t =
        run_honest(session, message, cfg.comparison_settings(), rng);
    Json trial;
    trial["r"] = static_cast<int>(t.trent_verdict.r);
    trial["accept"] = t.accept;
    return trial;
}

Json plain_honest_trial(const ScenarioConfig& cfg, Rng& rng) {
    PlainSession session = plain_init_session(cfg.n, rng);
    const QubitSequence message = random_message(cfg.n, rng);
    const PlainTranscript t =
        plain_run_honest(session, message, cfg.comparison_settings(), rng);
    Json trial;
    trial["v_t"] = static_cast<int>(t.trent_round.v_t);
    trial["v_b"] = static_cast<int>(t.bob.v_b);
    trial["accept"] = t.bob.record.has_value();
    return trial;
}

// Replaces the signature core inside a full signature.
BellSignature with_core(const BellSignature& sig, const QubitSequence& s_prime) {
    return BellSignature{sig.s.with_block("s_prime", s_prime.qubits())};
}

Json bell_forge_existential_trial(const ScenarioConfig& cfg, Rng& rng) {
    const Comparison cmp = cfg.comparison_settings();
    BellSession pre_session = init_session(cfg.n, rng, cfg.variant);
    BellSession post_session = pre_session;  // same keys, independent state
    const QubitSequence message = random_message(cfg.n, rng);
    const ForgeryPlan plan = random_forgery_plan(cfg.n, rng);

    // Before verification: forge straight off the received signed message,
    // then drive the forged pair through the full pipeline and dispute it.
    const SignResult pre_signed = sign(pre_session, message, rng);
    const ForgedPair pre_forged = forge_existential(
        pre_signed.plaintext_copy, pre_signed.signature.s.extract("s_prime"), plan);
    const BellSignature pre_sig = with_core(pre_signed.signature, pre_forged.s_prime);
    const QubitSequence y_b = bob_forward(pre_session, pre_sig, pre_forged.p);
    const TrentResult trent = trent_verify(pre_session, y_b, cmp, rng);
    const DisputeVerdict pre_verdict =
        resolve_dispute(pre_session, pre_forged.p, pre_sig, cmp, rng);

    // After verification: honest run first, then forge from what the
    // receiver holds once the wire came back.
    const BellTranscript honest = run_honest(post_session, message, cmp, rng);
    const QubitSequence returned =
        qotp_decrypt(post_session.key_b.segment("qotp_y_tb"), honest.y_tb)
            .relabeled(bell_y_tb_layout(cfg.n));
    const QubitSequence held_s =
        concat({returned.block("s_m_a"), returned.block("s_prime")},
               bell_signature_layout(cfg.n));
    const ForgedPair post_forged =
        forge_existential(honest.signed_message.plaintext_copy,
                          QubitSequence{std::vector<PureQubit>(
                              returned.block("s_prime").begin(),
                              returned.block("s_prime").end())},
                          plan);
    const BellSignature post_sig = with_core(BellSignature{held_s}, post_forged.s_prime);
    const DisputeVerdict post_verdict =
        resolve_dispute(post_session, post_forged.p, post_sig, cmp, rng);

    Json trial;
    trial["pre_r"] = static_cast<int>(trent.verdict.r);
    trial["pre_dispute_success"] = pre_verdict == DisputeVerdict::alice_disavowing;
    trial["post_dispute_success"] = post_verdict == DisputeVerdict::alice_disavowing;
    return trial;
}

Json plain_forge_existential_trial(const ScenarioConfig& cfg, Rng& rng) {
    const Comparison cmp = cfg.comparison_settings();
    PlainSession session = plain_init_session(cfg.n, rng);
    const QubitSequence message = random_message(cfg.n, rng);
    const ForgeryPlan plan = random_forgery_plan(cfg.n, rng);

    const PlainTranscript honest = plain_run_honest(session, message, cmp, rng);
    Json trial;
    if (!honest.bob.record) {
        trial["dispute_success"] = false;
        return trial;
    }
    const PlainSignedRecord forged =
        forge_plain_record(session, *honest.bob.record, plan);
    const DisputeVerdict verdict = plain_resolve_dispute(session, forged, cmp, rng);
    trial["dispute_success"] = verdict == DisputeVerdict::alice_disavowing;
    return trial;
}

std::vector<std::uint8_t> random_bits(std::size_t count, Rng& rng) {
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<std::uint8_t> out(count);
    for (auto& b : out) b = static_cast<std::uint8_t>(bit(rng));
    return out;
}

bool reads_as(const QubitSequence& seq, std::span<const std::uint8_t> bits) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (read_basis_bit(seq[i]) != bits[i]) return false;
    }
    return true;
}

Json bell_forge_universal_trial(const ScenarioConfig& cfg, Rng& rng) {
    const Comparison cmp = cfg.comparison_settings();
    BellSession session = init_session(cfg.n, rng, cfg.variant);
    const std::vector<std::uint8_t> known = random_bits(cfg.n, rng);
    const std::vector<std::uint8_t> target = random_bits(cfg.n, rng);

    const SignResult signed_msg = sign(session, classical_message(known), rng);
    const ForgedPair forged = forge_universal_classical(
        signed_msg.plaintext_copy, signed_msg.signature.s.extract("s_prime"), target);
    const BellSignature forged_sig = with_core(signed_msg.signature, forged.s_prime);
    const DisputeVerdict verdict =
        resolve_dispute(session, forged.p, forged_sig, cmp, rng);

    Json trial;
    trial["target_match"] = reads_as(forged.p, target);
    trial["dispute_success"] = verdict == DisputeVerdict::alice_disavowing;
    return trial;
}

Json plain_forge_universal_trial(const ScenarioConfig& cfg, Rng& rng) {
    const Comparison cmp = cfg.comparison_settings();
    PlainSession session = plain_init_session(cfg.n, rng);
    const std::vector<std::uint8_t> known = random_bits(cfg.n, rng);
    const std::vector<std::uint8_t> target = random_bits(cfg.n, rng);

    const PlainTranscript honest =
        plain_run_honest(session, classical_message(known), cmp, rng);
    Json trial;
    if (!honest.bob.record) {
        trial["target_match"] = false;
        trial["dispute_success"] = false;
        return trial;
    }
    const PlainSignedRecord& record = *honest.bob.record;
    const ForgedPair forged = forge_universal_classical(record.p, record.s_a, target);
    PlainSignedRecord forged_record{forged.p, forged.s_prime, record.r_mask};
    const DisputeVerdict verdict =
        plain_resolve_dispute(session, forged_record, cmp, rng);

    trial["target_match"] = reads_as(forged.p, target);
    trial["dispute_success"] = verdict == DisputeVerdict::alice_disavowing;
    return trial;
}

Json bell_forge_enumerate_trial(const ScenarioConfig& cfg, Rng& rng) {
    const Comparison cmp = cfg.comparison_settings();
    BellSession session = init_session(cfg.n, rng, cfg.variant);
    const QubitSequence message = random_message(cfg.n, rng);
    const SignResult signed_msg = sign(session, message, rng);

    const DisputeCheck dispute = [&](const QubitSequence& p, const QubitSequence& sp) {
        return resolve_dispute(session, p, with_core(signed_msg.signature, sp), cmp, rng);
    };
    const std::size_t count = enumerate_forgeries(
        signed_msg.plaintext_copy, signed_msg.signature.s.extract("s_prime"), dispute);
    const std::size_t expected = (std::size_t{1} << (2 * cfg.n)) - 1;

    Json trial;
    trial["count"] = count;
    trial["expected"] = expected;
    trial["exact"] = count == expected;
    return trial;
}

Json plain_forge_enumerate_trial(const ScenarioConfig& cfg, Rng& rng) {
    const Comparison cmp = cfg.comparison_settings();
    PlainSession session = plain_init_session(cfg.n, rng);
    const QubitSequence message = random_message(cfg.n, rng);
    const PlainTranscript honest = plain_run_honest(session, message, cmp, rng);
    const std::size_t expected = (std::size_t{1} << (2 * cfg.n)) - 1;

    Json trial;
    if (!honest.bob.record) {
        trial["count"] = 0;
        trial["expected"] = expected;
        trial["exact"] = false;
        return trial;
    }
    const PlainSignedRecord& record = *honest.bob.record;
    const DisputeCheck dispute = [&](const QubitSequence& p, const QubitSequence& sp) {
        return plain_resolve_dispute(session, PlainSignedRecord{p, sp, record.r_mask},
                                     cmp, rng);
    };
    const std::size_t count = enumerate_forgeries(record.p, record.s_a, dispute);
    trial["count"] = count;
    trial["expected"] = expected;
    trial["exact"] = count == expected;
    return trial;
}

Json bell_disavow_trial(const ScenarioConfig& cfg, Rng& rng) {
    const Comparison cmp = cfg.comparison_settings();
    BellSession session = init_session(cfg.n, rng, cfg.variant);
    const QubitSequence message = random_message(cfg.n, rng);

    const SignResult signed_msg = sign(session, message, rng);
    const QubitSequence y_b =
        bob_forward(session, signed_msg.signature, signed_msg.plaintext_copy);
    const TrentResult trent = trent_verify(session, y_b, cmp, rng);

    // The signer disturbs exactly the signature-core block on the wire back
    // to the receiver.
    const TamperPlan plan{"s_prime", Disturbance::randomize, {}};
    const QubitSequence tampered = disavow_tamper(trent.y_tb, plan, rng);

    const bool accept = bob_verify(session, tampered, signed_msg.bob_remote,
                                   signed_msg.plaintext_copy, cmp, rng);

    // The receiver's holdings after the run: message and signature as they
    // came off the tampered wire.
    const QubitSequence held =
        qotp_decrypt(session.key_b.segment("qotp_y_tb"), tampered)
            .relabeled(bell_y_tb_layout(cfg.n));
    const BellSignature held_sig{concat({held.block("s_m_a"), held.block("s_prime")},
                                        bell_signature_layout(cfg.n))};
    const DisputeVerdict verdict =
        resolve_dispute(session, held.extract("p"), held_sig, cmp, rng);

    Json trial;
    trial["r"] = static_cast<int>(trent.verdict.r);
    trial["accept"] = accept;
    trial["bob_forged"] = verdict == DisputeVerdict::bob_forged;
    trial["alice_disavowing"] = verdict == DisputeVerdict::alice_disavowing;
    return trial;
}

Json plain_disavow_trial(const ScenarioConfig& cfg, Rng& rng) {
    const Comparison cmp = cfg.comparison_settings();
    PlainSession session = plain_init_session(cfg.n, rng);
    const QubitSequence message = random_message(cfg.n, rng);

    const QubitSequence s_wire = plain_sign(session, message, rng);
    const QubitSequence y_b = plain_bob_forward(session, s_wire);
    PlainTrentRound round = plain_trent_verify(session, y_b, cmp, rng);

    const TamperPlan plan{"s_a", Disturbance::randomize, {}};
    round.y_b_return = disavow_tamper(round.y_b_return, plan, rng);

    const PlainBobResult bob = plain_bob_verify(session, s_wire, round, cmp, rng);
    const bool accept = bob.record.has_value();
    bool bob_forged = false;
    bool alice_disavowing = false;
    if (bob.record) {
        const DisputeVerdict verdict =
            plain_resolve_dispute(session, *bob.record, cmp, rng);
        bob_forged = verdict == DisputeVerdict::bob_forged;
        alice_disavowing = verdict == DisputeVerdict::alice_disavowing;
    }

    Json trial;
    trial["v_t"] = static_cast<int>(round.v_t);
    trial["v_b"] = static_cast<int>(bob.v_b);
    trial["accept"] = accept;
    trial["bob_forged"] = bob_forged;
    trial["alice_disavowing"] = alice_disavowing;
    return trial;
}

Json calibration_trial(const ScenarioConfig&, Rng& rng) {
    Json trial;
    trial["pass_f0"] = swap_test(zero_state(), one_state(), rng);
    trial["pass_f05"] = swap_test(zero_state(), plus_state(), rng);
    trial["pass_f1"] = swap_test(zero_state(), zero_state(), rng);
    return trial;
}

Json run_trial(const ScenarioConfig& cfg, Rng& rng) {
    const bool bell = cfg.protocol == Protocol::bell;
    switch (cfg.scenario) {
        case Scenario::honest:
            return bell ? bell_honest_trial(cfg, rng) : plain_honest_trial(cfg, rng);
        case Scenario::forge_existential:
            return bell ? bell_forge_existential_trial(cfg, rng)
                        : plain_forge_existential_trial(cfg, rng);
        case Scenario::forge_universal:
            return bell ? bell_forge_universal_trial(cfg, rng)
                        : plain_forge_universal_trial(cfg, rng);
        case Scenario::forge_enumerate:
            return bell ? bell_forge_enumerate_trial(cfg, rng)
                        : plain_forge_enumerate_trial(cfg, rng);
        case Scenario::disavow:
            return bell ? bell_disavow_trial(cfg, rng) : plain_disavow_trial(cfg, rng);
        case Scenario::swaptest_calibration:
            return calibration_trial(cfg, rng);
    }
    throw InvalidConfigError("scenario: unknown");
}

// -- aggregation -------------------------------------------------------------

Json rate_entry(std::size_t successes, std::size_t trials) {
    const double rate = static_cast<double>(successes) / static_cast<double>(trials);
    Json entry;
    entry["successes"] = successes;
    entry["trials"] = trials;
    entry["rate"] = rate;
    entry["stderr"] = std::sqrt(rate * (1.0 - rate) / static_cast<double>(trials));
    return entry;
}

std::size_t count_hits(const Json& trials, const std::string& field) {
    std::size_t hits = 0;
    for (const Json& t : trials) {
        const Json& v = t.at(field);
        const bool hit = v.is_boolean() ? v.get<bool>() : v.get<std::int64_t>() == 1;
        if (hit) ++hits;
    }
    return hits;
}

Json aggregate(const ScenarioConfig& cfg, const Json& trials) {
    // aggregate key -> per-trial field it counts.
    std::vector<std::pair<std::string, std::string>> keys;
    const bool bell = cfg.protocol == Protocol::bell;
    switch (cfg.scenario) {
        case Scenario::honest:
            if (bell) {
                keys = {{"r_pass", "r"}, {"accept", "accept"}};
            } else {
                keys = {{"v_t_pass", "v_t"}, {"v_b_pass", "v_b"}, {"accept", "accept"}};
            }
            break;
        case Scenario::forge_existential:
            if (bell) {
                keys = {{"pre_r_pass", "pre_r"},
                        {"pre_forgery", "pre_dispute_success"},
                        {"post_forgery", "post_dispute_success"}};
            } else {
                keys = {{"forgery", "dispute_success"}};
            }
            break;
        case Scenario::forge_universal:
            keys = {{"target_match", "target_match"}, {"forgery", "dispute_success"}};
            break;
        case Scenario::forge_enumerate:
            keys = {{"exact_count", "exact"}};
            break;
        case Scenario::disavow:
            keys = {{"accept", "accept"},
                    {"bob_forged", "bob_forged"},
                    {"alice_disavowing", "alice_disavowing"}};
            break;
        case Scenario::swaptest_calibration:
            keys = {{"pass_f0", "pass_f0"}, {"pass_f05", "pass_f05"},
                    {"pass_f1", "pass_f1"}};
            break;
    }

    Json agg = Json::object();
    for (const auto& [name, field] : keys) {
        agg[name] = rate_entry(count_hits(trials, field), trials.size());
    }
    if (cfg.scenario == Scenario::swaptest_calibration) {
        agg["pass_f0"]["expected"] = 0.5;
        agg["pass_f05"]["expected"] = 0.75;
        agg["pass_f1"]["expected"] = 1.0;
    }
    return agg;
}

}  // namespace

Report run_scenario(const ScenarioConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    Report report;
    report.config = config;
    for (std::size_t t = 0; t < config.trials; ++t) {
        Rng rng = make_trial_rng(config.seed, t);
        report.trials.push_back(run_trial(config, rng));
    }
    report.aggregates = aggregate(config, report.trials);

    const auto end = std::chrono::steady_clock::now();
    report.duration_ms =
        std::chrono::duration<double, std::milli>(end - start).count();
    return report;
}

// -- serialization -----------------------------------------------------------

namespace {

Json config_to_json(const ScenarioConfig& cfg) {
    Json j;
    j["scenario"] = to_string(cfg.scenario);
    j["protocol"] = to_string(cfg.protocol);
    j["n"] = cfg.n;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["comparison"] = to_string(cfg.comparison);
    j["swap_repetitions"] = cfg.swap_repetitions;
    j["variant"] = to_string(cfg.variant);
    return j;
}

ScenarioConfig config_from_json(const Json& j) {
    ScenarioConfig cfg;
    cfg.scenario = scenario_from_string(j.at("scenario").get<std::string>());
    cfg.protocol = protocol_from_string(j.at("protocol").get<std::string>());
    cfg.n = j.at("n").get<std::size_t>();
    cfg.trials = j.at("trials").get<std::size_t>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.comparison = compare_mode_from_string(j.at("comparison").get<std::string>());
    cfg.swap_repetitions = j.at("swap_repetitions").get<int>();
    cfg.variant = variant_from_string(j.at("variant").get<std::string>());
    return cfg;
}

}  // namespace

Json report_to_json(const Report& report) {
    Json j;
    j["schema_version"] = 1;
    j["config"] = config_to_json(report.config);
    j["trials"] = report.trials;
    j["aggregates"] = report.aggregates;
    j["duration_ms"] = report.duration_ms;
    return j;
}

Report report_from_json(const Json& j) {
    if (j.at("schema_version").get<int>() != 1) {
        throw InvalidConfigError("schema_version: unsupported");
    }
    Report report;
    report.config = config_from_json(j.at("config"));
    report.trials = j.at("trials");
    report.aggregates = j.at("aggregates");
    report.duration_ms = j.at("duration_ms").get<double>();
    return report;
}

void emit_report(const Report& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::json) {
        out << report_to_json(report).dump(2) << '\n';
    } else {
        const ScenarioConfig& c = report.config;
        out << "scenario: " << to_string(c.scenario) << '\n'
            << "protocol: " << to_string(c.protocol) << '\n'
            << "config: n=" << c.n << " trials=" << c.trials << " seed=" << c.seed
            << " comparison=" << to_string(c.comparison)
            << " swap_repetitions=" << c.swap_repetitions
            << " variant=" << to_string(c.variant) << '\n'
            << "aggregates:\n";
        for (const auto& [name, entry] : report.aggregates.items()) {
            out << "  " << name << ": " << entry.at("successes").get<std::size_t>()
                << "/" << entry.at("trials").get<std::size_t>()
                << " rate=" << entry.at("rate").get<double>()
                << " stderr=" << entry.at("stderr").get<double>();
            if (entry.contains("expected")) {
                out << " expected=" << entry.at("expected").get<double>();
            }
            out << '\n';
        }
        out << "duration_ms: " << report.duration_ms << '\n';
    }
    out.flush();
    if (!out) throw IoFailureError("write failed");
}

void emit_report(const Report& report, ReportFormat format, const std::string& path) {
    if (path.empty() || path == "-") {
        emit_report(report, format, std::cout);
        return;
    }
    std::ofstream file(path);
    if (!file) throw IoFailureError("cannot open '" + path + "' for writing");
    emit_report(report, format, file);
}

}  // namespace aqs
