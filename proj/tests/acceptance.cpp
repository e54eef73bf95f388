// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit 0 only when
// every criterion holds. Thresholds are pinned here and are not configurable.

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "aqs/attacks.hpp"
#include "aqs/bell_protocol.hpp"
#include "aqs/plain_protocol.hpp"
#include "aqs/qcore.hpp"
#include "aqs/qotp.hpp"
#include "aqs/scenario.hpp"

using namespace aqs;

namespace {

constexpr std::uint64_t kSeed = 20240811;

// Collects sub-check failures for one criterion.
struct Detail {
    std::ostringstream out;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (!ok) out << "; ";
        out << what;
        ok = false;
    }

    bool finish(std::string& detail) {
        detail = out.str();
        return ok;
    }
};

ScenarioConfig make_cfg(Scenario scenario, Protocol protocol, std::size_t n,
                        std::size_t trials,
                        BellVariant variant = BellVariant::standard) {
    ScenarioConfig cfg;
    cfg.scenario = scenario;
    cfg.protocol = protocol;
    cfg.n = n;
    cfg.trials = trials;
    cfg.seed = kSeed;
    cfg.variant = variant;
    return cfg;
}

std::size_t hits(const Report& report, const char* name) {
    return report.aggregates.at(name).at("successes").get<std::size_t>();
}

std::string counted(const char* what, std::size_t got, std::size_t want) {
    std::ostringstream s;
    s << what << " " << got << "/" << want;
    return s.str();
}

double elapsed_s(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

// ---------------------------------------------------------------------------

bool crit_completeness(std::string& detail) {
    Detail d;
    const auto start = std::chrono::steady_clock::now();
    const Report bell =
        run_scenario(make_cfg(Scenario::honest, Protocol::bell, 8, 200));
    const Report plain =
        run_scenario(make_cfg(Scenario::honest, Protocol::plain, 8, 200));
    const double secs = elapsed_s(start);

    d.require(hits(bell, "r_pass") == 200, counted("bell r=1", hits(bell, "r_pass"), 200));
    d.require(hits(bell, "accept") == 200, counted("bell accept", hits(bell, "accept"), 200));
    d.require(hits(plain, "v_t_pass") == 200,
              counted("plain v_t=1", hits(plain, "v_t_pass"), 200));
    d.require(hits(plain, "v_b_pass") == 200,
              counted("plain v_b=1", hits(plain, "v_b_pass"), 200));
    d.require(hits(plain, "accept") == 200,
              counted("plain accept", hits(plain, "accept"), 200));
    d.require(secs < 2.0, "runtime " + std::to_string(secs) + "s >= 2s");
    return d.finish(detail);
}

bool crit_existential_forgery(std::string& detail) {
    Detail d;
    const Report bell =
        run_scenario(make_cfg(Scenario::forge_existential, Protocol::bell, 8, 200));
    const Report plain =
        run_scenario(make_cfg(Scenario::forge_existential, Protocol::plain, 8, 200));
    d.require(hits(bell, "pre_forgery") == 200,
              counted("bell pre-verification forgery", hits(bell, "pre_forgery"), 200));
    d.require(hits(bell, "post_forgery") == 200,
              counted("bell post-verification forgery", hits(bell, "post_forgery"), 200));
    d.require(hits(plain, "forgery") == 200,
              counted("plain forgery", hits(plain, "forgery"), 200));

    // Exhaustive n=1 sweep: every plan (identity included) against every
    // QOTP key pair and every one-bit-cipher key.
    Rng rng(kSeed);
    std::size_t passed = 0;
    for (std::uint8_t e = 0; e < 2; ++e) {
        for (std::uint8_t z = 0; z < 2; ++z) {
            for (std::uint8_t x = 0; x < 2; ++x) {
                const BitKey key_a{{e, 0, 0, 0, 0, z, x}, bell_key_a_layout(1)};
                for (PauliOp u : kAllPaulis) {
                    BellSession session =
                        make_session(1, key_a, random_key(bell_key_b_layout(1), rng));
                    const QubitSequence msg{std::vector<PureQubit>{random_qubit(rng)}};
                    const SignResult signed_msg = sign(session, msg, rng);
                    const ForgedPair forged = forge_existential(
                        signed_msg.plaintext_copy,
                        signed_msg.signature.s.extract("s_prime"), ForgeryPlan{{u}});
                    const BellSignature forged_sig{signed_msg.signature.s.with_block(
                        "s_prime", forged.s_prime.qubits())};
                    const DisputeVerdict verdict =
                        resolve_dispute(session, forged.p, forged_sig,
                                        Comparison{CompareMode::oracle, 1}, rng);
                    if (verdict == DisputeVerdict::alice_disavowing) ++passed;
                }
            }
        }
    }
    d.require(passed == 32, counted("exhaustive n=1 sweep", passed, 32));
    return d.finish(detail);
}

bool crit_forgery_count(std::string& detail) {
    Detail d;
    const auto start = std::chrono::steady_clock::now();
    const std::array<std::pair<std::size_t, std::size_t>, 3> cases{
        {{1, 3}, {2, 15}, {3, 63}}};
    for (const auto& [n, want] : cases) {
        const Report report =
            run_scenario(make_cfg(Scenario::forge_enumerate, Protocol::bell, n, 3));
        d.require(hits(report, "exact_count") == 3,
                  counted(("n=" + std::to_string(n) + " exact-count trials").c_str(),
                          hits(report, "exact_count"), 3));
        for (const auto& trial : report.trials) {
            d.require(trial.at("count").get<std::size_t>() == want,
                      counted(("n=" + std::to_string(n) + " count").c_str(),
                              trial.at("count").get<std::size_t>(), want));
        }
    }
    const double secs = elapsed_s(start);
    d.require(secs < 5.0, "runtime " + std::to_string(secs) + "s >= 5s");
    return d.finish(detail);
}

bool crit_universal_forgery(std::string& detail) {
    Detail d;
    const Report report =
        run_scenario(make_cfg(Scenario::forge_universal, Protocol::bell, 16, 100));
    d.require(hits(report, "target_match") == 100,
              counted("target match", hits(report, "target_match"), 100));
    d.require(hits(report, "forgery") == 100,
              counted("dispute success", hits(report, "forgery"), 100));
    return d.finish(detail);
}

bool crit_disavowal(std::string& detail) {
    Detail d;
    for (Protocol protocol : {Protocol::bell, Protocol::plain}) {
        const Report report =
            run_scenario(make_cfg(Scenario::disavow, protocol, 8, 200));
        const char* tag = protocol == Protocol::bell ? "bell" : "plain";
        d.require(hits(report, "accept") == 200,
                  counted((std::string(tag) + " accept").c_str(),
                          hits(report, "accept"), 200));
        d.require(hits(report, "bob_forged") == 200,
                  counted((std::string(tag) + " bob_forged").c_str(),
                          hits(report, "bob_forged"), 200));
    }
    return d.finish(detail);
}

bool crit_qotp_roundtrip_blinding(std::string& detail) {
    Detail d;
    Rng rng(kSeed);
    SegmentLayout layout;
    layout.append("k", 2);

    double worst_infidelity = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const BitKey key = random_key(layout, rng);
        const QubitSequence msg{std::vector<PureQubit>{random_qubit(rng)}};
        const QubitSequence back =
            qotp_decrypt(key.segment("k"), qotp_encrypt(key.segment("k"), msg));
        worst_infidelity = std::max(worst_infidelity, 1.0 - fidelity(back[0], msg[0]));
    }
    d.require(worst_infidelity < 1e-9,
              "round-trip infidelity " + std::to_string(worst_infidelity));

    // Key-averaged density matrix by exact enumeration of the four keys.
    std::vector<PureQubit> states{zero_state(), plus_state()};
    for (int i = 0; i < 50; ++i) states.push_back(random_qubit(rng));
    double worst_dev = 0.0;
    for (const PureQubit& psi : states) {
        const QubitSequence seq{std::vector<PureQubit>{psi}};
        std::array<Complex, 4> rho{};
        for (std::uint8_t b0 = 0; b0 < 2; ++b0) {
            for (std::uint8_t b1 = 0; b1 < 2; ++b1) {
                const BitKey key{{b0, b1}, layout};
                const PureQubit q = qotp_encrypt(key.segment("k"), seq)[0];
                rho[0] += 0.25 * q.amp0 * std::conj(q.amp0);
                rho[1] += 0.25 * q.amp0 * std::conj(q.amp1);
                rho[2] += 0.25 * q.amp1 * std::conj(q.amp0);
                rho[3] += 0.25 * q.amp1 * std::conj(q.amp1);
            }
        }
        worst_dev = std::max({worst_dev, std::abs(rho[0] - 0.5), std::abs(rho[1]),
                              std::abs(rho[2]), std::abs(rho[3] - 0.5)});
    }
    d.require(worst_dev < 1e-9,
              "blinding deviation from I/2 is " + std::to_string(worst_dev));
    return d.finish(detail);
}

bool crit_pauli_algebra(std::string& detail) {
    Detail d;
    const auto matmul = [](const std::array<Complex, 4>& a,
                           const std::array<Complex, 4>& b) {
        return std::array<Complex, 4>{
            a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    };

    double worst = 0.0;
    for (PauliOp u : kAllPaulis) {
        for (PauliOp v : kAllPaulis) {
            const PauliProduct product = pauli_compose(u, v);
            const std::array<Complex, 4> lhs = matmul(pauli_matrix(u), pauli_matrix(v));
            const std::array<Complex, 4> base = pauli_matrix(product.op);
            for (int i = 0; i < 4; ++i) {
                worst = std::max(worst, std::abs(lhs[i] - product.phase * base[i]));
            }
        }
    }
    d.require(worst < 1e-12, "matrix mismatch " + std::to_string(worst));

    const PauliProduct zx = pauli_compose(kPauliZ, kPauliX);
    const PauliProduct xz = pauli_compose(kPauliX, kPauliZ);
    d.require(zx.op == xz.op && std::abs(zx.phase + xz.phase) < 1e-12,
              "z*x != -(x*z)");
    return d.finish(detail);
}

bool crit_teleportation(std::string& detail) {
    Detail d;
    Rng rng(kSeed + 1);

    double worst_infidelity = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const PureQubit psi = random_qubit(rng);
        const TeleportResult t = teleport(psi, bell_pair(), rng);
        const PureQubit out = teleport_correct(t.outcome, t.remote);
        worst_infidelity = std::max(worst_infidelity, 1.0 - fidelity(out, psi));
    }
    d.require(worst_infidelity < 1e-9,
              "round-trip infidelity " + std::to_string(worst_infidelity));

    std::array<std::size_t, 4> counts{};
    const int trials = 4000;
    for (int i = 0; i < trials; ++i) {
        const TeleportResult t = teleport(random_qubit(rng), bell_pair(), rng);
        ++counts[static_cast<std::size_t>(t.outcome.b1) * 2 + t.outcome.b2];
    }
    const double sigma = std::sqrt(0.25 * 0.75 / trials);
    for (std::size_t i = 0; i < 4; ++i) {
        const double freq = static_cast<double>(counts[i]) / trials;
        d.require(std::abs(freq - 0.25) <= 3.0 * sigma,
                  "outcome " + std::to_string(i) + " frequency " +
                      std::to_string(freq));
    }
    return d.finish(detail);
}

bool crit_swaptest_calibration(std::string& detail) {
    Detail d;
    Rng rng(kSeed + 2);
    const int trials = 10000;
    int pass0 = 0, pass05 = 0, pass1 = 0;
    for (int i = 0; i < trials; ++i) {
        if (swap_test(zero_state(), one_state(), rng)) ++pass0;
        if (swap_test(zero_state(), plus_state(), rng)) ++pass05;
        if (swap_test(zero_state(), zero_state(), rng)) ++pass1;
    }
    const double rate0 = static_cast<double>(pass0) / trials;
    const double rate05 = static_cast<double>(pass05) / trials;
    d.require(std::abs(rate0 - 0.5) <= 3.0 * std::sqrt(0.5 * 0.5 / trials),
              "F=0 pass rate " + std::to_string(rate0));
    d.require(std::abs(rate05 - 0.75) <= 3.0 * std::sqrt(0.75 * 0.25 / trials),
              "F=0.5 pass rate " + std::to_string(rate05));
    d.require(pass1 == trials, counted("F=1 passes", pass1, trials));
    return d.finish(detail);
}

bool crit_improvement_variant(std::string& detail) {
    Detail d;
    const Report disavow = run_scenario(make_cfg(
        Scenario::disavow, Protocol::bell, 8, 200, BellVariant::trent_retains));
    d.require(hits(disavow, "accept") == 200,
              counted("accept", hits(disavow, "accept"), 200));
    d.require(hits(disavow, "alice_disavowing") == 200,
              counted("alice_disavowing", hits(disavow, "alice_disavowing"), 200));

    const Report forge = run_scenario(make_cfg(Scenario::forge_existential,
                                               Protocol::bell, 8, 200,
                                               BellVariant::trent_retains));
    d.require(hits(forge, "pre_forgery") == 200,
              counted("pre-verification forgery", hits(forge, "pre_forgery"), 200));
    d.require(hits(forge, "post_forgery") == 0,
              counted("post-verification forgery (should be blocked)",
                      hits(forge, "post_forgery"), 0));
    return d.finish(detail);
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, bool (*)(std::string&)>> criteria{
        {"completeness", crit_completeness},
        {"existential-forgery", crit_existential_forgery},
        {"forgery-count", crit_forgery_count},
        {"universal-forgery", crit_universal_forgery},
        {"disavowal", crit_disavowal},
        {"qotp-roundtrip-blinding", crit_qotp_roundtrip_blinding},
        {"pauli-algebra", crit_pauli_algebra},
        {"teleportation", crit_teleportation},
        {"swaptest-calibration", crit_swaptest_calibration},
        {"improvement-variant", crit_improvement_variant},
    };

    int passed = 0;
    for (const auto& [name, run] : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (ok) {
            std::printf("[PASS] %s\n", name);
            ++passed;
        } else {
            std::printf("[FAIL] %s: %s\n", name, detail.c_str());
        }
    }
    std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
