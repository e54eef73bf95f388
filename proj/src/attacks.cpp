#include "aqs/attacks.hpp"

#include <random>
#include <stdexcept>
#include <utility>

#include "aqs/qotp.hpp"

namespace aqs {

bool ForgeryPlan::identity() const {
    for (const PauliOp& u : paulis) {
        if (!(u == kPauliI)) return false;
    }
    return true;
}

ForgeryPlan random_forgery_plan(std::size_t n, Rng& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    ForgeryPlan plan;
    plan.paulis.resize(n);
    do {
        for (std::size_t i = 0; i < n; ++i) {
            plan.paulis[i] = kAllPaulis[static_cast<std::size_t>(pick(rng))];
        }
    } while (plan.identity());
    return plan;
}

ForgedPair forge_existential(const QubitSequence& known_p,
                             const QubitSequence& known_s_prime,
                             const ForgeryPlan& plan) {
    const std::size_t n = known_p.size();
    if (known_s_prime.size() != n || plan.paulis.size() != n) {
        throw LengthMismatchError("message, signature core, and plan must share length");
    }
    std::vector<PureQubit> p_out;
    std::vector<PureQubit> s_out;
    p_out.reserve(n);
    s_out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        p_out.push_back(apply_pauli(plan.paulis[i], known_p[i]));
        s_out.push_back(apply_pauli(plan.paulis[i], known_s_prime[i]));
    }
    return ForgedPair{QubitSequence{std::move(p_out)}, QubitSequence{std::move(s_out)}};
}

ForgedPair forge_universal_classical(const QubitSequence& known_p,
                                     const QubitSequence& known_s_prime,
                                     std::span<const std::uint8_t> target) {
    const std::size_t n = known_p.size();
    if (target.size() != n) {
        throw LengthMismatchError("target bit string length mismatch");
    }
    ForgeryPlan plan;
    plan.paulis.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int p_i = read_basis_bit(known_p[i]);  // throws NotClassicalError
        const int flip = p_i ^ (target[i] & 1);
        plan.paulis.push_back(flip ? kPauliX : kPauliI);
    }
    return forge_existential(known_p, known_s_prime, plan);
}

std::size_t enumerate_forgeries(const QubitSequence& known_p,
                                const QubitSequence& known_s_prime,
                                const DisputeCheck& dispute) {
    const std::size_t n = known_p.size();
    if (n > 8) throw TooLargeError{n};
    if (known_s_prime.size() != n) {
        throw LengthMismatchError("message and signature core must share length");
    }

    std::size_t successes = 0;
    const std::size_t total = std::size_t{1} << (2 * n);  // 4^n
    ForgeryPlan plan;
    plan.paulis.resize(n);
    for (std::size_t code = 1; code < total; ++code) {  // 0 is the identity plan
        std::size_t digits = code;
        for (std::size_t i = 0; i < n; ++i) {
            plan.paulis[i] = kAllPaulis[digits & 3];
            digits >>= 2;
        }
        const ForgedPair forged = forge_existential(known_p, known_s_prime, plan);
        if (dispute(forged.p, forged.s_prime) == DisputeVerdict::alice_disavowing) {
            ++successes;
        }
    }
    return successes;
}

PlainSignedRecord forge_plain_record(const PlainSession& session,
                                     const PlainSignedRecord& record,
                                     const ForgeryPlan& plan) {
    if (!session.published) {
        throw std::logic_error("mask not yet published: no stored record to forge from");
    }
    ForgedPair forged = forge_existential(record.p, record.s_a, plan);
    PlainSignedRecord out;
    out.p = std::move(forged.p);
    out.s_a = std::move(forged.s_prime);
    out.r_mask = record.r_mask;
    return out;
}

namespace {

// Haar-random single-qubit rotation: first column is a Haar-random state,
// second is its orthogonal complement with an independent random phase.
PureQubit random_rotation(const PureQubit& q, Rng& rng) {
    const PureQubit col = random_qubit(rng);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    const Complex phase = std::polar(1.0, angle(rng));
    const Complex u00 = col.amp0, u10 = col.amp1;
    const Complex u01 = -std::conj(col.amp1) * phase, u11 = std::conj(col.amp0) * phase;
    return PureQubit{u00 * q.amp0 + u01 * q.amp1, u10 * q.amp0 + u11 * q.amp1};
}

}  // namespace

QubitSequence disavow_tamper(const QubitSequence& wire, const TamperPlan& plan, Rng& rng) {
    if (plan.target.empty()) return wire;
    if (!wire.layout().has(plan.target)) {
        throw RangeMismatchError("wire layout has no block named '" + plan.target + "'");
    }
    const SegmentRange range = wire.layout().range(plan.target);
    if (plan.disturbance == Disturbance::fixed_paulis &&
        plan.paulis.size() != range.length) {
        throw RangeMismatchError("fixed Pauli list length does not match target block");
    }

    std::vector<PureQubit> out(wire.qubits());
    for (std::size_t i = 0; i < range.length; ++i) {
        PureQubit& q = out[range.offset + i];
        q = plan.disturbance == Disturbance::randomize
                ? random_rotation(q, rng)
                : apply_pauli(plan.paulis[i], q);
    }
    return QubitSequence{std::move(out), wire.layout()};
}

}  // namespace aqs
