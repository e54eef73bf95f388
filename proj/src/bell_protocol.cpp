#include "aqs/bell_protocol.hpp"

#include <random>
#include <stdexcept>
#include <utility>

#include "aqs/qotp.hpp"

namespace aqs {

SegmentLayout bell_key_a_layout(std::size_t n) {
    SegmentLayout layout;
    layout.append("eprime", n);
    layout.append("qotp_s", 6 * n);
    return layout;
}

SegmentLayout bell_key_b_layout(std::size_t n) {
    SegmentLayout layout;
    layout.append("qotp_y_b", 8 * n);
    layout.append("qotp_y_tb", 12 * n + 2);
    return layout;
}

SegmentLayout bell_signature_layout(std::size_t n) {
    SegmentLayout layout;
    layout.append("m_a", 2 * n);
    layout.append("s_prime", n);
    return layout;
}

SegmentLayout bell_y_b_layout(std::size_t n) {
    SegmentLayout layout;
    layout.append("s", 3 * n);
    layout.append("p", n);
    return layout;
}

SegmentLayout bell_y_tb_layout(std::size_t n) {
    SegmentLayout layout;
    layout.append("m_a", 2 * n);
    layout.append("s_m_a", 2 * n);
    layout.append("s_prime", n);
    layout.append("p", n);
    layout.append("r", 1);
    return layout;
}

namespace {

void require_positive(std::size_t n) {
    if (n == 0) throw std::invalid_argument("message length n must be >= 1");
}

void require_key(const BitKey& key, const SegmentLayout& expected) {
    if (key.layout != expected || key.bits.size() != expected.total()) {
        throw LayoutMismatchError("session key does not match its declared layout");
    }
}

// Computational-basis measurement of one qubit. Exact basis states read out
// deterministically without consuming randomness; anything else collapses by
// Born sampling.
int measure_bit(const PureQubit& q, Rng& rng) {
    const double p1 = std::norm(q.amp1);
    if (p1 <= kStateTol) return 0;
    if (p1 >= 1.0 - kStateTol) return 1;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(rng) < p1 ? 1 : 0;
}

}  // namespace

BellSession init_session(std::size_t n, Rng& rng, BellVariant variant) {
    require_positive(n);
    BellSession session;
    session.n = n;
    session.key_a = random_key(bell_key_a_layout(n), rng);
    session.key_b = random_key(bell_key_b_layout(n), rng);
    session.pairs.assign(n, bell_pair());
    session.variant = variant;
    return session;
}

BellSession make_session(std::size_t n, BitKey key_a, BitKey key_b, BellVariant variant) {
    require_positive(n);
    require_key(key_a, bell_key_a_layout(n));
    require_key(key_b, bell_key_b_layout(n));
    BellSession session;
    session.n = n;
    session.key_a = std::move(key_a);
    session.key_b = std::move(key_b);
    session.pairs.assign(n, bell_pair());
    session.variant = variant;
    return session;
}

SignResult sign(const BellSession& session, const QubitSequence& message, Rng& rng) {
    const std::size_t n = session.n;
    if (message.size() != n) {
        throw LengthMismatchError("message length does not match session n");
    }

    // Copy 1 -> |R_A⟩ under the one-bit-per-qubit cipher.
    const QubitSequence r_a = eprime_encrypt(session.key_a.segment("eprime"), message);

    // Copy 2 -> teleported through the shared pairs; the outcomes become the
    // measurement record |M_A⟩, two basis qubits per message qubit.
    std::vector<BellIndex> outcomes;
    std::vector<PureQubit> remote;
    std::vector<PureQubit> m_a;
    outcomes.reserve(n);
    remote.reserve(n);
    m_a.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const TeleportResult t = teleport(message[i], session.pairs[i], rng);
        outcomes.push_back(t.outcome);
        remote.push_back(t.remote);
        m_a.push_back(basis_state(t.outcome.b1));
        m_a.push_back(basis_state(t.outcome.b2));
    }

    const QubitSequence inner =
        concat({std::span<const PureQubit>(m_a), std::span<const PureQubit>(r_a.qubits())},
               bell_signature_layout(n));
    BellSignature signature{qotp_encrypt(session.key_a.segment("qotp_s"), inner)};

    return SignResult{std::move(signature), message, QubitSequence{std::move(remote)},
                      std::move(outcomes)};
}

QubitSequence bob_forward(const BellSession& session, const BellSignature& signature,
                          const QubitSequence& plaintext_copy) {
    const std::size_t n = session.n;
    if (signature.s.size() != 3 * n || plaintext_copy.size() != n) {
        throw LengthMismatchError("signature or plaintext copy length mismatch");
    }
    const QubitSequence wire =
        concat({std::span<const PureQubit>(signature.s.qubits()),
                std::span<const PureQubit>(plaintext_copy.qubits())},
               bell_y_b_layout(n));
    return qotp_encrypt(session.key_b.segment("qotp_y_b"), wire);
}

TrentResult trent_verify(BellSession& session, const QubitSequence& y_b,
                         const Comparison& cmp, Rng& rng) {
    const std::size_t n = session.n;
    if (y_b.size() != 4 * n) {
        throw LayoutMismatchError("first wire must carry 4n qubits");
    }
    const QubitSequence plain = qotp_decrypt(session.key_b.segment("qotp_y_b"), y_b)
                                    .relabeled(bell_y_b_layout(n));
    const QubitSequence s_wire = plain.extract("s");
    const QubitSequence p_wire = plain.extract("p");

    // Strip Alice's QOTP layer and compare |R_A⟩ against E'|P⟩.
    const QubitSequence inner = qotp_decrypt(session.key_a.segment("qotp_s"), s_wire)
                                    .relabeled(bell_signature_layout(n));
    const QubitSequence r_a = inner.extract("s_prime");
    const QubitSequence expected = eprime_encrypt(session.key_a.segment("eprime"), p_wire);
    const bool equal = sequences_equal(r_a, expected, cmp, rng);
    const std::uint8_t r = equal ? 1 : 0;

    // Read out and replicate the measurement record.
    std::vector<PureQubit> m_a_replica;
    m_a_replica.reserve(2 * n);
    for (const PureQubit& q : inner.block("m_a")) {
        m_a_replica.push_back(basis_state(measure_bit(q, rng)));
    }

    std::vector<PureQubit> s_out(s_wire.qubits());
    if (session.variant == BellVariant::trent_retains) {
        session.retained_s = s_wire.relabeled(bell_signature_layout(n));
        s_out.assign(3 * n, zero_state());
    }

    const PureQubit r_qubit = basis_state(r);
    const QubitSequence y_tb_plain =
        concat({std::span<const PureQubit>(m_a_replica), std::span<const PureQubit>(s_out),
                std::span<const PureQubit>(p_wire.qubits()),
                std::span<const PureQubit>(&r_qubit, 1)},
               bell_y_tb_layout(n));
    QubitSequence y_tb = qotp_encrypt(session.key_b.segment("qotp_y_tb"), y_tb_plain);

    return TrentResult{Verdict{r, VerdictSource::trent_verify}, std::move(y_tb)};
}

bool bob_verify(const BellSession& session, const QubitSequence& y_tb,
                const QubitSequence& bob_remote, const QubitSequence& plaintext_copy,
                const Comparison& cmp, Rng& rng) {
    const std::size_t n = session.n;
    if (bob_remote.size() != n || plaintext_copy.size() != n) {
        throw LayoutMismatchError("remote or plaintext copy length mismatch");
    }
    if (y_tb.size() != 6 * n + 1) {
        throw LayoutMismatchError("return wire must carry 6n+1 qubits");
    }
    const QubitSequence plain = qotp_decrypt(session.key_b.segment("qotp_y_tb"), y_tb)
                                    .relabeled(bell_y_tb_layout(n));

    if (measure_bit(plain.block("r")[0], rng) == 0) return false;

    const auto m_a = plain.block("m_a");
    std::vector<PureQubit> corrected;
    corrected.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const BellIndex outcome{static_cast<std::uint8_t>(measure_bit(m_a[2 * i], rng)),
                                static_cast<std::uint8_t>(measure_bit(m_a[2 * i + 1], rng))};
        corrected.push_back(teleport_correct(outcome, bob_remote[i]));
    }
    return sequences_equal(QubitSequence{std::move(corrected)}, plaintext_copy, cmp, rng);
}

DisputeVerdict resolve_dispute(const BellSession& session, const QubitSequence& claimed_p,
                               const BellSignature& claimed_s, const Comparison& cmp,
                               Rng& rng) {
    const std::size_t n = session.n;
    if (claimed_p.size() != n) {
        throw LayoutMismatchError("claimed message length mismatch");
    }

    const QubitSequence* sig = &claimed_s.s;
    if (session.variant == BellVariant::trent_retains) {
        if (!session.retained_s) {
            throw std::logic_error("no stored signature: dispute before verification");
        }
        sig = &*session.retained_s;
    }
    if (sig->size() != 3 * n) {
        throw LayoutMismatchError("claimed signature length mismatch");
    }

    const QubitSequence inner = qotp_decrypt(session.key_a.segment("qotp_s"), *sig)
                                    .relabeled(bell_signature_layout(n));
    const QubitSequence s_prime = inner.extract("s_prime");
    const QubitSequence expected =
        eprime_encrypt(session.key_a.segment("eprime"), claimed_p);
    const bool genuine = sequences_equal(s_prime, expected, cmp, rng);
    return genuine ? DisputeVerdict::alice_disavowing : DisputeVerdict::bob_forged;
}

BellTranscript run_honest(BellSession& session, const QubitSequence& message,
                          const Comparison& cmp, Rng& rng) {
    BellTranscript t;
    t.message = message;
    t.signed_message = sign(session, message, rng);
    t.y_b = bob_forward(session, t.signed_message.signature, t.signed_message.plaintext_copy);
    TrentResult trent = trent_verify(session, t.y_b, cmp, rng);
    t.trent_verdict = trent.verdict;
    t.y_tb = std::move(trent.y_tb);
    t.accept = bob_verify(session, t.y_tb, t.signed_message.bob_remote,
                          t.signed_message.plaintext_copy, cmp, rng);
    return t;
}

}  // namespace aqs
