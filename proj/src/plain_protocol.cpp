#include "aqs/plain_protocol.hpp"

#include <stdexcept>
#include <utility>

#include "aqs/qotp.hpp"

namespace aqs {

SegmentLayout plain_key_ab_layout(std::size_t n) {
    SegmentLayout layout;
    layout.append("r_seg", 2 * n);
    layout.append("s_seg", 6 * n);
    return layout;
}

SegmentLayout plain_key_at_layout(std::size_t n) {
    SegmentLayout layout;
    layout.append("qotp", 2 * n);
    return layout;
}

SegmentLayout plain_key_bt_layout(std::size_t n) {
    SegmentLayout layout;
    layout.append("qotp", 4 * n);
    return layout;
}

SegmentLayout plain_mask_layout(std::size_t n) {
    SegmentLayout layout;
    layout.append("qotp", 2 * n);
    return layout;
}

SegmentLayout plain_s_wire_layout(std::size_t n) {
    SegmentLayout layout;
    layout.append("p_prime", n);
    layout.append("r_ab", n);
    layout.append("s_a", n);
    return layout;
}

SegmentLayout plain_y_b_layout(std::size_t n) {
    SegmentLayout layout;
    layout.append("p_prime", n);
    layout.append("s_a", n);
    return layout;
}

PlainSession plain_init_session(std::size_t n, Rng& rng) {
    if (n == 0) throw std::invalid_argument("message length n must be >= 1");
    PlainSession session;
    session.n = n;
    session.key_ab = random_key(plain_key_ab_layout(n), rng);
    session.key_at = random_key(plain_key_at_layout(n), rng);
    session.key_bt = random_key(plain_key_bt_layout(n), rng);
    return session;
}

QubitSequence plain_sign(PlainSession& session, const QubitSequence& message, Rng& rng) {
    return plain_sign(session, message, random_key(plain_mask_layout(session.n), rng));
}

QubitSequence plain_sign(PlainSession& session, const QubitSequence& message,
                         BitKey mask) {
    const std::size_t n = session.n;
    if (message.size() != n) {
        throw LengthMismatchError("message length does not match session n");
    }
    if (mask.layout != plain_mask_layout(n)) {
        throw LayoutMismatchError("mask does not match its declared layout");
    }
    session.r_mask = std::move(mask);
    session.published = false;

    // Three copies, identically blinded; each wire block is derived from its
    // own copy even though the copies coincide.
    const QubitSequence p_prime = qotp_encrypt(session.r_mask.segment("qotp"), message);
    const QubitSequence r_ab = qotp_encrypt(session.key_ab.segment("r_seg"), p_prime);
    const QubitSequence s_a = qotp_encrypt(session.key_at.segment("qotp"), p_prime);

    const QubitSequence bundle = concat({std::span<const PureQubit>(p_prime.qubits()),
                                         std::span<const PureQubit>(r_ab.qubits()),
                                         std::span<const PureQubit>(s_a.qubits())},
                                        plain_s_wire_layout(n));
    return qotp_encrypt(session.key_ab.segment("s_seg"), bundle);
}

QubitSequence plain_bob_forward(const PlainSession& session, const QubitSequence& s_wire) {
    const std::size_t n = session.n;
    if (s_wire.size() != 3 * n) {
        throw LayoutMismatchError("signed wire must carry 3n qubits");
    }
    const QubitSequence plain = qotp_decrypt(session.key_ab.segment("s_seg"), s_wire)
                                    .relabeled(plain_s_wire_layout(n));
    const QubitSequence wire = concat({plain.block("p_prime"), plain.block("s_a")},
                                      plain_y_b_layout(n));
    return qotp_encrypt(session.key_bt.segment("qotp"), wire);
}

PlainTrentRound plain_trent_verify(const PlainSession& session, const QubitSequence& y_b,
                                   const Comparison& cmp, Rng& rng) {
    const std::size_t n = session.n;
    if (y_b.size() != 2 * n) {
        throw LayoutMismatchError("forwarded wire must carry 2n qubits");
    }
    const QubitSequence plain = qotp_decrypt(session.key_bt.segment("qotp"), y_b)
                                    .relabeled(plain_y_b_layout(n));
    const QubitSequence expected =
        qotp_encrypt(session.key_at.segment("qotp"), plain.extract("p_prime"));
    const bool equal = sequences_equal(plain.extract("s_a"), expected, cmp, rng);

    PlainTrentRound round;
    round.v_t = equal ? 1 : 0;
    round.y_b_return = qotp_encrypt(session.key_bt.segment("qotp"), plain);
    return round;
}

PlainBobResult plain_bob_verify(PlainSession& session, const QubitSequence& s_wire,
                                const PlainTrentRound& round, const Comparison& cmp,
                                Rng& rng) {
    const std::size_t n = session.n;
    if (s_wire.size() != 3 * n || round.y_b_return.size() != 2 * n) {
        throw LayoutMismatchError("held wire or returned wire length mismatch");
    }
    const QubitSequence local = qotp_decrypt(session.key_ab.segment("s_seg"), s_wire)
                                    .relabeled(plain_s_wire_layout(n));
    const QubitSequence returned =
        qotp_decrypt(session.key_bt.segment("qotp"), round.y_b_return)
            .relabeled(plain_y_b_layout(n));
    const QubitSequence p_prime = returned.extract("p_prime");

    const QubitSequence expected =
        qotp_encrypt(session.key_ab.segment("r_seg"), p_prime);
    const bool equal = sequences_equal(local.extract("r_ab"), expected, cmp, rng);

    PlainBobResult result;
    result.v_b = equal ? 1 : 0;
    if (round.v_t == 1 && result.v_b == 1) {
        // Acceptance: the signer publishes the mask, the receiver unblinds
        // the message and stores the triple.
        session.published = true;
        PlainSignedRecord record;
        record.p = qotp_decrypt(session.r_mask.segment("qotp"), p_prime);
        record.s_a = returned.extract("s_a");
        record.r_mask = session.r_mask.bits;
        result.record = std::move(record);
    }
    return result;
}

DisputeVerdict plain_resolve_dispute(const PlainSession& session,
                                     const PlainSignedRecord& record,
                                     const Comparison& cmp, Rng& rng) {
    const std::size_t n = session.n;
    if (record.p.size() != n || record.s_a.size() != n || record.r_mask.size() != 2 * n) {
        throw LayoutMismatchError("stored record lengths do not match session n");
    }
    const QubitSequence p_prime = qotp_encrypt(record.r_mask, record.p);
    const QubitSequence expected =
        qotp_encrypt(session.key_at.segment("qotp"), p_prime);
    const bool genuine = sequences_equal(record.s_a, expected, cmp, rng);
    return genuine ? DisputeVerdict::alice_disavowing : DisputeVerdict::bob_forged;
}

PlainTranscript plain_run_honest(PlainSession& session, const QubitSequence& message,
                                 const Comparison& cmp, Rng& rng) {
    PlainTranscript t;
    t.message = message;
    t.s_wire = plain_sign(session, message, rng);
    t.y_b = plain_bob_forward(session, t.s_wire);
    t.trent_round = plain_trent_verify(session, t.y_b, cmp, rng);
    t.bob = plain_bob_verify(session, t.s_wire, t.trent_round, cmp, rng);
    return t;
}

}  // namespace aqs
