// The entanglement-free arbitrated signature protocol: the teleported copy of
// the Bell-state protocol is replaced by QOTP-encrypted copies, and the
// message is additionally blinded by a mask key the signer keeps private
// until the receiver has accepted.
//
// Flow of one session over a message |P⟩ of n qubits:
//   plain_sign          Alice: |P'⟩ = QOTP_mask|P⟩, |R_AB⟩ = QOTP_AB|P'⟩,
//                       |S_A⟩ = QOTP_AT|P'⟩, wire |S⟩ = QOTP_AB(P', R_AB, S_A)
//   plain_bob_forward   Bob:   |Y_B⟩ = QOTP_BT(|P'⟩ ⊗ |S_A⟩) to Trent
//   plain_trent_verify  Trent: compare |S_A⟩ vs QOTP_AT|P'⟩, publish V_T,
//                       send the wire back
//   plain_bob_verify    Bob:   check |R_AB⟩ relation, publish V_B; on
//                       V_T = V_B = 1 the mask is published, |P⟩ recovered,
//                       and (|P⟩, |S_A⟩, mask) stored as the signed message
//   plain_resolve_dispute  Trent re-checks a stored triple after the fact.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aqs/common.hpp"
#include "aqs/qcore.hpp"
#include "aqs/sequence.hpp"
#include "aqs/verdict.hpp"

namespace aqs {

// -- wire and key layouts ----------------------------------------------------

// Alice-Bob key: r_seg[2n] (for |R_AB⟩) | s_seg[6n] (for the wire |S⟩).
SegmentLayout plain_key_ab_layout(std::size_t n);

// Alice-Trent key: qotp[2n].
SegmentLayout plain_key_at_layout(std::size_t n);

// Bob-Trent key: qotp[4n], covering the two-block wire to Trent and back.
SegmentLayout plain_key_bt_layout(std::size_t n);

// Alice's per-signing mask: qotp[2n].
SegmentLayout plain_mask_layout(std::size_t n);

// Wire |S⟩: p_prime[n] | r_ab[n] | s_a[n].
SegmentLayout plain_s_wire_layout(std::size_t n);

// Wire |Y_B⟩ (and its return): p_prime[n] | s_a[n].
SegmentLayout plain_y_b_layout(std::size_t n);

// -- session and artifacts ---------------------------------------------------

struct PlainSession {
    std::size_t n = 0;
    BitKey key_ab;  // shared Alice-Bob
    BitKey key_at;  // shared Alice-Trent
    BitKey key_bt;  // shared Bob-Trent
    // Chosen fresh by the signer on each plain_sign; secret until published.
    BitKey r_mask;
    bool published = false;
};

// Fresh session with uniformly random keys; the mask is drawn at signing
// time. Throws std::invalid_argument if n == 0.
PlainSession plain_init_session(std::size_t n, Rng& rng);

// The triple the receiver keeps once both verdicts pass.
struct PlainSignedRecord {
    QubitSequence p;
    QubitSequence s_a;
    std::vector<std::uint8_t> r_mask;
};

// Signing: draw a fresh mask, blind each copy into |P'⟩, derive the receiver
// and arbitrator ciphertexts, and bundle all three blocks on one wire.
// Throws LengthMismatchError.
QubitSequence plain_sign(PlainSession& session, const QubitSequence& message, Rng& rng);

// Signing with a caller-chosen mask, for fixed-key tests. Throws
// LayoutMismatchError if the mask does not match its declared layout.
QubitSequence plain_sign(PlainSession& session, const QubitSequence& message,
                         BitKey mask);

// Receiver's forward: unwrap the wire, keep |P'⟩ and |R_AB⟩, and send
// |Y_B⟩ = QOTP_BT(|P'⟩ ⊗ |S_A⟩) to Trent. Throws LayoutMismatchError.
QubitSequence plain_bob_forward(const PlainSession& session, const QubitSequence& s_wire);

struct PlainTrentRound {
    std::uint8_t v_t = 0;  // published verdict
    QubitSequence y_b_return;
};

// Arbitrator check of |S_A⟩ = QOTP_AT|P'⟩; the wire content goes back to the
// receiver either way. Throws LayoutMismatchError.
PlainTrentRound plain_trent_verify(const PlainSession& session, const QubitSequence& y_b,
                                   const Comparison& cmp, Rng& rng);

struct PlainBobResult {
    std::uint8_t v_b = 0;  // published verdict
    // Present iff v_t = v_b = 1: the stored signed message.
    std::optional<PlainSignedRecord> record;
};

// Receiver verification: check |R_AB⟩ = QOTP_AB|P'⟩ against the returned
// wire. On joint success the signer publishes the mask (session.published),
// the message is unblinded, and the triple is stored. Throws
// LayoutMismatchError.
PlainBobResult plain_bob_verify(PlainSession& session, const QubitSequence& s_wire,
                                const PlainTrentRound& round, const Comparison& cmp,
                                Rng& rng);

// Dispute over a stored triple: reblind the message with the stored mask and
// check the arbitrator ciphertext relation. Positive: genuine, the signer is
// disavowing. Negative: the receiver forged or altered it. Throws
// LayoutMismatchError.
DisputeVerdict plain_resolve_dispute(const PlainSession& session,
                                     const PlainSignedRecord& record,
                                     const Comparison& cmp, Rng& rng);

// -- whole-run plumbing ------------------------------------------------------

struct PlainTranscript {
    QubitSequence message;
    QubitSequence s_wire;
    QubitSequence y_b;
    PlainTrentRound trent_round;
    PlainBobResult bob;
};

// One honest end-to-end run: sign, forward, verify, accept, store.
PlainTranscript plain_run_honest(PlainSession& session, const QubitSequence& message,
                                 const Comparison& cmp, Rng& rng);

}  // namespace aqs
