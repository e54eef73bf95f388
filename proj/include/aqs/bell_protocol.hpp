// The Bell-state arbitrated signature protocol: three parties (signer Alice,
// receiver Bob, arbitrator Trent), shared secret keys, and n Bell pairs used
// to teleport one message copy.
//
// Flow of one session over a message |P⟩ of n qubits:
//   sign          Alice: |R_A⟩ = E'|P⟩, teleport copy 2, |S⟩ = QOTP(M_A ⊗ R_A)
//   bob_forward   Bob:   |Y_B⟩ = QOTP_B(|S⟩ ⊗ |P⟩) to Trent
//   trent_verify  Trent: compare R_A vs E'|P⟩, verdict r, |Y_TB⟩ back to Bob
//   bob_verify    Bob:   check r, correct teleported copy, compare copies
//   resolve_dispute  Trent re-checks a claimed (P, S) pair after the fact.
//
// The trent_retains variant has Trent keep |S⟩ after verification and send
// zero-filler in its place, so disputes run on Trent's stored copy instead of
// whatever Bob submits.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aqs/common.hpp"
#include "aqs/qcore.hpp"
#include "aqs/sequence.hpp"
#include "aqs/verdict.hpp"

namespace aqs {

enum class BellVariant { standard, trent_retains };

// -- wire and key layouts ----------------------------------------------------

// Alice-Trent key: eprime[n] | qotp_s[6n].
SegmentLayout bell_key_a_layout(std::size_t n);

// Bob-Trent key, one fresh QOTP segment per wire send:
// qotp_y_b[8n] | qotp_y_tb[12n+2].
SegmentLayout bell_key_b_layout(std::size_t n);

// Signature |S⟩: m_a[2n] | s_prime[n]. The s_prime block is the encrypted
// |R_A⟩, the part disputes are decided on.
SegmentLayout bell_signature_layout(std::size_t n);

// |Y_B⟩: s[3n] | p[n].
SegmentLayout bell_y_b_layout(std::size_t n);

// |Y_TB⟩: m_a[2n] | s_m_a[2n] | s_prime[n] | p[n] | r[1]. The signature's
// two sub-blocks are named at top level; every block position is fixed, which
// is exactly what lets the signer tamper with s_prime in transit.
SegmentLayout bell_y_tb_layout(std::size_t n);

// -- session and artifacts ---------------------------------------------------

struct BellSession {
    std::size_t n = 0;
    BitKey key_a;        // shared Alice-Trent
    BitKey key_b;        // shared Bob-Trent
    std::vector<TwoQubitState> pairs;  // n canonical Bell pairs, Alice-Bob
    BellVariant variant = BellVariant::standard;
    // trent_retains only: the signature Trent kept after verification.
    std::optional<QubitSequence> retained_s;
};

// Fresh session with uniformly random keys and n canonical Bell pairs.
// Throws std::invalid_argument if n == 0.
BellSession init_session(std::size_t n, Rng& rng,
                         BellVariant variant = BellVariant::standard);

// Session with caller-chosen keys (exhaustive small-space tests). Throws
// LayoutMismatchError if a key does not match its declared layout,
// std::invalid_argument if n == 0.
BellSession make_session(std::size_t n, BitKey key_a, BitKey key_b,
                         BellVariant variant = BellVariant::standard);

struct BellSignature {
    QubitSequence s;  // 3n qubits, layout m_a[2n] | s_prime[n]
};

struct SignResult {
    BellSignature signature;
    QubitSequence plaintext_copy;     // third copy, sent alongside |S⟩
    QubitSequence bob_remote;         // Bob's halves after teleportation, uncorrected
    std::vector<BellIndex> outcomes;  // Alice's n Bell measurement outcomes
};

// Signing: encrypt copy 1 into |R_A⟩, teleport copy 2 (collapsing the shared
// pairs), materialize the outcomes as 2n basis qubits |M_A⟩, and wrap
// |S⟩ = QOTP(|M_A⟩ ⊗ |R_A⟩). Throws LengthMismatchError.
SignResult sign(const BellSession& session, const QubitSequence& message, Rng& rng);

// Bob's forward to Trent: |Y_B⟩ = QOTP_B(|S⟩ ⊗ |P⟩). Throws
// LengthMismatchError.
QubitSequence bob_forward(const BellSession& session, const BellSignature& signature,
                          const QubitSequence& plaintext_copy);

struct TrentResult {
    Verdict verdict;
    QubitSequence y_tb;
};

// Arbitrator verification: strip the Bob layer, strip the Alice layer,
// compare |R_A⟩ against E'|P⟩ under the chosen comparison, read out the
// measurement record, and return everything re-encrypted for Bob with the
// verdict qubit appended. Under trent_retains the signature block in |Y_TB⟩
// is replaced by |0...0⟩ filler and the real |S⟩ is stored on the session.
// Throws LayoutMismatchError.
TrentResult trent_verify(BellSession& session, const QubitSequence& y_b,
                         const Comparison& cmp, Rng& rng);

// Receiver verification: decrypt |Y_TB⟩, stop if r = 0, otherwise correct the
// teleported copy using the read-out outcomes and compare it against the
// plaintext copy. Throws LayoutMismatchError.
bool bob_verify(const BellSession& session, const QubitSequence& y_tb,
                const QubitSequence& bob_remote, const QubitSequence& plaintext_copy,
                const Comparison& cmp, Rng& rng);

// Dispute: Bob submits a (message, signature) pair he attributes to Alice.
// Trent decrypts the signature and checks the defining relation
// |S'⟩ = QOTP(E'|P⟩). Positive: the pair is genuine, so Alice is disavowing.
// Negative: Bob forged or altered it. Under trent_retains the submitted
// signature is ignored in favor of the stored one (std::logic_error if no
// verification stored one). Throws LayoutMismatchError.
DisputeVerdict resolve_dispute(const BellSession& session, const QubitSequence& claimed_p,
                               const BellSignature& claimed_s, const Comparison& cmp,
                               Rng& rng);

// -- whole-run plumbing ------------------------------------------------------

struct BellTranscript {
    QubitSequence message;
    SignResult signed_message;
    QubitSequence y_b;
    Verdict trent_verdict;
    QubitSequence y_tb;
    bool accept = false;
};

// One honest end-to-end run: sign, forward, verify, accept.
BellTranscript run_honest(BellSession& session, const QubitSequence& message,
                          const Comparison& cmp, Rng& rng);

}  // namespace aqs
