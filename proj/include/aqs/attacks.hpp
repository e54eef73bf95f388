// The two participant attacks both protocols admit, as pure transformations:
//
// Receiver forgery: given one valid (message, signature-core) pair, applying
// the same Pauli to a message qubit and its signature qubit yields another
// valid pair, because Paulis commute with every key layer up to a global
// sign. One known pair therefore spawns 4^n - 1 distinct forgeries, and for
// basis-state messages the Paulis can be chosen to hit any target message.
//
// Signer disavowal: the wire back to the receiver has fixed block positions
// and is encrypted qubit-by-qubit, so the signer can disturb exactly the
// signature block in transit. The receiver cannot notice (the block is
// opaque to him and unused by his checks), but a later dispute now blames
// the receiver.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "aqs/common.hpp"
#include "aqs/plain_protocol.hpp"
#include "aqs/qcore.hpp"
#include "aqs/sequence.hpp"
#include "aqs/verdict.hpp"

namespace aqs {

// The receiver's choice of ⊗U_i, one Pauli per message qubit.
struct ForgeryPlan {
    std::vector<PauliOp> paulis;

    bool identity() const;
};

// Uniformly random plan that is not all-identity (an all-identity plan
// reproduces the known pair, which is no forgery).
ForgeryPlan random_forgery_plan(std::size_t n, Rng& rng);

// A forged (message, signature-core) candidate pair.
struct ForgedPair {
    QubitSequence p;
    QubitSequence s_prime;
};

// Qubit-wise conjugation: forged_p[i] = U_i|p_i⟩, forged_s'[i] = U_i|s'_i⟩.
// If the known pair satisfies the signing relation, so does the output, up
// to global phase per qubit. Throws LengthMismatchError.
ForgedPair forge_existential(const QubitSequence& known_p,
                             const QubitSequence& known_s_prime,
                             const ForgeryPlan& plan);

// Forgery steering for basis-state messages: chooses U_i = sigma_x^{p_i XOR
// q_i}, so the forged message is exactly |target⟩. Throws NotClassicalError
// if the known message is not a basis-state sequence, LengthMismatchError.
ForgedPair forge_universal_classical(const QubitSequence& known_p,
                                     const QubitSequence& known_s_prime,
                                     std::span<const std::uint8_t> target);

// Verdict for one forged candidate, supplied by the caller (typically a
// closure over resolve_dispute or plain_resolve_dispute).
using DisputeCheck =
    std::function<DisputeVerdict(const QubitSequence& p, const QubitSequence& s_prime)>;

// Exhaustive sweep of all 4^n plans against a known pair; returns how many
// non-identity plans produce a pair the dispute check accepts as genuine.
// Throws TooLargeError for n > 8.
std::size_t enumerate_forgeries(const QubitSequence& known_p,
                                const QubitSequence& known_s_prime,
                                const DisputeCheck& dispute);

// Rebuild the receiver's stored triple around a forged pair. The mask must
// already be public (records only exist after acceptance); throws
// std::logic_error otherwise.
PlainSignedRecord forge_plain_record(const PlainSession& session,
                                     const PlainSignedRecord& record,
                                     const ForgeryPlan& plan);

// -- signer's tampering ------------------------------------------------------

enum class Disturbance {
    randomize,     // independent Haar-random rotation per target qubit
    fixed_paulis,  // apply the listed Paulis across the target range
};

struct TamperPlan {
    // Block name within the wire's layout; empty means tamper nothing.
    std::string target;
    Disturbance disturbance = Disturbance::randomize;
    std::vector<PauliOp> paulis;  // fixed_paulis only; length = target length
};

// Returns the wire with only the target block disturbed. Throws
// RangeMismatchError if the target is not a block of the wire's layout or
// the fixed Pauli list length does not match it.
QubitSequence disavow_tamper(const QubitSequence& wire, const TamperPlan& plan, Rng& rng);

}  // namespace aqs
