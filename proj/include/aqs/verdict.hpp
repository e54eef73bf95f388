// Verdict types shared by both signature protocols.

#pragma once

#include <cstdint>

namespace aqs {

// Origin of a verdict bit: the in-protocol verification step or a later
// dispute over a stored signed message.
enum class VerdictSource { trent_verify, dispute };

// The arbitrator's comparison result r.
struct Verdict {
    std::uint8_t r = 0;  // 1 = signature matches, 0 = mismatch
    VerdictSource source = VerdictSource::trent_verify;
};

// Outcome of dispute resolution: a positive comparison means the submitted
// pair really is the signer's work (so the signer is disavowing); a negative
// one means the receiver forged or altered it.
enum class DisputeVerdict { alice_disavowing, bob_forged };

}  // namespace aqs
