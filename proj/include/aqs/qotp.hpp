// Quantum one-time pad over qubit sequences, plus the single-bit-per-qubit
// cipher E' used by the signing step.
//
// Key bit indexing is 1-based in the defining algebra: qubit i consumes key
// bits (2i-1, 2i), with the odd bit selecting sigma_z and the even bit
// sigma_x. Storage is 0-based, so qubit j reads (key[2j], key[2j+1]) as
// (z, x). Encryption applies sigma_x^x sigma_z^z; decryption applies the
// reversed order sigma_z^z sigma_x^x, which is the exact inverse.

#pragma once

#include <span>

#include "aqs/sequence.hpp"

namespace aqs {

// E_K: qubit j becomes sigma_x^{key[2j+1]} sigma_z^{key[2j]} |p_j⟩.
// Layout of msg is preserved. Throws KeyLengthMismatchError unless
// key_segment has exactly 2 bits per qubit.
QubitSequence qotp_encrypt(std::span<const std::uint8_t> key_segment,
                           const QubitSequence& msg);

// D_K: exact inverse of qotp_encrypt under the same segment.
QubitSequence qotp_decrypt(std::span<const std::uint8_t> key_segment,
                           const QubitSequence& ct);

// E': qubit j becomes sigma_x|p_j⟩ when bit j is 0 and sigma_z|p_j⟩ when it
// is 1 — one bit per qubit, never the identity. Throws
// KeyLengthMismatchError unless key_segment has exactly 1 bit per qubit.
QubitSequence eprime_encrypt(std::span<const std::uint8_t> key_segment,
                             const QubitSequence& msg);

// E' is self-inverse up to global phase; provided for symmetry.
QubitSequence eprime_decrypt(std::span<const std::uint8_t> key_segment,
                             const QubitSequence& ct);

}  // namespace aqs
