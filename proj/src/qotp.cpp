#include "aqs/qotp.hpp"

namespace aqs {

namespace {

void require_bits(std::size_t have, std::size_t need) {
    if (have != need) throw KeyLengthMismatchError{have, need};
}

}  // namespace

QubitSequence qotp_encrypt(std::span<const std::uint8_t> key_segment,
                           const QubitSequence& msg) {
    require_bits(key_segment.size(), 2 * msg.size());
    std::vector<PureQubit> out;
    out.reserve(msg.size());
    for (std::size_t j = 0; j < msg.size(); ++j) {
        const PauliOp op{key_segment[2 * j + 1], key_segment[2 * j]};
        out.push_back(apply_pauli(op, msg[j]));
    }
    return QubitSequence(std::move(out), msg.layout());
}

QubitSequence qotp_decrypt(std::span<const std::uint8_t> key_segment,
                           const QubitSequence& ct) {
    require_bits(key_segment.size(), 2 * ct.size());
    std::vector<PureQubit> out;
    out.reserve(ct.size());
    for (std::size_t j = 0; j < ct.size(); ++j) {
        // sigma_z^z sigma_x^x: apply x first, then z.
        PureQubit q = apply_pauli(PauliOp{key_segment[2 * j + 1], 0}, ct[j]);
        q = apply_pauli(PauliOp{0, key_segment[2 * j]}, q);
        out.push_back(q);
    }
    return QubitSequence(std::move(out), ct.layout());
}

QubitSequence eprime_encrypt(std::span<const std::uint8_t> key_segment,
                             const QubitSequence& msg) {
    require_bits(key_segment.size(), msg.size());
    std::vector<PureQubit> out;
    out.reserve(msg.size());
    for (std::size_t j = 0; j < msg.size(); ++j) {
        const PauliOp op = key_segment[j] ? kPauliZ : kPauliX;
        out.push_back(apply_pauli(op, msg[j]));
    }
    return QubitSequence(std::move(out), msg.layout());
}

QubitSequence eprime_decrypt(std::span<const std::uint8_t> key_segment,
                             const QubitSequence& ct) {
    return eprime_encrypt(key_segment, ct);
}

}  // namespace aqs
