#include "aqs/bell_protocol.hpp"

#include <stdexcept>
#include <vector>

#include "aqs/qotp.hpp"
#include "doctest.h"

using namespace aqs;

namespace {

const Comparison kOracle{CompareMode::oracle, 1};
const Comparison kPhysical{CompareMode::physical, 1};

PureQubit orthogonal(const PureQubit& q) {
    return PureQubit{-std::conj(q.amp1), std::conj(q.amp0)};
}

QubitSequence orthogonal_message(const QubitSequence& msg) {
    std::vector<PureQubit> out;
    out.reserve(msg.size());
    for (const PureQubit& q : msg.qubits()) out.push_back(orthogonal(q));
    return QubitSequence{std::move(out)};
}

// Re-encrypt a wire after replacing one named block of its plaintext.
QubitSequence rewrap(const QubitSequence& wire, std::span<const std::uint8_t> key,
                     std::string_view block, std::span<const PureQubit> repl) {
    const QubitSequence plain = qotp_decrypt(key, wire);
    return qotp_encrypt(key, plain.with_block(block, repl));
}

}  // namespace

TEST_CASE("init_session key lengths follow the declared layouts") {
    Rng rng(201);
    const BellSession s1 = init_session(1, rng);
    CHECK(s1.key_a.bits.size() == 7);
    CHECK(s1.key_b.bits.size() == 22);
    CHECK(s1.key_a.segment("eprime").size() == 1);
    CHECK(s1.key_a.segment("qotp_s").size() == 6);
    CHECK(s1.key_b.segment("qotp_y_b").size() == 8);
    CHECK(s1.key_b.segment("qotp_y_tb").size() == 14);

    const BellSession s4 = init_session(4, rng);
    CHECK(s4.key_a.bits.size() == 28);
    CHECK(s4.key_b.bits.size() == 82);
    CHECK(s4.pairs.size() == 4);

    CHECK_THROWS_AS(init_session(0, rng), std::invalid_argument);
}

TEST_CASE("init_session replays identically for a fixed seed") {
    Rng a(77), b(77);
    const BellSession sa = init_session(4, a);
    const BellSession sb = init_session(4, b);
    CHECK(sa.key_a == sb.key_a);
    CHECK(sa.key_b == sb.key_b);
    for (std::size_t i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            CHECK(sa.pairs[i].amps[k] == sb.pairs[i].amps[k]);
        }
    }
}

TEST_CASE("make_session validates explicit keys") {
    Rng rng(203);
    BitKey key_a = random_key(bell_key_a_layout(2), rng);
    BitKey key_b = random_key(bell_key_b_layout(2), rng);
    const BellSession s = make_session(2, key_a, key_b);
    CHECK(s.n == 2);
    CHECK(s.key_a == key_a);

    CHECK_THROWS_AS(make_session(3, key_a, key_b), LayoutMismatchError);
    CHECK_THROWS_AS(make_session(0, key_a, key_b), std::invalid_argument);
}

TEST_CASE("sign produces the layered signature core") {
    // n=1 with chosen bits: eprime bit 0 turns |0⟩ into sigma_x|0⟩ = |1⟩;
    // the core qubit then carries the QOTP pair (z,x) = (1,1):
    // sigma_x sigma_z |1⟩ = -|0⟩, i.e. |0⟩ up to phase.
    Rng rng(207);
    const BitKey key_a{{0, 0, 0, 0, 0, 1, 1}, bell_key_a_layout(1)};
    const BellSession session =
        make_session(1, key_a, random_key(bell_key_b_layout(1), rng));
    const QubitSequence msg{std::vector<PureQubit>{zero_state()}};

    const SignResult result = sign(session, msg, rng);
    CHECK(result.signature.s.size() == 3);
    CHECK(equal_up_to_phase(result.signature.s.block("s_prime")[0], zero_state()));

    // With eprime bit 1 the first layer is sigma_z, which fixes |0⟩.
    const BitKey key_a1{{1, 0, 0, 0, 0, 0, 0}, bell_key_a_layout(1)};
    const BellSession session1 =
        make_session(1, key_a1, random_key(bell_key_b_layout(1), rng));
    const SignResult result1 = sign(session1, msg, rng);
    CHECK(equal_up_to_phase(result1.signature.s.block("s_prime")[0], zero_state()));
}

TEST_CASE("sign bookkeeping: lengths, third copy, outcome record") {
    Rng rng(211);
    const std::size_t n = 5;
    const BellSession session = init_session(n, rng);
    const QubitSequence msg = random_message(n, rng);
    const SignResult result = sign(session, msg, rng);

    CHECK(result.signature.s.size() == 3 * n);
    CHECK(result.signature.s.block("m_a").size() == 2 * n);
    CHECK(result.signature.s.block("s_prime").size() == n);
    CHECK(result.outcomes.size() == n);
    CHECK(result.bob_remote.size() == n);

    // The third copy travels unencrypted.
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(equal_up_to_phase(result.plaintext_copy[i], msg[i]));
    }

    // Stripping the QOTP layer exposes the outcomes as basis qubits.
    const QubitSequence inner =
        qotp_decrypt(session.key_a.segment("qotp_s"), result.signature.s);
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(read_basis_bit(inner[2 * i]) == result.outcomes[i].b1);
        CHECK(read_basis_bit(inner[2 * i + 1]) == result.outcomes[i].b2);
        // The remote half is the outcome-Pauli rotation of the message.
        const PureQubit expected = apply_pauli(
            PauliOp{result.outcomes[i].b1, result.outcomes[i].b2}, msg[i]);
        CHECK(equal_up_to_phase(result.bob_remote[i], expected));
    }

    CHECK_THROWS_AS(sign(session, random_message(n + 1, rng), rng),
                    LengthMismatchError);
}

TEST_CASE("trent_verify accepts honest wires and rejects substituted messages") {
    Rng rng(213);
    const std::size_t n = 4;
    BellSession session = init_session(n, rng);
    const QubitSequence msg = random_message(n, rng);
    const SignResult signed_msg = sign(session, msg, rng);

    const QubitSequence y_b =
        bob_forward(session, signed_msg.signature, signed_msg.plaintext_copy);
    CHECK(y_b.size() == 4 * n);
    const TrentResult honest = trent_verify(session, y_b, kOracle, rng);
    CHECK(honest.verdict.r == 1);
    CHECK(honest.verdict.source == VerdictSource::trent_verify);
    CHECK(honest.y_tb.size() == 6 * n + 1);

    // Substituting the message block breaks the comparison.
    const QubitSequence substituted =
        bob_forward(session, signed_msg.signature, orthogonal_message(msg));
    const TrentResult bad = trent_verify(session, substituted, kOracle, rng);
    CHECK(bad.verdict.r == 0);

    CHECK_THROWS_AS(trent_verify(session, random_message(3, rng), kOracle, rng),
                    LayoutMismatchError);
}

TEST_CASE("trent_verify in physical mode passes honest runs every time") {
    Rng rng(217);
    for (int it = 0; it < 50; ++it) {
        BellSession session = init_session(3, rng);
        const QubitSequence msg = random_message(3, rng);
        const SignResult signed_msg = sign(session, msg, rng);
        const QubitSequence y_b =
            bob_forward(session, signed_msg.signature, signed_msg.plaintext_copy);
        CHECK(trent_verify(session, y_b, kPhysical, rng).verdict.r == 1);
    }
}

TEST_CASE("the return wire carries record, signature, message, and verdict") {
    Rng rng(219);
    const std::size_t n = 3;
    BellSession session = init_session(n, rng);
    const QubitSequence msg = random_message(n, rng);
    const SignResult signed_msg = sign(session, msg, rng);
    const QubitSequence y_b =
        bob_forward(session, signed_msg.signature, signed_msg.plaintext_copy);
    const TrentResult trent = trent_verify(session, y_b, kOracle, rng);

    const QubitSequence plain =
        qotp_decrypt(session.key_b.segment("qotp_y_tb"), trent.y_tb);
    // m_a replica equals the outcome record.
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(read_basis_bit(plain[2 * i]) == signed_msg.outcomes[i].b1);
        CHECK(read_basis_bit(plain[2 * i + 1]) == signed_msg.outcomes[i].b2);
    }
    // Signature travels unchanged; message comes back; r = 1.
    const auto s_m_a = plain.block("s_m_a");
    const auto s_prime = plain.block("s_prime");
    for (std::size_t i = 0; i < 2 * n; ++i) {
        CHECK(equal_up_to_phase(s_m_a[i], signed_msg.signature.s[i]));
    }
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(equal_up_to_phase(s_prime[i], signed_msg.signature.s[2 * n + i]));
        CHECK(equal_up_to_phase(plain.block("p")[i], msg[i]));
    }
    CHECK(read_basis_bit(plain.block("r")[0]) == 1);
}

TEST_CASE("bob_verify accepts honest runs and halts on a cleared verdict") {
    Rng rng(223);
    const std::size_t n = 4;
    BellSession session = init_session(n, rng);
    const QubitSequence msg = random_message(n, rng);
    const SignResult signed_msg = sign(session, msg, rng);
    const QubitSequence y_b =
        bob_forward(session, signed_msg.signature, signed_msg.plaintext_copy);
    const TrentResult trent = trent_verify(session, y_b, kOracle, rng);

    CHECK(bob_verify(session, trent.y_tb, signed_msg.bob_remote,
                     signed_msg.plaintext_copy, kOracle, rng));

    // Clearing the verdict qubit stops the receiver before any comparison.
    const PureQubit zero = zero_state();
    const QubitSequence cleared =
        rewrap(trent.y_tb, session.key_b.segment("qotp_y_tb"), "r", {&zero, 1});
    CHECK_FALSE(bob_verify(session, cleared, signed_msg.bob_remote,
                           signed_msg.plaintext_copy, kOracle, rng));

    // A wrong reference copy fails the final comparison.
    CHECK_FALSE(bob_verify(session, trent.y_tb, signed_msg.bob_remote,
                           orthogonal_message(msg), kOracle, rng));
}

TEST_CASE("resolve_dispute sides with the signer on genuine pairs only") {
    Rng rng(227);
    const std::size_t n = 4;
    BellSession session = init_session(n, rng);
    const QubitSequence msg = random_message(n, rng);
    const SignResult signed_msg = sign(session, msg, rng);

    CHECK(resolve_dispute(session, msg, signed_msg.signature, kOracle, rng) ==
          DisputeVerdict::alice_disavowing);

    // A randomized signature core is not a signature of msg.
    const QubitSequence junk = random_message(n, rng);
    const BellSignature broken{
        signed_msg.signature.s.with_block("s_prime", junk.qubits())};
    CHECK(resolve_dispute(session, msg, broken, kOracle, rng) ==
          DisputeVerdict::bob_forged);

    CHECK_THROWS_AS(resolve_dispute(session, random_message(n + 1, rng),
                                    signed_msg.signature, kOracle, rng),
                    LayoutMismatchError);
}

TEST_CASE("honest runs succeed end to end for all small n") {
    for (std::size_t n : {1, 2, 3, 4, 6, 8, 16}) {
        Rng rng(1000 + n);
        BellSession session = init_session(n, rng);
        const QubitSequence msg = random_message(n, rng);
        const BellTranscript t = run_honest(session, msg, kOracle, rng);
        CHECK(t.trent_verdict.r == 1);
        CHECK(t.accept);
        CHECK(resolve_dispute(session, msg, t.signed_message.signature, kOracle, rng) ==
              DisputeVerdict::alice_disavowing);

        // The corrected teleported copy matches the message to 1e-9.
        for (std::size_t i = 0; i < n; ++i) {
            const PureQubit corrected = teleport_correct(
                t.signed_message.outcomes[i], t.signed_message.bob_remote[i]);
            CHECK(fidelity(corrected, msg[i]) >= 1.0 - 1e-9);
        }
    }
}

TEST_CASE("trent_retains changes no honest verdicts and stores the signature") {
    const std::size_t n = 4;
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        Rng rng_std(seed), rng_ret(seed);
        BellSession std_session = init_session(n, rng_std, BellVariant::standard);
        BellSession ret_session = init_session(n, rng_ret, BellVariant::trent_retains);
        const QubitSequence msg_std = random_message(n, rng_std);
        const QubitSequence msg_ret = random_message(n, rng_ret);

        const BellTranscript a = run_honest(std_session, msg_std, kOracle, rng_std);
        const BellTranscript b = run_honest(ret_session, msg_ret, kOracle, rng_ret);
        CHECK(a.trent_verdict.r == b.trent_verdict.r);
        CHECK(a.accept == b.accept);

        CHECK_FALSE(std_session.retained_s.has_value());
        REQUIRE(ret_session.retained_s.has_value());
        CHECK(ret_session.retained_s->size() == 3 * n);

        // The receiver's returned wire holds filler in place of the
        // signature under trent_retains.
        const QubitSequence plain =
            qotp_decrypt(ret_session.key_b.segment("qotp_y_tb"), b.y_tb);
        for (const PureQubit& q : plain.block("s_prime")) {
            CHECK(equal_up_to_phase(q, zero_state()));
        }

        // Disputes then ignore whatever the receiver submits.
        const BellSignature junk{QubitSequence{
            std::vector<PureQubit>(3 * n, plus_state())}};
        Rng rng_d(99);
        CHECK(resolve_dispute(ret_session, msg_ret, junk, kOracle, rng_d) ==
              DisputeVerdict::alice_disavowing);
    }
}

TEST_CASE("trent_retains dispute without a stored signature is a usage error") {
    Rng rng(229);
    BellSession session = init_session(2, rng, BellVariant::trent_retains);
    const QubitSequence msg = random_message(2, rng);
    const SignResult signed_msg = sign(session, msg, rng);
    CHECK_THROWS_AS(
        resolve_dispute(session, msg, signed_msg.signature, kOracle, rng),
        std::logic_error);
}
