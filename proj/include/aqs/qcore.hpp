// Exact simulation of single qubits, two-qubit Bell states, the Pauli group
// modulo global phase, teleportation, and probabilistic state comparison.
//
// All values are immutable after construction; operations are pure functions
// of (inputs, rng) and safe to fan out across threads with per-task engines.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "aqs/common.hpp"

namespace aqs {

// Normalized 2-dimensional complex amplitude pair  a|0⟩ + b|1⟩.
// Global phases are retained internally; every equality check in the
// workbench goes through equal_up_to_phase.
struct PureQubit {
    Complex amp0{1.0, 0.0};
    Complex amp1{0.0, 0.0};
};

// Element of {I, X, Z, XZ} tracked as two bits; the operator is
// sigma_x^x * sigma_z^z (z applied first).
struct PauliOp {
    std::uint8_t x = 0;
    std::uint8_t z = 0;

    bool operator==(const PauliOp&) const = default;
};

inline constexpr PauliOp kPauliI{0, 0};
inline constexpr PauliOp kPauliX{1, 0};
inline constexpr PauliOp kPauliZ{0, 1};
inline constexpr PauliOp kPauliXZ{1, 1};

// All four Paulis in a fixed iteration order (I, X, Z, XZ).
inline constexpr std::array<PauliOp, 4> kAllPaulis{kPauliI, kPauliX, kPauliZ, kPauliXZ};

// Classical two-bit label of a Bell measurement outcome:
//   (0,0) -> (|00⟩+|11⟩)/√2   (0,1) -> (|00⟩-|11⟩)/√2
//   (1,0) -> (|01⟩+|10⟩)/√2   (1,1) -> (|01⟩-|10⟩)/√2
struct BellIndex {
    std::uint8_t b1 = 0;
    std::uint8_t b2 = 0;

    bool operator==(const BellIndex&) const = default;
};

// Two-qubit state as 4 amplitudes in the order |00⟩,|01⟩,|10⟩,|11⟩.
struct TwoQubitState {
    std::array<Complex, 4> amps{};
};

// -- constructors ------------------------------------------------------------

// Checked constructor: accepts inputs that are unit-norm up to rounding.
// Renormalizes when the norm deviates from 1 by more than 1e-12 but less
// than 1e-6; larger deviations signal a caller bug.
// Throws ZeroVectorError, NotNormalizableError.
PureQubit make_qubit(Complex amp0, Complex amp1);

// Basis and Hadamard-basis states.
PureQubit zero_state();
PureQubit one_state();
PureQubit plus_state();
PureQubit minus_state();
PureQubit basis_state(int bit);

// Haar-distributed pure qubit (uniform over the Bloch sphere).
PureQubit random_qubit(Rng& rng);

// -- Pauli algebra -----------------------------------------------------------

// sigma_x^x sigma_z^z |q⟩ with exact amplitude arithmetic (no renormalization).
PureQubit apply_pauli(PauliOp u, const PureQubit& q);

// Result of composing two Pauli operators: mat(u)·mat(v) = phase · mat(op).
// For this four-element set the phase is always +1 or -1; the type allows
// the full {+1,-1,+i,-i} phase group.
struct PauliProduct {
    PauliOp op;
    Complex phase;
};

PauliProduct pauli_compose(PauliOp u, PauliOp v);

// Explicit 2x2 matrix of a PauliOp, row-major. Exposed so tests can check
// pauli_compose against direct matrix multiplication.
std::array<Complex, 4> pauli_matrix(PauliOp u);

// -- comparison --------------------------------------------------------------

// ⟨a|b⟩
Complex inner_product(const PureQubit& a, const PureQubit& b);

// |⟨a|b⟩|²
double fidelity(const PureQubit& a, const PureQubit& b);

// The equality notion used by all verification checks: |⟨a|b⟩| >= 1 - tol.
bool equal_up_to_phase(const PureQubit& a, const PureQubit& b, double tol = kStateTol);

// One run of the probabilistic comparison circuit: passes with probability
// exactly (1 + fidelity(a,b))/2. A pass leaves both states usable; a fail
// proves a != b.
bool swap_test(const PureQubit& a, const PureQubit& b, Rng& rng);

// Reads a computational-basis qubit as a classical bit. Throws
// NotClassicalError unless one basis probability is >= 1 - tol.
int read_basis_bit(const PureQubit& q, double tol = kStateTol);

// -- Bell pairs and teleportation --------------------------------------------

// The canonical shared pair (|00⟩+|11⟩)/√2, exactly.
TwoQubitState bell_pair();

struct TeleportResult {
    BellIndex outcome;
    PureQubit remote;  // collapsed state of the far half, before correction
};

// Bell-measures (msg, first half of pair) with exact Born probabilities and
// returns the outcome label plus the collapsed remote half. For the
// canonical pair every outcome has probability 1/4 and
//   remote = sigma_x^{b1} sigma_z^{b2} |msg⟩.
// Throws NotCanonicalPairError if the pair deviates from bell_pair() by more
// than 1e-9 in fidelity.
TeleportResult teleport(const PureQubit& msg, const TwoQubitState& pair, Rng& rng);

// Pauli correction: teleport followed by teleport_correct reproduces the
// message up to global phase, for every outcome.
PureQubit teleport_correct(BellIndex outcome, const PureQubit& remote);

}  // namespace aqs
