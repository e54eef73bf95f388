#include "aqs/qcore.hpp"

#include <cmath>

namespace aqs {

namespace {

double norm_of(Complex a, Complex b) {
    return std::sqrt(std::norm(a) + std::norm(b));
}

}  // namespace

PureQubit make_qubit(Complex amp0, Complex amp1) {
    if (amp0 == Complex{0.0, 0.0} && amp1 == Complex{0.0, 0.0}) {
        throw ZeroVectorError{};
    }
    const double n = norm_of(amp0, amp1);
    const double dev = std::abs(n - 1.0);
    if (dev >= 1e-6) {
        throw NotNormalizableError{n};
    }
    if (dev > 1e-12) {
        return PureQubit{amp0 / n, amp1 / n};
    }
    return PureQubit{amp0, amp1};  // exact inputs pass through untouched
}

PureQubit zero_state() { return PureQubit{{1.0, 0.0}, {0.0, 0.0}}; }
PureQubit one_state() { return PureQubit{{0.0, 0.0}, {1.0, 0.0}}; }

PureQubit plus_state() {
    const double s = 1.0 / std::sqrt(2.0);
    return PureQubit{{s, 0.0}, {s, 0.0}};
}

PureQubit minus_state() {
    const double s = 1.0 / std::sqrt(2.0);
    return PureQubit{{s, 0.0}, {-s, 0.0}};
}

PureQubit basis_state(int bit) { return bit ? one_state() : zero_state(); }

PureQubit random_qubit(Rng& rng) {
    // Normalized vector of complex Gaussians is Haar-distributed.
    std::normal_distribution<double> g(0.0, 1.0);
    Complex a, b;
    double n = 0.0;
    do {
        a = Complex{g(rng), g(rng)};
        b = Complex{g(rng), g(rng)};
        n = norm_of(a, b);
    } while (n < 1e-12);
    return PureQubit{a / n, b / n};
}

PureQubit apply_pauli(PauliOp u, const PureQubit& q) {
    Complex a = q.amp0;
    Complex b = q.amp1;
    if (u.z) b = -b;          // sigma_z first
    if (u.x) std::swap(a, b); // then sigma_x
    return PureQubit{a, b};
}

PauliProduct pauli_compose(PauliOp u, PauliOp v) {
    // X^a Z^b X^c Z^d = (-1)^{bc} X^{a+c} Z^{b+d}; squares drop with phase +1.
    const double sign = (u.z & v.x) ? -1.0 : 1.0;
    PauliOp w{static_cast<std::uint8_t>(u.x ^ v.x), static_cast<std::uint8_t>(u.z ^ v.z)};
    return PauliProduct{w, Complex{sign, 0.0}};
}

std::array<Complex, 4> pauli_matrix(PauliOp u) {
    // I, X, Z, XZ as row-major 2x2 matrices.
    std::array<Complex, 4> z_part = u.z ? std::array<Complex, 4>{1.0, 0.0, 0.0, -1.0}
                                        : std::array<Complex, 4>{1.0, 0.0, 0.0, 1.0};
    if (!u.x) return z_part;
    // Left-multiply by sigma_x: swap rows.
    return {z_part[2], z_part[3], z_part[0], z_part[1]};
}

Complex inner_product(const PureQubit& a, const PureQubit& b) {
    return std::conj(a.amp0) * b.amp0 + std::conj(a.amp1) * b.amp1;
}

double fidelity(const PureQubit& a, const PureQubit& b) {
    return std::norm(inner_product(a, b));
}

bool equal_up_to_phase(const PureQubit& a, const PureQubit& b, double tol) {
    return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

bool swap_test(const PureQubit& a, const PureQubit& b, Rng& rng) {
    // The ancilla of the comparison circuit reads 0 with probability
    // (1 + F)/2; sampling that Born rule directly is exact.
    const double pass_prob = 0.5 * (1.0 + fidelity(a, b));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(rng) < pass_prob;
}

int read_basis_bit(const PureQubit& q, double tol) {
    if (std::norm(q.amp1) >= 1.0 - tol) return 1;
    if (std::norm(q.amp0) >= 1.0 - tol) return 0;
    throw NotClassicalError{};
}

TwoQubitState bell_pair() {
    const double s = 1.0 / std::sqrt(2.0);
    TwoQubitState st;
    st.amps = {Complex{s, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{s, 0.0}};
    return st;
}

namespace {

// Bell basis vector for outcome (b1,b2) over amplitudes |00⟩,|01⟩,|10⟩,|11⟩.
std::array<Complex, 4> bell_vector(BellIndex idx) {
    const double s = 1.0 / std::sqrt(2.0);
    const double sign = idx.b2 ? -1.0 : 1.0;
    std::array<Complex, 4> v{};
    if (idx.b1 == 0) {
        v[0] = Complex{s, 0.0};
        v[3] = Complex{sign * s, 0.0};
    } else {
        v[1] = Complex{s, 0.0};
        v[2] = Complex{sign * s, 0.0};
    }
    return v;
}

}  // namespace

TeleportResult teleport(const PureQubit& msg, const TwoQubitState& pair, Rng& rng) {
    // Precondition: the shared pair is canonical (up to 1e-9).
    const TwoQubitState canon = bell_pair();
    Complex overlap{0.0, 0.0};
    for (int i = 0; i < 4; ++i) overlap += std::conj(canon.amps[i]) * pair.amps[i];
    if (std::norm(overlap) < 1.0 - kStateTol) {
        throw NotCanonicalPairError{};
    }

    // Joint state over (msg, A, B); project (msg, A) onto each Bell vector.
    // branch_c = sum_{m,a} conj(Bell_{ma}) msg_m pair_{ac}, outcome
    // probability = |branch|^2 (exact Born rule; 1/4 each for the canonical
    // pair).
    const Complex msg_amp[2] = {msg.amp0, msg.amp1};
    std::array<BellIndex, 4> outcomes{BellIndex{0, 0}, BellIndex{0, 1}, BellIndex{1, 0},
                                      BellIndex{1, 1}};
    std::array<std::array<Complex, 2>, 4> branches{};
    std::array<double, 4> probs{};
    for (int k = 0; k < 4; ++k) {
        const auto bell = bell_vector(outcomes[k]);
        for (int c = 0; c < 2; ++c) {
            Complex acc{0.0, 0.0};
            for (int m = 0; m < 2; ++m) {
                for (int a = 0; a < 2; ++a) {
                    acc += std::conj(bell[2 * m + a]) * msg_amp[m] * pair.amps[2 * a + c];
                }
            }
            branches[k][c] = acc;
        }
        probs[k] = std::norm(branches[k][0]) + std::norm(branches[k][1]);
    }

    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double draw = u(rng);
    double cum = 0.0;
    int picked = 3;
    for (int k = 0; k < 4; ++k) {
        cum += probs[k];
        if (draw < cum) {
            picked = k;
            break;
        }
    }

    const double inv = 1.0 / std::sqrt(probs[picked]);
    PureQubit remote{branches[picked][0] * inv, branches[picked][1] * inv};
    return TeleportResult{outcomes[picked], remote};
}

PureQubit teleport_correct(BellIndex outcome, const PureQubit& remote) {
    // remote = X^{b1} Z^{b2} |msg⟩; the same operator undoes it up to phase.
    return apply_pauli(PauliOp{outcome.b1, outcome.b2}, remote);
}

}  // namespace aqs
