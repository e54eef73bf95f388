// Shared aliases, error types, and RNG plumbing for the AQS workbench.

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace aqs {

using Complex = std::complex<double>;

// All stochastic operations take an explicit engine so runs replay exactly.
using Rng = std::mt19937_64;

// Tolerances used across the workbench: state equality absorbs only
// floating-point rounding (all arithmetic is exact 2- and 4-dim algebra).
inline constexpr double kStateTol = 1e-9;
inline constexpr double kIsometryTol = 1e-12;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroVectorError : Error {
    ZeroVectorError() : Error("both amplitudes are zero") {}
};
struct NotNormalizableError : Error {
    explicit NotNormalizableError(double norm)
        : Error("amplitude norm " + std::to_string(norm) +
                " deviates from 1 by >= 1e-6 (caller bug, not rounding)") {}
};
struct NotCanonicalPairError : Error {
    NotCanonicalPairError() : Error("shared pair is not the canonical Bell pair") {}
};
struct KeyLengthMismatchError : Error {
    KeyLengthMismatchError(std::size_t key_bits, std::size_t needed)
        : Error("key segment has " + std::to_string(key_bits) + " bits, need " +
                std::to_string(needed)) {}
};
struct LengthMismatchError : Error {
    using Error::Error;
};
struct LayoutMismatchError : Error {
    using Error::Error;
};
struct NotClassicalError : Error {
    NotClassicalError() : Error("qubit is not a computational basis state") {}
};
struct TooLargeError : Error {
    explicit TooLargeError(std::size_t n)
        : Error("exhaustive enumeration limited to n <= 8, got n = " + std::to_string(n)) {}
};
struct RangeMismatchError : Error {
    using Error::Error;
};
struct InvalidConfigError : Error {
    using Error::Error;
};
struct IoFailureError : Error {
    using Error::Error;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Child stream for trial t of a seeded experiment. Trials are
// order-independent: stream t never depends on streams < t.
inline Rng make_trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * (trial + 1));
    const std::uint64_t a = splitmix64(state);
    const std::uint64_t b = splitmix64(state);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return Rng(seq);
}

}  // namespace aqs
