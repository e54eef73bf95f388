// Partitioned bit keys and qubit sequences: the containers every protocol
// wire and key is built from, plus the sequence-level comparison used by all
// verification checks.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aqs/common.hpp"
#include "aqs/qcore.hpp"

namespace aqs {

// Half-open index range [offset, offset + length).
struct SegmentRange {
    std::size_t offset = 0;
    std::size_t length = 0;
};

// Ordered, named, contiguous partition of [0, total). Segments are declared
// in order; offsets follow from the declared lengths, so disjointness and
// coverage hold by construction.
class SegmentLayout {
public:
    SegmentLayout() = default;
    SegmentLayout(std::initializer_list<std::pair<std::string, std::size_t>> segments);

    void append(std::string name, std::size_t length);

    std::size_t total() const { return total_; }
    bool empty() const { return segments_.empty(); }

    bool has(std::string_view name) const;
    // Throws LayoutMismatchError for unknown names.
    SegmentRange range(std::string_view name) const;

    const std::vector<std::pair<std::string, std::size_t>>& segments() const {
        return segments_;
    }

    bool operator==(const SegmentLayout&) const = default;

private:
    std::vector<std::pair<std::string, std::size_t>> segments_;
    std::size_t total_ = 0;
};

// Finite bit string with a declared partition for the multiple roles one key
// plays. Bits are stored 0/1, one per byte, so segments can be spanned.
struct BitKey {
    std::vector<std::uint8_t> bits;
    SegmentLayout layout;

    // Throws LayoutMismatchError if the layout does not cover bits exactly
    // or the segment is unknown.
    std::span<const std::uint8_t> segment(std::string_view name) const;

    bool operator==(const BitKey&) const = default;
};

// Uniformly random key matching the given layout.
BitKey random_key(SegmentLayout layout, Rng& rng);

// Ordered list of pure qubits with an optional layout naming sub-ranges
// (e.g. M_A | S' | P | r on a protocol wire). An empty layout means the
// sequence is unstructured; a non-empty layout must cover [0, len) exactly.
class QubitSequence {
public:
    QubitSequence() = default;
    explicit QubitSequence(std::vector<PureQubit> qubits);
    QubitSequence(std::vector<PureQubit> qubits, SegmentLayout layout);

    std::size_t size() const { return qubits_.size(); }
    const PureQubit& operator[](std::size_t i) const { return qubits_[i]; }
    const std::vector<PureQubit>& qubits() const { return qubits_; }
    const SegmentLayout& layout() const { return layout_; }

    std::span<const PureQubit> block(std::string_view name) const;
    // Copy of one named block as an unstructured sequence.
    QubitSequence extract(std::string_view name) const;
    // New sequence with one block's qubits replaced (same layout).
    QubitSequence with_block(std::string_view name, std::span<const PureQubit> repl) const;
    // Same qubits under a different layout (must cover the same length).
    QubitSequence relabeled(SegmentLayout layout) const;

private:
    std::vector<PureQubit> qubits_;
    SegmentLayout layout_;
};

// Concatenation; the result carries the given layout (may be empty).
QubitSequence concat(std::initializer_list<std::span<const PureQubit>> parts,
                     SegmentLayout layout = {});

// n independent Haar-random qubits (a pure product message).
QubitSequence random_message(std::size_t n, Rng& rng);

// Basis-state sequence |b1 b2 ...⟩ from classical bits.
QubitSequence classical_message(std::span<const std::uint8_t> bits);

// -- comparison --------------------------------------------------------------

enum class CompareMode {
    oracle,    // fidelity threshold, deterministic; stands in for ideal tests
    physical,  // per-qubit swap tests, probabilistic
};

struct Comparison {
    CompareMode mode = CompareMode::oracle;
    int swap_repetitions = 1;  // swap tests per qubit in physical mode
};

// Qubit-wise equality of equal-length sequences under the chosen mode.
// Oracle mode: equal_up_to_phase per qubit. Physical mode: swap tests, all
// repetitions of all qubits must pass. Throws LengthMismatchError.
bool sequences_equal(const QubitSequence& a, const QubitSequence& b,
                     const Comparison& cmp, Rng& rng);

}  // namespace aqs
