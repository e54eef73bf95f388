#include "aqs/sequence.hpp"

#include <algorithm>

namespace aqs {

SegmentLayout::SegmentLayout(
    std::initializer_list<std::pair<std::string, std::size_t>> segments) {
    for (const auto& [name, length] : segments) append(name, length);
}

void SegmentLayout::append(std::string name, std::size_t length) {
    if (has(name)) {
        throw LayoutMismatchError{"duplicate segment name: " + name};
    }
    segments_.emplace_back(std::move(name), length);
    total_ += length;
}

bool SegmentLayout::has(std::string_view name) const {
    return std::any_of(segments_.begin(), segments_.end(),
                       [&](const auto& s) { return s.first == name; });
}

SegmentRange SegmentLayout::range(std::string_view name) const {
    std::size_t offset = 0;
    for (const auto& [seg_name, length] : segments_) {
        if (seg_name == name) return SegmentRange{offset, length};
        offset += length;
    }
    throw LayoutMismatchError{"unknown segment: " + std::string(name)};
}

std::span<const std::uint8_t> BitKey::segment(std::string_view name) const {
    if (layout.total() != bits.size()) {
        throw LayoutMismatchError{"key layout covers " + std::to_string(layout.total()) +
                                  " bits, key has " + std::to_string(bits.size())};
    }
    const SegmentRange r = layout.range(name);
    return std::span<const std::uint8_t>(bits).subspan(r.offset, r.length);
}

BitKey random_key(SegmentLayout layout, Rng& rng) {
    BitKey key;
    key.bits.resize(layout.total());
    std::uniform_int_distribution<int> bit(0, 1);
    for (auto& b : key.bits) b = static_cast<std::uint8_t>(bit(rng));
    key.layout = std::move(layout);
    return key;
}

QubitSequence::QubitSequence(std::vector<PureQubit> qubits)
    : qubits_(std::move(qubits)) {}

QubitSequence::QubitSequence(std::vector<PureQubit> qubits, SegmentLayout layout)
    : qubits_(std::move(qubits)), layout_(std::move(layout)) {
    if (!layout_.empty() && layout_.total() != qubits_.size()) {
        throw LayoutMismatchError{"layout covers " + std::to_string(layout_.total()) +
                                  " qubits, sequence has " + std::to_string(qubits_.size())};
    }
}

std::span<const PureQubit> QubitSequence::block(std::string_view name) const {
    const SegmentRange r = layout_.range(name);
    return std::span<const PureQubit>(qubits_).subspan(r.offset, r.length);
}

QubitSequence QubitSequence::extract(std::string_view name) const {
    const auto b = block(name);
    return QubitSequence(std::vector<PureQubit>(b.begin(), b.end()));
}

QubitSequence QubitSequence::with_block(std::string_view name,
                                        std::span<const PureQubit> repl) const {
    const SegmentRange r = layout_.range(name);
    if (repl.size() != r.length) {
        throw LayoutMismatchError{"replacement for '" + std::string(name) + "' has " +
                                  std::to_string(repl.size()) + " qubits, block has " +
                                  std::to_string(r.length)};
    }
    std::vector<PureQubit> qs = qubits_;
    std::copy(repl.begin(), repl.end(), qs.begin() + static_cast<std::ptrdiff_t>(r.offset));
    return QubitSequence(std::move(qs), layout_);
}

QubitSequence QubitSequence::relabeled(SegmentLayout layout) const {
    return QubitSequence(qubits_, std::move(layout));
}

QubitSequence concat(std::initializer_list<std::span<const PureQubit>> parts,
                     SegmentLayout layout) {
    std::vector<PureQubit> qs;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    qs.reserve(total);
    for (const auto& p : parts) qs.insert(qs.end(), p.begin(), p.end());
    return QubitSequence(std::move(qs), std::move(layout));
}

QubitSequence random_message(std::size_t n, Rng& rng) {
    std::vector<PureQubit> qs;
    qs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) qs.push_back(random_qubit(rng));
    return QubitSequence(std::move(qs));
}

QubitSequence classical_message(std::span<const std::uint8_t> bits) {
    std::vector<PureQubit> qs;
    qs.reserve(bits.size());
    for (auto b : bits) qs.push_back(basis_state(b));
    return QubitSequence(std::move(qs));
}

bool sequences_equal(const QubitSequence& a, const QubitSequence& b,
                     const Comparison& cmp, Rng& rng) {
    if (a.size() != b.size()) {
        throw LengthMismatchError{"comparing sequences of lengths " +
                                  std::to_string(a.size()) + " and " +
                                  std::to_string(b.size())};
    }
    if (cmp.mode == CompareMode::oracle) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!equal_up_to_phase(a[i], b[i])) return false;
        }
        return true;
    }
    // Physical mode: a single failed swap test is a proof of difference, so
    // the whole comparison fails; passes are only probabilistic evidence.
    bool all_pass = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (int r = 0; r < cmp.swap_repetitions; ++r) {
            if (!swap_test(a[i], b[i], rng)) all_pass = false;
        }
    }
    return all_pass;
}

}  // namespace aqs
