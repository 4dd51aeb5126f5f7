#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "threshold_atlas/signed_permutation.hpp"

namespace threshold_atlas {

/// Threshold pair in standard form: the first two signs agree, and within
/// any run of equal signs the magnitudes ascend. Encodes one labeled
/// threshold graph (and one region of the threshold arrangement).
class ThresholdPair {
public:
    /// Throws DomainError if sp is not in standard form or n < 2.
    explicit ThresholdPair(SignedPermutation sp);
    static ThresholdPair unchecked(SignedPermutation sp) { return ThresholdPair(std::move(sp), Unchecked{}); }

    const SignedPermutation& perm() const { return sp_; }
    std::size_t size() const { return sp_.size(); }
    friend bool operator==(const ThresholdPair&, const ThresholdPair&) = default;
    friend bool operator<(const ThresholdPair& a, const ThresholdPair& b) { return a.sp_ < b.sp_; }

private:
    struct Unchecked {};
    ThresholdPair(SignedPermutation sp, Unchecked) : sp_(std::move(sp)) {}
    SignedPermutation sp_;
};

/// Threshold permutation: a normal permutation with |e1| < |e2| whose
/// leading signs are fixed by whether the first entry is 1.
class ThresholdPermutation {
public:
    explicit ThresholdPermutation(SignedPermutation sp);
    static ThresholdPermutation unchecked(SignedPermutation sp) {
        return ThresholdPermutation(std::move(sp), Unchecked{});
    }

    const SignedPermutation& perm() const { return sp_; }
    std::size_t size() const { return sp_.size(); }
    friend bool operator==(const ThresholdPermutation&, const ThresholdPermutation&) = default;

private:
    struct Unchecked {};
    ThresholdPermutation(SignedPermutation sp, Unchecked) : sp_(std::move(sp)) {}
    SignedPermutation sp_;
};

struct Block {
    std::vector<int> members;  // ascending
    Sign sign;
    friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
    std::vector<Block> blocks;
};

/// Throws DomainError for n < 2.
bool is_threshold_pair(const SignedPermutation& sp);
/// False for n < 2.
bool is_threshold_perm(const SignedPermutation& sp);

ThresholdPermutation pair_to_threshold_perm(const ThresholdPair& tp);
ThresholdPair threshold_perm_to_pair(const ThresholdPermutation& tperm);
/// Validating overload: DomainError if sp is not a threshold permutation.
ThresholdPair threshold_perm_to_pair(const SignedPermutation& sp);

/// Makes the first sign agree with the second, then sorts every maximal
/// constant-sign run ascending. The result builds the same graph as sp.
ThresholdPair standardize(const SignedPermutation& sp);

BlockDecomposition blocks(const ThresholdPair& tp);

namespace detail {

// Writes every ordered partition of `remaining` (as bitmasks over [n]) into
// consecutive runs of `out` starting at `pos` with alternating signs.
template <class Fn>
void emit_ordered_blocks(std::size_t n, std::uint32_t remaining, std::size_t pos, Sign sign,
                         SignedPermutation& scratch, Fn& fn) {
    if (remaining == 0) {
        fn(static_cast<const SignedPermutation&>(scratch));
        return;
    }
    auto out = scratch.unchecked_entries();
    // Nonempty submasks of `remaining`.
    for (std::uint32_t sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
        std::size_t p = pos;
        for (std::size_t v = 1; v <= n; ++v)
            if (sub & (1U << (v - 1))) out[p++] = static_cast<int>(sign) * static_cast<int>(v);
        emit_ordered_blocks(n, remaining & ~sub, p, opposite(sign), scratch, fn);
    }
}

}  // namespace detail

/// One unit of work in the threshold-pair enumeration: the first block and
/// its sign. Chunks partition the full enumeration.
struct ThresholdPairChunk {
    std::uint32_t first_block;
    Sign sign;
};

std::vector<ThresholdPairChunk> threshold_pair_chunks(std::size_t n);

template <class Fn>
void for_each_threshold_pair_in_chunk(std::size_t n, const ThresholdPairChunk& chunk, Fn&& fn) {
    SignedPermutation scratch = SignedPermutation::unchecked(std::vector<int>(n));
    auto out = scratch.unchecked_entries();
    std::size_t p = 0;
    for (std::size_t v = 1; v <= n; ++v)
        if (chunk.first_block & (1U << (v - 1))) out[p++] = static_cast<int>(chunk.sign) * static_cast<int>(v);
    const std::uint32_t all = (1U << n) - 1U;
    detail::emit_ordered_blocks(n, all & ~chunk.first_block, p, opposite(chunk.sign), scratch, fn);
}

/// Generates every threshold pair of size n (n >= 2) once, from ordered set
/// partitions whose first block has at least two elements. The visitor sees
/// a reused SignedPermutation already in standard form.
template <class Fn>
void for_each_threshold_pair(std::size_t n, Fn&& fn) {
    for (const auto& chunk : threshold_pair_chunks(n)) for_each_threshold_pair_in_chunk(n, chunk, fn);
}

std::vector<ThresholdPair> enumerate_threshold_pairs(std::size_t n);

}  // namespace threshold_atlas
