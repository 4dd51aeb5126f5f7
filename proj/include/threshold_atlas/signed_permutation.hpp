#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "threshold_atlas/distribution.hpp"

namespace threshold_atlas {

enum class Sign : std::int8_t { plus = 1, minus = -1 };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// A permutation of [n] with a sign attached to every position, stored as
/// the signed entries w_i * pi_i (so [-2,-3,5,-1,4,-6] means 2 and 3 carry
/// a minus sign, 5 a plus, and so on).
class SignedPermutation {
public:
    SignedPermutation() = default;
    /// Throws DomainError unless the magnitudes are exactly {1..n}.
    explicit SignedPermutation(std::vector<int> entries);
    SignedPermutation(std::initializer_list<int> entries)
        : SignedPermutation(std::vector<int>(entries)) {}

    /// No validation; for enumeration loops that maintain the invariant.
    static SignedPermutation unchecked(std::vector<int> entries) {
        SignedPermutation sp;
        sp.entries_ = std::move(entries);
        return sp;
    }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int magnitude(std::size_t i) const { return entries_[i] < 0 ? -entries_[i] : entries_[i]; }
    Sign sign(std::size_t i) const { return entries_[i] < 0 ? Sign::minus : Sign::plus; }
    bool negative(std::size_t i) const { return entries_[i] < 0; }
    std::span<const int> entries() const { return entries_; }

    void set_sign(std::size_t i, Sign s) { entries_[i] = static_cast<int>(s) * magnitude(i); }
    /// Mutable view for in-place enumeration; callers keep magnitudes a permutation.
    std::span<int> unchecked_entries() { return entries_; }

    std::size_t negative_count() const;
    /// "[-2,-3,5,-1,4,-6]"
    std::string to_string() const;
    /// "-2 -3 +5 -1 +4 -6"
    std::string to_signed_string() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    /// Enumeration order: magnitude sequence first, then signs with + < -.
    friend bool operator<(const SignedPermutation& a, const SignedPermutation& b);

private:
    std::vector<int> entries_;
};

struct Arrow {
    int from;
    int to;
    Sign sign;  // sign of the entry the arrow points to
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct SignedCycle {
    std::vector<int> compartment;  // signed entries, left to right
    std::vector<Arrow> arrows;     // compartment[i] -> compartment[i+1], cyclically
};

struct CycleStructure {
    std::vector<SignedCycle> cycles;
};

/// Cuts after the smallest magnitude of the remaining suffix, repeatedly.
CycleStructure compartmentalize(const SignedPermutation& sp);

/// Inverse of compartmentalize; reads only the arrows of each cycle.
/// Throws DomainError when supports overlap, miss a value of [n], or an
/// arrow list is not a single cycle.
SignedPermutation permutation_from_cycles(const CycleStructure& cs);

/// Number of compartments holding an odd number of negative entries.
std::size_t odd_cycle_count(const SignedPermutation& sp);

/// Every positive entry after the first exceeds its predecessor.
bool is_normal(const SignedPermutation& sp);

namespace detail {

// Visits every sign pattern over `base` (taken as magnitudes) whose minus
// set contains `forced` and is contained in forced | free, in increasing
// mask order. Position 0 is the most significant bit, 1 = minus.
template <class Fn>
void for_each_sign_pattern(std::span<const int> magnitudes, std::uint32_t forced, std::uint32_t free,
                           SignedPermutation& scratch, Fn& fn) {
    const std::size_t n = magnitudes.size();
    auto out = scratch.unchecked_entries();
    std::uint32_t sub = 0;
    for (;;) {
        const std::uint32_t mask = forced | sub;
        for (std::size_t i = 0; i < n; ++i) {
            const bool minus = (mask >> (n - 1 - i)) & 1U;
            out[i] = minus ? -magnitudes[i] : magnitudes[i];
        }
        fn(static_cast<const SignedPermutation&>(scratch));
        if (sub == free) break;
        sub = (sub - free) & free;
    }
}

template <class Fn>
void for_each_magnitude_perm(std::size_t n, std::span<const int> prefix, Fn&& fn) {
    std::vector<int> perm(prefix.begin(), prefix.end());
    std::vector<bool> used(n + 1, false);
    for (int v : prefix) used[static_cast<std::size_t>(v)] = true;
    for (std::size_t v = 1; v <= n; ++v)
        if (!used[v]) perm.push_back(static_cast<int>(v));
    const auto tail = perm.begin() + static_cast<std::ptrdiff_t>(prefix.size());
    do {
        fn(std::span<const int>(perm));
    } while (std::next_permutation(tail, perm.end()));
}

inline std::uint32_t descent_mask(std::span<const int> magnitudes) {
    const std::size_t n = magnitudes.size();
    std::uint32_t forced = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (magnitudes[i] < magnitudes[i - 1]) forced |= 1U << (n - 1 - i);
    return forced;
}

}  // namespace detail

/// All magnitude prefixes of the given length, in lexicographic order.
/// Enumerating each prefix in turn reproduces the full enumeration order.
std::vector<std::vector<int>> magnitude_prefixes(std::size_t n, std::size_t depth);

/// Visits the signed permutations whose magnitudes start with `prefix`, in
/// enumeration order. The visitor receives a reused object.
template <class Fn>
void for_each_signed_with_prefix(std::size_t n, std::span<const int> prefix, Fn&& fn) {
    if (n == 0) {
        SignedPermutation empty;
        fn(static_cast<const SignedPermutation&>(empty));
        return;
    }
    SignedPermutation scratch = SignedPermutation::unchecked(std::vector<int>(n));
    const std::uint32_t all = (n >= 32) ? 0xFFFFFFFFU : ((1U << n) - 1U);
    detail::for_each_magnitude_perm(n, prefix, [&](std::span<const int> mags) {
        detail::for_each_sign_pattern(mags, 0U, all, scratch, fn);
    });
}

template <class Fn>
void for_each_signed(std::size_t n, Fn&& fn) {
    for_each_signed_with_prefix(n, std::span<const int>{}, fn);
}

/// Normal permutations only, generated directly: positions after a descent
/// are forced negative.
template <class Fn>
void for_each_normal_with_prefix(std::size_t n, std::span<const int> prefix, Fn&& fn) {
    if (n == 0) {
        SignedPermutation empty;
        fn(static_cast<const SignedPermutation&>(empty));
        return;
    }
    SignedPermutation scratch = SignedPermutation::unchecked(std::vector<int>(n));
    const std::uint32_t all = (n >= 32) ? 0xFFFFFFFFU : ((1U << n) - 1U);
    detail::for_each_magnitude_perm(n, prefix, [&](std::span<const int> mags) {
        const std::uint32_t forced = detail::descent_mask(mags);
        detail::for_each_sign_pattern(mags, forced, all & ~forced, scratch, fn);
    });
}

template <class Fn>
void for_each_normal(std::size_t n, Fn&& fn) {
    for_each_normal_with_prefix(n, std::span<const int>{}, fn);
}

/// Materialized enumerations; intended for small n.
std::vector<SignedPermutation> enumerate_signed(std::size_t n);
std::vector<SignedPermutation> enumerate_normal(std::size_t n);

template <class Range>
DistributionTable odd_cycle_distribution(const Range& perms, std::size_t n = 0) {
    std::vector<std::uint64_t> counts;
    for (const SignedPermutation& sp : perms) {
        const std::size_t j = odd_cycle_count(sp);
        if (j >= counts.size()) counts.resize(j + 1, 0);
        ++counts[j];
    }
    return DistributionTable::from_counts("odd-cycles", n, counts);
}

/// Serial reference histograms over all signed / all normal permutations.
DistributionTable odd_cycle_distribution_signed(std::size_t n);
DistributionTable odd_cycle_distribution_normal(std::size_t n);

}  // namespace threshold_atlas
