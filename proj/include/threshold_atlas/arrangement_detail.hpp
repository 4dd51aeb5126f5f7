#pragma once

// Point-counting internals shared by the serial and OpenMP paths.

#include <cstdint>
#include <span>
#include <vector>

#include "threshold_atlas/arrangement.hpp"

namespace threshold_atlas::detail {

/// Counts points of Z_q^n off the arrangement whose first coordinate lies in
/// [first_lo, first_hi). Disjoint slices sum to the full count.
class PointCounter {
public:
    PointCounter(const Arrangement& a, std::uint64_t q);

    std::uint64_t brute_force(std::uint64_t first_lo, std::uint64_t first_hi) const;
    std::uint64_t pruned(std::uint64_t first_lo, std::uint64_t first_hi) const;

private:
    bool violates(const LinearForm& f, std::span<const std::uint64_t> x) const;

    std::size_t n_;
    std::uint64_t q_;
    // Forms grouped by their largest coordinate index.
    std::vector<std::vector<LinearForm>> by_top_;
};

void validate_modulus(const Arrangement& a, std::uint64_t q);
bool within_brute_force_budget(const Arrangement& a, std::uint64_t q);
Integer threshold_combinatorial_count(std::size_t n, std::uint64_t q);
Polynomial interpolate_samples(std::size_t n, const std::vector<FiniteFieldSample>& samples);

}  // namespace threshold_atlas::detail
