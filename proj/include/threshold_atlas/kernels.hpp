#pragma once

// Enumeration-backed histograms and point counts, each in a serial
// reference form and an OpenMP form. The two forms must agree exactly; the
// parallel ones split the enumeration into prefix chunks and merge
// per-thread histograms, so totals do not depend on the thread count.

#include <cstddef>
#include <cstdint>

#include "threshold_atlas/arrangement.hpp"
#include "threshold_atlas/distribution.hpp"

namespace threshold_atlas {

/// THRESHOLD_ATLAS_JOBS if set to a positive integer, else the OpenMP
/// default thread count.
int default_jobs();

namespace serial {

DistributionTable odd_cycles_signed(std::size_t n);
DistributionTable odd_cycles_normal(std::size_t n);
/// Odd cycles of pair_to_threshold_perm over every threshold pair.
DistributionTable odd_cycles_threshold_mapped(std::size_t n);
/// Odd cycles over normal permutations that pass is_threshold_perm.
DistributionTable odd_cycles_threshold_filtered(std::size_t n);
DistributionTable odd_anchors(std::size_t n);
std::uint64_t threshold_pair_count(std::size_t n);
FiniteFieldSample count_points(const Arrangement& a, std::uint64_t q, CountMethod method);

}  // namespace serial

namespace parallel {

DistributionTable odd_cycles_signed(std::size_t n, int jobs);
DistributionTable odd_cycles_normal(std::size_t n, int jobs);
DistributionTable odd_cycles_threshold_mapped(std::size_t n, int jobs);
DistributionTable odd_cycles_threshold_filtered(std::size_t n, int jobs);
DistributionTable odd_anchors(std::size_t n, int jobs);
std::uint64_t threshold_pair_count(std::size_t n, int jobs);
/// Brute-force or pruned counts, split over the first coordinate.
FiniteFieldSample count_points(const Arrangement& a, std::uint64_t q, CountMethod method, int jobs);
Polynomial charpoly_finite_field(const Arrangement& a, CountMethod method, int jobs);

}  // namespace parallel

}  // namespace threshold_atlas
