#include "threshold_atlas/kernels.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include <omp.h>

#include "threshold_atlas/arrangement_detail.hpp"
#include "threshold_atlas/errors.hpp"
#include "threshold_atlas/signed_permutation.hpp"
#include "threshold_atlas/threshold_bijections.hpp"
#include "threshold_atlas/threshold_graph.hpp"

namespace threshold_atlas {

int default_jobs() {
    if (const char* env = std::getenv("THRESHOLD_ATLAS_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return omp_get_max_threads();
}

namespace {

using Counts = std::vector<std::uint64_t>;

void bump(Counts& c, std::size_t j) {
    if (j >= c.size()) c.resize(j + 1, 0);
    ++c[j];
}

void add_into(Counts& into, const Counts& from) {
    if (from.size() > into.size()) into.resize(from.size(), 0);
    for (std::size_t j = 0; j < from.size(); ++j) into[j] += from[j];
}

std::size_t odd_anchors_of_pair(const SignedPermutation& pair, SignedPermutation& scratch) {
    auto out = scratch.unchecked_entries();
    bool one_first = false;
    for (std::size_t i = 0; i < pair.size(); ++i) {
        if (i > 0 && pair.sign(i) != pair.sign(0)) break;
        if (pair.magnitude(i) == 1) {
            one_first = true;
            break;
        }
    }
    if (!one_first) return detail::odd_anchor_count_unchecked(pair);
    std::size_t p = 0;
    out[p++] = 1;
    for (std::size_t i = 0; i < pair.size(); ++i)
        if (pair.magnitude(i) != 1) out[p++] = pair[i];
    return detail::odd_anchor_count_unchecked(scratch);
}

bool threshold_perm_filter(const SignedPermutation& sp) { return is_threshold_perm(sp); }

// Runs `body(chunk_index, counts)` over chunks in parallel and merges.
template <class Body>
Counts parallel_histogram(std::size_t chunks, int jobs, Body body) {
    Counts total;
    const auto count = static_cast<std::int64_t>(chunks);
#pragma omp parallel num_threads(jobs > 0 ? jobs : 1)
    {
        Counts local;
#pragma omp for schedule(dynamic)
        for (std::int64_t c = 0; c < count; ++c) body(static_cast<std::size_t>(c), local);
#pragma omp critical
        add_into(total, local);
    }
    return total;
}

}  // namespace

namespace serial {

DistributionTable odd_cycles_signed(std::size_t n) { return odd_cycle_distribution_signed(n); }

DistributionTable odd_cycles_normal(std::size_t n) { return odd_cycle_distribution_normal(n); }

DistributionTable odd_cycles_threshold_mapped(std::size_t n) {
    Counts counts;
    for_each_threshold_pair(n, [&](const SignedPermutation& sp) {
        bump(counts, odd_cycle_count(pair_to_threshold_perm(ThresholdPair::unchecked(sp)).perm()));
    });
    return DistributionTable::from_counts("odd-cycles", n, counts);
}

DistributionTable odd_cycles_threshold_filtered(std::size_t n) {
    Counts counts;
    for_each_normal(n, [&](const SignedPermutation& sp) {
        if (threshold_perm_filter(sp)) bump(counts, odd_cycle_count(sp));
    });
    return DistributionTable::from_counts("odd-cycles", n, counts);
}

DistributionTable odd_anchors(std::size_t n) { return odd_anchor_distribution(n); }

std::uint64_t threshold_pair_count(std::size_t n) {
    std::uint64_t count = 0;
    for_each_threshold_pair(n, [&](const SignedPermutation&) { ++count; });
    return count;
}

FiniteFieldSample count_points(const Arrangement& a, std::uint64_t q, CountMethod method) {
    return count_points_mod_q(a, q, method);
}

}  // namespace serial

namespace parallel {

namespace {

template <class ForEachWithPrefix>
DistributionTable prefix_histogram(std::size_t n, int jobs, ForEachWithPrefix for_each, bool (*keep)(const SignedPermutation&)) {
    const auto prefixes = magnitude_prefixes(n, 2);
    const Counts counts = parallel_histogram(prefixes.size(), jobs, [&](std::size_t c, Counts& local) {
        for_each(n, std::span<const int>(prefixes[c]), [&](const SignedPermutation& sp) {
            if (keep == nullptr || keep(sp)) bump(local, odd_cycle_count(sp));
        });
    });
    return DistributionTable::from_counts("odd-cycles", n, counts);
}

}  // namespace

DistributionTable odd_cycles_signed(std::size_t n, int jobs) {
    return prefix_histogram(
        n, jobs, [](std::size_t m, std::span<const int> p, auto&& fn) { for_each_signed_with_prefix(m, p, fn); },
        nullptr);
}

DistributionTable odd_cycles_normal(std::size_t n, int jobs) {
    return prefix_histogram(
        n, jobs, [](std::size_t m, std::span<const int> p, auto&& fn) { for_each_normal_with_prefix(m, p, fn); },
        nullptr);
}

DistributionTable odd_cycles_threshold_filtered(std::size_t n, int jobs) {
    return prefix_histogram(
        n, jobs, [](std::size_t m, std::span<const int> p, auto&& fn) { for_each_normal_with_prefix(m, p, fn); },
        &threshold_perm_filter);
}

DistributionTable odd_cycles_threshold_mapped(std::size_t n, int jobs) {
    const auto chunks = threshold_pair_chunks(n);
    const Counts counts = parallel_histogram(chunks.size(), jobs, [&](std::size_t c, Counts& local) {
        for_each_threshold_pair_in_chunk(n, chunks[c], [&](const SignedPermutation& sp) {
            bump(local, odd_cycle_count(pair_to_threshold_perm(ThresholdPair::unchecked(sp)).perm()));
        });
    });
    return DistributionTable::from_counts("odd-cycles", n, counts);
}

DistributionTable odd_anchors(std::size_t n, int jobs) {
    const auto chunks = threshold_pair_chunks(n);
    const Counts counts = parallel_histogram(chunks.size(), jobs, [&](std::size_t c, Counts& local) {
        SignedPermutation scratch = SignedPermutation::unchecked(std::vector<int>(n));
        for_each_threshold_pair_in_chunk(n, chunks[c], [&](const SignedPermutation& sp) {
            bump(local, odd_anchors_of_pair(sp, scratch));
        });
    });
    return DistributionTable::from_counts("odd-anchors", n, counts);
}

std::uint64_t threshold_pair_count(std::size_t n, int jobs) {
    const auto chunks = threshold_pair_chunks(n);
    const Counts counts = parallel_histogram(chunks.size(), jobs, [&](std::size_t c, Counts& local) {
        std::uint64_t here = 0;
        for_each_threshold_pair_in_chunk(n, chunks[c], [&](const SignedPermutation&) { ++here; });
        if (local.empty()) local.resize(1, 0);
        local[0] += here;
    });
    return counts.empty() ? 0 : counts[0];
}

FiniteFieldSample count_points(const Arrangement& a, std::uint64_t q, CountMethod method, int jobs) {
    detail::validate_modulus(a, q);
    if (method == CountMethod::automatic)
        method = detail::within_brute_force_budget(a, q) ? CountMethod::brute_force : CountMethod::pruned;
    if (method == CountMethod::combinatorial || a.dimension() == 0) return count_points_mod_q(a, q, method);

    const detail::PointCounter pc(a, q);
    const bool brute = method == CountMethod::brute_force;
    std::uint64_t total = 0;
    const auto first_values = static_cast<std::int64_t>(q);
#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(jobs > 0 ? jobs : 1)
    for (std::int64_t v = 0; v < first_values; ++v) {
        const auto lo = static_cast<std::uint64_t>(v);
        total += brute ? pc.brute_force(lo, lo + 1) : pc.pruned(lo, lo + 1);
    }
    return {q, Integer(static_cast<unsigned long>(total))};
}

Polynomial charpoly_finite_field(const Arrangement& a, CountMethod method, int jobs) {
    std::vector<FiniteFieldSample> samples;
    for (std::uint64_t q : interpolation_moduli(a.dimension())) samples.push_back(count_points(a, q, method, jobs));
    return detail::interpolate_samples(a.dimension(), samples);
}

}  // namespace parallel

}  // namespace threshold_atlas
