#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "threshold_atlas/errors.hpp"
#include "threshold_atlas/signed_permutation.hpp"

using namespace threshold_atlas;

namespace {

std::vector<std::vector<int>> compartments_of(const SignedPermutation& sp) {
    std::vector<std::vector<int>> out;
    for (const auto& c : compartmentalize(sp).cycles) out.push_back(c.compartment);
    return out;
}

oracle::Perm entries(const SignedPermutation& sp) { return {sp.entries().begin(), sp.entries().end()}; }

}  // namespace

TEST(SignedPermutation, Validation) {
    EXPECT_THROW(SignedPermutation({1, 1}), DomainError);
    EXPECT_THROW(SignedPermutation({0, 1}), DomainError);
    EXPECT_THROW(SignedPermutation({1, 3}), DomainError);
    EXPECT_NO_THROW(SignedPermutation({-2, 1}));
}

TEST(SignedPermutation, Serialization) {
    const SignedPermutation sp{-2, -3, 5, -1, 4, -6};
    EXPECT_EQ(sp.to_string(), "[-2,-3,5,-1,4,-6]");
    EXPECT_EQ(sp.to_signed_string(), "-2 -3 +5 -1 +4 -6");
    EXPECT_EQ(sp.negative_count(), 4u);
}

TEST(Compartmentalize, WorkedExamples) {
    EXPECT_EQ(compartments_of({3, 1, -6, -7, -5, 2, -4}),
              (std::vector<std::vector<int>>{{3, 1}, {-6, -7, -5, 2}, {-4}}));
    EXPECT_EQ(compartments_of({-2, -3, 5, -1, 4, -6}),
              (std::vector<std::vector<int>>{{-2, -3, 5, -1}, {4}, {-6}}));
    EXPECT_EQ(compartments_of({1, 2, 3, 4}), (std::vector<std::vector<int>>{{1}, {2}, {3}, {4}}));
}

TEST(Compartmentalize, ArrowsCarryTargetSign) {
    const auto cs = compartmentalize({3, 1, -6, -7, -5, 2, -4});
    for (const auto& cyc : cs.cycles)
        for (const auto& a : cyc.arrows) {
            const auto it = std::find_if(cyc.compartment.begin(), cyc.compartment.end(),
                                         [&](int e) { return std::abs(e) == a.to; });
            ASSERT_NE(it, cyc.compartment.end());
            EXPECT_EQ(a.sign, *it < 0 ? Sign::minus : Sign::plus);
        }
}

TEST(Compartmentalize, MatchesOracleAndRoundTripsUpTo6) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_signed(n, [&](const SignedPermutation& sp) {
            EXPECT_EQ(compartments_of(sp), oracle::compartments(entries(sp)));
            EXPECT_EQ(permutation_from_cycles(compartmentalize(sp)), sp);
        });
    }
}

TEST(Compartmentalize, CompartmentEndsAreSuffixMinima) {
    for_each_signed(5, [&](const SignedPermutation& sp) {
        std::size_t pos = 0, negatives = 0;
        for (const auto& cyc : compartmentalize(sp).cycles) {
            pos += cyc.compartment.size();
            for (int e : cyc.compartment) negatives += e < 0;
            for (std::size_t k = pos; k < sp.size(); ++k) EXPECT_LT(std::abs(cyc.compartment.back()), sp.magnitude(k));
        }
        EXPECT_EQ(negatives, sp.negative_count());
    });
}

TEST(PermutationFromCycles, SingleFixedPoint) {
    CycleStructure cs;
    cs.cycles.push_back({{1}, {{1, 1, Sign::plus}}});
    EXPECT_EQ(permutation_from_cycles(cs), SignedPermutation({1}));
}

TEST(PermutationFromCycles, RejectsMalformed) {
    CycleStructure overlap;
    overlap.cycles.push_back({{1}, {{1, 1, Sign::plus}}});
    overlap.cycles.push_back({{1}, {{1, 1, Sign::minus}}});
    EXPECT_THROW(permutation_from_cycles(overlap), DomainError);

    CycleStructure gap;
    gap.cycles.push_back({{2}, {{2, 2, Sign::plus}}});
    EXPECT_THROW(permutation_from_cycles(gap), DomainError);
}

TEST(OddCycles, Examples) {
    EXPECT_EQ(odd_cycle_count({3, 1, -6, -7, -5, 2, -4}), 2u);
    EXPECT_EQ(odd_cycle_count({-1, -2}), 2u);
    EXPECT_EQ(odd_cycle_count({2, -3, -1}), 0u);
}

TEST(OddCycles, MatchesOracleUpTo6) {
    for (const auto& sp : oracle::all_signed(6)) EXPECT_EQ(odd_cycle_count(SignedPermutation(sp)), oracle::odd_cycles(sp));
}

TEST(Normal, Examples) {
    EXPECT_TRUE(is_normal({-3, -1, 5, 7, -2, 4, 6}));
    EXPECT_FALSE(is_normal({-3, 7, 1, -5, -4, 6, -2}));
    EXPECT_TRUE(is_normal({1}));
}

TEST(Enumeration, OrderAndCounts) {
    const auto one = enumerate_signed(1);
    ASSERT_EQ(one.size(), 2u);
    EXPECT_EQ(one[0], SignedPermutation({1}));
    EXPECT_EQ(one[1], SignedPermutation({-1}));
    const auto two = enumerate_signed(2);
    ASSERT_EQ(two.size(), 8u);
    EXPECT_EQ(two.front(), SignedPermutation({1, 2}));
    EXPECT_EQ(enumerate_signed(5).size(), 3840u);
}

TEST(Enumeration, SignedMatchesOracleOrder) {
    for (int n = 1; n <= 5; ++n) {
        const auto lib = enumerate_signed(static_cast<std::size_t>(n));
        const auto ref = oracle::all_signed(n);
        ASSERT_EQ(lib.size(), ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(entries(lib[i]), ref[i]);
        EXPECT_TRUE(std::is_sorted(lib.begin(), lib.end()));
    }
}

TEST(Enumeration, NormalIsFilterOfSigned) {
    const std::vector<SignedPermutation> expected2{{1, 2}, {-1, 2}, {1, -2}, {-1, -2}, {2, -1}, {-2, -1}};
    auto got2 = enumerate_normal(2);
    EXPECT_EQ(std::set<SignedPermutation>(got2.begin(), got2.end()),
              std::set<SignedPermutation>(expected2.begin(), expected2.end()));
    EXPECT_EQ(enumerate_normal(1).size(), 2u);
    for (int n = 1; n <= 6; ++n) {
        std::vector<SignedPermutation> filtered;
        for (const auto& sp : oracle::all_signed(n))
            if (oracle::normal(sp)) filtered.emplace_back(sp);
        EXPECT_EQ(enumerate_normal(static_cast<std::size_t>(n)), filtered);
        for (const auto& sp : enumerate_signed(static_cast<std::size_t>(n)))
            EXPECT_EQ(is_normal(sp), oracle::normal(entries(sp)));
    }
}

TEST(Enumeration, PrefixChunksPartitionTheStream) {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<SignedPermutation> chunked;
        for (const auto& prefix : magnitude_prefixes(n, 2))
            for_each_signed_with_prefix(n, std::span<const int>(prefix),
                                        [&](const SignedPermutation& sp) { chunked.push_back(sp); });
        EXPECT_EQ(chunked, enumerate_signed(n));
    }
}

TEST(Distribution, Examples) {
    EXPECT_EQ(odd_cycle_distribution_signed(2).to_string(), "{0:3,1:4,2:1}");
    EXPECT_EQ(odd_cycle_distribution_signed(1).to_string(), "{0:1,1:1}");
    EXPECT_EQ(odd_cycle_distribution_normal(2).to_string(), "{0:2,1:3,2:1}");
    // Oracle for the frozen n=2 values.
    std::vector<int> signed_counts(3, 0), normal_counts(3, 0);
    for (const auto& sp : oracle::all_signed(2)) {
        ++signed_counts[oracle::odd_cycles(sp)];
        if (oracle::normal(sp)) ++normal_counts[oracle::odd_cycles(sp)];
    }
    EXPECT_EQ(signed_counts, (std::vector<int>{3, 4, 1}));
    EXPECT_EQ(normal_counts, (std::vector<int>{2, 3, 1}));
}

TEST(Distribution, SignedMatchesACoeffAndTypeBUpTo7) {
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto d = odd_cycle_distribution_signed(n);
        for (std::size_t j = 0; j <= n; ++j) {
            EXPECT_EQ(d.at(j), a_coeff(n, j));
            EXPECT_EQ(abs(falling_odd_product(n).coeff(j)), a_coeff(n, j));
        }
    }
}
