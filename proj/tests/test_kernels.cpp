#include <gtest/gtest.h>

#include <cstdlib>

#include "threshold_atlas/arrangement.hpp"
#include "threshold_atlas/kernels.hpp"

using namespace threshold_atlas;

class KernelAgreement : public ::testing::TestWithParam<int> {};

TEST_P(KernelAgreement, SerialEqualsParallel) {
    const int jobs = GetParam();
    for (std::size_t n = 2; n <= 7; ++n) {
        EXPECT_EQ(serial::odd_cycles_signed(n), parallel::odd_cycles_signed(n, jobs));
        EXPECT_EQ(serial::odd_cycles_normal(n), parallel::odd_cycles_normal(n, jobs));
        EXPECT_EQ(serial::odd_cycles_threshold_mapped(n), parallel::odd_cycles_threshold_mapped(n, jobs));
        EXPECT_EQ(serial::odd_cycles_threshold_filtered(n), parallel::odd_cycles_threshold_filtered(n, jobs));
        EXPECT_EQ(serial::odd_anchors(n), parallel::odd_anchors(n, jobs));
        EXPECT_EQ(serial::threshold_pair_count(n), parallel::threshold_pair_count(n, jobs));
    }
    for (std::size_t n = 1; n <= 4; ++n)
        for (auto m : {CountMethod::brute_force, CountMethod::pruned}) {
            EXPECT_EQ(serial::count_points(Arrangement::threshold(n), 13, m),
                      parallel::count_points(Arrangement::threshold(n), 13, m, jobs));
            EXPECT_EQ(serial::count_points(Arrangement::type_b(n), 11, m),
                      parallel::count_points(Arrangement::type_b(n), 11, m, jobs));
        }
    EXPECT_EQ(parallel::charpoly_finite_field(Arrangement::threshold(5), CountMethod::automatic, jobs),
              charpoly_threshold_formula(5));
}

INSTANTIATE_TEST_SUITE_P(Jobs, KernelAgreement, ::testing::Values(1, 2, 4));

TEST(Kernels, ThresholdOddCyclesMatchCoefficientsUpTo8) {
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto want = DistributionTable::from_abs_coefficients("odd-cycles", charpoly_threshold_formula(n));
        EXPECT_EQ(parallel::odd_cycles_threshold_mapped(n, 2), want);
    }
    EXPECT_EQ(parallel::odd_cycles_threshold_mapped(8, 2).total(), 334982);
}

TEST(Kernels, DefaultJobsReadsEnvironment) {
    ::setenv("THRESHOLD_ATLAS_JOBS", "3", 1);
    EXPECT_EQ(default_jobs(), 3);
    ::setenv("THRESHOLD_ATLAS_JOBS", "zero", 1);
    EXPECT_GE(default_jobs(), 1);
    ::unsetenv("THRESHOLD_ATLAS_JOBS");
    EXPECT_GE(default_jobs(), 1);
}
