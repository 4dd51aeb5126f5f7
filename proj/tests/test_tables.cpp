#include <gtest/gtest.h>

#include "threshold_atlas/errors.hpp"
#include "threshold_atlas/tables.hpp"
#include "threshold_atlas/verify.hpp"

using namespace threshold_atlas;

namespace {

std::vector<std::string> pair_rows(std::size_t n) {
    std::vector<std::string> out;
    for (const auto& r : pair_table(n))
        out.push_back(r.pair.perm().to_string() + " " + r.perm.perm().to_string() + " " + std::to_string(r.odd_cycles));
    return out;
}

std::vector<std::string> graph_rows(std::size_t n) {
    std::vector<std::string> out;
    for (const auto& r : graph_table(n)) out.push_back(r.construction.to_string() + " " + std::to_string(r.odd_anchors));
    return out;
}

}  // namespace

TEST(Tables, PolynomialTable) {
    const auto rows = polynomial_table();
    ASSERT_EQ(rows.size(), 9u);
    EXPECT_EQ(rows.front().n, 2u);
    EXPECT_EQ(rows.back().regions, 62749906);
}

TEST(Tables, PairTables) {
    EXPECT_EQ(pair_rows(2), (std::vector<std::string>{"[-1,-2] [-1,-2] 2", "[1,2] [-1,2] 1"}));
    const std::vector<std::string> t3{
        "[-1,-2,3] [-1,-2,-3] 3", "[1,2,-3] [-1,2,-3] 2", "[-1,-2,-3] [-1,-2,3] 2", "[1,3,-2] [-1,3,-2] 2",
        "[1,2,3] [-1,2,3] 1",     "[-1,-3,2] [-1,-3,-2] 1", "[-2,-3,1] [-2,-3,-1] 1", "[2,3,-1] [2,-3,-1] 0",
    };
    EXPECT_EQ(pair_rows(3), t3);
}

TEST(Tables, GraphTables) {
    EXPECT_EQ(graph_rows(2), (std::vector<std::string>{"[1,-2] 2", "[1,2] 1"}));
    const auto g3 = graph_table(3);
    std::vector<std::size_t> column;
    for (const auto& r : g3) column.push_back(r.odd_anchors);
    EXPECT_EQ(column, (std::vector<std::size_t>{3, 2, 2, 2, 1, 1, 1, 0}));
}

TEST(Tables, RenderingIsStableAndValidated) {
    for (const char* w : {"1", "2", "3", "2g", "3g"})
        for (auto f : {OutputFormat::text, OutputFormat::csv, OutputFormat::json}) {
            const auto a = render_table(w, f);
            EXPECT_EQ(a, render_table(w, f));
            EXPECT_EQ(a.back(), '\n');
            EXPECT_EQ(a.find('\r'), std::string::npos);
        }
    EXPECT_THROW(render_table("4", OutputFormat::text), DomainError);
    EXPECT_THROW(parse_output_format("xml"), DomainError);
    EXPECT_NE(render_table("2", OutputFormat::csv).find("\"-1 -2\",\"-1 -2\",2"), std::string::npos);
}

TEST(Verify, PassesAndCatchesInjectedFault) {
    for (std::size_t m : {2u, 4u}) {
        const auto results = run_verification({m, 2, {}});
        EXPECT_GE(results.size(), 12u);
        for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample.value_or("");
    }
    VerifyOptions broken{4, 1, faulty_pair_to_threshold_perm};
    std::size_t failures = 0;
    for (const auto& r : run_verification(broken)) {
        if (r.passed) continue;
        ++failures;
        EXPECT_TRUE(r.counterexample.has_value());
    }
    EXPECT_GE(failures, 1u);
    EXPECT_THROW(run_verification({1, 1, {}}), DomainError);
    EXPECT_THROW(run_verification({9, 1, {}}), DomainError);
}
