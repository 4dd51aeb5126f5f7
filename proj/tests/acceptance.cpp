// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
// Usage: acceptance [path-to-threshold_atlas-cli]

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "threshold_atlas/arrangement.hpp"
#include "threshold_atlas/errors.hpp"
#include "threshold_atlas/exactmath.hpp"
#include "threshold_atlas/kernels.hpp"
#include "threshold_atlas/partitions.hpp"
#include "threshold_atlas/tables.hpp"
#include "threshold_atlas/threshold_bijections.hpp"
#include "threshold_atlas/threshold_graph.hpp"

#ifndef THRESHOLD_ATLAS_CLI_PATH
#define THRESHOLD_ATLAS_CLI_PATH "threshold_atlas"
#endif

using namespace threshold_atlas;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void(Outcome&)> body;
};

Polynomial poly(const std::vector<long>& cs) { return Polynomial(std::vector<Integer>(cs.begin(), cs.end())); }

std::string show(const DistributionTable& d) { return d.to_string(); }

std::string text_of(const SignedPermutation& sp) { return sp.to_signed_string(); }

void table_one(Outcome& out) {
    struct Row {
        std::size_t n;
        std::vector<long> coeffs;
        long regions;
    };
    const std::vector<Row> rows{
        {2, {0, -1, 1}, 2},
        {3, {-1, 3, -3, 1}, 8},
        {4, {7, -17, 15, -6, 1}, 46},
        {5, {-51, 120, -105, 45, -10, 1}, 332},
        {6, {431, -1012, 900, -410, 105, -15, 1}, 2874},
        {7, {-4208, 9961, -9058, 4340, -1225, 210, -21, 1}, 29024},
        {8, {46824, -112163, 104433, -52234, 15855, -3066, 378, -28, 1}, 334982},
        {9, {-586141, 1422483, -1355427, 703815, -226380, 47817, -6762, 630, -36, 1}, 4349492},
        {10, {8161237, -20068391, 19546335, -10491450, 3541125, -801507, 125265, -13560, 990, -45, 1}, 62749906},
    };
    for (const auto& r : rows) {
        const auto chi = charpoly_threshold_formula(r.n);
        if (chi != poly(r.coeffs)) out.fail("polynomial n=" + std::to_string(r.n) + " got " + chi.to_string());
        if (region_count(chi) != r.regions) out.fail("regions n=" + std::to_string(r.n));
    }
}

void finite_field(Outcome& out) {
    const int jobs = default_jobs();
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto got = parallel::charpoly_finite_field(Arrangement::threshold(n), CountMethod::automatic, jobs);
        if (got != charpoly_threshold_formula(n)) out.fail("threshold n=" + std::to_string(n) + " got " + got.to_string());
    }
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<long long> shifts;
        for (std::size_t k = 1; k <= n; ++k) shifts.push_back(-static_cast<long long>(2 * k - 1));
        const auto ref = oracle::product_of_linear(shifts);
        std::vector<Integer> coeffs;
        for (long long c : ref) coeffs.emplace_back(static_cast<long>(c));
        const Polynomial expected(coeffs);
        const auto got = parallel::charpoly_finite_field(Arrangement::type_b(n), CountMethod::automatic, jobs);
        if (got != expected) out.fail("type B n=" + std::to_string(n) + " got " + got.to_string());
    }
}

void odd_cycle_theorem(Outcome& out) {
    const int jobs = default_jobs();
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto want = DistributionTable::from_abs_coefficients("odd-cycles", charpoly_threshold_formula(n));
        const auto filtered = parallel::odd_cycles_threshold_filtered(n, jobs);
        const auto mapped = parallel::odd_cycles_threshold_mapped(n, jobs);
        if (!(filtered == want)) out.fail("n=" + std::to_string(n) + " enumerated " + show(filtered));
        if (!(mapped == want)) out.fail("n=" + std::to_string(n) + " mapped " + show(mapped));
        if (n == 8 && filtered.total() != 334982) out.fail("n=8 total " + filtered.total().get_str());
    }
}

void odd_anchor_theorem(Outcome& out) {
    const int jobs = default_jobs();
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto want = DistributionTable::from_abs_coefficients("odd-anchors", charpoly_threshold_formula(n));
        const auto got = n <= 6 ? odd_anchor_distribution(n) : parallel::odd_anchors(n, jobs);
        if (!(got == want)) out.fail("n=" + std::to_string(n) + " got " + show(got));
    }
    using Row = std::tuple<std::string, std::set<std::pair<int, int>>, std::size_t>;
    const std::set<Row> t2g{
        {"+1 -2", {}, 2},
        {"+1 +2", {{1, 2}}, 1},
    };
    const std::set<Row> t3g{
        {"+1 -2 +3", {{1, 3}, {2, 3}}, 3},
        {"+1 +3 -2", {{1, 3}}, 2},
        {"+1 +2 -3", {{1, 2}}, 2},
        {"+1 -2 -3", {}, 2},
        {"+1 +2 +3", {{1, 2}, {1, 3}, {2, 3}}, 1},
        {"+1 -3 +2", {{1, 2}, {2, 3}}, 1},
        {"-2 -3 +1", {{1, 2}, {1, 3}}, 1},
        {"+2 +3 -1", {{2, 3}}, 0},
    };
    for (const auto& [n, want] : {std::pair{std::size_t{2}, t2g}, std::pair{std::size_t{3}, t3g}}) {
        std::set<Row> got;
        std::size_t rows = 0;
        for (const auto& r : graph_table(n)) {
            const auto e = r.graph.edges();
            got.emplace(text_of(r.construction), std::set<std::pair<int, int>>(e.begin(), e.end()), r.odd_anchors);
            ++rows;
        }
        if (got != want || rows != want.size()) out.fail("table of graphs on " + std::to_string(n) + " vertices differs");
    }
    using PairRow = std::tuple<std::string, std::string, std::size_t>;
    const std::set<PairRow> t2{{"-1 -2", "-1 -2", 2}, {"+1 +2", "-1 +2", 1}};
    const std::set<PairRow> t3{
        {"-1 -2 +3", "-1 -2 -3", 3}, {"+1 +2 -3", "-1 +2 -3", 2}, {"+1 +3 -2", "-1 +3 -2", 2},
        {"-1 -2 -3", "-1 -2 +3", 2}, {"-1 -3 +2", "-1 -3 -2", 1}, {"-2 -3 +1", "-2 -3 -1", 1},
        {"+1 +2 +3", "-1 +2 +3", 1}, {"+2 +3 -1", "+2 -3 -1", 0},
    };
    for (const auto& [n, want] : {std::pair{std::size_t{2}, t2}, std::pair{std::size_t{3}, t3}}) {
        std::set<PairRow> got;
        std::size_t rows = 0;
        for (const auto& r : pair_table(n)) {
            got.emplace(text_of(r.pair.perm()), text_of(r.perm.perm()), r.odd_cycles);
            ++rows;
        }
        if (got != want || rows != want.size()) out.fail("table of pairs of size " + std::to_string(n) + " differs");
    }
}

void invariance(Outcome& out) {
    const auto report = odd_anchor_invariance_scan(6);
    if (report.constructions_scanned != 46080) out.fail("scanned " + std::to_string(report.constructions_scanned));
    if (report.graphs != 2874) out.fail("graphs " + std::to_string(report.graphs));
    if (report.counterexample)
        out.fail("disagreeing constructions " + text_of(report.counterexample->first) + " and " +
                 text_of(report.counterexample->second));
}

void a_coefficients(Outcome& out) {
    for (int n = 1; n <= 7; ++n) {
        const auto un = static_cast<std::size_t>(n);
        std::vector<long> enumerated(un + 1, 0);
        for (const auto& sp : oracle::all_signed(n)) ++enumerated[oracle::odd_cycles(sp)];
        Integer sum = 0;
        for (std::size_t j = 0; j <= un; ++j) {
            Integer formula = 0;
            for (std::size_t i = j; i <= un; ++i)
                formula += stirling1_unsigned(un, i) * binomial(i, j) * power_of_two(un - i);
            const Integer rec = a_coeff(un, j);
            if (rec != formula || rec != enumerated[j] || rising_odd_product(un).coeff(j) != rec)
                out.fail("a(" + std::to_string(n) + "," + std::to_string(j) + ")");
            sum += rec;
        }
        if (sum != power_of_two(un) * factorial(un)) out.fail("row sum n=" + std::to_string(n));
    }
}

void normal_and_involution(Outcome& out) {
    for (int n = 1; n <= 7; ++n) {
        std::vector<long> counts(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& sp : oracle::all_signed(n))
            if (oracle::normal(sp)) ++counts[oracle::odd_cycles(sp)];
        for (std::size_t j = 0; j < counts.size(); ++j)
            if (normal_count_formula(static_cast<std::size_t>(n), j) != counts[j])
                out.fail("N(" + std::to_string(n) + "," + std::to_string(j) + ")");
    }
    std::size_t at_five = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& r : enumerate_representations(n)) {
            if (n == 5) ++at_five;
            bool threw = false;
            Representation s;
            try {
                s = involution(r);
            } catch (const DomainError&) {
                threw = true;
            }
            if (threw != is_standard(r)) {
                out.fail("fixed point mismatch at " + r.to_string());
                continue;
            }
            if (threw) continue;
            const bool parity_flips = (s.part_count() + r.part_count()) % 2 == 1;
            if (involution(s) != r || !parity_flips || rep_odd_cycle_count(s) != rep_odd_cycle_count(r) ||
                underlying_partition(s) != underlying_partition(r))
                out.fail("involution fails at " + r.to_string());
        }
    }
    if (at_five != 9002) out.fail("representations at n=5: " + std::to_string(at_five));
}

void special_pairs(Outcome& out) {
    for (int n = 2; n <= 6; ++n) {
        std::set<oracle::Perm> expected;
        for (const auto& sp : oracle::all_signed(n))
            if (oracle::normal(sp) && !oracle::threshold_perm(sp)) expected.insert(sp);
        std::set<oracle::Perm> image;
        for (const auto& p : enumerate_special_pairs(static_cast<std::size_t>(n))) {
            const auto f = lemma_bijection_forward(p);
            const oracle::Perm e(f.entries().begin(), f.entries().end());
            if (!image.insert(e).second) out.fail("not injective at " + text_of(f));
            if (odd_cycle_count(f) != odd_cycle_count(p.pi)) out.fail("odd cycles change at " + text_of(f));
            if (!(lemma_bijection_inverse(f) == p)) out.fail("inverse fails at " + text_of(f));
        }
        if (image != expected) out.fail("image differs from normal non-threshold permutations at n=" + std::to_string(n));
    }
}

void region_dictionary(Outcome& out) {
    for (std::size_t n = 2; n <= 7; ++n)
        for_each_threshold_pair(n, [&](const SignedPermutation& sp) {
            const auto tp = ThresholdPair::unchecked(sp);
            if (!edge_rule_check(tp)) out.fail("edge rule fails at " + text_of(sp));
            if (!(canonical_pair(graph_from_construction(sp)) == tp)) out.fail("dictionary fails at " + text_of(sp));
        });
}

void identities(Outcome& out) {
    for (std::size_t n = 2; n <= 15; ++n) {
        const auto [first, second] = region_count_identities(n);
        const Integer zaslavsky = abs(poly_eval(charpoly_threshold_formula(n), Integer(-1)));
        if (first != second || first != zaslavsky) out.fail("n=" + std::to_string(n));
    }
}

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run(const std::string& command) {
    RunResult r;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

void cli(Outcome& out, const std::string& exe) {
    const auto verify = run("'" + exe + "' verify --max-n 8 2>&1");
    if (verify.status != 0) out.fail("verify exited " + std::to_string(verify.status));
    for (const char* which : {"1", "2", "3", "2g", "3g"})
        for (const char* fmt : {"text", "csv", "json"}) {
            const std::string cmd = "'" + exe + "' --format " + fmt + " table --which " + which;
            const auto a = run(cmd), b = run(cmd);
            if (a.status != 0 || b.status != 0 || a.output.empty() || a.output != b.output)
                out.fail(std::string("table ") + which + " " + fmt + " not byte-stable");
        }
}

}  // namespace

int main(int argc, char** argv) {
    const std::string exe = argc > 1 ? argv[1] : THRESHOLD_ATLAS_CLI_PATH;
    const std::vector<Criterion> criteria{
        {"characteristic polynomials and region counts, n=2..10", 1, table_one},
        {"finite-field characteristic polynomials", 120, finite_field},
        {"odd-cycle distribution of threshold permutations, n=2..8", 60, odd_cycle_theorem},
        {"odd-anchor distribution and graph/pair tables", 120, odd_anchor_theorem},
        {"odd-anchor invariance over 46080 constructions", 10, invariance},
        {"a(n,j) formula, recurrence and enumeration, n<=7", 30, a_coefficients},
        {"N(n,j) and the sign-reversing involution", 30, normal_and_involution},
        {"(b,pi) bijection, n<=6", 30, special_pairs},
        {"region dictionary, n<=7", 60, region_dictionary},
        {"region-count identities, n<=15", 1, identities},
        {"cli verify and byte-stable tables", 300, [&](Outcome& o) { cli(o, exe); }},
    };

    std::size_t passed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds) o.fail("over time budget");
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (o.ok ? "PASS " : "FAIL ") << c.name << " (" << secs << " s, budget " << c.budget_seconds << " s)";
        if (!o.ok) line << ": " << o.detail;
        std::cout << line.str() << std::endl;
        passed += o.ok;
    }
    std::cout << passed << "/" << criteria.size() << " criteria passed" << std::endl;
    return passed == criteria.size() ? 0 : 1;
}
