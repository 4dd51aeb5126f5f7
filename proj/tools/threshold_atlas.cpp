// threshold_atlas: command-line front end.
//
// Exit codes: 0 success, 1 a verification or cross-check failed, 2 usage or
// parse error, 3 input outside the domain of the requested operation.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "threshold_atlas/arrangement.hpp"
#include "threshold_atlas/errors.hpp"
#include "threshold_atlas/kernels.hpp"
#include "threshold_atlas/partitions.hpp"
#include "threshold_atlas/tables.hpp"
#include "threshold_atlas/threshold_graph.hpp"
#include "threshold_atlas/verify.hpp"

namespace ta = threshold_atlas;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kDomain = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format = "text";
    int jobs = 0;
};

ta::OutputFormat output_format(const Globals& g) { return ta::parse_output_format(g.format); }

// ---------------------------------------------------------------- charpoly

struct CharpolyArgs {
    std::string family = "threshold";
    std::size_t n = 0;
    std::string method = "formula";
    bool cross_check = false;
    bool samples = false;
};

std::size_t finite_field_limit(const std::string& family) { return family == "threshold" ? 6 : 4; }

ta::Arrangement make_arrangement(const std::string& family, std::size_t n) {
    return family == "threshold" ? ta::Arrangement::threshold(n) : ta::Arrangement::type_b(n);
}

ta::Polynomial formula_charpoly(const std::string& family, std::size_t n) {
    return family == "threshold" ? ta::charpoly_threshold_formula(n) : ta::falling_odd_product(n);
}

void print_polynomial(std::size_t n, const ta::Polynomial& p, ta::OutputFormat fmt) {
    switch (fmt) {
        case ta::OutputFormat::text:
            std::cout << p.to_string() << '\n';
            break;
        case ta::OutputFormat::csv:
            std::cout << "power,coefficient\n";
            for (std::size_t i = 0; i < p.coeffs().size(); ++i) std::cout << i << ',' << p.coeffs()[i].get_str() << '\n';
            break;
        case ta::OutputFormat::json:
            std::cout << ta::polynomial_json(n, p) << '\n';
            break;
    }
}

int run_charpoly(const CharpolyArgs& a, const Globals& g) {
    if (a.n < 1 || a.n > 500) throw UsageError("--n must lie in 1..500");
    const bool needs_ff = a.method == "finitefield" || a.cross_check || a.samples;
    if (needs_ff && a.n > finite_field_limit(a.family))
        throw UsageError("finite field method supports n <= " + std::to_string(finite_field_limit(a.family)) +
                         " for family " + a.family);
    const auto fmt = output_format(g);
    const ta::Arrangement arr = make_arrangement(a.family, a.n);

    if (a.samples) {
        if (fmt == ta::OutputFormat::json) {
            nlohmann::ordered_json out = nlohmann::ordered_json::array();
            for (auto q : ta::interpolation_moduli(a.n)) {
                const auto s = ta::parallel::count_points(arr, q, ta::CountMethod::automatic, g.jobs);
                out.push_back({{"q", s.q}, {"count", s.count.get_ui()}});
            }
            std::cout << out.dump() << '\n';
        } else {
            std::cout << "q,count\n";
            for (auto q : ta::interpolation_moduli(a.n)) {
                const auto s = ta::parallel::count_points(arr, q, ta::CountMethod::automatic, g.jobs);
                std::cout << s.q << ',' << s.count.get_str() << '\n';
            }
        }
        return kOk;
    }

    std::optional<ta::Polynomial> by_formula, by_ff;
    if (a.method == "formula" || a.cross_check) by_formula = formula_charpoly(a.family, a.n);
    if (a.method == "finitefield" || a.cross_check)
        by_ff = ta::parallel::charpoly_finite_field(arr, ta::CountMethod::automatic, g.jobs);
    if (a.cross_check && *by_formula != *by_ff) {
        std::cerr << "cross-check failed: formula " << by_formula->to_string() << ", finite field "
                  << by_ff->to_string() << '\n';
        return kFailed;
    }
    print_polynomial(a.n, a.method == "formula" ? *by_formula : *by_ff, fmt);
    return kOk;
}

// ------------------------------------------------------------ distribution

int run_distribution(std::size_t n, const std::string& statistic, const Globals& g) {
    if (n < 2 || n > 9) throw UsageError("--n must lie in 2..9");
    const ta::DistributionTable table = statistic == "odd-cycles" ? ta::parallel::odd_cycles_threshold_mapped(n, g.jobs)
                                                                  : ta::parallel::odd_anchors(n, g.jobs);
    switch (output_format(g)) {
        case ta::OutputFormat::text:
            std::cout << table.to_string() << '\n';
            break;
        case ta::OutputFormat::csv:
            std::cout << "j,count\n";
            for (const auto& [j, c] : table.entries()) std::cout << j << ',' << c.get_str() << '\n';
            break;
        case ta::OutputFormat::json: {
            json entries = json::array();
            for (const auto& [j, c] : table.entries()) entries.push_back({j, c.get_ui()});
            nlohmann::ordered_json out = {{"n", n}, {"statistic", statistic}, {"entries", entries}};
            std::cout << out.dump() << '\n';
            break;
        }
    }
    return kOk;
}

// ------------------------------------------------------------------ verify

int run_verify(std::size_t max_n, const std::string& fault, const Globals& g) {
    if (max_n < 2 || max_n > 8) throw UsageError("--max-n must lie in 2..8");
    ta::VerifyOptions opts;
    opts.max_n = max_n;
    opts.jobs = g.jobs;
    if (fault == "pair-perm-sign") opts.pair_to_perm = ta::faulty_pair_to_threshold_perm;
    else if (!fault.empty()) throw UsageError("unknown fault '" + fault + "'");

    const auto results = ta::run_verification(opts);
    std::size_t failed = 0;
    for (const auto& r : results) failed += !r.passed;
    const auto fmt = output_format(g);
    if (fmt == ta::OutputFormat::json) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            nlohmann::ordered_json row = {{"check", r.name}, {"max_n", r.bound}, {"objects", r.objects}, {"passed", r.passed}};
            if (r.counterexample) row["counterexample"] = *r.counterexample;
            out.push_back(row);
        }
        std::cout << out.dump(2) << '\n';
    } else if (fmt == ta::OutputFormat::csv) {
        std::cout << "check,max_n,objects,status,counterexample\n";
        for (const auto& r : results)
            std::cout << r.name << ',' << r.bound << ',' << r.objects << ',' << (r.passed ? "pass" : "fail") << ",\""
                      << r.counterexample.value_or("") << "\"\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (n<=" << r.bound << ", " << r.objects
                      << " objects)";
            if (r.counterexample) std::cout << ": counterexample " << *r.counterexample;
            std::cout << '\n';
        }
        std::cout << results.size() - failed << '/' << results.size() << " checks passed\n";
    }
    return failed == 0 ? kOk : kFailed;
}

// --------------------------------------------------------------- bijection

std::string read_input(const std::string& input) {
    if (!input.empty()) return input;
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("cannot parse input: ") + e.what());
    }
}

ta::SignedPermutation parse_perm(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_array()) throw UsageError("expected a JSON array of nonzero integers");
    std::vector<int> entries;
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<long>() == 0 || std::labs(e.get<long>()) > 31)
            throw UsageError("expected a JSON array of nonzero integers");
        entries.push_back(e.get<int>());
    }
    return ta::SignedPermutation(std::move(entries));
}

ta::LabeledGraph parse_graph(const std::string& text) {
    parse_json(text);  // syntax errors are usage errors; schema errors are domain errors
    return ta::LabeledGraph::from_json(text);
}

ta::ThresholdPair as_pair(const ta::SignedPermutation& sp) { return ta::ThresholdPair(sp); }

struct BijectionArgs {
    std::string kind;
    bool inverse = false;
    std::string input;
    int b = 0;
};

int run_bijection(const BijectionArgs& a) {
    const std::string text = read_input(a.input);
    std::string out;
    if (a.kind == "pair-perm") {
        const auto sp = parse_perm(text);
        out = a.inverse ? ta::threshold_perm_to_pair(sp).perm().to_string()
                        : ta::pair_to_threshold_perm(as_pair(sp)).perm().to_string();
    } else if (a.kind == "perm-graph") {
        if (a.inverse) {
            const auto g = parse_graph(text);
            out = ta::pair_to_threshold_perm(ta::canonical_pair(g)).perm().to_string();
        } else {
            const auto pair = ta::threshold_perm_to_pair(parse_perm(text));
            out = ta::graph_from_construction(pair.perm()).to_json();
        }
    } else if (a.kind == "graph-pair") {
        out = a.inverse ? ta::graph_from_construction(as_pair(parse_perm(text)).perm()).to_json()
                        : ta::canonical_pair(parse_graph(text)).perm().to_string();
    } else if (a.kind == "lemma-bp") {
        // On the command line pi is written on its own labels [n] minus {b}.
        if (a.inverse) {
            const auto sp = ta::lemma_bijection_inverse(parse_perm(text));
            std::vector<int> pi(sp.pi.entries().begin(), sp.pi.entries().end());
            for (int& e : pi)
                if (std::abs(e) >= sp.b) e += e > 0 ? 1 : -1;
            out = "{\"b\":" + std::to_string(sp.b) + ",\"pi\":" + json(pi).dump() + "}";
        } else {
            if (a.b < 1) throw UsageError("lemma-bp needs --b with the special number");
            const json j = parse_json(text);
            if (!j.is_array()) throw UsageError("expected a JSON array of nonzero integers");
            std::vector<int> pi;
            for (const auto& e : j) {
                if (!e.is_number_integer() || e.get<long>() == 0 || std::labs(e.get<long>()) > 31)
                    throw UsageError("expected a JSON array of nonzero integers");
                const int v = e.get<int>();
                if (std::abs(v) == a.b) throw ta::DomainError("pi must not contain the special number b");
                pi.push_back(std::abs(v) > a.b ? v - (v > 0 ? 1 : -1) : v);
            }
            if (static_cast<std::size_t>(a.b) > pi.size() + 1)
                throw ta::DomainError("special number b must lie in 1.." + std::to_string(pi.size() + 1));
            const ta::SignedPermutation relabeled(std::move(pi));
            if (!ta::is_normal(relabeled)) throw ta::DomainError("pi must be a normal permutation");
            out = ta::lemma_bijection_forward({a.b, relabeled}).to_string();
        }
    } else {  // standardize
        if (a.inverse) throw UsageError("standardize has no inverse");
        const auto sp = parse_perm(text);
        if (sp.size() < 2) throw ta::DomainError("standardize needs at least two entries");
        out = ta::standardize(sp).perm().to_string();
    }
    std::cout << out << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Threshold arrangement atlas: characteristic polynomials, bijections and statistics"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    g.jobs = ta::default_jobs();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--jobs", g.jobs, "Worker threads (default: THRESHOLD_ATLAS_JOBS or all cores)")
        ->check(CLI::PositiveNumber);

    CharpolyArgs cp;
    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of an arrangement");
    charpoly->add_option("--family", cp.family)->check(CLI::IsMember({"threshold", "typeb"}));
    charpoly->add_option("--n", cp.n, "Dimension")->required();
    charpoly->add_option("--method", cp.method)->check(CLI::IsMember({"formula", "finitefield"}));
    charpoly->add_flag("--cross-check", cp.cross_check, "Compute both ways and require equality");
    charpoly->add_flag("--show-samples", cp.samples, "Print the finite field samples (q,count)");

    std::size_t dist_n = 0;
    std::string statistic;
    auto* distribution = app.add_subcommand("distribution", "Odd-cycle or odd-anchor histogram for size n");
    distribution->add_option("--n", dist_n)->required();
    distribution->add_option("--statistic", statistic)
        ->required()
        ->check(CLI::IsMember({"odd-cycles", "odd-anchors"}));

    std::string which;
    auto* table = app.add_subcommand("table", "Render a reference table");
    table->add_option("--which", which)->required()->check(CLI::IsMember({"1", "2", "3", "2g", "3g"}));

    std::size_t max_n = 8;
    std::string fault;
    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("--max-n", max_n);
    verify->add_option("--inject-fault", fault)->group("");

    BijectionArgs bj;
    auto* bijection = app.add_subcommand("bijection", "Apply one of the bijections to a serialized object");
    bijection->add_option("--kind", bj.kind)
        ->required()
        ->check(CLI::IsMember({"pair-perm", "perm-graph", "graph-pair", "lemma-bp", "standardize"}));
    bijection->add_flag("--inverse", bj.inverse);
    bijection->add_option("--b", bj.b, "Special number for lemma-bp");
    bijection->add_option("input", bj.input, "JSON input (read from stdin when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*charpoly) return run_charpoly(cp, g);
        if (*distribution) return run_distribution(dist_n, statistic, g);
        if (*table) {
            std::cout << ta::render_table(which, output_format(g));
            return kOk;
        }
        if (*verify) return run_verify(max_n, fault, g);
        if (*bijection) return run_bijection(bj);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ta::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
