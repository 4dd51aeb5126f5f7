#include "threshold_atlas/threshold_graph.hpp"

#include <bit>
#include <map>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "threshold_atlas/errors.hpp"

namespace threshold_atlas {

LabeledGraph::LabeledGraph(std::size_t n) : adj_(n, 0U) {
    if (n >= 32) throw DomainError("graph: at most 31 vertices supported");
}

LabeledGraph::LabeledGraph(std::size_t n, const std::vector<std::pair<int, int>>& edges) : LabeledGraph(n) {
    for (const auto& [i, j] : edges) add_edge(i, j);
}

void LabeledGraph::add_edge(int i, int j) {
    const int n = static_cast<int>(adj_.size());
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw DomainError("graph: invalid edge {" + std::to_string(i) + "," + std::to_string(j) + "} on " +
                          std::to_string(n) + " vertices");
    adj_[static_cast<std::size_t>(i - 1)] |= 1U << (j - 1);
    adj_[static_cast<std::size_t>(j - 1)] |= 1U << (i - 1);
}

bool LabeledGraph::has_edge(int i, int j) const { return (adj_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1U; }

std::size_t LabeledGraph::edge_count() const {
    std::size_t twice = 0;
    for (auto a : adj_) twice += static_cast<std::size_t>(std::popcount(a));
    return twice / 2;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(adj_.size());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

std::string LabeledGraph::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = adj_.size();
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : edges()) j["edges"].push_back({a, b});
    return j.dump();
}

LabeledGraph LabeledGraph::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw DomainError("graph JSON: expected an object with integer field \"n\"");
    const auto n = j["n"].get<long>();
    if (n < 0 || n >= 32) throw DomainError("graph JSON: n out of range");
    LabeledGraph g(static_cast<std::size_t>(n));
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw DomainError("graph JSON: \"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw DomainError("graph JSON: each edge must be a pair of integers");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
    }
    return g;
}

LabeledGraph graph_from_construction(const SignedPermutation& order) {
    LabeledGraph g(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order.negative(i)) continue;
        for (std::size_t k = 0; k < i; ++k) g.add_edge(order.magnitude(i), order.magnitude(k));
    }
    return g;
}

std::optional<std::vector<PeelStep>> threshold_peel(const LabeledGraph& g) {
    const int n = static_cast<int>(g.size());
    std::uint32_t remaining = n == 0 ? 0U : ((n >= 32 ? 0U : (1U << n)) - 1U);
    std::vector<PeelStep> steps;
    steps.reserve(static_cast<std::size_t>(n));
    while (remaining != 0) {
        const int alive = std::popcount(remaining);
        std::optional<PeelStep> pick;
        for (int v = n; v >= 1 && !pick; --v) {
            if (!((remaining >> (v - 1)) & 1U)) continue;
            const int deg = std::popcount(g.neighbours(v) & remaining);
            if (deg == 0)
                pick = PeelStep{v, false};
            else if (deg == alive - 1)
                pick = PeelStep{v, true};
        }
        if (!pick) return std::nullopt;
        steps.push_back(*pick);
        remaining &= ~(1U << (pick->vertex - 1));
    }
    return steps;
}

bool is_threshold_graph(const LabeledGraph& g) { return threshold_peel(g).has_value(); }

ThresholdPair canonical_pair(const LabeledGraph& g) {
    if (g.size() < 2) throw DomainError("canonical_pair: need at least 2 vertices");
    auto steps = threshold_peel(g);
    if (!steps) throw DomainError("canonical_pair: graph " + g.to_json() + " is not a threshold graph");
    // The peel is a construction read backwards.
    std::vector<int> order;
    order.reserve(steps->size());
    for (auto it = steps->rbegin(); it != steps->rend(); ++it) order.push_back(it->universal ? it->vertex : -it->vertex);
    return standardize(SignedPermutation::unchecked(std::move(order)));
}

namespace {

// True iff vertex 1 lies in the leading constant-sign run of a standard-form pair.
bool one_in_first_block(const SignedPermutation& pair) {
    for (std::size_t i = 0; i < pair.size(); ++i) {
        if (i > 0 && pair.sign(i) != pair.sign(0)) return false;
        if (pair.magnitude(i) == 1) return true;
    }
    return false;
}

}  // namespace

SignedPermutation conventional_construction(const ThresholdPair& tp) {
    const SignedPermutation& sp = tp.perm();
    if (!one_in_first_block(sp)) return sp;
    std::vector<int> out;
    out.reserve(sp.size());
    out.push_back(1);
    for (std::size_t i = 0; i < sp.size(); ++i)
        if (sp.magnitude(i) != 1) out.push_back(sp[i]);
    return SignedPermutation::unchecked(std::move(out));
}

std::optional<std::string> convention_violation(const SignedPermutation& order) {
    if (order.empty()) return std::nullopt;
    bool one_first_block = true;
    if (order.size() >= 2) one_first_block = one_in_first_block(standardize(order).perm());
    if (!one_first_block) return std::nullopt;
    if (order.magnitude(0) != 1)
        return "vertex 1 lies in the first block but is not the first vertex added";
    if (order.negative(0)) return "vertex 1 is added first but is not marked dominant";
    return std::nullopt;
}

namespace detail {

std::size_t odd_anchor_count_unchecked(const SignedPermutation& order) {
    // Collect anchors right to left, then compare types left to right.
    const std::size_t n = order.size();
    int suffix_min = static_cast<int>(n) + 1;
    std::uint32_t anchor_positions = 0;
    for (std::size_t i = n; i-- > 0;) {
        if (order.magnitude(i) < suffix_min) {
            suffix_min = order.magnitude(i);
            anchor_positions |= 1U << i;
        }
    }
    std::size_t odd = 0;
    bool have_prev = false;
    bool prev_dominant = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!((anchor_positions >> i) & 1U)) continue;
        const bool dominant = !order.negative(i);
        if (have_prev ? dominant != prev_dominant : dominant) ++odd;
        have_prev = true;
        prev_dominant = dominant;
    }
    return odd;
}

}  // namespace detail

AnchorReport anchors(const SignedPermutation& order) {
    if (auto why = convention_violation(order)) throw ConventionError("construction " + order.to_string() + ": " + *why);
    const std::size_t n = order.size();
    std::vector<bool> is_anchor(n, false);
    int suffix_min = static_cast<int>(n) + 1;
    for (std::size_t i = n; i-- > 0;) {
        if (order.magnitude(i) < suffix_min) {
            suffix_min = order.magnitude(i);
            is_anchor[i] = true;
        }
    }
    AnchorReport report;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_anchor[i]) continue;
        const bool dominant = !order.negative(i);
        const bool odd = report.anchors.empty() ? dominant : dominant != report.anchors.back().dominant;
        report.anchors.push_back({order.magnitude(i), dominant, odd});
    }
    return report;
}

std::size_t odd_anchor_count(const SignedPermutation& order) {
    const AnchorReport r = anchors(order);
    return static_cast<std::size_t>(std::count_if(r.anchors.begin(), r.anchors.end(), [](const Anchor& a) { return a.odd; }));
}

std::vector<SignedPermutation> all_constructions(const LabeledGraph& g) {
    const std::size_t n = g.size();
    std::vector<SignedPermutation> out;
    if (n == 0) return out;
    const bool one_first = n < 2 || one_in_first_block(canonical_pair(g).perm());
    for_each_signed(n, [&](const SignedPermutation& sp) {
        if (one_first && sp[0] != 1) return;
        if (graph_from_construction(sp) == g) out.push_back(sp);
    });
    return out;
}

DistributionTable odd_anchor_distribution(std::size_t n) {
    std::vector<std::uint64_t> counts(n + 1, 0);
    for_each_threshold_pair(n, [&](const SignedPermutation& sp) {
        const SignedPermutation c = conventional_construction(ThresholdPair::unchecked(sp));
        ++counts[detail::odd_anchor_count_unchecked(c)];
    });
    return DistributionTable::from_counts("odd-anchors", n, counts);
}

namespace {

std::uint64_t edge_key(const LabeledGraph& g) {
    std::uint64_t key = 0;
    std::size_t bit = 0;
    const int n = static_cast<int>(g.size());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++bit)
            if (g.has_edge(i, j)) key |= std::uint64_t{1} << bit;
    return key;
}

}  // namespace

InvarianceReport odd_anchor_invariance_scan(std::size_t n) {
    if (n < 2 || n > 8) throw DomainError("odd_anchor_invariance_scan: need 2 <= n <= 8");
    struct Seen {
        bool one_first_block;
        std::optional<std::size_t> count;
        SignedPermutation witness;
    };
    std::unordered_map<std::uint64_t, Seen> by_graph;
    InvarianceReport report;
    for_each_signed(n, [&](const SignedPermutation& sp) {
        ++report.constructions_scanned;
        const LabeledGraph g = graph_from_construction(sp);
        auto [it, inserted] = by_graph.try_emplace(edge_key(g));
        if (inserted) it->second.one_first_block = one_in_first_block(canonical_pair(g).perm());
        Seen& seen = it->second;
        if (seen.one_first_block && sp[0] != 1) return;
        ++report.conventional_constructions;
        const std::size_t odd = detail::odd_anchor_count_unchecked(sp);
        if (!seen.count) {
            seen.count = odd;
            seen.witness = sp;
        } else if (*seen.count != odd && !report.counterexample) {
            report.counterexample = std::make_pair(seen.witness, sp);
        }
    });
    report.graphs = by_graph.size();
    return report;
}

}  // namespace threshold_atlas
