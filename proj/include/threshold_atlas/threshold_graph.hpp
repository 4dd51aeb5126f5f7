#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "threshold_atlas/distribution.hpp"
#include "threshold_atlas/threshold_bijections.hpp"

namespace threshold_atlas {

/// Simple graph on the labeled vertex set [n], n < 32. Equality is equality
/// of edge sets; there is no isomorphism quotient.
class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(std::size_t n);
    LabeledGraph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

    std::size_t size() const { return adj_.size(); }
    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;
    /// Bit (v-1) set for each neighbour v of vertex i.
    std::uint32_t neighbours(int i) const { return adj_[static_cast<std::size_t>(i - 1)]; }
    std::size_t edge_count() const;
    /// Pairs (i, j) with i < j, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    /// {"n": 3, "edges": [[1,2],[1,3]]}
    std::string to_json() const;
    /// Throws DomainError on schema violations.
    static LabeledGraph from_json(std::string_view text);

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

private:
    std::vector<std::uint32_t> adj_;
};

/// Vertex pi_i joins adjacent to every earlier vertex when its sign is +
/// (dominant) and isolated when it is - (recessive).
LabeledGraph graph_from_construction(const SignedPermutation& order);

struct PeelStep {
    int vertex;
    bool universal;  // otherwise isolated
};

/// Repeatedly removes an isolated or universal vertex, preferring the
/// largest label and isolated over universal on ties. nullopt when the
/// graph gets stuck (it is not a threshold graph).
std::optional<std::vector<PeelStep>> threshold_peel(const LabeledGraph& g);

bool is_threshold_graph(const LabeledGraph& g);

/// The unique threshold pair whose construction gives g. DomainError when g
/// is not a threshold graph or has fewer than two vertices.
ThresholdPair canonical_pair(const LabeledGraph& g);

/// The construction of tp that follows the vertex-1 convention: if 1 lies
/// in the first block it is moved to the front and marked dominant.
SignedPermutation conventional_construction(const ThresholdPair& tp);

/// Empty when the construction follows the vertex-1 convention; otherwise
/// a message naming the violated clause.
std::optional<std::string> convention_violation(const SignedPermutation& order);

struct Anchor {
    int label;
    bool dominant;
    bool odd;
};

struct AnchorReport {
    std::vector<Anchor> anchors;  // by position in the construction
};

/// Anchors are the suffix minima of the construction. The first anchor
/// (vertex 1) is odd iff dominant; every later anchor is odd iff its type
/// differs from the previous anchor's. Throws ConventionError when `order`
/// does not follow the vertex-1 convention.
AnchorReport anchors(const SignedPermutation& order);
std::size_t odd_anchor_count(const SignedPermutation& order);

namespace detail {
// Same count without the convention check.
std::size_t odd_anchor_count_unchecked(const SignedPermutation& order);
}  // namespace detail

/// Every convention-following signed permutation whose construction is g.
/// Scans all 2^n n! orders; for small n only.
std::vector<SignedPermutation> all_constructions(const LabeledGraph& g);

/// Serial reference: histogram of odd anchors over all labeled threshold
/// graphs on [n], one conventional construction per graph.
DistributionTable odd_anchor_distribution(std::size_t n);

/// Result of scanning every signed permutation of [n] as a construction.
struct InvarianceReport {
    std::size_t constructions_scanned = 0;
    std::size_t conventional_constructions = 0;
    std::size_t graphs = 0;
    // A graph with two conventional constructions that disagree, if any.
    std::optional<std::pair<SignedPermutation, SignedPermutation>> counterexample;
};

/// Groups all 2^n n! constructions by resulting graph and checks that the
/// convention-following ones agree on the odd-anchor count. n <= 6.
InvarianceReport odd_anchor_invariance_scan(std::size_t n);

}  // namespace threshold_atlas
