#pragma once

// Data and byte-stable renderings of the reference tables: characteristic
// polynomials of the threshold arrangement (table 1), threshold pairs with
// their threshold permutations (tables 2 and 3), and labeled threshold
// graphs with their odd anchors (tables 2g and 3g).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "threshold_atlas/exactmath.hpp"
#include "threshold_atlas/threshold_bijections.hpp"
#include "threshold_atlas/threshold_graph.hpp"

namespace threshold_atlas {

enum class OutputFormat { text, csv, json };

/// "text", "csv" or "json"; DomainError otherwise.
OutputFormat parse_output_format(std::string_view name);

struct PolynomialRow {
    std::size_t n;
    Polynomial chi;
    Integer regions;
};

struct PairRow {
    ThresholdPair pair;
    ThresholdPermutation perm;
    std::size_t odd_cycles;
};

struct GraphRow {
    SignedPermutation construction;  // follows the vertex-1 convention
    LabeledGraph graph;
    std::size_t odd_anchors;
};

/// n = 2..10.
std::vector<PolynomialRow> polynomial_table();
/// Every threshold pair of size n, by odd-cycle count descending and then
/// enumeration order of the pair.
std::vector<PairRow> pair_table(std::size_t n);
/// Every labeled threshold graph on [n] with its conventional construction,
/// by odd-anchor count descending and then construction order.
std::vector<GraphRow> graph_table(std::size_t n);

/// which is one of "1", "2", "3", "2g", "3g"; DomainError otherwise.
std::string render_table(std::string_view which, OutputFormat fmt);

}  // namespace threshold_atlas
