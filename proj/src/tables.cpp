#include "threshold_atlas/tables.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "threshold_atlas/arrangement.hpp"
#include "threshold_atlas/errors.hpp"

namespace threshold_atlas {

OutputFormat parse_output_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw DomainError("unknown output format '" + std::string(name) + "'");
}

std::vector<PolynomialRow> polynomial_table() {
    std::vector<PolynomialRow> rows;
    for (std::size_t n = 2; n <= 10; ++n) {
        Polynomial chi = charpoly_threshold_formula(n);
        Integer r = region_count(chi);
        rows.push_back({n, std::move(chi), std::move(r)});
    }
    return rows;
}

std::vector<PairRow> pair_table(std::size_t n) {
    std::vector<PairRow> rows;
    for (auto& tp : enumerate_threshold_pairs(n)) {
        ThresholdPermutation perm = pair_to_threshold_perm(tp);
        const std::size_t odd = odd_cycle_count(perm.perm());
        rows.push_back({std::move(tp), std::move(perm), odd});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const PairRow& a, const PairRow& b) {
        if (a.odd_cycles != b.odd_cycles) return a.odd_cycles > b.odd_cycles;
        return a.pair < b.pair;
    });
    return rows;
}

std::vector<GraphRow> graph_table(std::size_t n) {
    std::vector<GraphRow> rows;
    for (const auto& tp : enumerate_threshold_pairs(n)) {
        SignedPermutation c = conventional_construction(tp);
        LabeledGraph g = graph_from_construction(c);
        const std::size_t odd = odd_anchor_count(c);
        rows.push_back({std::move(c), std::move(g), odd});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const GraphRow& a, const GraphRow& b) {
        if (a.odd_anchors != b.odd_anchors) return a.odd_anchors > b.odd_anchors;
        return a.construction < b.construction;
    });
    return rows;
}

namespace {

using nlohmann::ordered_json;

long small(const Integer& v) {
    if (!v.fits_slong_p()) throw ConsistencyError("table value exceeds 64-bit range");
    return v.get_si();
}

std::string edge_list(const LabeledGraph& g) {
    std::string s;
    for (const auto& [i, j] : g.edges()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(i) + std::to_string(j);
    }
    return s.empty() ? "-" : s;
}

ordered_json edges_json(const LabeledGraph& g) {
    ordered_json e = ordered_json::array();
    for (const auto& [i, j] : g.edges()) e.push_back({i, j});
    return e;
}

ordered_json entries_json(const SignedPermutation& sp) {
    return ordered_json(std::vector<int>(sp.entries().begin(), sp.entries().end()));
}

// Left-aligned columns separated by two spaces, no trailing blanks.
std::string align(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width;
    for (const auto& row : cells) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += line + '\n';
    }
    return out;
}

std::string csv(const std::vector<std::vector<std::string>>& cells) {
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            const bool quote = row[c].find_first_of(", ") != std::string::npos;
            out += quote ? '"' + row[c] + '"' : row[c];
        }
        out += '\n';
    }
    return out;
}

std::string render_polynomials(OutputFormat fmt) {
    const auto rows = polynomial_table();
    if (fmt == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json coeffs = ordered_json::array();
            for (const auto& c : r.chi.coeffs()) coeffs.push_back(small(c));
            arr.push_back({{"n", r.n}, {"coeffs_low_to_high", coeffs}, {"regions", small(r.regions)}});
        }
        return arr.dump(2) + '\n';
    }
    std::vector<std::vector<std::string>> cells{{"n", "chi", "regions"}};
    for (const auto& r : rows) cells.push_back({std::to_string(r.n), r.chi.to_string(), r.regions.get_str()});
    return fmt == OutputFormat::csv ? csv(cells) : align(cells);
}

std::string render_pairs(std::size_t n, OutputFormat fmt) {
    const auto rows = pair_table(n);
    if (fmt == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows)
            arr.push_back({{"pair", entries_json(r.pair.perm())},
                           {"threshold_perm", entries_json(r.perm.perm())},
                           {"odd_cycles", r.odd_cycles}});
        return arr.dump(2) + '\n';
    }
    std::vector<std::vector<std::string>> cells{{"pair", "threshold_perm", "odd_cycles"}};
    for (const auto& r : rows)
        cells.push_back({r.pair.perm().to_signed_string(), r.perm.perm().to_signed_string(),
                         std::to_string(r.odd_cycles)});
    return fmt == OutputFormat::csv ? csv(cells) : align(cells);
}

std::string render_graphs(std::size_t n, OutputFormat fmt) {
    const auto rows = graph_table(n);
    if (fmt == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows)
            arr.push_back({{"construction", entries_json(r.construction)},
                           {"graph", {{"n", r.graph.size()}, {"edges", edges_json(r.graph)}}},
                           {"odd_anchors", r.odd_anchors}});
        return arr.dump(2) + '\n';
    }
    std::vector<std::vector<std::string>> cells{{"construction", "edges", "odd_anchors"}};
    for (const auto& r : rows)
        cells.push_back({r.construction.to_signed_string(), edge_list(r.graph), std::to_string(r.odd_anchors)});
    return fmt == OutputFormat::csv ? csv(cells) : align(cells);
}

}  // namespace

std::string render_table(std::string_view which, OutputFormat fmt) {
    if (which == "1") return render_polynomials(fmt);
    if (which == "2") return render_pairs(2, fmt);
    if (which == "3") return render_pairs(3, fmt);
    if (which == "2g") return render_graphs(2, fmt);
    if (which == "3g") return render_graphs(3, fmt);
    throw DomainError("unknown table '" + std::string(which) + "'; expected 1, 2, 3, 2g or 3g");
}

}  // namespace threshold_atlas
