#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "threshold_atlas/exactmath.hpp"

namespace threshold_atlas {

/// Exact histogram j -> count of a statistic over some finite set of objects.
/// Only nonzero counts are stored, so two tables compare equal exactly when
/// they agree at every j.
class DistributionTable {
public:
    DistributionTable() = default;
    DistributionTable(std::string statistic, std::size_t n) : statistic_(std::move(statistic)), n_(n) {}

    /// Builds a table from a dense counts vector indexed by j.
    static DistributionTable from_counts(std::string statistic, std::size_t n,
                                         const std::vector<std::uint64_t>& counts);
    /// Table whose entry j is |coefficient of t^j|.
    static DistributionTable from_abs_coefficients(std::string statistic, const Polynomial& p);

    void add(std::size_t j, const Integer& count = 1);
    /// Associative, commutative merge.
    DistributionTable& merge(const DistributionTable& other);

    Integer at(std::size_t j) const;
    Integer total() const;
    const std::map<std::size_t, Integer>& entries() const { return entries_; }
    const std::string& statistic() const { return statistic_; }
    std::size_t n() const { return n_; }

    /// "{0:7,1:17,2:15,3:6,4:1}"
    std::string to_string() const;

    friend bool operator==(const DistributionTable& a, const DistributionTable& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::string statistic_;
    std::size_t n_ = 0;
    std::map<std::size_t, Integer> entries_;
};

}  // namespace threshold_atlas
