#include "threshold_atlas/distribution.hpp"

#include <sstream>

namespace threshold_atlas {

DistributionTable DistributionTable::from_counts(std::string statistic, std::size_t n,
                                                 const std::vector<std::uint64_t>& counts) {
    DistributionTable t(std::move(statistic), n);
    for (std::size_t j = 0; j < counts.size(); ++j)
        if (counts[j] != 0) t.entries_[j] = Integer(static_cast<unsigned long>(counts[j]));
    return t;
}

DistributionTable DistributionTable::from_abs_coefficients(std::string statistic, const Polynomial& p) {
    DistributionTable t(std::move(statistic), p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()));
    for (std::size_t j = 0; j < p.coeffs().size(); ++j)
        if (p.coeffs()[j] != 0) t.entries_[j] = abs(p.coeffs()[j]);
    return t;
}

void DistributionTable::add(std::size_t j, const Integer& count) {
    if (count == 0) return;
    Integer& slot = entries_[j];
    slot += count;
    if (slot == 0) entries_.erase(j);
}

DistributionTable& DistributionTable::merge(const DistributionTable& other) {
    for (const auto& [j, c] : other.entries_) add(j, c);
    return *this;
}

Integer DistributionTable::at(std::size_t j) const {
    auto it = entries_.find(j);
    return it == entries_.end() ? Integer(0) : it->second;
}

Integer DistributionTable::total() const {
    Integer s = 0;
    for (const auto& [j, c] : entries_) s += c;
    return s;
}

std::string DistributionTable::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [j, c] : entries_) {
        if (!first) os << ',';
        os << j << ':' << c.get_str();
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace threshold_atlas
