#include "threshold_atlas/signed_permutation.hpp"

#include <map>
#include <sstream>

#include "threshold_atlas/errors.hpp"

namespace threshold_atlas {

SignedPermutation::SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    if (n >= 32) throw DomainError("signed permutation: size must be below 32");
    std::vector<bool> seen(n + 1, false);
    for (int e : entries_) {
        const int m = e < 0 ? -e : e;
        if (m < 1 || static_cast<std::size_t>(m) > n || seen[static_cast<std::size_t>(m)])
            throw DomainError("signed permutation: magnitudes of " + to_string() + " are not a permutation of [" +
                              std::to_string(n) + "]");
        seen[static_cast<std::size_t>(m)] = true;
    }
}

std::size_t SignedPermutation::negative_count() const {
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](int e) { return e < 0; }));
}

std::string SignedPermutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
    os << ']';
    return os.str();
}

std::string SignedPermutation::to_signed_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        os << (i ? " " : "") << sign_char(sign(i)) << magnitude(i);
    return os.str();
}

bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.magnitude(i) != b.magnitude(i)) return a.magnitude(i) < b.magnitude(i);
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < n; ++i)
        if (a.sign(i) != b.sign(i)) return a.sign(i) == Sign::plus;
    return false;
}

CycleStructure compartmentalize(const SignedPermutation& sp) {
    const std::size_t n = sp.size();
    CycleStructure cs;
    // Position i closes a compartment iff its magnitude is below every later one.
    std::vector<bool> closes(n, false);
    int suffix_min = static_cast<int>(n) + 1;
    for (std::size_t i = n; i-- > 0;) {
        if (sp.magnitude(i) < suffix_min) {
            closes[i] = true;
            suffix_min = sp.magnitude(i);
        }
    }
    SignedCycle current;
    for (std::size_t i = 0; i < n; ++i) {
        current.compartment.push_back(sp[i]);
        if (!closes[i]) continue;
        const auto& c = current.compartment;
        for (std::size_t k = 0; k < c.size(); ++k) {
            const int to = c[(k + 1) % c.size()];
            current.arrows.push_back({c[k] < 0 ? -c[k] : c[k], to < 0 ? -to : to, to < 0 ? Sign::minus : Sign::plus});
        }
        cs.cycles.push_back(std::move(current));
        current = {};
    }
    return cs;
}

SignedPermutation permutation_from_cycles(const CycleStructure& cs) {
    std::size_t n = 0;
    for (const auto& c : cs.cycles) n += c.arrows.size();

    // successor[v] = (target, sign on arrow); cycle_of[v] = owning cycle.
    std::vector<int> target(n + 1, 0);
    std::vector<Sign> arrow_sign(n + 1, Sign::plus);
    std::vector<int> cycle_of(n + 1, -1);
    std::vector<bool> hit(n + 1, false);
    for (std::size_t ci = 0; ci < cs.cycles.size(); ++ci) {
        const auto& arrows = cs.cycles[ci].arrows;
        if (arrows.empty()) throw DomainError("permutation_from_cycles: empty cycle");
        for (const Arrow& a : arrows) {
            if (a.from < 1 || a.to < 1 || static_cast<std::size_t>(a.from) > n || static_cast<std::size_t>(a.to) > n)
                throw DomainError("permutation_from_cycles: supports do not cover [" + std::to_string(n) + "]");
            if (cycle_of[static_cast<std::size_t>(a.from)] != -1)
                throw DomainError("permutation_from_cycles: " + std::to_string(a.from) + " appears in two arrows");
            if (hit[static_cast<std::size_t>(a.to)])
                throw DomainError("permutation_from_cycles: " + std::to_string(a.to) + " is pointed to twice");
            cycle_of[static_cast<std::size_t>(a.from)] = static_cast<int>(ci);
            hit[static_cast<std::size_t>(a.to)] = true;
            target[static_cast<std::size_t>(a.from)] = a.to;
            arrow_sign[static_cast<std::size_t>(a.to)] = a.sign;
        }
    }
    // Each arrow list must be one orbit of its own support.
    for (std::size_t ci = 0; ci < cs.cycles.size(); ++ci) {
        const auto& arrows = cs.cycles[ci].arrows;
        int v = arrows.front().from;
        std::size_t steps = 0;
        do {
            if (cycle_of[static_cast<std::size_t>(v)] != static_cast<int>(ci))
                throw DomainError("permutation_from_cycles: cycle " + std::to_string(ci) + " leaves its support");
            v = target[static_cast<std::size_t>(v)];
            ++steps;
        } while (v != arrows.front().from && steps <= arrows.size());
        if (steps != arrows.size())
            throw DomainError("permutation_from_cycles: cycle " + std::to_string(ci) + " is not a single cycle");
    }

    std::vector<int> out;
    out.reserve(n);
    std::vector<bool> done(n + 1, false);
    for (std::size_t m = 1; m <= n; ++m) {
        if (done[m]) continue;
        // Write the cycle of m starting from what m points to, ending with m.
        int v = target[m];
        for (;;) {
            done[static_cast<std::size_t>(v)] = true;
            out.push_back(static_cast<int>(arrow_sign[static_cast<std::size_t>(v)]) * v);
            if (static_cast<std::size_t>(v) == m) break;
            v = target[static_cast<std::size_t>(v)];
        }
    }
    return SignedPermutation(std::move(out));
}

std::size_t odd_cycle_count(const SignedPermutation& sp) {
    const std::size_t n = sp.size();
    std::size_t odd = 0;
    bool parity = false;
    int suffix_min = static_cast<int>(n) + 1;
    // Right to left: a new compartment ends at every suffix minimum.
    for (std::size_t i = n; i-- > 0;) {
        const int m = sp.magnitude(i);
        if (m < suffix_min) {
            if (parity) ++odd;
            parity = false;
            suffix_min = m;
        }
        if (sp.negative(i)) parity = !parity;
    }
    if (parity) ++odd;
    return odd;
}

bool is_normal(const SignedPermutation& sp) {
    for (std::size_t i = 1; i < sp.size(); ++i)
        if (!sp.negative(i) && sp.magnitude(i) < sp.magnitude(i - 1)) return false;
    return true;
}

std::vector<std::vector<int>> magnitude_prefixes(std::size_t n, std::size_t depth) {
    depth = std::min(depth, n);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<bool> used(n + 1, false);
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == depth) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            cur.push_back(static_cast<int>(v));
            self(self);
            cur.pop_back();
            used[v] = false;
        }
    };
    rec(rec);
    return out;
}

std::vector<SignedPermutation> enumerate_signed(std::size_t n) {
    std::vector<SignedPermutation> out;
    for_each_signed(n, [&](const SignedPermutation& sp) { out.push_back(sp); });
    return out;
}

std::vector<SignedPermutation> enumerate_normal(std::size_t n) {
    std::vector<SignedPermutation> out;
    for_each_normal(n, [&](const SignedPermutation& sp) { out.push_back(sp); });
    return out;
}

namespace {

template <class Enumerate>
DistributionTable histogram(std::size_t n, Enumerate enumerate) {
    std::vector<std::uint64_t> counts(n + 1, 0);
    enumerate(n, [&](const SignedPermutation& sp) { ++counts[odd_cycle_count(sp)]; });
    return DistributionTable::from_counts("odd-cycles", n, counts);
}

}  // namespace

DistributionTable odd_cycle_distribution_signed(std::size_t n) {
    return histogram(n, [](std::size_t m, auto&& fn) { for_each_signed(m, fn); });
}

DistributionTable odd_cycle_distribution_normal(std::size_t n) {
    return histogram(n, [](std::size_t m, auto&& fn) { for_each_normal(m, fn); });
}

}  // namespace threshold_atlas
