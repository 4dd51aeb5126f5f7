#pragma once

// Deliberately naive reference implementations for the tests. None of them
// calls into the library; they use plain vectors, filtering and definitions
// read straight off the objects being counted.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;  // signed entries
using Poly = std::vector<long long>;

inline void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do fn(p);
    while (std::next_permutation(p.begin(), p.end()));
}

/// Every signed permutation of [n] by brute force, in the library's order.
inline std::vector<Perm> all_signed(int n) {
    std::vector<Perm> out;
    for_each_permutation(n, [&](const std::vector<int>& p) {
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            Perm sp(p);
            for (int i = 0; i < n; ++i)
                if (mask & (1U << (n - 1 - i))) sp[static_cast<std::size_t>(i)] = -sp[static_cast<std::size_t>(i)];
            out.push_back(sp);
        }
    });
    return out;
}

inline std::size_t cycle_count(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t k = i; !seen[k]; k = static_cast<std::size_t>(p[k] - 1)) seen[k] = true;
    }
    return cycles;
}

inline std::size_t descents(const std::vector<int>& p) {
    std::size_t d = 0;
    for (std::size_t i = 1; i < p.size(); ++i) d += p[i - 1] > p[i];
    return d;
}

/// Number of set partitions of [n] into k blocks, from restricted growth strings.
inline long long set_partitions(int n, int k) {
    long long count = 0;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            count += used == k;
            return;
        }
        for (int v = 0; v <= used; ++v) rec(i + 1, v == used ? used + 1 : used);
    };
    if (n == 0) return k == 0;
    rec(0, 0);
    return count;
}

/// Ordered set partitions of [n]: surjections onto [k], summed over k.
inline long long ordered_set_partitions(int n) {
    if (n == 0) return 1;
    long long total = 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> f(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<bool> hit(static_cast<std::size_t>(k), false);
            for (int v : f) hit[static_cast<std::size_t>(v)] = true;
            total += std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
            int i = 0;
            while (i < n && ++f[static_cast<std::size_t>(i)] == k) f[static_cast<std::size_t>(i++)] = 0;
            if (i == n) break;
        }
    }
    return total;
}

inline Poly multiply(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

/// Product of (t + r) over the given roots-with-sign r.
inline Poly product_of_linear(const std::vector<long long>& shifts) {
    Poly p{1};
    for (long long s : shifts) p = multiply(p, Poly{s, 1});
    return p;
}

/// Compartments by the definition: cut after the minimum of what remains.
inline std::vector<Perm> compartments(const Perm& sp) {
    std::vector<Perm> out;
    std::size_t start = 0;
    while (start < sp.size()) {
        std::size_t argmin = start;
        for (std::size_t k = start; k < sp.size(); ++k)
            if (std::abs(sp[k]) < std::abs(sp[argmin])) argmin = k;
        out.emplace_back(sp.begin() + static_cast<long>(start), sp.begin() + static_cast<long>(argmin) + 1);
        start = argmin + 1;
    }
    return out;
}

inline std::size_t odd_cycles(const Perm& sp) {
    std::size_t odd = 0;
    for (const auto& c : compartments(sp)) {
        std::size_t neg = 0;
        for (int e : c) neg += e < 0;
        odd += neg % 2;
    }
    return odd;
}

inline bool normal(const Perm& sp) {
    for (std::size_t i = 1; i < sp.size(); ++i)
        if (sp[i] > 0 && std::abs(sp[i]) < std::abs(sp[i - 1])) return false;
    return true;
}

inline bool threshold_pair(const Perm& sp) {
    if (sp.size() < 2 || (sp[0] < 0) != (sp[1] < 0)) return false;
    for (std::size_t i = 1; i < sp.size(); ++i)
        if ((sp[i] < 0) == (sp[i - 1] < 0) && std::abs(sp[i]) < std::abs(sp[i - 1])) return false;
    return true;
}

inline bool threshold_perm(const Perm& sp) {
    if (sp.size() < 2 || !normal(sp)) return false;
    if (std::abs(sp[0]) > std::abs(sp[1])) return false;
    return std::abs(sp[0]) == 1 ? sp[0] < 0 : sp[1] < 0;
}

/// All threshold pairs of [n] by filtering every signed permutation.
inline std::vector<Perm> threshold_pairs(int n) {
    std::vector<Perm> out;
    for (const auto& sp : all_signed(n))
        if (threshold_pair(sp)) out.push_back(sp);
    return out;
}

using Adjacency = std::vector<std::vector<bool>>;

inline Adjacency build_graph(const Perm& order) {
    const std::size_t n = order.size();
    Adjacency adj(n + 1, std::vector<bool>(n + 1, false));
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] < 0) continue;
        const int v = order[i];
        for (std::size_t k = 0; k < i; ++k) {
            const int u = std::abs(order[k]);
            adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
            adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
        }
    }
    return adj;
}

inline std::set<std::pair<int, int>> edge_set(const Adjacency& adj) {
    std::set<std::pair<int, int>> e;
    for (std::size_t i = 1; i < adj.size(); ++i)
        for (std::size_t j = i + 1; j < adj.size(); ++j)
            if (adj[i][j]) e.emplace(static_cast<int>(i), static_cast<int>(j));
    return e;
}

/// Threshold graphs are exactly the graphs with no induced 2K2, C4 or P4:
/// four vertices spanning exactly two disjoint edges, a 4-cycle, or a path.
inline bool threshold_by_forbidden_subgraphs(const Adjacency& adj) {
    const int n = static_cast<int>(adj.size()) - 1;
    auto e = [&](int a, int b) { return adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    const int v[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0}, m = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (e(v[i], v[j])) ++deg[i], ++deg[j], ++m;
                    std::sort(deg, deg + 4);
                    const bool two_k2 = m == 2 && deg[0] == 1 && deg[3] == 1;
                    const bool c4 = m == 4 && deg[0] == 2 && deg[3] == 2;
                    const bool p4 = m == 3 && deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2;
                    if (two_k2 || c4 || p4) return false;
                }
    return true;
}

/// Points of Z_q^n avoiding every form, by direct loops.
/// Each form is (i, ci, j, cj) with j == 0 for a single coordinate.
struct Form {
    int i, ci, j, cj;
};

inline long long count_points(int n, long long q, const std::vector<Form>& forms) {
    std::vector<long long> x(static_cast<std::size_t>(n), 0);
    long long count = 0;
    while (true) {
        bool ok = true;
        for (const auto& f : forms) {
            long long v = f.ci * x[static_cast<std::size_t>(f.i - 1)];
            if (f.j) v += f.cj * x[static_cast<std::size_t>(f.j - 1)];
            if (((v % q) + q) % q == 0) {
                ok = false;
                break;
            }
        }
        count += ok;
        int k = 0;
        while (k < n && ++x[static_cast<std::size_t>(k)] == q) x[static_cast<std::size_t>(k++)] = 0;
        if (k == n) break;
    }
    return count;
}

inline std::vector<Form> threshold_forms(int n) {
    std::vector<Form> f;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) f.push_back({i, 1, j, 1});
    return f;
}

inline std::vector<Form> type_b_forms(int n) {
    std::vector<Form> f;
    for (int i = 1; i <= n; ++i) {
        f.push_back({i, 1, 0, 0});
        for (int j = i + 1; j <= n; ++j) {
            f.push_back({i, 1, j, 1});
            f.push_back({i, 1, j, -1});
        }
    }
    return f;
}

/// p(x) by Horner on long long.
inline long long eval(const Poly& p, long long x) {
    long long v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

}  // namespace oracle
