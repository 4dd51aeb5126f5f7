#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "threshold_atlas/exactmath.hpp"
#include "threshold_atlas/threshold_bijections.hpp"

namespace threshold_atlas {

/// Linear form c_i x_i + c_j x_j with c in {-1, +1}; j == 0 for a single
/// coordinate form c_i x_i. Coordinates are 1-based.
struct LinearForm {
    int i;
    int ci;
    int j;
    int cj;
};

/// Central arrangement of hyperplanes {form = 0} in R^n, each form with at
/// most two nonzero +-1 coefficients (a sub-arrangement of type B).
class Arrangement {
public:
    Arrangement(std::string name, std::size_t n, std::vector<LinearForm> forms);

    /// x_i + x_j = 0 for 1 <= i < j <= n.
    static Arrangement threshold(std::size_t n);
    /// x_i +- x_j = 0 and x_i = 0.
    static Arrangement type_b(std::size_t n);

    const std::string& name() const { return name_; }
    std::size_t dimension() const { return n_; }
    const std::vector<LinearForm>& forms() const { return forms_; }
    bool is_threshold() const { return name_ == "threshold"; }

private:
    std::string name_;
    std::size_t n_;
    std::vector<LinearForm> forms_;
};

struct FiniteFieldSample {
    std::uint64_t q;
    Integer count;
    friend bool operator==(const FiniteFieldSample&, const FiniteFieldSample&) = default;
};

enum class CountMethod {
    automatic,      // brute force when n q^n <= 1e8, otherwise pruned
    brute_force,    // all q^n tuples
    pruned,         // coordinate-by-coordinate search, last coordinate counted
    combinatorial,  // closed count for the threshold arrangement only
};

inline constexpr double kBruteForceBudget = 1e8;

/// Number of points of Z_q^n lying on none of the hyperplanes reduced mod q.
/// q must be odd and at least 3.
FiniteFieldSample count_points_mod_q(const Arrangement& a, std::uint64_t q,
                                     CountMethod method = CountMethod::automatic);

/// Odd moduli used for interpolation: the n+1 smallest odd q > 2n, followed
/// by two held-out moduli.
std::vector<std::uint64_t> interpolation_moduli(std::size_t n);

/// Characteristic polynomial by point counting and interpolation. Checks
/// integrality, degree n, leading coefficient 1 and both held-out samples.
Polynomial charpoly_finite_field(const Arrangement& a, CountMethod method = CountMethod::automatic);

/// sum_{k=0}^n (S(n,k) + n S(n-1,k)) (t-1)(t-3)...(t-(2k-1)); the k = 0
/// term only matters at n = 1, where it gives t.
Polynomial charpoly_threshold_formula(std::size_t n);

/// Signed coefficient of t^j in the threshold characteristic polynomial,
/// sum_{k=j}^n (-1)^{k-j} (S(n,k) + n S(n-1,k)) a(k,j).
Integer threshold_coefficient(std::size_t n, std::size_t j);

/// (-1)^deg p(-1), the sum of the absolute coefficients for a
/// characteristic polynomial.
Integer region_count(const Polynomial& p);

/// (2 (a(n) - n a(n-1)), sum_{k=1}^{n-1} 2^k (n-k) A(n-1,k-1)).
std::pair<Integer, Integer> region_count_identities(std::size_t n);

/// Sign of x_i + x_j on the region coded by a threshold pair, for i < j.
class RegionSignVector {
public:
    explicit RegionSignVector(std::size_t n) : n_(n), signs_(n * n, 0) {}
    std::size_t size() const { return n_; }
    int sign(int i, int j) const { return signs_[index(i, j)]; }
    void set(int i, int j, int s) { signs_[index(i, j)] = static_cast<std::int8_t>(s); }
    /// Pairs with positive sign, sorted.
    std::vector<std::pair<int, int>> positive_pairs() const;

private:
    std::size_t index(int i, int j) const {
        if (i > j) std::swap(i, j);
        return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
    }
    std::size_t n_;
    std::vector<std::int8_t> signs_;
};

/// x_i + x_j > 0 iff both i and j are positive, or exactly one is negative
/// and it comes first. Cross-checked against the point a_{pi_i} = w_i * i;
/// throws ConsistencyError if they disagree.
RegionSignVector region_sign_vector(const ThresholdPair& tp);

/// The positive pairs of region_sign_vector(tp) equal the edges of the graph
/// built from tp.
bool edge_rule_check(const ThresholdPair& tp);

/// Polynomial JSON: {"n": N, "coeffs_low_to_high": [...]}, with integers
/// written exactly.
std::string polynomial_json(std::size_t n, const Polynomial& p);

}  // namespace threshold_atlas
