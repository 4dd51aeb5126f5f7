#include "threshold_atlas/arrangement.hpp"

#include <cmath>
#include <sstream>

#include "threshold_atlas/arrangement_detail.hpp"
#include "threshold_atlas/errors.hpp"
#include "threshold_atlas/threshold_graph.hpp"

namespace threshold_atlas {

Arrangement::Arrangement(std::string name, std::size_t n, std::vector<LinearForm> forms)
    : name_(std::move(name)), n_(n), forms_(std::move(forms)) {
    const int dim = static_cast<int>(n);
    for (auto& f : forms_) {
        if (f.j != 0 && f.j < f.i) {
            std::swap(f.i, f.j);
            std::swap(f.ci, f.cj);
        }
        const bool ok = f.i >= 1 && f.i <= dim && (f.ci == 1 || f.ci == -1) &&
                        (f.j == 0 || (f.j > f.i && f.j <= dim && (f.cj == 1 || f.cj == -1)));
        if (!ok) throw DomainError("arrangement " + name_ + ": malformed linear form");
        if (f.j == 0) f.cj = 0;
    }
}

Arrangement Arrangement::threshold(std::size_t n) {
    std::vector<LinearForm> forms;
    for (int i = 1; i <= static_cast<int>(n); ++i)
        for (int j = i + 1; j <= static_cast<int>(n); ++j) forms.push_back({i, 1, j, 1});
    return Arrangement("threshold", n, std::move(forms));
}

Arrangement Arrangement::type_b(std::size_t n) {
    std::vector<LinearForm> forms;
    for (int i = 1; i <= static_cast<int>(n); ++i) {
        forms.push_back({i, 1, 0, 0});
        for (int j = i + 1; j <= static_cast<int>(n); ++j) {
            forms.push_back({i, 1, j, 1});
            forms.push_back({i, 1, j, -1});
        }
    }
    return Arrangement("typeb", n, std::move(forms));
}

namespace detail {

PointCounter::PointCounter(const Arrangement& a, std::uint64_t q) : n_(a.dimension()), q_(q), by_top_(a.dimension() + 1) {
    for (const auto& f : a.forms()) {
        const int top = f.j == 0 ? f.i : f.j;
        by_top_[static_cast<std::size_t>(top)].push_back(f);
    }
}

bool PointCounter::violates(const LinearForm& f, std::span<const std::uint64_t> x) const {
    const auto mod = [this](std::int64_t v) {
        const auto m = static_cast<std::int64_t>(q_);
        return ((v % m) + m) % m;
    };
    std::int64_t v = f.ci * static_cast<std::int64_t>(x[static_cast<std::size_t>(f.i - 1)]);
    if (f.j != 0) v += f.cj * static_cast<std::int64_t>(x[static_cast<std::size_t>(f.j - 1)]);
    return mod(v) == 0;
}

std::uint64_t PointCounter::brute_force(std::uint64_t first_lo, std::uint64_t first_hi) const {
    if (n_ == 0) return first_lo == 0 && first_hi > 0 ? 1 : 0;
    std::vector<std::uint64_t> x(n_, 0);
    std::uint64_t count = 0;
    for (std::uint64_t first = first_lo; first < first_hi; ++first) {
        std::fill(x.begin(), x.end(), 0);
        x[0] = first;
        for (;;) {
            bool ok = true;
            for (std::size_t top = 1; top <= n_ && ok; ++top)
                for (const auto& f : by_top_[top])
                    if (violates(f, x)) {
                        ok = false;
                        break;
                    }
            if (ok) ++count;
            // Odometer over coordinates 2..n.
            std::size_t k = n_;
            while (k > 1) {
                if (++x[k - 1] < q_) break;
                x[k - 1] = 0;
                --k;
            }
            if (k <= 1) break;
        }
    }
    return count;
}

std::uint64_t PointCounter::pruned(std::uint64_t first_lo, std::uint64_t first_hi) const {
    if (n_ == 0) return first_lo == 0 && first_hi > 0 ? 1 : 0;
    std::vector<std::uint64_t> x(n_, 0);
    std::vector<std::uint64_t> stamp(q_, 0);
    std::uint64_t epoch = 0;
    std::uint64_t count = 0;

    // Values of the last coordinate that avoid every form ending there.
    auto last_free = [&]() -> std::uint64_t {
        ++epoch;
        std::uint64_t forbidden = 0;
        const auto m = static_cast<std::int64_t>(q_);
        for (const auto& f : by_top_[n_]) {
            std::int64_t bad = 0;
            if (f.j != 0) {
                // ci x_i + cj x_n = 0  <=>  x_n = -cj ci x_i
                bad = -f.cj * f.ci * static_cast<std::int64_t>(x[static_cast<std::size_t>(f.i - 1)]);
                bad = ((bad % m) + m) % m;
            }
            auto& s = stamp[static_cast<std::size_t>(bad)];
            if (s != epoch) {
                s = epoch;
                ++forbidden;
            }
        }
        return q_ - forbidden;
    };

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        // depth = number of coordinates already fixed
        if (depth == n_ - 1) {
            count += last_free();
            return;
        }
        for (std::uint64_t v = 0; v < q_; ++v) {
            x[depth] = v;
            bool ok = true;
            for (const auto& f : by_top_[depth + 1])
                if (violates(f, x)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, depth + 1);
        }
    };

    if (n_ == 1) {
        // Only the last coordinate; it is also the first.
        for (std::uint64_t v = first_lo; v < first_hi; ++v) {
            x[0] = v;
            bool ok = true;
            for (const auto& f : by_top_[1])
                if (violates(f, x)) ok = false;
            if (ok) ++count;
        }
        return count;
    }
    for (std::uint64_t v = first_lo; v < first_hi; ++v) {
        x[0] = v;
        bool ok = true;
        for (const auto& f : by_top_[1])
            if (violates(f, x)) ok = false;
        if (ok) rec(rec, 1);
    }
    return count;
}

void validate_modulus(const Arrangement& a, std::uint64_t q) {
    if (q < 3 || q % 2 == 0) throw DomainError("count_points_mod_q: q must be odd and at least 3, got " + std::to_string(q));
    const double size = std::pow(static_cast<double>(q), static_cast<double>(a.dimension()));
    if (size >= 9.0e18) throw DomainError("count_points_mod_q: q^n does not fit in 64 bits");
}

bool within_brute_force_budget(const Arrangement& a, std::uint64_t q) {
    const double work = static_cast<double>(a.dimension()) * std::pow(static_cast<double>(q), static_cast<double>(a.dimension()));
    return work <= kBruteForceBudget;
}

Integer threshold_combinatorial_count(std::size_t n, std::uint64_t q) {
    // f: [n] -> Z_q hits 0 at most once and at most one of each {v, -v}.
    const std::size_t half = static_cast<std::size_t>((q - 1) / 2);
    auto spread = [&](std::size_t m) {
        Integer s = 0;
        for (std::size_t k = 0; k <= m; ++k)
            s += binomial(half, k) * power_of_two(k) * factorial(k) * stirling2(m, k);
        return s;
    };
    Integer total = spread(n);
    if (n >= 1) total += Integer(static_cast<unsigned long>(n)) * spread(n - 1);
    return total;
}

}  // namespace detail

FiniteFieldSample count_points_mod_q(const Arrangement& a, std::uint64_t q, CountMethod method) {
    detail::validate_modulus(a, q);
    if (method == CountMethod::automatic)
        method = detail::within_brute_force_budget(a, q) ? CountMethod::brute_force : CountMethod::pruned;
    switch (method) {
        case CountMethod::brute_force: {
            const detail::PointCounter pc(a, q);
            return {q, Integer(static_cast<unsigned long>(pc.brute_force(0, q)))};
        }
        case CountMethod::pruned: {
            const detail::PointCounter pc(a, q);
            return {q, Integer(static_cast<unsigned long>(pc.pruned(0, q)))};
        }
        case CountMethod::combinatorial:
            if (!a.is_threshold())
                throw DomainError("count_points_mod_q: combinatorial count exists only for the threshold arrangement");
            return {q, detail::threshold_combinatorial_count(a.dimension(), q)};
        case CountMethod::automatic:
            break;
    }
    throw ConsistencyError("count_points_mod_q: unreachable");
}

std::vector<std::uint64_t> interpolation_moduli(std::size_t n) {
    std::vector<std::uint64_t> qs;
    for (std::size_t k = 0; k < n + 3; ++k) qs.push_back(2 * n + 1 + 2 * k);
    return qs;
}

namespace detail {

Polynomial interpolate_samples(std::size_t n, const std::vector<FiniteFieldSample>& samples) {
    if (samples.size() != n + 3) throw ConsistencyError("interpolate_samples: expected n+3 samples");
    std::vector<std::pair<Integer, Integer>> pts;
    for (std::size_t k = 0; k <= n; ++k)
        pts.emplace_back(Integer(static_cast<unsigned long>(samples[k].q)), samples[k].count);
    Polynomial p;
    try {
        p = lagrange_interpolate(pts);
    } catch (const IntegralityError& e) {
        throw SamplingError(std::string("charpoly_finite_field: ") + e.what());
    }
    if (p.degree() != static_cast<long>(n) || p.leading() != 1)
        throw SamplingError("charpoly_finite_field: interpolant " + p.to_string() + " is not monic of degree " +
                            std::to_string(n));
    for (std::size_t k = n + 1; k < samples.size(); ++k) {
        const Integer predicted = p(Integer(static_cast<unsigned long>(samples[k].q)));
        if (predicted != samples[k].count)
            throw SamplingError("charpoly_finite_field: held-out q=" + std::to_string(samples[k].q) + " counted " +
                                samples[k].count.get_str() + " but interpolant gives " + predicted.get_str());
    }
    return p;
}

}  // namespace detail

Polynomial charpoly_finite_field(const Arrangement& a, CountMethod method) {
    std::vector<FiniteFieldSample> samples;
    for (std::uint64_t q : interpolation_moduli(a.dimension())) samples.push_back(count_points_mod_q(a, q, method));
    return detail::interpolate_samples(a.dimension(), samples);
}

Polynomial charpoly_threshold_formula(std::size_t n) {
    if (n == 0) throw DomainError("charpoly_threshold_formula: n must be at least 1");
    const Integer nn(static_cast<unsigned long>(n));
    Polynomial chi;
    // The k = 0 term is zero for n >= 2 and supplies chi = t when n = 1.
    for (std::size_t k = 0; k <= n; ++k) {
        const Integer weight = stirling2(n, k) + (k <= n - 1 ? nn * stirling2(n - 1, k) : Integer(0));
        chi += falling_odd_product(k) * weight;
    }
    return chi;
}

Integer threshold_coefficient(std::size_t n, std::size_t j) {
    if (n == 0) throw DomainError("threshold_coefficient: n must be at least 1");
    if (j > n) throw DomainError("threshold_coefficient: need j <= n");
    const Integer nn(static_cast<unsigned long>(n));
    Integer sum = 0;
    for (std::size_t k = j; k <= n; ++k) {
        const Integer weight = stirling2(n, k) + (k <= n - 1 ? nn * stirling2(n - 1, k) : Integer(0));
        const Integer term = weight * a_coeff(k, j);
        if ((k - j) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

Integer region_count(const Polynomial& p) {
    const Integer v = p(Integer(-1));
    return p.degree() % 2 == 0 ? v : Integer(-v);
}

std::pair<Integer, Integer> region_count_identities(std::size_t n) {
    if (n < 2) throw DomainError("region_count_identities: n must be at least 2");
    const Integer bell_form = 2 * (ordered_bell(n) - Integer(static_cast<unsigned long>(n)) * ordered_bell(n - 1));
    Integer eulerian_form = 0;
    for (std::size_t k = 1; k <= n - 1; ++k)
        eulerian_form += power_of_two(k) * Integer(static_cast<unsigned long>(n - k)) * eulerian(n - 1, k - 1);
    return {bell_form, eulerian_form};
}

std::vector<std::pair<int, int>> RegionSignVector::positive_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= static_cast<int>(n_); ++i)
        for (int j = i + 1; j <= static_cast<int>(n_); ++j)
            if (sign(i, j) > 0) out.emplace_back(i, j);
    return out;
}

RegionSignVector region_sign_vector(const ThresholdPair& tp) {
    const SignedPermutation& sp = tp.perm();
    const std::size_t n = sp.size();
    std::vector<std::size_t> position(n + 1);
    std::vector<long> point(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        position[static_cast<std::size_t>(sp.magnitude(i))] = i;
        point[static_cast<std::size_t>(sp.magnitude(i))] = static_cast<long>(sp.negative(i) ? -(i + 1) : (i + 1));
    }
    RegionSignVector rsv(n);
    for (int i = 1; i <= static_cast<int>(n); ++i) {
        for (int j = i + 1; j <= static_cast<int>(n); ++j) {
            const std::size_t pi = position[static_cast<std::size_t>(i)];
            const std::size_t pj = position[static_cast<std::size_t>(j)];
            const bool ni = sp.negative(pi);
            const bool nj = sp.negative(pj);
            bool positive = false;
            if (!ni && !nj)
                positive = true;
            else if (ni != nj)
                positive = ni ? pi < pj : pj < pi;
            const long sum = point[static_cast<std::size_t>(i)] + point[static_cast<std::size_t>(j)];
            if ((sum > 0) != positive)
                throw ConsistencyError("region_sign_vector: rule and representative point disagree on {" +
                                       std::to_string(i) + "," + std::to_string(j) + "} for " + sp.to_string());
            rsv.set(i, j, positive ? 1 : -1);
        }
    }
    return rsv;
}

bool edge_rule_check(const ThresholdPair& tp) {
    return region_sign_vector(tp).positive_pairs() == graph_from_construction(tp.perm()).edges();
}

std::string polynomial_json(std::size_t n, const Polynomial& p) {
    std::ostringstream os;
    os << "{\"n\":" << n << ",\"coeffs_low_to_high\":[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? "," : "") << p.coeffs()[i].get_str();
    os << "]}";
    return os.str();
}

}  // namespace threshold_atlas
