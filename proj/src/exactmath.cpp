#include "threshold_atlas/exactmath.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "threshold_atlas/errors.hpp"

namespace threshold_atlas {

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

Polynomial Polynomial::linear(const Integer& c) {
    return Polynomial(std::vector<Integer>{c, Integer(1)});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Integer Polynomial::leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }

Integer Polynomial::operator()(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Integer& c = coeffs_[k];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k >= 1) os << 't';
        if (k >= 2) os << '^' << k;
        first = false;
    }
    return os.str();
}

namespace {

// Row-major triangular cache. Row n is produced from row n-1 by `next_row`.
// Readers take a shared lock; growth takes the exclusive lock and is
// idempotent, so concurrent fills settle on identical values.
class TriangularTable {
public:
    using RowFn = std::function<std::vector<Integer>(std::size_t, const std::vector<Integer>&)>;

    TriangularTable(std::vector<Integer> row0, RowFn next_row)
        : next_row_(std::move(next_row)) {
        rows_.push_back(std::move(row0));
    }

    Integer get(std::size_t n, std::size_t k) {
        {
            std::shared_lock lock(mutex_);
            if (n < rows_.size()) return k < rows_[n].size() ? rows_[n][k] : Integer(0);
        }
        std::unique_lock lock(mutex_);
        while (rows_.size() <= n) rows_.push_back(next_row_(rows_.size(), rows_.back()));
        return k < rows_[n].size() ? rows_[n][k] : Integer(0);
    }

private:
    std::shared_mutex mutex_;
    std::vector<std::vector<Integer>> rows_;
    RowFn next_row_;
};

TriangularTable& stirling2_table() {
    static TriangularTable table({Integer(1)}, [](std::size_t n, const std::vector<Integer>& prev) {
        std::vector<Integer> row(n + 1);
        for (std::size_t k = 1; k <= n; ++k) {
            Integer a = k < prev.size() ? prev[k] : Integer(0);
            row[k] = Integer(static_cast<unsigned long>(k)) * a + prev[k - 1];
        }
        return row;
    });
    return table;
}

TriangularTable& stirling1_table() {
    static TriangularTable table({Integer(1)}, [](std::size_t n, const std::vector<Integer>& prev) {
        std::vector<Integer> row(n + 1);
        for (std::size_t k = 1; k <= n; ++k) {
            Integer a = k < prev.size() ? prev[k] : Integer(0);
            row[k] = Integer(static_cast<unsigned long>(n - 1)) * a + prev[k - 1];
        }
        return row;
    });
    return table;
}

// Row 0 is the conventional A(0,0) = 1 seed; row n >= 1 has k = 0..n-1.
TriangularTable& eulerian_table() {
    static TriangularTable table({Integer(1)}, [](std::size_t n, const std::vector<Integer>& prev) {
        std::vector<Integer> row(n);
        for (std::size_t k = 0; k < n; ++k) {
            Integer same = k < prev.size() ? prev[k] : Integer(0);
            Integer lower = (k >= 1 && k - 1 < prev.size()) ? prev[k - 1] : Integer(0);
            row[k] = Integer(static_cast<unsigned long>(k + 1)) * same +
                     Integer(static_cast<unsigned long>(n - k)) * lower;
        }
        return row;
    });
    return table;
}

TriangularTable& a_coeff_table() {
    static TriangularTable table({Integer(1)}, [](std::size_t n, const std::vector<Integer>& prev) {
        std::vector<Integer> row(n + 1);
        const Integer odd(static_cast<unsigned long>(2 * n - 1));
        for (std::size_t j = 0; j <= n; ++j) {
            Integer same = j < prev.size() ? prev[j] : Integer(0);
            Integer lower = j >= 1 ? prev[j - 1] : Integer(0);
            row[j] = odd * same + lower;
        }
        return row;
    });
    return table;
}

TriangularTable& binomial_table() {
    static TriangularTable table({Integer(1)}, [](std::size_t n, const std::vector<Integer>& prev) {
        std::vector<Integer> row(n + 1);
        row[0] = row[n] = 1;
        for (std::size_t k = 1; k < n; ++k) row[k] = prev[k - 1] + prev[k];
        return row;
    });
    return table;
}

// One-dimensional sequences live in column 0 of their own table.
TriangularTable& ordered_bell_table() {
    static TriangularTable table({Integer(1)}, [](std::size_t n, const std::vector<Integer>&) {
        Integer sum = 0;
        for (std::size_t k = 1; k <= n; ++k) sum += factorial(k) * stirling2(n, k);
        return std::vector<Integer>{sum};
    });
    return table;
}

TriangularTable& factorial_table() {
    static TriangularTable table({Integer(1)}, [](std::size_t n, const std::vector<Integer>& prev) {
        return std::vector<Integer>{prev[0] * static_cast<unsigned long>(n)};
    });
    return table;
}

void require_k_le_n(const char* name, std::size_t n, std::size_t k) {
    if (k > n)
        throw DomainError(std::string(name) + ": need k <= n, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
}

}  // namespace

Integer stirling2(std::size_t n, std::size_t k) {
    require_k_le_n("stirling2", n, k);
    return stirling2_table().get(n, k);
}

Integer stirling1_unsigned(std::size_t n, std::size_t k) {
    require_k_le_n("stirling1_unsigned", n, k);
    return stirling1_table().get(n, k);
}

Integer eulerian(std::size_t n, std::size_t k) {
    if (n == 0 || k >= n)
        throw DomainError("eulerian: need n >= 1 and k <= n-1, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    return eulerian_table().get(n, k);
}

Integer ordered_bell(std::size_t n) { return ordered_bell_table().get(n, 0); }

Integer a_coeff(std::size_t n, std::size_t j) {
    require_k_le_n("a_coeff", n, j);
    return a_coeff_table().get(n, j);
}

Integer binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    return binomial_table().get(n, k);
}

Integer factorial(std::size_t n) { return factorial_table().get(n, 0); }

Integer power_of_two(std::size_t e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

Polynomial rising_odd_product(std::size_t k) {
    Polynomial p = Polynomial::constant(1);
    for (std::size_t i = 1; i <= k; ++i) p = p * Polynomial::linear(Integer(static_cast<unsigned long>(2 * i - 1)));
    return p;
}

Polynomial falling_odd_product(std::size_t k) {
    Polynomial p = Polynomial::constant(1);
    for (std::size_t i = 1; i <= k; ++i)
        p = p * Polynomial::linear(-Integer(static_cast<unsigned long>(2 * i - 1)));
    return p;
}

Integer poly_eval(const Polynomial& p, const Integer& x) { return p(x); }

Polynomial lagrange_interpolate(const std::vector<std::pair<Integer, Integer>>& points) {
    const std::size_t m = points.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (points[i].first == points[j].first)
                throw DomainError("lagrange_interpolate: duplicate x = " + points[i].first.get_str());
    if (m == 0) return {};

    // Newton divided differences, then expand the nested form in Q[t].
    std::vector<mpq_class> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = mpq_class(points[i].second);
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(points[i].first - points[i - level].first);
            dd[i].canonicalize();
        }

    std::vector<mpq_class> acc{dd[m - 1]};
    for (std::size_t i = m - 1; i-- > 0;) {
        // acc = acc * (t - x_i) + dd[i]
        std::vector<mpq_class> next(acc.size() + 1);
        const mpq_class xi(points[i].first);
        for (std::size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] += acc[k];
            next[k] -= acc[k] * xi;
        }
        next[0] += dd[i];
        acc = std::move(next);
    }

    std::vector<Integer> out(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) {
        acc[k].canonicalize();
        if (acc[k].get_den() != 1)
            throw IntegralityError("lagrange_interpolate: coefficient of t^" + std::to_string(k) + " is " +
                                   acc[k].get_str() + ", not an integer");
        out[k] = acc[k].get_num();
    }
    return Polynomial(std::move(out));
}

}  // namespace threshold_atlas
