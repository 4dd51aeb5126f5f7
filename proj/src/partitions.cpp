#include "threshold_atlas/partitions.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>

#include "threshold_atlas/errors.hpp"
#include "threshold_atlas/threshold_bijections.hpp"

namespace threshold_atlas {

std::string Representation::to_string() const {
    std::ostringstream os;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        os << sign_char(signs[p]) << '{';
        for (std::size_t k = 0; k < parts[p].size(); ++k) os << (k ? "," : "") << parts[p][k];
        os << '}';
    }
    return os.str();
}

Representation Representation::parse(std::string_view text) {
    Representation rep;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) -> Representation {
        throw DomainError("representation \"" + std::string(text) + "\": " + why);
    };
    for (;;) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '+' && text[pos] != '-') return fail("expected a sign");
        const Sign s = text[pos] == '+' ? Sign::plus : Sign::minus;
        ++pos;
        skip_ws();
        if (pos == text.size() || text[pos] != '{') return fail("expected '{'");
        ++pos;
        std::vector<int> part;
        for (;;) {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) return fail("expected a number");
            part.push_back(std::stoi(std::string(text.substr(start, pos - start))));
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                break;
            }
            return fail("expected ',' or '}'");
        }
        std::sort(part.begin(), part.end());
        rep.parts.push_back(std::move(part));
        rep.signs.push_back(s);
    }
    std::size_t n = 0;
    for (const auto& p : rep.parts) n += p.size();
    std::vector<bool> seen(n + 1, false);
    for (const auto& p : rep.parts)
        for (int v : p) {
            if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
                return fail("parts do not partition [" + std::to_string(n) + "]");
            seen[static_cast<std::size_t>(v)] = true;
        }
    return rep;
}

namespace {

std::vector<int> mask_to_part(std::size_t n, std::uint32_t mask) {
    std::vector<int> part;
    for (std::size_t v = 1; v <= n; ++v)
        if (mask & (1U << (v - 1))) part.push_back(static_cast<int>(v));
    return part;
}

void ordered_partitions(std::size_t n, std::uint32_t remaining, std::vector<std::vector<int>>& cur,
                        std::vector<std::vector<std::vector<int>>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
        cur.push_back(mask_to_part(n, sub));
        ordered_partitions(n, remaining & ~sub, cur, out);
        cur.pop_back();
    }
}

// Half-open ranges of parts forming the blocks of the underlying partition.
std::vector<std::pair<std::size_t, std::size_t>> block_ranges(const Representation& rep) {
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    for (std::size_t p = 0; p < rep.parts.size(); ++p) {
        if (p == 0 || rep.signs[p] == Sign::minus)
            ranges.emplace_back(p, p + 1);
        else
            ranges.back().second = p + 1;
    }
    return ranges;
}

void require_partition_of_n(const Representation& rep, const char* what) {
    if (rep.parts.size() != rep.signs.size())
        throw DomainError(std::string(what) + ": parts and signs differ in length");
}

}  // namespace

std::vector<Representation> enumerate_representations(std::size_t n) {
    if (n > 8) throw DomainError("enumerate_representations: n must be at most 8");
    std::vector<Representation> reps;
    if (n == 0) return reps;
    std::vector<std::vector<std::vector<int>>> orders;
    std::vector<std::vector<int>> cur;
    ordered_partitions(n, (1U << n) - 1U, cur, orders);
    for (const auto& parts : orders) {
        const std::size_t m = parts.size();
        for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
            Representation rep{parts, {}};
            for (std::size_t p = 0; p < m; ++p)
                rep.signs.push_back(((mask >> (m - 1 - p)) & 1U) ? Sign::minus : Sign::plus);
            reps.push_back(std::move(rep));
        }
    }
    return reps;
}

SignedOrderedPartition underlying_partition(const Representation& rep) {
    require_partition_of_n(rep, "underlying_partition");
    SignedOrderedPartition sop;
    if (rep.parts.empty()) return sop;
    sop.leading = rep.signs[0];
    for (const auto& [lo, hi] : block_ranges(rep)) {
        std::vector<int> block;
        for (std::size_t p = lo; p < hi; ++p) block.insert(block.end(), rep.parts[p].begin(), rep.parts[p].end());
        std::sort(block.begin(), block.end());
        sop.blocks.push_back(std::move(block));
    }
    return sop;
}

Representation standard_representation(const SignedOrderedPartition& sop) {
    Representation rep;
    for (std::size_t b = 0; b < sop.blocks.size(); ++b) {
        std::vector<int> block = sop.blocks[b];
        std::sort(block.begin(), block.end());
        for (std::size_t k = 0; k < block.size(); ++k) {
            rep.parts.push_back({block[k]});
            if (k > 0)
                rep.signs.push_back(Sign::plus);
            else
                rep.signs.push_back(b == 0 ? sop.leading : Sign::minus);
        }
    }
    return rep;
}

bool is_standard(const Representation& rep) {
    for (std::size_t p = 0; p < rep.parts.size(); ++p) {
        if (rep.parts[p].size() != 1) return false;
        if (p > 0 && rep.signs[p] == Sign::plus && rep.parts[p - 1][0] > rep.parts[p][0]) return false;
    }
    return true;
}

SignedPermutation rep_to_normal_perm(const Representation& rep) {
    if (!is_standard(rep)) throw DomainError("rep_to_normal_perm: " + rep.to_string() + " is not standard");
    std::vector<int> out;
    for (std::size_t p = 0; p < rep.parts.size(); ++p) out.push_back(static_cast<int>(rep.signs[p]) * rep.parts[p][0]);
    return SignedPermutation(std::move(out));
}

Representation normal_perm_to_rep(const SignedPermutation& sp) {
    if (!is_normal(sp)) throw DomainError("normal_perm_to_rep: " + sp.to_string() + " is not normal");
    Representation rep;
    for (std::size_t i = 0; i < sp.size(); ++i) {
        rep.parts.push_back({sp.magnitude(i)});
        rep.signs.push_back(sp.sign(i));
    }
    return rep;
}

std::size_t rep_odd_cycle_count(const Representation& rep) {
    const std::size_t m = rep.parts.size();
    std::size_t odd = 0;
    bool parity = false;
    int suffix_min = 0;
    bool have_min = false;
    for (std::size_t p = m; p-- > 0;) {
        const int least = rep.parts[p].front();
        if (!have_min || least < suffix_min) {
            if (parity) ++odd;
            parity = false;
            suffix_min = least;
            have_min = true;
        }
        if (rep.signs[p] == Sign::minus) parity = !parity;
    }
    if (parity) ++odd;
    return odd;
}

PartitionPair rep_to_partition_pair(const Representation& rep) {
    require_partition_of_n(rep, "rep_to_partition_pair");
    const std::size_t m = rep.parts.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rep.parts[a].front() < rep.parts[b].front(); });
    PartitionPair pp;
    std::vector<int> index_of(m);
    for (std::size_t r = 0; r < m; ++r) {
        pp.parts.push_back(rep.parts[order[r]]);
        index_of[order[r]] = static_cast<int>(r + 1);
    }
    std::vector<int> entries;
    for (std::size_t p = 0; p < m; ++p) entries.push_back(static_cast<int>(rep.signs[p]) * index_of[p]);
    pp.perm = SignedPermutation(std::move(entries));
    return pp;
}

Representation partition_pair_to_rep(const PartitionPair& pp) {
    if (pp.parts.size() != pp.perm.size())
        throw DomainError("partition_pair_to_rep: permutation size differs from part count");
    Representation rep;
    for (std::size_t i = 0; i < pp.perm.size(); ++i) {
        rep.parts.push_back(pp.parts[static_cast<std::size_t>(pp.perm.magnitude(i) - 1)]);
        rep.signs.push_back(pp.perm.sign(i));
    }
    return rep;
}

Representation involution(const Representation& rep) {
    require_partition_of_n(rep, "involution");
    for (const auto& [lo, hi] : block_ranges(rep)) {
        std::vector<int> elems;
        for (std::size_t p = lo; p < hi; ++p) elems.insert(elems.end(), rep.parts[p].begin(), rep.parts[p].end());
        std::sort(elems.begin(), elems.end());
        // First a_i whose slot does not hold exactly {a_i}.
        std::size_t i = 0;
        while (i < elems.size() && lo + i < hi && rep.parts[lo + i].size() == 1 && rep.parts[lo + i][0] == elems[i]) ++i;
        if (i == elems.size()) continue;
        const int ai = elems[i];
        std::size_t holder = lo;
        while (std::find(rep.parts[holder].begin(), rep.parts[holder].end(), ai) == rep.parts[holder].end()) ++holder;

        Representation out = rep;
        if (rep.parts[holder].size() > 1) {
            auto& part = out.parts[holder];
            part.erase(std::find(part.begin(), part.end(), ai));
            const auto at = static_cast<std::ptrdiff_t>(holder + 1);
            out.parts.insert(out.parts.begin() + at, std::vector<int>{ai});
            out.signs.insert(out.signs.begin() + at, Sign::plus);
        } else {
            // {a_i} is alone; the part before it (same block) holds a larger element.
            if (holder == lo) throw ConsistencyError("involution: misplaced singleton opens its block");
            auto& prev = out.parts[holder - 1];
            prev.push_back(ai);
            std::sort(prev.begin(), prev.end());
            out.parts.erase(out.parts.begin() + static_cast<std::ptrdiff_t>(holder));
            out.signs.erase(out.signs.begin() + static_cast<std::ptrdiff_t>(holder));
        }
        return out;
    }
    throw DomainError("involution: " + rep.to_string() + " is standard, a fixed point");
}

Integer normal_count_formula(std::size_t n, std::size_t j) {
    if (j > n) throw DomainError("normal_count_formula: need j <= n");
    Integer sum = 0;
    for (std::size_t k = j; k <= n; ++k) {
        const Integer term = stirling2(n, k) * a_coeff(k, j);
        if ((n - k) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

SignedPermutation lemma_bijection_forward(const SpecialPair& p) {
    const std::size_t n = p.size();
    if (p.b < 1 || static_cast<std::size_t>(p.b) > n)
        throw DomainError("lemma_bijection_forward: special number " + std::to_string(p.b) + " outside [" +
                          std::to_string(n) + "]");
    if (!is_normal(p.pi)) throw DomainError("lemma_bijection_forward: " + p.pi.to_string() + " is not normal");
    if (p.pi.empty()) throw DomainError("lemma_bijection_forward: need n >= 2");

    std::vector<int> rest;
    rest.reserve(n);
    for (int e : p.pi.entries()) {
        const int m = e < 0 ? -e : e;
        const int relabeled = m >= p.b ? m + 1 : m;
        rest.push_back(e < 0 ? -relabeled : relabeled);
    }
    const int a1 = rest[0] < 0 ? -rest[0] : rest[0];
    const int a1_sign = rest[0] < 0 ? -1 : 1;
    std::vector<int> out;
    out.reserve(n);
    if (p.b == 1) {
        out.push_back(1);
    } else if (p.b < a1) {
        out.push_back(a1_sign * p.b);
        rest[0] = a1;
    } else {
        out.push_back(-a1_sign * p.b);
        rest[0] = -a1;
    }
    out.insert(out.end(), rest.begin(), rest.end());
    return SignedPermutation(std::move(out));
}

SpecialPair lemma_bijection_inverse(const SignedPermutation& sp) {
    if (sp.size() < 2) throw DomainError("lemma_bijection_inverse: need n >= 2");
    if (!is_normal(sp)) throw DomainError("lemma_bijection_inverse: " + sp.to_string() + " is not normal");
    if (is_threshold_perm(sp))
        throw DomainError("lemma_bijection_inverse: " + sp.to_string() + " is a threshold permutation, not in the image");

    const int b = sp.magnitude(0);
    std::vector<int> rest(sp.entries().begin() + 1, sp.entries().end());
    const int a1 = sp.magnitude(1);
    if (b == 1 && !sp.negative(0)) {
        // +1 a1 ...: rest unchanged
    } else if (b != 1 && !sp.negative(1) && b < a1) {
        // (s) b, +a1: a1 takes b's sign back
        rest[0] = static_cast<int>(sp.sign(0)) * a1;
    } else if (b > a1) {
        // (-s) b, -a1: a1 gets the opposite of b's sign
        rest[0] = -static_cast<int>(sp.sign(0)) * a1;
    } else {
        throw ConsistencyError("lemma_bijection_inverse: " + sp.to_string() + " matches no image type");
    }
    for (int& e : rest) {
        const int m = e < 0 ? -e : e;
        const int relabeled = m > b ? m - 1 : m;
        e = e < 0 ? -relabeled : relabeled;
    }
    return SpecialPair{b, SignedPermutation(std::move(rest))};
}

std::vector<SpecialPair> enumerate_special_pairs(std::size_t n) {
    std::vector<SpecialPair> out;
    if (n < 2) return out;
    const auto normals = enumerate_normal(n - 1);
    for (int b = 1; b <= static_cast<int>(n); ++b)
        for (const auto& pi : normals) out.push_back({b, pi});
    return out;
}

Integer threshold_perm_count(std::size_t n, std::size_t j) {
    if (n < 2) throw DomainError("threshold_perm_count: n must be at least 2");
    if (j > n) throw DomainError("threshold_perm_count: need j <= n");
    const Integer nn(static_cast<unsigned long>(n));
    Integer sum = 0;
    for (std::size_t k = j; k <= n; ++k) {
        const Integer weight = stirling2(n, k) + (k <= n - 1 ? nn * stirling2(n - 1, k) : Integer(0));
        const Integer term = weight * a_coeff(k, j);
        if ((n - k) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

}  // namespace threshold_atlas
