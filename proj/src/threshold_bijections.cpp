#include "threshold_atlas/threshold_bijections.hpp"

#include <bit>

#include "threshold_atlas/errors.hpp"

namespace threshold_atlas {

namespace {

void require_size_two(const char* what, std::size_t n) {
    if (n < 2) throw DomainError(std::string(what) + ": size must be at least 2, got " + std::to_string(n));
}

}  // namespace

ThresholdPair::ThresholdPair(SignedPermutation sp) : sp_(std::move(sp)) {
    if (!is_threshold_pair(sp_)) throw DomainError("not a threshold pair in standard form: " + sp_.to_string());
}

ThresholdPermutation::ThresholdPermutation(SignedPermutation sp) : sp_(std::move(sp)) {
    if (!is_threshold_perm(sp_)) throw DomainError("not a threshold permutation: " + sp_.to_string());
}

bool is_threshold_pair(const SignedPermutation& sp) {
    require_size_two("is_threshold_pair", sp.size());
    if (sp.sign(0) != sp.sign(1)) return false;
    for (std::size_t i = 1; i < sp.size(); ++i)
        if (sp.sign(i) == sp.sign(i - 1) && sp.magnitude(i) < sp.magnitude(i - 1)) return false;
    return true;
}

bool is_threshold_perm(const SignedPermutation& sp) {
    if (sp.size() < 2) return false;
    if (sp.magnitude(0) >= sp.magnitude(1)) return false;
    if (sp.magnitude(0) == 1) {
        if (!sp.negative(0)) return false;
    } else if (!sp.negative(1)) {
        return false;
    }
    return is_normal(sp);
}

ThresholdPermutation pair_to_threshold_perm(const ThresholdPair& tp) {
    const SignedPermutation& w = tp.perm();
    SignedPermutation out = w;
    for (std::size_t i = 2; i < w.size(); ++i) out.set_sign(i, w.sign(i - 1) == w.sign(i) ? Sign::plus : Sign::minus);
    if (w.magnitude(0) != 1) {
        out.set_sign(0, w.sign(0));
        out.set_sign(1, Sign::minus);
    } else {
        out.set_sign(1, w.sign(0));
        out.set_sign(0, Sign::minus);
    }
    return ThresholdPermutation::unchecked(std::move(out));
}

ThresholdPair threshold_perm_to_pair(const ThresholdPermutation& tperm) {
    const SignedPermutation& w = tperm.perm();
    const Sign base = w.magnitude(0) != 1 ? w.sign(0) : w.sign(1);
    SignedPermutation out = w;
    // Every negative entry from the third position on starts a new block.
    bool flipped = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i >= 2 && w.negative(i)) flipped = !flipped;
        out.set_sign(i, flipped ? opposite(base) : base);
    }
    return ThresholdPair::unchecked(std::move(out));
}

ThresholdPair threshold_perm_to_pair(const SignedPermutation& sp) {
    return threshold_perm_to_pair(ThresholdPermutation(sp));
}

ThresholdPair standardize(const SignedPermutation& sp) {
    require_size_two("standardize", sp.size());
    SignedPermutation out = sp;
    if (out.sign(0) != out.sign(1)) out.set_sign(0, out.sign(1));
    auto e = out.unchecked_entries();
    std::size_t start = 0;
    while (start < e.size()) {
        std::size_t end = start + 1;
        while (end < e.size() && (e[end] < 0) == (e[start] < 0)) ++end;
        // Same sign throughout the run, so ordering by |x| is ordering by sign * x.
        if (e[start] < 0)
            std::sort(e.begin() + static_cast<std::ptrdiff_t>(start), e.begin() + static_cast<std::ptrdiff_t>(end),
                      std::greater<>());
        else
            std::sort(e.begin() + static_cast<std::ptrdiff_t>(start), e.begin() + static_cast<std::ptrdiff_t>(end));
        start = end;
    }
    return ThresholdPair::unchecked(std::move(out));
}

BlockDecomposition blocks(const ThresholdPair& tp) {
    const SignedPermutation& sp = tp.perm();
    BlockDecomposition bd;
    for (std::size_t i = 0; i < sp.size(); ++i) {
        if (i == 0 || sp.sign(i) != sp.sign(i - 1)) bd.blocks.push_back({{}, sp.sign(i)});
        bd.blocks.back().members.push_back(sp.magnitude(i));
    }
    return bd;
}

std::vector<ThresholdPairChunk> threshold_pair_chunks(std::size_t n) {
    require_size_two("enumerate_threshold_pairs", n);
    if (n >= 32) throw DomainError("enumerate_threshold_pairs: size must be below 32");
    std::vector<ThresholdPairChunk> chunks;
    const std::uint32_t all = (1U << n) - 1U;
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        if (std::popcount(mask) < 2) continue;
        chunks.push_back({mask, Sign::minus});
        chunks.push_back({mask, Sign::plus});
    }
    return chunks;
}

std::vector<ThresholdPair> enumerate_threshold_pairs(std::size_t n) {
    std::vector<ThresholdPair> out;
    for_each_threshold_pair(n, [&](const SignedPermutation& sp) { out.push_back(ThresholdPair::unchecked(sp)); });
    return out;
}

}  // namespace threshold_atlas
