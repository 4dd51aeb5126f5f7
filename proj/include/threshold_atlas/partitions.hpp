#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "threshold_atlas/signed_permutation.hpp"

namespace threshold_atlas {

/// Ordered set partition of [n] with one sign on the first block.
struct SignedOrderedPartition {
    std::vector<std::vector<int>> blocks;  // each ascending
    Sign leading = Sign::plus;
    friend bool operator==(const SignedOrderedPartition&, const SignedOrderedPartition&) = default;
};

/// One way of writing a signed ordered partition: parts with a sign in
/// front of each. The first sign is the partition's sign; every later sign
/// is an operator, + merging a part into the previous one's block and -
/// starting a new block.
struct Representation {
    std::vector<std::vector<int>> parts;  // each ascending
    std::vector<Sign> signs;              // signs[i] precedes parts[i]

    std::size_t part_count() const { return parts.size(); }
    /// "-{2}-{1}+{3}+{4}"
    std::string to_string() const;
    /// Inverse of to_string; throws DomainError on malformed input.
    static Representation parse(std::string_view text);

    friend bool operator==(const Representation&, const Representation&) = default;
};

/// Set partition with parts sorted by least element, plus a signed
/// permutation of the part indices.
struct PartitionPair {
    std::vector<std::vector<int>> parts;
    SignedPermutation perm;
    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

/// All representations of all signed ordered partitions of [n], n <= 8.
std::vector<Representation> enumerate_representations(std::size_t n);

SignedOrderedPartition underlying_partition(const Representation& rep);
/// Ascending singletons joined by +, blocks separated by -.
Representation standard_representation(const SignedOrderedPartition& sop);
bool is_standard(const Representation& rep);

/// Reads a standard representation as a normal permutation. DomainError if
/// rep is not standard.
SignedPermutation rep_to_normal_perm(const Representation& rep);
/// DomainError if sp is not normal.
Representation normal_perm_to_rep(const SignedPermutation& sp);

/// Compartments cut after the part holding the least remaining element;
/// counts those with an odd number of minus signs.
std::size_t rep_odd_cycle_count(const Representation& rep);

PartitionPair rep_to_partition_pair(const Representation& rep);
Representation partition_pair_to_rep(const PartitionPair& pp);

/// Sign-reversing involution on non-standard representations.
///
/// Finds the first block whose parts are not {a_1}+{a_2}+...+{a_k} with
/// a_1 < ... < a_k, and the first a_i out of place in it. If a_i sits in a
/// part B with other elements, B becomes (B \ {a_i}) + {a_i}; otherwise
/// {a_i} is merged into the part before it. The part count changes by one
/// and the underlying partition is unchanged. DomainError on a standard
/// representation, which is a fixed point.
Representation involution(const Representation& rep);

/// N(n,j) = sum_{k=j}^n (-1)^{n-k} S(n,k) a(k,j): normal permutations of
/// [n] with j odd cycles.
Integer normal_count_formula(std::size_t n, std::size_t j);

/// Special number b in [n] and a normal permutation pi of [n-1]; pi is read
/// on [n] \ {b} through the order-preserving relabeling.
struct SpecialPair {
    int b;
    SignedPermutation pi;
    std::size_t size() const { return pi.size() + 1; }
    friend bool operator==(const SpecialPair&, const SpecialPair&) = default;
};

/// Inserts b in front of the relabeled pi:
///   b == 1:           +1 a1 ...
///   1 < b < a1:       (sign a1) b, +a1, ...
///   b > a1:           (opposite sign a1) b, -a1, ...
/// The result is normal, not a threshold permutation, and has the same
/// number of odd cycles as pi.
SignedPermutation lemma_bijection_forward(const SpecialPair& p);
/// Inverse of lemma_bijection_forward; DomainError unless sp is normal and
/// not a threshold permutation.
SpecialPair lemma_bijection_inverse(const SignedPermutation& sp);

/// All (b, pi) with pi normal on [n-1].
std::vector<SpecialPair> enumerate_special_pairs(std::size_t n);

/// N(n,j) - n N(n-1,j), the number of threshold permutations of size n with
/// j odd cycles. Requires n >= 2.
Integer threshold_perm_count(std::size_t n, std::size_t j);

}  // namespace threshold_atlas
