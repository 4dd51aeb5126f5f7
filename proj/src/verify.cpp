#include "threshold_atlas/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "threshold_atlas/arrangement.hpp"
#include "threshold_atlas/errors.hpp"
#include "threshold_atlas/kernels.hpp"
#include "threshold_atlas/partitions.hpp"
#include "threshold_atlas/signed_permutation.hpp"
#include "threshold_atlas/threshold_graph.hpp"

namespace threshold_atlas {

ThresholdPermutation faulty_pair_to_threshold_perm(const ThresholdPair& tp) {
    SignedPermutation sp = pair_to_threshold_perm(tp).perm();
    const std::size_t last = sp.size() - 1;
    sp.set_sign(last, opposite(sp.sign(last)));
    return ThresholdPermutation::unchecked(std::move(sp));
}

namespace {

using PairMap = std::function<ThresholdPermutation(const ThresholdPair&)>;

// Small helper that keeps the first failure and counts examined objects.
class Check {
public:
    Check(std::string name, std::size_t bound) { result_.name = std::move(name), result_.bound = bound; }

    bool ok() const { return result_.passed; }
    void seen(std::size_t k = 1) { result_.objects += k; }
    bool expect(bool cond, const std::string& what) {
        if (!cond && result_.passed) {
            result_.passed = false;
            result_.counterexample = what;
        }
        return cond;
    }
    CheckResult done() { return std::move(result_); }

private:
    CheckResult result_;
};

std::string str(const SignedPermutation& sp) { return sp.to_string(); }

std::string table_mismatch(std::size_t n, const DistributionTable& got, const DistributionTable& want) {
    return "n=" + std::to_string(n) + ": got " + got.to_string() + ", expected " + want.to_string();
}

DistributionTable chi_table(std::size_t n, const char* stat) {
    return DistributionTable::from_abs_coefficients(stat, charpoly_threshold_formula(n));
}

// Brute-force counts used to cross-check the memoized sequences.
struct BruteCounts {
    std::vector<std::uint64_t> cycles, descents, blocks;
};

BruteCounts brute_counts(std::size_t n) {
    BruteCounts bc{std::vector<std::uint64_t>(n + 1), std::vector<std::uint64_t>(n + 1),
                   std::vector<std::uint64_t>(n + 1)};
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        std::vector<bool> seen(n, false);
        std::size_t cycles = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (std::size_t k = i; !seen[k]; k = static_cast<std::size_t>(p[k])) seen[k] = true;
        }
        std::size_t desc = 0;
        for (std::size_t i = 1; i < n; ++i) desc += p[i - 1] > p[i];
        ++bc.cycles[cycles];
        ++bc.descents[desc];
    } while (std::next_permutation(p.begin(), p.end()));
    // Restricted growth strings enumerate set partitions.
    std::vector<std::size_t> rgs(n, 0);
    auto rec = [&](auto& self, std::size_t i, std::size_t used) -> void {
        if (i == n) {
            ++bc.blocks[used];
            return;
        }
        for (std::size_t v = 0; v <= used; ++v) {
            rgs[i] = v;
            self(self, i + 1, v == used ? used + 1 : used);
        }
    };
    if (n == 0) bc.blocks[0] = 1;
    else rec(rec, 0, 0);
    return bc;
}

CheckResult check_sequences(std::size_t max_n) {
    const std::size_t bound = std::min<std::size_t>(8, max_n);
    Check c("sequences-brute-force", bound);
    for (std::size_t n = 1; n <= bound && c.ok(); ++n) {
        const auto bc = brute_counts(n);
        Integer ordered = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            c.expect(stirling2(n, k) == bc.blocks[k], "S(" + std::to_string(n) + "," + std::to_string(k) + ")");
            c.expect(stirling1_unsigned(n, k) == bc.cycles[k],
                     "c(" + std::to_string(n) + "," + std::to_string(k) + ")");
            if (k < n)
                c.expect(eulerian(n, k) == bc.descents[k], "A(" + std::to_string(n) + "," + std::to_string(k) + ")");
            ordered += factorial(k) * bc.blocks[k];
        }
        c.expect(ordered_bell(n) == ordered, "a(" + std::to_string(n) + ")");
        c.seen();
    }
    return c.done();
}

CheckResult check_a_coeff_triple(std::size_t max_n) {
    const std::size_t bound = std::min<std::size_t>(12, max_n);
    Check c("a-coeff-triple", bound);
    for (std::size_t n = 0; n <= bound && c.ok(); ++n) {
        const Polynomial rising = rising_odd_product(n);
        Integer sum = 0;
        for (std::size_t j = 0; j <= n; ++j) {
            Integer via_stirling = 0;
            for (std::size_t i = j; i <= n; ++i)
                via_stirling += stirling1_unsigned(n, i) * binomial(i, j) * power_of_two(n - i);
            const Integer a = a_coeff(n, j);
            c.expect(a == rising.coeff(j) && a == via_stirling,
                     "a(" + std::to_string(n) + "," + std::to_string(j) + ")=" + a.get_str());
            sum += a;
            c.seen();
        }
        c.expect(sum == power_of_two(n) * factorial(n), "sum_j a(" + std::to_string(n) + ",j)");
    }
    return c.done();
}

CheckResult check_a_coeff_enumeration(std::size_t max_n, int jobs) {
    const std::size_t bound = std::min<std::size_t>(7, max_n);
    Check c("a-coeff-enumeration", bound);
    for (std::size_t n = 1; n <= bound && c.ok(); ++n) {
        const auto got = parallel::odd_cycles_signed(n, jobs);
        const auto want = DistributionTable::from_abs_coefficients("a", rising_odd_product(n));
        const auto typeb = DistributionTable::from_abs_coefficients("a", falling_odd_product(n));
        c.expect(got == want && typeb == want, table_mismatch(n, got, want));
        c.seen(static_cast<std::size_t>(got.total().get_ui()));
    }
    return c.done();
}

CheckResult check_cycles(std::size_t max_n) {
    const std::size_t bound = std::min<std::size_t>(6, max_n);
    Check c("cycle-round-trip", bound);
    for (std::size_t n = 1; n <= bound && c.ok(); ++n) {
        for_each_signed(n, [&](const SignedPermutation& sp) {
            if (!c.ok()) return;
            const CycleStructure cs = compartmentalize(sp);
            std::size_t negatives = 0, pos = 0;
            for (const auto& cyc : cs.cycles) {
                for (int e : cyc.compartment) negatives += e < 0;
                pos += cyc.compartment.size();
                const int last = std::abs(cyc.compartment.back());
                for (std::size_t k = pos; k < sp.size(); ++k)
                    c.expect(last < sp.magnitude(k), "compartment end is not a suffix minimum in " + str(sp));
            }
            c.expect(negatives == sp.negative_count(), "negative signs not partitioned in " + str(sp));
            c.expect(permutation_from_cycles(cs) == sp, "cycle round trip fails for " + str(sp));
            c.seen();
        });
    }
    return c.done();
}

CheckResult check_pair_perm(std::size_t max_n, const PairMap& map, int jobs) {
    const std::size_t bound = std::min<std::size_t>(8, max_n);
    Check c("pair-perm-bijection", bound);
    for (std::size_t n = 2; n <= bound && c.ok(); ++n) {
        std::uint64_t pairs = 0;
        for_each_threshold_pair(n, [&](const SignedPermutation& sp) {
            if (!c.ok()) return;
            const auto tp = ThresholdPair::unchecked(sp);
            const SignedPermutation perm = map(tp).perm();
            c.expect(is_threshold_perm(perm), str(sp) + " maps to " + str(perm) + ", not a threshold permutation");
            c.expect(threshold_perm_to_pair(ThresholdPermutation::unchecked(perm)) == tp,
                     str(sp) + " -> " + str(perm) + " does not map back");
            ++pairs;
        });
        const Integer filtered = parallel::odd_cycles_threshold_filtered(n, jobs).total();
        c.expect(filtered == static_cast<unsigned long>(pairs),
                 "n=" + std::to_string(n) + ": " + filtered.get_str() + " threshold permutations vs " +
                     std::to_string(pairs) + " pairs");
        c.seen(pairs);
    }
    return c.done();
}

CheckResult check_threshold_perm_count(std::size_t max_n, int jobs) {
    const std::size_t bound = std::min<std::size_t>(12, max_n);
    Check c("threshold-perm-count", bound);
    for (std::size_t n = 2; n <= bound && c.ok(); ++n) {
        DistributionTable formula("odd-cycles", n);
        for (std::size_t j = 0; j <= n; ++j) {
            const Integer t = threshold_perm_count(n, j);
            c.expect(t == abs(threshold_coefficient(n, j)),
                     "T(" + std::to_string(n) + "," + std::to_string(j) + ")=" + t.get_str());
            if (t != 0) formula.add(j, t);
        }
        if (n <= 7) {
            const auto got = parallel::odd_cycles_threshold_filtered(n, jobs);
            c.expect(got == formula, table_mismatch(n, got, formula));
        }
        c.seen();
    }
    return c.done();
}

CheckResult check_standardize(std::size_t max_n) {
    const std::size_t bound = std::min<std::size_t>(6, max_n);
    Check c("standardize-graph", bound);
    for (std::size_t n = 2; n <= bound && c.ok(); ++n) {
        for_each_signed(n, [&](const SignedPermutation& sp) {
            if (!c.ok()) return;
            const ThresholdPair tp = standardize(sp);
            const LabeledGraph g = graph_from_construction(sp);
            c.expect(is_threshold_pair(tp.perm()), "standardize(" + str(sp) + ") is not in standard form");
            c.expect(standardize(tp.perm()) == tp, "standardize not idempotent at " + str(sp));
            c.expect(graph_from_construction(tp.perm()) == g, "standardize changes the graph of " + str(sp));
            c.expect(is_threshold_graph(g), "construction " + str(sp) + " gives a non-threshold graph");
            c.seen();
        });
    }
    return c.done();
}

CheckResult check_odd_cycle_theorem(std::size_t max_n, const PairMap* fault, int jobs) {
    const std::size_t bound = std::min<std::size_t>(8, max_n);
    Check c("odd-cycle-theorem", bound);
    for (std::size_t n = 2; n <= bound && c.ok(); ++n) {
        DistributionTable got("odd-cycles", n);
        if (fault) {
            for_each_threshold_pair(n, [&](const SignedPermutation& sp) {
                got.add(odd_cycle_count((*fault)(ThresholdPair::unchecked(sp)).perm()));
            });
        } else {
            got = parallel::odd_cycles_threshold_mapped(n, jobs);
        }
        const auto want = chi_table(n, "odd-cycles");
        c.expect(got == want, table_mismatch(n, got, want));
        c.seen(static_cast<std::size_t>(got.total().get_ui()));
    }
    return c.done();
}

CheckResult check_odd_anchor_theorem(std::size_t max_n, int jobs) {
    const std::size_t bound = std::min<std::size_t>(8, max_n);
    Check c("odd-anchor-theorem", bound);
    for (std::size_t n = 2; n <= bound && c.ok(); ++n) {
        const auto got = parallel::odd_anchors(n, jobs);
        const auto want = chi_table(n, "odd-anchors");
        c.expect(got == want, table_mismatch(n, got, want));
        c.seen(static_cast<std::size_t>(got.total().get_ui()));
    }
    return c.done();
}

CheckResult check_transport(std::size_t max_n, const PairMap& map) {
    const std::size_t bound = std::min<std::size_t>(8, max_n);
    Check c("statistic-transport", bound);
    for (std::size_t n = 2; n <= bound && c.ok(); ++n) {
        for_each_threshold_pair(n, [&](const SignedPermutation& sp) {
            if (!c.ok()) return;
            const auto tp = ThresholdPair::unchecked(sp);
            const SignedPermutation perm = map(tp).perm();
            const std::size_t anchors_odd = odd_anchor_count(conventional_construction(tp));
            c.expect(anchors_odd == odd_cycle_count(perm),
                     str(sp) + ": " + std::to_string(anchors_odd) + " odd anchors, " + str(perm) + " has " +
                         std::to_string(odd_cycle_count(perm)) + " odd cycles");
            c.seen();
        });
    }
    return c.done();
}

CheckResult check_invariance(std::size_t max_n) {
    const std::size_t bound = std::min<std::size_t>(6, max_n);
    Check c("anchor-invariance", bound);
    for (std::size_t n = 2; n <= bound && c.ok(); ++n) {
        const InvarianceReport r = odd_anchor_invariance_scan(n);
        if (r.counterexample)
            c.expect(false, "constructions " + str(r.counterexample->first) + " and " +
                                str(r.counterexample->second) + " disagree");
        c.expect(region_count(charpoly_threshold_formula(n)) == static_cast<unsigned long>(r.graphs),
                 "n=" + std::to_string(n) + ": " + std::to_string(r.graphs) + " graphs reached");
        c.seen(r.constructions_scanned);
    }
    return c.done();
}

CheckResult check_region_dictionary(std::size_t max_n) {
    const std::size_t bound = std::min<std::size_t>(7, max_n);
    Check c("region-dictionary", bound);
    for (std::size_t n = 2; n <= bound && c.ok(); ++n) {
        for_each_threshold_pair(n, [&](const SignedPermutation& sp) {
            if (!c.ok()) return;
            const auto tp = ThresholdPair::unchecked(sp);
            c.expect(edge_rule_check(tp), "edge rule fails for " + str(sp));
            const LabeledGraph g = graph_from_construction(sp);
            c.expect(canonical_pair(g) == tp, "canonical_pair does not recover " + str(sp) + " from " + g.to_json());
            c.seen();
        });
    }
    return c.done();
}

CheckResult check_finite_field(std::size_t max_n, int jobs) {
    const std::size_t bound = std::min<std::size_t>(6, max_n);
    Check c("finite-field-charpoly", bound);
    for (std::size_t n = 2; n <= bound && c.ok(); ++n) {
        const Polynomial got = parallel::charpoly_finite_field(Arrangement::threshold(n), CountMethod::automatic, jobs);
        c.expect(got == charpoly_threshold_formula(n), "threshold n=" + std::to_string(n) + ": " + got.to_string());
        c.seen();
    }
    for (std::size_t n = 1; n <= std::min<std::size_t>(4, max_n) && c.ok(); ++n) {
        const Polynomial got = parallel::charpoly_finite_field(Arrangement::type_b(n), CountMethod::automatic, jobs);
        c.expect(got == falling_odd_product(n), "type B n=" + std::to_string(n) + ": " + got.to_string());
        c.seen();
    }
    return c.done();
}

CheckResult check_point_count_methods(std::size_t max_n) {
    const std::size_t bound = std::min<std::size_t>(5, max_n);
    Check c("point-count-methods", bound);
    for (std::size_t n = 1; n <= bound && c.ok(); ++n) {
        const Arrangement a = Arrangement::threshold(n);
        for (std::uint64_t q = 3; q <= 13; q += 2) {
            const auto brute = count_points_mod_q(a, q, CountMethod::brute_force);
            const auto pruned = count_points_mod_q(a, q, CountMethod::pruned);
            const auto comb = count_points_mod_q(a, q, CountMethod::combinatorial);
            c.expect(brute == pruned && brute == comb,
                     "n=" + std::to_string(n) + " q=" + std::to_string(q) + ": " + brute.count.get_str() + "/" +
                         pruned.count.get_str() + "/" + comb.count.get_str());
            c.seen();
        }
    }
    return c.done();
}

CheckResult check_region_identities(std::size_t max_n) {
    const std::size_t bound = std::min<std::size_t>(15, max_n);
    Check c("region-identities", bound);
    for (std::size_t n = 2; n <= bound && c.ok(); ++n) {
        const auto [bell, eul] = region_count_identities(n);
        const Polynomial chi = charpoly_threshold_formula(n);
        const Integer r = region_count(chi);
        c.expect(bell == eul && eul == r, "n=" + std::to_string(n) + ": " + bell.get_str() + ", " + eul.get_str() +
                                              ", " + r.get_str());
        for (std::size_t i = 0; i <= n; ++i) {
            const int expected = ((n - i) % 2 == 0) ? 1 : -1;
            c.expect(chi.coeff(i) == 0 || sgn(chi.coeff(i)) == expected,
                     "coefficient sign pattern fails at n=" + std::to_string(n) + ", i=" + std::to_string(i));
        }
        c.seen();
    }
    return c.done();
}

CheckResult check_zaslavsky(std::size_t max_n, int jobs) {
    const std::size_t bound = std::min<std::size_t>(8, max_n);
    Check c("zaslavsky-pair-count", bound);
    for (std::size_t n = 2; n <= bound && c.ok(); ++n) {
        const std::uint64_t pairs = parallel::threshold_pair_count(n, jobs);
        const Integer r = region_count(charpoly_threshold_formula(n));
        c.expect(r == static_cast<unsigned long>(pairs),
                 "n=" + std::to_string(n) + ": " + std::to_string(pairs) + " pairs, r=" + r.get_str());
        c.seen(pairs);
    }
    return c.done();
}

CheckResult check_normal_count(std::size_t max_n, int jobs) {
    const std::size_t bound = std::min<std::size_t>(7, max_n);
    Check c("normal-count", bound);
    for (std::size_t n = 1; n <= bound && c.ok(); ++n) {
        const auto got = parallel::odd_cycles_normal(n, jobs);
        DistributionTable want("odd-cycles", n);
        for (std::size_t j = 0; j <= n; ++j)
            if (const Integer v = normal_count_formula(n, j); v != 0) want.add(j, v);
        c.expect(got == want, table_mismatch(n, got, want));
        c.seen(static_cast<std::size_t>(got.total().get_ui()));
    }
    return c.done();
}

std::string sop_key(const SignedOrderedPartition& sop) {
    std::ostringstream os;
    os << sign_char(sop.leading);
    for (const auto& b : sop.blocks) {
        os << '{';
        for (int v : b) os << v << ' ';
        os << '}';
    }
    return os.str();
}

CheckResult check_involution(std::size_t max_n) {
    const std::size_t bound = std::min<std::size_t>(5, max_n);
    Check c("involution", bound);
    for (std::size_t n = 1; n <= bound && c.ok(); ++n) {
        std::size_t fixed = 0;
        for (const auto& rep : enumerate_representations(n)) {
            if (!c.ok()) break;
            c.seen();
            if (is_standard(rep)) {
                ++fixed;
                bool threw = false;
                try {
                    (void)involution(rep);
                } catch (const DomainError&) {
                    threw = true;
                }
                c.expect(threw, "standard representation " + rep.to_string() + " is not a fixed point");
                continue;
            }
            const Representation img = involution(rep);
            const auto diff = static_cast<long>(img.part_count()) - static_cast<long>(rep.part_count());
            c.expect(diff == 1 || diff == -1, rep.to_string() + " -> " + img.to_string() + " keeps parity");
            c.expect(!is_standard(img), rep.to_string() + " -> standard " + img.to_string());
            c.expect(involution(img) == rep, rep.to_string() + " -> " + img.to_string() + " is not involutive");
            c.expect(underlying_partition(img) == underlying_partition(rep),
                     rep.to_string() + " -> " + img.to_string() + " changes the partition");
            c.expect(rep_odd_cycle_count(img) == rep_odd_cycle_count(rep),
                     rep.to_string() + " -> " + img.to_string() + " changes odd cycles");
        }
        c.expect(ordered_bell(n) * 2 == static_cast<unsigned long>(fixed),
                 "n=" + std::to_string(n) + ": " + std::to_string(fixed) + " fixed points");
    }
    return c.done();
}

CheckResult check_representations(std::size_t max_n) {
    const std::size_t bound = std::min<std::size_t>(5, max_n);
    Check c("representation-statistics", bound);
    for (std::size_t n = 1; n <= bound && c.ok(); ++n) {
        std::map<std::string, std::size_t> odd_by_sop;
        std::map<std::size_t, Integer> signed_sum;
        DistributionTable standard("odd-cycles", n), formula("odd-cycles", n);
        for (const auto& rep : enumerate_representations(n)) {
            if (!c.ok()) break;
            const std::size_t odd = rep_odd_cycle_count(rep);
            const auto [it, fresh] = odd_by_sop.emplace(sop_key(underlying_partition(rep)), odd);
            c.expect(fresh || it->second == odd, "representations of one partition disagree at " + rep.to_string());
            signed_sum[odd] += ((n - rep.part_count()) % 2 == 0) ? 1 : -1;
            const PartitionPair pp = rep_to_partition_pair(rep);
            c.expect(partition_pair_to_rep(pp) == rep, "partition pair round trip fails for " + rep.to_string());
            c.expect(odd_cycle_count(pp.perm) == odd, "partition pair changes odd cycles of " + rep.to_string());
            if (is_standard(rep)) {
                const SignedPermutation sp = rep_to_normal_perm(rep);
                c.expect(is_normal(sp) && normal_perm_to_rep(sp) == rep && odd_cycle_count(sp) == odd,
                         "normal permutation dictionary fails for " + rep.to_string());
                standard.add(odd);
            }
            c.seen();
        }
        for (std::size_t j = 0; j <= n; ++j) {
            const Integer v = normal_count_formula(n, j);
            if (v != 0) formula.add(j, v);
            c.expect(signed_sum[j] == v, "signed count mismatch at n=" + std::to_string(n) + ", j=" + std::to_string(j));
        }
        c.expect(standard == formula, table_mismatch(n, standard, formula));
    }
    return c.done();
}

CheckResult check_special_pairs(std::size_t max_n) {
    const std::size_t bound = std::min<std::size_t>(6, max_n);
    Check c("special-pair-bijection", bound);
    for (std::size_t n = 2; n <= bound && c.ok(); ++n) {
        std::set<std::vector<int>> images;
        for (const auto& p : enumerate_special_pairs(n)) {
            if (!c.ok()) break;
            const SignedPermutation sp = lemma_bijection_forward(p);
            const std::string tag = "(" + std::to_string(p.b) + "; " + str(p.pi) + ") -> " + str(sp);
            c.expect(is_normal(sp) && !is_threshold_perm(sp), tag + " is outside the target set");
            c.expect(odd_cycle_count(sp) == odd_cycle_count(p.pi), tag + " changes odd cycles");
            c.expect(lemma_bijection_inverse(sp) == p, tag + " does not invert");
            c.expect(images.emplace(sp.entries().begin(), sp.entries().end()).second, tag + " is not injective");
            c.seen();
        }
        std::size_t target = 0;
        for_each_normal(n, [&](const SignedPermutation& sp) { target += !is_threshold_perm(sp); });
        c.expect(images.size() == target, "n=" + std::to_string(n) + ": image has " + std::to_string(images.size()) +
                                              " of " + std::to_string(target) + " permutations");
    }
    return c.done();
}

CheckResult check_interpolation() {
    Check c("interpolation", 10);
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> coeff(-50, 50);
    for (int trial = 0; trial < 40 && c.ok(); ++trial) {
        const std::size_t deg = static_cast<std::size_t>(trial % 11);
        std::vector<Integer> cs;
        for (std::size_t i = 0; i <= deg; ++i) cs.emplace_back(coeff(rng));
        if (cs.back() == 0) cs.back() = 1;
        const Polynomial p(cs);
        std::vector<std::pair<Integer, Integer>> pts;
        for (std::size_t i = 0; i <= deg; ++i) {
            const Integer x = Integer(static_cast<long>(i)) * 3 - 7;
            pts.emplace_back(x, p(x));
        }
        const Polynomial got = lagrange_interpolate(pts);
        c.expect(got == p, "interpolating " + p.to_string() + " gives " + got.to_string());
        c.seen();
    }
    return c.done();
}

CheckResult check_kernels(std::size_t max_n, int jobs) {
    const std::size_t bound = std::min<std::size_t>(7, max_n);
    Check c("serial-parallel-agreement", bound);
    for (std::size_t n = 2; n <= bound && c.ok(); ++n) {
        const auto nm = "n=" + std::to_string(n) + ": ";
        c.expect(serial::odd_cycles_signed(n) == parallel::odd_cycles_signed(n, jobs), nm + "signed");
        c.expect(serial::odd_cycles_normal(n) == parallel::odd_cycles_normal(n, jobs), nm + "normal");
        c.expect(serial::odd_cycles_threshold_mapped(n) == parallel::odd_cycles_threshold_mapped(n, jobs),
                 nm + "threshold mapped");
        c.expect(serial::odd_cycles_threshold_filtered(n) == parallel::odd_cycles_threshold_filtered(n, jobs),
                 nm + "threshold filtered");
        c.expect(serial::odd_anchors(n) == parallel::odd_anchors(n, jobs), nm + "odd anchors");
        c.expect(serial::threshold_pair_count(n) == parallel::threshold_pair_count(n, jobs), nm + "pair count");
        c.seen();
    }
    const Arrangement t4 = Arrangement::threshold(std::min<std::size_t>(4, max_n));
    for (auto m : {CountMethod::brute_force, CountMethod::pruned})
        c.expect(serial::count_points(t4, 11, m) == parallel::count_points(t4, 11, m, jobs), "point count q=11");
    return c.done();
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    const std::size_t m = options.max_n;
    if (m < 2 || m > 8) throw DomainError("verify: max_n must lie in 2..8");
    const int jobs = options.jobs > 0 ? options.jobs : 1;
    const PairMap map = options.pair_to_perm ? options.pair_to_perm : PairMap(&pair_to_threshold_perm);
    const PairMap* fault = options.pair_to_perm ? &options.pair_to_perm : nullptr;

    std::vector<CheckResult> out;
    out.push_back(check_sequences(m));
    out.push_back(check_a_coeff_triple(m));
    out.push_back(check_a_coeff_enumeration(m, jobs));
    out.push_back(check_interpolation());
    out.push_back(check_cycles(m));
    out.push_back(check_pair_perm(m, map, jobs));
    out.push_back(check_threshold_perm_count(m, jobs));
    out.push_back(check_standardize(m));
    out.push_back(check_odd_cycle_theorem(m, fault, jobs));
    out.push_back(check_odd_anchor_theorem(m, jobs));
    out.push_back(check_transport(m, map));
    out.push_back(check_invariance(m));
    out.push_back(check_region_dictionary(m));
    out.push_back(check_finite_field(m, jobs));
    out.push_back(check_point_count_methods(m));
    out.push_back(check_region_identities(m));
    out.push_back(check_zaslavsky(m, jobs));
    out.push_back(check_normal_count(m, jobs));
    out.push_back(check_involution(m));
    out.push_back(check_representations(m));
    out.push_back(check_special_pairs(m));
    out.push_back(check_kernels(m, jobs));
    return out;
}

}  // namespace threshold_atlas
