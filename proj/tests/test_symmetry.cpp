// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperwalk/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "hyperwalk/error.hpp"

using namespace hyperwalk;

namespace {

SymmetrySet S(std::initializer_list<int> p) { return SymmetrySet::from_segmentations(p); }

std::vector<int> vec(const ModeOccupation& r) { return {r.counts().begin(), r.counts().end()}; }

std::set<std::uint32_t> masks(const std::vector<SymmetrySet>& sets) {
    std::set<std::uint32_t> out;
    for (const auto& s : sets) out.insert(s.mask());
    return out;
}

/// Mode permutation by flipping the hypercube-label bits directly.
int xor_image(int j, const SymmetrySet& p, int n) {
    int shift = 0;
    for (int s : p.segmentations()) shift |= n / s;
    return ((j - 1) ^ shift) + 1;
}

/// Brute-force eta: the size of the smallest subset of Gamma whose products
/// generate every member of Gamma.
int eta_by_generating_sets(const std::vector<SymmetrySet>& gamma) {
    if (gamma.empty()) return 0;
    const std::size_t g = gamma.size();
    int best = static_cast<int>(g);
    for (std::uint32_t pick = 1; pick < (1u << g); ++pick) {
        const int size = std::popcount(pick);
        if (size >= best) continue;
        std::set<std::uint32_t> generated;
        std::vector<std::uint32_t> gens;
        for (std::size_t i = 0; i < g; ++i) {
            if (pick >> i & 1u) gens.push_back(gamma[i].mask());
        }
        for (std::uint32_t t = 1; t < (1u << gens.size()); ++t) {
            std::uint32_t prod = 0;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (t >> i & 1u) prod ^= gens[i];
            }
            generated.insert(prod);
        }
        const bool covers = std::all_of(gamma.begin(), gamma.end(),
                                        [&](const SymmetrySet& p) { return generated.count(p.mask()) > 0; });
        if (covers) best = size;
    }
    return best;
}

const ModeOccupation r_a({3, 0, 1, 0, 0, 3, 0, 1});
const ModeOccupation r_b({0, 0, 2, 2, 0, 0, 2, 2});
const ModeOccupation r_c({1, 1, 1, 1, 1, 1, 1, 1});

}  // namespace

TEST(symmetry, set_encoding) {
    const auto p = S({8, 2});
    EXPECT_EQ(p.segmentations(), (std::vector<int>{2, 8}));
    EXPECT_EQ(p.mask(), 0b101u);
    EXPECT_EQ(p.size(), 2);
    EXPECT_EQ(p.max_segmentation(), 8);
    EXPECT_TRUE(p.contains(8));
    EXPECT_FALSE(p.contains(4));
    EXPECT_THROW(S({}), InvalidArgument);
    EXPECT_THROW(S({2, 2}), InvalidArgument);
    EXPECT_THROW(S({3}), InvalidArgument);
    EXPECT_THROW(S({1}), InvalidArgument);
    EXPECT_THROW(SymmetrySet::from_mask(0), InvalidArgument);
    EXPECT_EQ(parse_symmetry_set("2,8"), p);
    EXPECT_EQ(format_symmetry_set(p), "2,8");
    EXPECT_THROW(parse_symmetry_set("2,x"), InvalidArgument);
}

TEST(symmetry, lexicographic_order) {
    const auto all = all_symmetry_sets(3);
    std::vector<std::string> names;
    for (const auto& p : all) names.push_back(format_symmetry_set(p));
    EXPECT_EQ(names, (std::vector<std::string>{"2", "2,4", "2,4,8", "2,8", "4", "4,8", "8"}));
}

TEST(symmetry, rademacher_examples) {
    EXPECT_EQ(rademacher(1, 2, 8), 1);
    EXPECT_EQ(rademacher(5, 2, 8), -1);
    EXPECT_EQ(rademacher(4, 8, 8), -1);
    EXPECT_THROW(rademacher(1, 3, 8), InvalidArgument);
    EXPECT_THROW(rademacher(1, 16, 8), InvalidArgument);
    EXPECT_THROW(rademacher(9, 2, 8), InvalidArgument);
}

TEST(symmetry, sign_table_for_the_cube) {
    const std::map<std::string, std::vector<int>> table{
        {"2", {1, 1, 1, 1, -1, -1, -1, -1}},     {"4", {1, 1, -1, -1, 1, 1, -1, -1}},
        {"8", {1, -1, 1, -1, 1, -1, 1, -1}},     {"2,4", {1, 1, -1, -1, -1, -1, 1, 1}},
        {"2,8", {1, -1, 1, -1, -1, 1, -1, 1}},   {"4,8", {1, -1, -1, 1, 1, -1, -1, 1}},
        {"2,4,8", {1, -1, -1, 1, -1, 1, 1, -1}},
    };
    for (const auto& [name, row] : table) {
        const auto p = parse_symmetry_set(name);
        EXPECT_EQ(partition(p, 8).labels, row) << name;
    }
}

TEST(symmetry, walsh_examples) {
    EXPECT_EQ(walsh(7, S({2, 4}), 8), 1);
    EXPECT_EQ(walsh(2, S({2, 4, 8}), 8), -1);
    for (int d = 1; d <= 6; ++d) {
        for (const auto& p : all_symmetry_sets(d)) EXPECT_EQ(walsh(1, p, 1 << d), 1);
    }
}

TEST(symmetry, partition_examples) {
    EXPECT_EQ(partition(S({2}), 8).subset_p, (std::vector<int>{5, 6, 7, 8}));
    EXPECT_EQ(partition(S({4, 8}), 8).subset_p, (std::vector<int>{2, 3, 6, 7}));
    EXPECT_EQ(partition(S({2}), 2).subset_p, (std::vector<int>{2}));
    EXPECT_THROW(partition(S({16}), 8), InvalidArgument);
}

TEST(symmetry, walsh_orthogonality_and_overlap) {
    for (int d = 1; d <= 5; ++d) {
        const int n = 1 << d;
        const auto all = all_symmetry_sets(d);
        for (const auto& p : all) {
            const auto part = partition(p, n);
            ASSERT_EQ(part.subset_p.size(), static_cast<std::size_t>(n / 2));
            ASSERT_EQ(part.subset_pbar.size(), static_cast<std::size_t>(n / 2));
            for (const auto& q : all) {
                if (p == q) continue;
                int dot = 0;
                for (int j = 1; j <= n; ++j) dot += walsh(j, p, n) * walsh(j, q, n);
                ASSERT_EQ(dot, 0);
                const auto other = partition(q, n);
                std::vector<int> common;
                std::set_intersection(part.subset_p.begin(), part.subset_p.end(), other.subset_p.begin(),
                                      other.subset_p.end(), std::back_inserter(common));
                ASSERT_EQ(common.size(), static_cast<std::size_t>(n / 4));
            }
        }
    }
}

TEST(symmetry, mode_image_flips_hypercube_bits) {
    for (int d = 1; d <= 6; ++d) {
        const int n = 1 << d;
        for (const auto& p : all_symmetry_sets(d)) {
            for (int j = 1; j <= n; ++j) ASSERT_EQ(mode_image(j, p, n), xor_image(j, p, n));
        }
    }
}

TEST(symmetry, rademacher_sign_flip_identity) {
    for (int d = 1; d <= 4; ++d) {
        const int n = 1 << d;
        for (const auto& p : all_symmetry_sets(d)) {
            for (int l = 1; l <= d; ++l) {
                const int q = 1 << l;
                for (int j = 1; j <= n; ++j) {
                    const int flipped = rademacher(mode_image(j, p, n), q, n);
                    ASSERT_EQ(rademacher(j, q, n), p.contains(q) ? -flipped : flipped);
                }
            }
        }
    }
}

TEST(symmetry, apply_examples) {
    EXPECT_EQ(apply_symmetry(S({2}), r_b), r_b);
    EXPECT_EQ(apply_symmetry(S({2, 8}), r_a), r_a);
    EXPECT_EQ(vec(apply_symmetry(S({4}), r_a)), (std::vector<int>{1, 0, 3, 0, 0, 1, 0, 3}));
    EXPECT_THROW(apply_symmetry(S({2}), ModeOccupation({1, 0, 0})), InvalidArgument);
    EXPECT_THROW(apply_symmetry(S({16}), r_a), InvalidArgument);
}

TEST(symmetry, involution_and_composition) {
    for (int d = 1; d <= 4; ++d) {
        const int n = 1 << d;
        std::vector<int> distinct(static_cast<std::size_t>(n));
        std::iota(distinct.begin(), distinct.end(), 0);
        const ModeOccupation r(distinct);
        const auto all = all_symmetry_sets(d);
        for (const auto& p : all) {
            ASSERT_EQ(apply_symmetry(p, apply_symmetry(p, r)), r);
            for (const auto& q : all) {
                const auto composed = apply_symmetry(q, apply_symmetry(p, r));
                const std::uint32_t diff = p.mask() ^ q.mask();
                const auto direct = diff ? apply_symmetry(SymmetrySet::from_mask(diff), r) : r;
                ASSERT_EQ(composed, direct);
            }
        }
    }
}

TEST(symmetry, invariance_examples) {
    EXPECT_TRUE(is_invariant(S({2, 8}), r_a));
    EXPECT_FALSE(is_invariant(S({2}), r_a));
    for (const auto& p : all_symmetry_sets(3)) EXPECT_TRUE(is_invariant(p, r_c));

    EXPECT_EQ(masks(invariance_group(r_b, 3)), (std::set<std::uint32_t>{S({2}).mask(), S({8}).mask(), S({2, 8}).mask()}));
    EXPECT_EQ(masks(invariance_group(r_a, 3)), (std::set<std::uint32_t>{S({2, 8}).mask()}));
    EXPECT_TRUE(invariance_group(ModeOccupation({1, 0, 0, 0, 0, 0, 0, 0}), 3).empty());
}

TEST(symmetry, eta_examples) {
    EXPECT_EQ(eta(r_b, 3), 2);
    EXPECT_EQ(eta(r_c, 3), 3);
    EXPECT_EQ(eta(r_a, 3), 1);
    EXPECT_EQ(eta(ModeOccupation({1, 0, 0, 0, 0, 0, 0, 0}), 3), 0);
}

TEST(symmetry, eta_matches_minimal_generating_sets) {
    for (int d = 1; d <= 3; ++d) {
        for (int N = 0; N <= 4; ++N) {
            for (const auto& r : enumerate_boson_finals(1 << d, N)) {
                const auto group = invariance_group(r, d);
                // closed under composition together with the identity
                const auto members = masks(group);
                for (auto a : members) {
                    for (auto b : members) {
                        if (a != b) ASSERT_TRUE(members.count(a ^ b)) << format_occupation(r);
                    }
                }
                const int e = eta(r, d);
                ASSERT_EQ(e, eta_by_generating_sets(group)) << format_occupation(r);
                ASSERT_EQ(group.size() + 1, std::size_t{1} << e);
                if (e >= 1) ASSERT_EQ(r.particles() % (1 << e), 0);
            }
        }
    }
}

TEST(symmetry, generalized_examples) {
    const ModeOccupation ra({2, 0, 0, 2, 0, 0});
    const ModeOccupation rb({2, 0, 0, 1, 1, 0});
    EXPECT_EQ(generalized_apply(S({2}), ra, 1, 3), ra);
    EXPECT_EQ(vec(generalized_apply(S({2}), rb, 1, 3)), (std::vector<int>{1, 1, 0, 2, 0, 0}));
    EXPECT_TRUE(is_invariant(S({2}), ra, 1));
    EXPECT_FALSE(is_invariant(S({2}), rb, 1));
    EXPECT_EQ(eta(ra, 1), 1);
    EXPECT_EQ(eta(rb, 1), 0);
    EXPECT_THROW(generalized_apply(S({2}), ra, 1, 2), InvalidArgument);
    EXPECT_THROW(generalized_apply(S({4}), ra, 1, 3), InvalidArgument);
}

TEST(symmetry, generalized_reduces_to_bare_for_m1) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> occ(0, 3);
    for (int d = 1; d <= 4; ++d) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> counts(static_cast<std::size_t>(1 << d));
            for (auto& c : counts) c = occ(rng);
            const ModeOccupation r(counts);
            for (const auto& p : all_symmetry_sets(d)) ASSERT_EQ(generalized_apply(p, r, d, 1), apply_symmetry(p, r));
        }
    }
}

TEST(symmetry, generalized_walsh_constant_on_subgraphs) {
    for (int d = 1; d <= 3; ++d) {
        for (int m = 1; m <= 4; ++m) {
            const int n = (1 << d) * m;
            for (const auto& p : all_symmetry_sets(d)) {
                const auto labels = partition(p, n).labels;
                for (int j = 0; j < n; ++j) ASSERT_EQ(labels[static_cast<std::size_t>(j)], labels[static_cast<std::size_t>(j - j % m)]);
                // block labels follow the bare hypercube pattern
                for (int v = 0; v < (1 << d); ++v) {
                    ASSERT_EQ(labels[static_cast<std::size_t>(v * m)], walsh(v + 1, p, 1 << d));
                }
            }
        }
    }
}

TEST(symmetry, generalized_moves_whole_blocks) {
    for (int d = 1; d <= 3; ++d) {
        for (int m = 2; m <= 3; ++m) {
            const int n = (1 << d) * m;
            for (const auto& p : all_symmetry_sets(d)) {
                for (int j = 1; j <= n; ++j) {
                    const int image = mode_image(j, p, n);
                    ASSERT_EQ((image - 1) % m, (j - 1) % m);
                    ASSERT_EQ((image - 1) / m + 1, xor_image((j - 1) / m + 1, p, 1 << d));
                }
            }
        }
    }
}
