// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperwalk/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "hyperwalk/error.hpp"

namespace hyperwalk {

namespace {

bool is_power_of_two(long long v) { return v > 0 && (v & (v - 1)) == 0; }

int level_of(int segmentation) { return std::countr_zero(static_cast<unsigned>(segmentation)); }

void check_set_fits(const SymmetrySet& p, int max_segmentation) {
    if (p.max_segmentation() > max_segmentation) {
        throw InvalidArgument("segmentation " + std::to_string(p.max_segmentation()) +
                              " exceeds the admissible maximum " + std::to_string(max_segmentation));
    }
}

}  // namespace

SymmetrySet SymmetrySet::from_segmentations(std::span<const int> segmentations) {
    if (segmentations.empty()) throw InvalidArgument("symmetry set must be non-empty");
    std::uint32_t mask = 0;
    for (int p : segmentations) {
        if (p < 2 || !is_power_of_two(p)) {
            throw InvalidArgument("segmentation " + std::to_string(p) + " is not a power of two >= 2");
        }
        const int l = level_of(p);
        if (l > kMaxDimension) throw InvalidArgument("segmentation too large");
        const std::uint32_t bit = 1u << (l - 1);
        if (mask & bit) throw InvalidArgument("duplicate segmentation " + std::to_string(p));
        mask |= bit;
    }
    return SymmetrySet(mask);
}

SymmetrySet SymmetrySet::from_mask(std::uint32_t mask) {
    if (mask == 0) throw InvalidArgument("symmetry set must be non-empty");
    if (mask >> kMaxDimension) throw InvalidArgument("symmetry mask exceeds the supported dimension");
    return SymmetrySet(mask);
}

std::vector<int> SymmetrySet::segmentations() const {
    std::vector<int> out;
    for (int l = 1; l <= kMaxDimension; ++l) {
        if (mask_ & (1u << (l - 1))) out.push_back(1 << l);
    }
    return out;
}

int SymmetrySet::size() const noexcept { return std::popcount(mask_); }

int SymmetrySet::max_level() const noexcept { return std::bit_width(mask_); }

bool SymmetrySet::contains(int segmentation) const noexcept {
    if (segmentation < 2 || !is_power_of_two(segmentation)) return false;
    const int l = level_of(segmentation);
    return l <= kMaxDimension && (mask_ & (1u << (l - 1)));
}

bool lex_less(const SymmetrySet& a, const SymmetrySet& b) {
    const auto sa = a.segmentations();
    const auto sb = b.segmentations();
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

std::string format_symmetry_set(const SymmetrySet& p) {
    std::string out;
    for (int s : p.segmentations()) {
        if (!out.empty()) out += ',';
        out += std::to_string(s);
    }
    return out;
}

SymmetrySet parse_symmetry_set(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgument("bad segmentation \"" + item + "\"");
        }
    }
    return SymmetrySet::from_segmentations(values);
}

int rademacher(int j, int p, int n) {
    if (n < 1) throw InvalidArgument("mode count must be >= 1");
    if (p < 2 || !is_power_of_two(p) || n % p != 0) {
        throw InvalidArgument("segmentation " + std::to_string(p) + " is not admissible for n=" + std::to_string(n));
    }
    if (j < 1 || j > n) throw InvalidArgument("mode index out of range");
    const long long quotient = static_cast<long long>(p) * (j - 1) / n;
    return (quotient % 2 == 0) ? 1 : -1;
}

int walsh(int j, const SymmetrySet& p, int n) {
    int value = 1;
    for (int s : p.segmentations()) value *= rademacher(j, s, n);
    return value;
}

PartitionLabeling partition(const SymmetrySet& p, int n) {
    PartitionLabeling out;
    out.labels.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const int a = walsh(j, p, n);
        out.labels.push_back(a);
        (a < 0 ? out.subset_p : out.subset_pbar).push_back(j);
    }
    return out;
}

int mode_image(int j, const SymmetrySet& p, int n) {
    int image = j;
    for (int s : p.segmentations()) image += rademacher(j, s, n) * (n / s);
    return image;
}

int subgraph_size(int n, int d) {
    if (d < 1 || d > kMaxDimension) throw InvalidArgument("dimension must lie in 1.." + std::to_string(kMaxDimension));
    const long long cube = 1LL << d;
    if (n < cube || n % cube != 0) {
        throw InvalidArgument("mode count " + std::to_string(n) + " is not a multiple of 2^" + std::to_string(d));
    }
    return static_cast<int>(n / cube);
}

int bare_dimension(int n) {
    if (n < 2 || !is_power_of_two(n)) {
        throw InvalidArgument("bare hypercube needs n = 2^d modes, got " + std::to_string(n));
    }
    return level_of(n);
}

namespace {

ModeOccupation permute(const SymmetrySet& p, const ModeOccupation& r) {
    const int n = r.modes();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) out[static_cast<std::size_t>(j - 1)] = r.count(mode_image(j, p, n));
    return ModeOccupation(std::move(out));
}

}  // namespace

ModeOccupation apply_symmetry(const SymmetrySet& p, const ModeOccupation& r) {
    const int d = bare_dimension(r.modes());
    check_set_fits(p, 1 << d);
    return permute(p, r);
}

ModeOccupation generalized_apply(const SymmetrySet& p, const ModeOccupation& r, int d, int m) {
    if (m < 1 || subgraph_size(r.modes(), d) != m) {
        throw InvalidArgument("occupation has " + std::to_string(r.modes()) + " modes, expected 2^" + std::to_string(d) +
                              "*" + std::to_string(m));
    }
    check_set_fits(p, 1 << d);
    return permute(p, r);
}

bool is_invariant(const SymmetrySet& p, const ModeOccupation& r) { return apply_symmetry(p, r) == r; }

bool is_invariant(const SymmetrySet& p, const ModeOccupation& r, int d) {
    return generalized_apply(p, r, d, subgraph_size(r.modes(), d)) == r;
}

std::vector<SymmetrySet> all_symmetry_sets(int d) {
    if (d < 1 || d > kMaxDimension) throw InvalidArgument("dimension out of range");
    std::vector<SymmetrySet> sets;
    sets.reserve((std::size_t{1} << d) - 1);
    for (std::uint32_t mask = 1; mask < (1u << d); ++mask) sets.push_back(SymmetrySet::from_mask(mask));
    std::sort(sets.begin(), sets.end(), lex_less);
    return sets;
}

std::vector<SymmetrySet> invariance_group(const ModeOccupation& r, int d) {
    const int m = subgraph_size(r.modes(), d);
    std::vector<SymmetrySet> group;
    for (const auto& p : all_symmetry_sets(d)) {
        if (generalized_apply(p, r, d, m) == r) group.push_back(p);
    }
    return group;
}

int gf2_rank(std::span<const SymmetrySet> sets) {
    // xor basis indexed by leading bit
    std::uint32_t basis[32] = {};
    int rank = 0;
    for (const auto& s : sets) {
        std::uint32_t v = s.mask();
        for (int bit = 31; bit >= 0 && v; --bit) {
            if (!(v >> bit & 1u)) continue;
            if (!basis[bit]) {
                basis[bit] = v;
                ++rank;
                v = 0;
            } else {
                v ^= basis[bit];
            }
        }
    }
    return rank;
}

int eta(const ModeOccupation& r, int d) {
    const auto group = invariance_group(r, d);
    const int rank = gf2_rank(group);
    if (group.size() + 1 != (std::size_t{1} << rank)) {
        throw std::logic_error("invariance group is not closed under composition");
    }
    if (rank > 0 && r.particles() % (1 << rank) != 0) {
        throw std::logic_error("particle number is not a multiple of 2^eta");
    }
    return rank;
}

}  // namespace hyperwalk
