// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file symmetry.hpp
 * @brief Rademacher/Walsh sign functions and the self-inverse reflection
 *        symmetries of the (generalized) hypercube.
 *
 * A segmentation p = 2^l (1 <= l <= d) splits the n modes into p segments
 * of equal length; the symmetry S(p) swaps neighbouring segments pairwise,
 * i.e. reflects the hypercube along dimension l. A SymmetrySet names a
 * composite of distinct reflections and is stored as a bitmask with bit
 * l-1 standing for p = 2^l.
 *
 * In generalized mode the graph has n = 2^d * m modes (HC vertex is the slow
 * index, subgraph slot the fast one). All sign functions then use the total
 * mode count n as modulus and reflections move whole m-mode blocks.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperwalk/fock.hpp"

namespace hyperwalk {

/// Largest hypercube dimension the bitmask encoding supports.
inline constexpr int kMaxDimension = 30;

class SymmetrySet {
public:
    /// Throws InvalidArgument unless every entry is a distinct power of two
    /// >= 2 and the list is non-empty.
    static SymmetrySet from_segmentations(std::span<const int> segmentations);
    static SymmetrySet from_segmentations(std::initializer_list<int> segmentations) {
        return from_segmentations(std::span<const int>(segmentations.begin(), segmentations.size()));
    }
    /// Bit l-1 <-> segmentation 2^l; the mask must be non-zero.
    static SymmetrySet from_mask(std::uint32_t mask);

    std::uint32_t mask() const noexcept { return mask_; }
    /// Ascending list of segmentation values.
    std::vector<int> segmentations() const;
    int size() const noexcept;
    /// Largest l with 2^l in the set.
    int max_level() const noexcept;
    /// Largest segmentation value, 2^max_level().
    int max_segmentation() const noexcept { return 1 << max_level(); }
    bool contains(int segmentation) const noexcept;

    friend bool operator==(const SymmetrySet&, const SymmetrySet&) = default;

private:
    explicit SymmetrySet(std::uint32_t mask) : mask_(mask) {}
    std::uint32_t mask_;
};

/// Lexicographic order on the ascending segmentation lists:
/// {2} < {2,4} < {2,4,8} < {2,8} < {4} < ...
bool lex_less(const SymmetrySet& a, const SymmetrySet& b);

/// "2,8"
std::string format_symmetry_set(const SymmetrySet& p);
SymmetrySet parse_symmetry_set(const std::string& text);

/// x(j,p) = (-1)^floor(p(j-1)/n) for 1 <= j <= n, p a power of two dividing n.
int rademacher(int j, int p, int n);

/// A(j,p): product of rademacher(j, p_m, n) over the set.
int walsh(int j, const SymmetrySet& p, int n);

/// Two-subset split of the modes by the sign of the Walsh function.
struct PartitionLabeling {
    std::vector<int> labels;       ///< labels[j-1] = A(j,p)
    std::vector<int> subset_p;     ///< modes with label -1, ascending
    std::vector<int> subset_pbar;  ///< modes with label +1, ascending
};

PartitionLabeling partition(const SymmetrySet& p, int n);

/// Image of mode j under S(p) acting on mode numbers:
/// j + sum_k x(j,p_k) n/p_k.
int mode_image(int j, const SymmetrySet& p, int n);

/// Returns m = n / 2^d; throws InvalidArgument when 2^d does not divide n.
int subgraph_size(int n, int d);

/// Hypercube dimension of a bare n = 2^d graph; throws if n is not a power of two.
int bare_dimension(int n);

/// [S(p) r]_j = r_{S(p) j} on a bare hypercube (n = 2^d).
ModeOccupation apply_symmetry(const SymmetrySet& p, const ModeOccupation& r);

/// Block-wise reflection on a generalized hypercube with n = 2^d * m modes.
/// Only segmentations up to 2^d are admitted.
ModeOccupation generalized_apply(const SymmetrySet& p, const ModeOccupation& r, int d, int m);

bool is_invariant(const SymmetrySet& p, const ModeOccupation& r);
/// Generalized form; m is inferred as n / 2^d.
bool is_invariant(const SymmetrySet& p, const ModeOccupation& r, int d);

/// All 2^d - 1 non-empty symmetry sets, in lex_less order.
std::vector<SymmetrySet> all_symmetry_sets(int d);

/// Gamma = { p : S(p) r = r }, in lex_less order. Works for n = 2^d * m.
std::vector<SymmetrySet> invariance_group(const ModeOccupation& r, int d);

/// Rank over GF(2) of the bitmasks.
int gf2_rank(std::span<const SymmetrySet> sets);

/**
 * Number of independent symmetries of r: the GF(2) rank of its invariance
 * group. Zero when r has no invariances. Throws std::logic_error if the
 * particle number is not a multiple of 2^eta, which would mean the group
 * computation is broken.
 */
int eta(const ModeOccupation& r, int d);

}  // namespace hyperwalk
