// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file figure4.hpp
 * @brief Frozen reproduction of the N = 8 boson scenario on the cube (d = 3).
 *
 * Three initial states with growing symmetry are scattered by the d = 3
 * hypercube unitary and all 6435 final states are grouped into four sets:
 *   (a) odd count on P({2,8})
 *   (b) odd count on P({2}) or P({8}), not in (a)
 *   (c) odd count on P({4}), not in (a) or (b)
 *   (d) everything else
 * States and precedence are hard-coded here and do not go through the
 * generic classification path.
 */

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hyperwalk/fock.hpp"

namespace hyperwalk::figure4 {

inline constexpr int kDimension = 3;
inline constexpr int kParticles = 8;

/// (3,0,1,0,0,3,0,1): invariant only under S({2,8}).
ModeOccupation initial_a();
/// (0,0,2,2,0,0,2,2): invariant under S(2), S(8) and S({2,8}).
ModeOccupation initial_b();
/// (1,1,1,1,1,1,1,1): invariant under all seven composites.
ModeOccupation initial_c();

enum class Set { A, B, C, D };

char set_label(Set set);

Set classify_set(const ModeOccupation& final_state);

struct Row {
    ModeOccupation final_state;
    Set set;
    std::array<double, 3> probability;  ///< for initial_a, initial_b, initial_c
};

struct SetSummary {
    Set set;
    std::uint64_t size = 0;
    std::array<double, 3> max_probability{};
};

struct Result {
    std::vector<Row> rows;  ///< enumeration order
    std::array<SetSummary, 4> summary;
    std::array<double, 3> probability_sum{};
};

Result run(unsigned workers = 1);

}  // namespace hyperwalk::figure4
