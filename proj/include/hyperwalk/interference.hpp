// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file interference.hpp
 * @brief Exact many-particle transition probabilities.
 *
 * For initial occupation r, final occupation s and single-particle unitary
 * U, the N x N matrix M_{j,k} = U_{d_j(r), d_k(s)} determines
 *   bosons:          |perm M|^2 / (prod r_k! prod s_k!)
 *   fermions:        |det M|^2
 *   distinguishable: perm(Q) / prod s_k!,   Q_{j,k} = |M_{j,k}|^2
 *
 * The distinguishable case divides by the final-state factorials only; this
 * is the classical sum over labelled particle paths and stays normalized for
 * bunched initial states.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperwalk/fock.hpp"
#include "hyperwalk/matrix.hpp"

namespace hyperwalk {

enum class Statistics { Boson, Fermion, Distinguishable };

/// "boson", "fermion", "dist"
std::string to_string(Statistics s);
Statistics parse_statistics(const std::string& text);

/// Probabilities below this are reported as suppressed.
inline constexpr double kSuppressionThreshold = 1e-10;

/// Default largest permanent size; HYPERWALK_MAX_N overrides it.
inline constexpr int kDefaultPermanentBound = 20;

/// Largest N accepted by probability_oracle (factorial cost).
inline constexpr int kOracleBound = 9;

/// Full distributions above this many final states are refused.
inline constexpr std::uint64_t kMaxEnumeration = 1'000'000'000ULL;

/// Callers should warn before enumerating more final states than this.
inline constexpr std::uint64_t kEnumerationWarnThreshold = 10'000'000ULL;

/// Current permanent bound: HYPERWALK_MAX_N if set to a positive integer,
/// otherwise kDefaultPermanentBound.
int permanent_bound();

struct TransitionProblem {
    const ComplexMatrix& unitary;
    ModeOccupation initial;
    ModeOccupation final_state;
    Statistics statistics;

    /// Throws InvalidArgument on size or particle-number mismatch and on
    /// Pauli violations for fermions.
    void validate() const;
};

struct Submatrix {
    ComplexMatrix entries;
    std::vector<int> row_modes;  ///< d(r), 1-based
    std::vector<int> col_modes;  ///< d(s), 1-based
};

Submatrix build_submatrix(const TransitionProblem& tp);

/// Ryser's formula with Gray-code subset updates, O(2^N N).
/// Throws ResourceBound if N exceeds max_n.
Complex permanent(const ComplexMatrix& mat, int max_n);
Complex permanent(const ComplexMatrix& mat);

/// LU decomposition with partial pivoting; singular matrices give 0.
Complex determinant(const ComplexMatrix& mat);

double probability(const TransitionProblem& tp);

/// Literal coherent path sum over all distinct orderings of d(s), with
/// permutation signs for fermions and incoherent summation for
/// distinguishable particles. Independent of permanent()/determinant().
/// Throws ResourceBound for N > kOracleBound.
double probability_oracle(const TransitionProblem& tp);

/// Boson and Distinguishable statistics range over all multisets,
/// Fermion over 0/1 states.
FinalStates final_states_for(Statistics statistics, int n, int N);

using DistributionSink = std::function<void(const ModeOccupation&, double)>;

/// Streams (final state, probability) in enumeration order. Work is split
/// over `workers` threads without affecting the output order.
void full_distribution(const ComplexMatrix& unitary, const ModeOccupation& initial, Statistics statistics,
                       const DistributionSink& sink, unsigned workers = 1);

}  // namespace hyperwalk
