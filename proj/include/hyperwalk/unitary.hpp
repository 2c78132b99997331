// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file unitary.hpp
 * @brief Single-particle transfer matrices of the hypercube walk.
 *
 * Three independent routes produce the bare hypercube unitary at
 * kappa*t = pi/4: the d-fold tensor power of the balanced 2-mode coupler,
 * the closed-form element expression in terms of Rademacher functions, and
 * the spectral evaluation of exp(i kappa t A_d) in the Walsh-Hadamard
 * eigenbasis of the adjacency matrix.
 */

#pragma once

#include <cstdint>
#include <optional>

#include "hyperwalk/matrix.hpp"

namespace hyperwalk {

/// Dense builders refuse dimensions above this (n = 4096 modes).
inline constexpr int kMaxDenseModes = 4096;

/// Tolerance for accepting a user-supplied subunitary.
inline constexpr double kSubunitaryTolerance = 1e-8;

/// A d-dimensional hypercube whose vertices each carry an m-mode subgraph
/// with transfer matrix `subunitary`. m = 1 is the bare hypercube.
struct HypercubeSpec {
    int d = 1;
    int m = 1;
    std::optional<ComplexMatrix> subunitary;

    int modes() const noexcept { return (1 << d) * m; }

    /// Throws InvalidArgument for d < 1, m < 1, a missing or mis-sized
    /// subunitary when m > 1, or one that is not unitary to 1e-8.
    void validate() const;
};

/// (1/sqrt(n)) [[1,i],[i,1]]^{(x)d}, built as an explicit Kronecker chain.
ComplexMatrix build_hc_tensor(int d);

/// U_{j,k} = n^{-1/2} exp(i pi/4 [d - sum_l x(j,2^l) x(k,2^l)]), 1 <= j,k <= 2^d.
Complex element_closed_form(int j, int k, int d);

/// exp(i kappa t A_d) with A_d the hypercube adjacency matrix, evaluated from
/// its analytic spectrum (Walsh-Hadamard eigenvectors, eigenvalues d - 2|w|).
ComplexMatrix build_hamiltonian_oracle(int d, double kappa, double t);

/**
 * Generalized hypercube unitary with HC vertex as the slow index and
 * subgraph slot as the fast index:
 *   U_{j,k} = A_{f(j),f(k)} 2^{-d/2} exp(i pi/4 [d - sum_l x(j,2^l) x(k,2^l)])
 * with f(l) = 1 + (l-1) mod m and x taken over the total n = 2^d m modes.
 * For m = 1 this is the bare hypercube unitary.
 */
ComplexMatrix build_generalized(const HypercubeSpec& spec);

/// Haar-distributed m x m unitary from a seeded complex Gaussian matrix.
ComplexMatrix random_unitary(int m, std::uint64_t seed);

}  // namespace hyperwalk
