// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperwalk/unitary.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "hyperwalk/error.hpp"
#include "hyperwalk/symmetry.hpp"

namespace hyperwalk {

namespace {

void check_dense_bound(long long n) {
    if (n > kMaxDenseModes) {
        throw ResourceBound("dense unitary with " + std::to_string(n) + " modes exceeds the bound of " +
                            std::to_string(kMaxDenseModes));
    }
}

void check_dimension(int d) {
    if (d < 1) throw InvalidArgument("dimension must be >= 1");
    if (d > 12) check_dense_bound(1LL << std::min(d, 40));
}

/// exp(i pi/4 * q) for even q, evaluated exactly as a power of i.
Complex quarter_turn(int q) {
    switch (((q / 2) % 4 + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

/// d - sum_l x(j,2^l) x(k,2^l) over n modes; always even.
int phase_index(int j, int k, int d, int n) {
    int q = d;
    for (int l = 1; l <= d; ++l) q -= rademacher(j, 1 << l, n) * rademacher(k, 1 << l, n);
    return q;
}

}  // namespace

void HypercubeSpec::validate() const {
    if (d < 1) throw InvalidArgument("dimension must be >= 1");
    if (m < 1) throw InvalidArgument("subgraph size must be >= 1");
    if (d > 12) check_dense_bound(1LL << std::min(d, 40));
    check_dense_bound((1LL << d) * m);
    if (m > 1 && !subunitary) throw InvalidArgument("subgraph size m > 1 requires a subunitary");
    if (subunitary) {
        const auto& a = *subunitary;
        if (a.rows() != static_cast<std::size_t>(m) || a.cols() != static_cast<std::size_t>(m)) {
            throw InvalidArgument("subunitary must be " + std::to_string(m) + "x" + std::to_string(m));
        }
        const double residual = unitarity_residual(a);
        if (!(residual < kSubunitaryTolerance)) {
            throw InvalidArgument("subunitary is not unitary: ||A^dag A - I||_max = " + std::to_string(residual));
        }
    }
}

ComplexMatrix build_hc_tensor(int d) {
    check_dimension(d);
    const double s = 1.0 / std::numbers::sqrt2;
    const ComplexMatrix coupler(2, 2, {Complex{s, 0}, Complex{0, s}, Complex{0, s}, Complex{s, 0}});
    ComplexMatrix out = coupler;
    for (int l = 1; l < d; ++l) out = kron(out, coupler);
    return out;
}

Complex element_closed_form(int j, int k, int d) {
    if (d < 1 || d > kMaxDimension) throw InvalidArgument("dimension out of range");
    const int n = 1 << d;
    if (j < 1 || j > n || k < 1 || k > n) throw InvalidArgument("element index out of range");
    return quarter_turn(phase_index(j, k, d, n)) / std::sqrt(static_cast<double>(n));
}

ComplexMatrix build_hamiltonian_oracle(int d, double kappa, double t) {
    check_dimension(d);
    if (!(kappa > 0.0) || !(t >= 0.0)) throw InvalidArgument("need kappa > 0 and t >= 0");
    const std::size_t n = std::size_t{1} << d;
    const double theta = kappa * t;

    // exp(i theta A) = H diag(exp(i theta lambda_w)) H / n with H the
    // unnormalized Walsh-Hadamard matrix. Its (x,y) entry only depends on
    // x xor y, so one fast transform of the spectrum gives every element.
    std::vector<Complex> g(n);
    for (std::size_t w = 0; w < n; ++w) {
        const int lambda = d - 2 * std::popcount(w);
        g[w] = std::exp(Complex{0.0, theta * lambda});
    }
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const Complex a = g[j];
                const Complex b = g[j + h];
                g[j] = a + b;
                g[j + h] = a - b;
            }
        }
    }
    ComplexMatrix out(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) out(x, y) = g[x ^ y] / static_cast<double>(n);
    }
    return out;
}

ComplexMatrix build_generalized(const HypercubeSpec& spec) {
    spec.validate();
    const int d = spec.d;
    const int m = spec.m;
    const int n = spec.modes();
    const ComplexMatrix a = spec.subunitary ? *spec.subunitary : ComplexMatrix::identity(static_cast<std::size_t>(m));
    const double scale = 1.0 / std::sqrt(static_cast<double>(1 << d));

    ComplexMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const auto fj = static_cast<std::size_t>((j - 1) % m);
        for (int k = 1; k <= n; ++k) {
            const auto fk = static_cast<std::size_t>((k - 1) % m);
            out(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)) =
                a(fj, fk) * scale * quarter_turn(phase_index(j, k, d, n));
        }
    }
    return out;
}

ComplexMatrix random_unitary(int m, std::uint64_t seed) {
    if (m < 1) throw InvalidArgument("unitary size must be >= 1");
    const auto size = static_cast<std::size_t>(m);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix z(size, size);
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) z(r, c) = Complex{normal(rng), normal(rng)};
    }
    // Modified Gram-Schmidt over columns; positive diagonal R makes Q Haar.
    for (std::size_t c = 0; c < size; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            Complex dot{};
            for (std::size_t r = 0; r < size; ++r) dot += std::conj(z(r, prev)) * z(r, c);
            for (std::size_t r = 0; r < size; ++r) z(r, c) -= dot * z(r, prev);
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < size; ++r) norm += std::norm(z(r, c));
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < size; ++r) z(r, c) /= norm;
    }
    return z;
}

}  // namespace hyperwalk
