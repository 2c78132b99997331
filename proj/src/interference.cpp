// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperwalk/interference.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "hyperwalk/error.hpp"
#include "hyperwalk/parallel.hpp"

namespace hyperwalk {

namespace {

constexpr int kExactFactorialLimit = 20;

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

/// log(prod_k r_k!)
double log_factorial_product(const ModeOccupation& occ) {
    double acc = 0.0;
    for (int c : occ.counts()) acc += std::lgamma(c + 1.0);
    return acc;
}

double factorial_product(const ModeOccupation& occ) {
    if (occ.particles() <= kExactFactorialLimit) {
        double acc = 1.0;
        for (int c : occ.counts()) acc *= factorial(c);
        return acc;
    }
    return std::exp(log_factorial_product(occ));
}

void check_range(double p) {
    if (!(p >= -1e-9 && p <= 1.0 + 1e-9)) {
        throw std::logic_error("transition probability " + std::to_string(p) + " outside [0,1]");
    }
}

}  // namespace

std::string to_string(Statistics s) {
    switch (s) {
        case Statistics::Boson: return "boson";
        case Statistics::Fermion: return "fermion";
        case Statistics::Distinguishable: return "dist";
    }
    return "unknown";
}

Statistics parse_statistics(const std::string& text) {
    if (text == "boson") return Statistics::Boson;
    if (text == "fermion") return Statistics::Fermion;
    if (text == "dist") return Statistics::Distinguishable;
    throw InvalidArgument("unknown statistics \"" + text + "\" (expected boson, fermion or dist)");
}

int permanent_bound() {
    const char* env = std::getenv("HYPERWALK_MAX_N");
    if (env == nullptr || *env == '\0') return kDefaultPermanentBound;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1 || value > 62) {
        throw InvalidArgument(std::string("HYPERWALK_MAX_N must be an integer in 1..62, got \"") + env + "\"");
    }
    return static_cast<int>(value);
}

void TransitionProblem::validate() const {
    const auto n = static_cast<std::size_t>(initial.modes());
    if (!unitary.is_square() || unitary.rows() != n) {
        throw InvalidArgument("unitary is " + std::to_string(unitary.rows()) + "x" + std::to_string(unitary.cols()) +
                              " but the initial state has " + std::to_string(n) + " modes");
    }
    if (final_state.modes() != initial.modes()) throw InvalidArgument("initial and final mode counts differ");
    if (final_state.particles() != initial.particles()) {
        throw InvalidArgument("initial and final particle numbers differ (" + std::to_string(initial.particles()) +
                              " vs " + std::to_string(final_state.particles()) + ")");
    }
    if (statistics == Statistics::Fermion && !(initial.is_fermionic() && final_state.is_fermionic())) {
        throw InvalidArgument("Pauli principle violated: fermionic occupations must be 0 or 1");
    }
}

Submatrix build_submatrix(const TransitionProblem& tp) {
    tp.validate();
    const auto rows = to_assignment(tp.initial);
    const auto cols = to_assignment(tp.final_state);
    const auto N = static_cast<std::size_t>(rows.particles());
    Submatrix out{ComplexMatrix(N, N), {rows.modes().begin(), rows.modes().end()},
                  {cols.modes().begin(), cols.modes().end()}};
    for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t k = 0; k < N; ++k) {
            out.entries(j, k) = tp.unitary(static_cast<std::size_t>(rows[j] - 1), static_cast<std::size_t>(cols[k] - 1));
        }
    }
    return out;
}

Complex permanent(const ComplexMatrix& mat, int max_n) {
    if (!mat.is_square()) throw InvalidArgument("permanent needs a square matrix");
    const std::size_t n = mat.rows();
    if (n > static_cast<std::size_t>(max_n)) {
        throw ResourceBound("permanent of a " + std::to_string(n) + "x" + std::to_string(n) +
                            " matrix exceeds the bound N <= " + std::to_string(max_n) +
                            " (set HYPERWALK_MAX_N to raise it)");
    }
    if (n == 0) return {1.0, 0.0};

    // perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij, with S
    // visited in Gray-code order so each step adds or removes one column.
    std::vector<Complex> row_sums(n);
    Complex total{};
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const int col = std::countr_zero(k);
        gray ^= std::uint64_t{1} << col;
        const double dir = (gray >> col & 1u) ? 1.0 : -1.0;
        Complex prod{1.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            row_sums[i] += dir * mat(i, static_cast<std::size_t>(col));
            prod *= row_sums[i];
        }
        if (std::popcount(gray) % 2 == 1) {
            total -= prod;
        } else {
            total += prod;
        }
    }
    return (n % 2 == 1) ? -total : total;
}

Complex permanent(const ComplexMatrix& mat) { return permanent(mat, permanent_bound()); }

Complex determinant(const ComplexMatrix& mat) {
    if (!mat.is_square()) throw InvalidArgument("determinant needs a square matrix");
    const std::size_t n = mat.rows();
    ComplexMatrix lu = mat;
    Complex det{1.0, 0.0};
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        double best = std::abs(lu(c, c));
        for (std::size_t r = c + 1; r < n; ++r) {
            const double v = std::abs(lu(r, c));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) return {0.0, 0.0};
        if (pivot != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(lu(c, k), lu(pivot, k));
            det = -det;
        }
        det *= lu(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Complex factor = lu(r, c) / lu(c, c);
            if (factor == Complex{}) continue;
            for (std::size_t k = c + 1; k < n; ++k) lu(r, k) -= factor * lu(c, k);
        }
    }
    return det;
}

double probability(const TransitionProblem& tp) {
    const Submatrix sub = build_submatrix(tp);
    double p = 0.0;
    switch (tp.statistics) {
        case Statistics::Boson:
            p = std::norm(permanent(sub.entries)) / (factorial_product(tp.initial) * factorial_product(tp.final_state));
            break;
        case Statistics::Fermion:
            p = std::norm(determinant(sub.entries));
            break;
        case Statistics::Distinguishable: {
            const std::size_t N = sub.entries.rows();
            ComplexMatrix q(N, N);
            for (std::size_t j = 0; j < N; ++j) {
                for (std::size_t k = 0; k < N; ++k) q(j, k) = std::norm(sub.entries(j, k));
            }
            p = permanent(q).real() / factorial_product(tp.final_state);
            break;
        }
    }
    check_range(p);
    return p;
}

double probability_oracle(const TransitionProblem& tp) {
    tp.validate();
    const int N = tp.initial.particles();
    if (N > kOracleBound) {
        throw ResourceBound("path-sum oracle limited to N <= " + std::to_string(kOracleBound));
    }
    const auto rows = to_assignment(tp.initial);
    const auto sorted_cols = to_assignment(tp.final_state);
    std::vector<int> sigma(sorted_cols.modes().begin(), sorted_cols.modes().end());

    Complex coherent{};
    double incoherent = 0.0;
    // next_permutation on the sorted multiset visits each distinct ordering once
    do {
        Complex path{1.0, 0.0};
        for (int j = 0; j < N; ++j) {
            path *= tp.unitary(static_cast<std::size_t>(rows[static_cast<std::size_t>(j)] - 1),
                               static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)] - 1));
        }
        switch (tp.statistics) {
            case Statistics::Boson: coherent += path; break;
            case Statistics::Fermion: {
                int inversions = 0;
                for (int a = 0; a < N; ++a) {
                    for (int b = a + 1; b < N; ++b) inversions += sigma[static_cast<std::size_t>(a)] > sigma[static_cast<std::size_t>(b)];
                }
                coherent += (inversions % 2 == 0) ? path : -path;
                break;
            }
            case Statistics::Distinguishable: incoherent += std::norm(path); break;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    if (tp.statistics == Statistics::Distinguishable) return incoherent;
    return factorial_product(tp.final_state) / factorial_product(tp.initial) * std::norm(coherent);
}

FinalStates final_states_for(Statistics statistics, int n, int N) {
    return statistics == Statistics::Fermion ? enumerate_fermion_finals(n, N) : enumerate_boson_finals(n, N);
}

void full_distribution(const ComplexMatrix& unitary, const ModeOccupation& initial, Statistics statistics,
                       const DistributionSink& sink, unsigned workers) {
    const FinalStates finals = final_states_for(statistics, initial.modes(), initial.particles());
    const std::uint64_t total = finals.size();
    if (total > kMaxEnumeration) {
        throw ResourceBound(std::to_string(total) + " final states exceed the enumeration bound of " +
                            std::to_string(kMaxEnumeration));
    }
    // fail fast on a bad problem before spinning up workers
    TransitionProblem{unitary, initial, *finals.begin(), statistics}.validate();
    ordered_parallel_map(
        finals, workers,
        [&](const ModeOccupation& s) { return probability(TransitionProblem{unitary, initial, s, statistics}); },
        [&](const ModeOccupation& s, double p) { sink(s, p); });
}

}  // namespace hyperwalk
