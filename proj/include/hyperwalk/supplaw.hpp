// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file supplaw.hpp
 * @brief Symmetry suppression laws on (generalized) hypercubes.
 *
 * If the initial state is invariant under S(p), then
 *   bosons:   odd particle count on the Walsh subset P(p)   => P_B = 0
 *   fermions: particle count on P(p) differs from N/2        => P_F = 0
 * Both predicates depend only on p and the final state. The laws are
 * sufficient conditions; states outside them may still vanish.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperwalk/fock.hpp"
#include "hyperwalk/interference.hpp"
#include "hyperwalk/symmetry.hpp"
#include "hyperwalk/unitary.hpp"

namespace hyperwalk {

enum class Verdict { Allowed, Suppressed };

/// n must equal 2^d * m and p may only use segmentations up to 2^d.
Verdict predict_boson(const SymmetrySet& p, const ModeOccupation& final_state, int d, int m = 1);

/// As predict_boson; additionally throws InvalidArgument for non-0/1 occupations.
Verdict predict_fermion(const SymmetrySet& p, const ModeOccupation& final_state, int d, int m = 1);

struct PredictionRecord {
    ModeOccupation final_state;
    /// One entry per member of the initial state's invariance group, in lex_less order.
    std::vector<std::pair<SymmetrySet, Verdict>> verdicts;
    bool any_suppressed = false;
    /// First (lex_less) symmetry set that suppresses the state; empty when unsuppressed.
    std::optional<SymmetrySet> classification;

    /// Comma-joined segmentations of `classification`, or "unsuppressed".
    std::string classification_label() const;
};

/**
 * Precomputes the invariance group of an initial state and the Walsh
 * labels of every member so that many final states can be classified
 * cheaply. Boson and Fermion statistics only.
 */
class Classifier {
public:
    Classifier(const ModeOccupation& initial, int d, int m, Statistics statistics);

    const ModeOccupation& initial() const noexcept { return initial_; }
    const std::vector<SymmetrySet>& group() const noexcept { return group_; }
    int eta() const noexcept { return eta_; }
    /// False when the initial state has no invariances.
    bool applicable() const noexcept { return !group_.empty(); }
    Statistics statistics() const noexcept { return statistics_; }

    PredictionRecord classify(const ModeOccupation& final_state) const;

private:
    ModeOccupation initial_;
    int d_;
    int m_;
    Statistics statistics_;
    std::vector<SymmetrySet> group_;
    std::vector<std::vector<int>> labels_;
    int eta_ = 0;
};

using PredictionSink = std::function<void(const PredictionRecord&)>;

/// Classifies every final state of the matching statistics in enumeration order.
void classify(const ModeOccupation& initial, const HypercubeSpec& spec, Statistics statistics,
              const PredictionSink& sink);

/// Closed-form suppression-ratio estimate.
struct RatioApprox {
    double value = 0.0;                   ///< 1 - 2^-eta (bosons) or the exact binomial form (fermions)
    std::optional<double> large_n_limit;  ///< fermions only: the n >> N factorial expression
};

/// 1 - 2^-eta; requires eta >= 1.
double boson_ratio_approx(int eta);

/// 1 - C(n/2^eta, N/2^eta)^(2^eta) / C(n, N). Requires 2^eta | N and 2^eta | n.
double fermion_ratio_exact_form(int eta, int N, int n);

/// 1 - N! / (2^(eta N) [(N/2^eta)!]^(2^eta)). Requires 2^eta | N.
double fermion_ratio_limit(int eta, int N);

/// For fermions without n, value is the large-n limit. Throws InvalidArgument
/// on eta < 1 or divisibility violations.
RatioApprox ratio_approx(int eta, Statistics statistics, int N, std::optional<int> n = std::nullopt);

struct RatioReport {
    Statistics statistics = Statistics::Boson;
    int eta = 0;
    std::uint64_t exact_suppressed = 0;
    std::uint64_t exact_total = 0;
    double exact_ratio = 0.0;
    std::optional<RatioApprox> approx;  ///< absent when eta = 0
};

RatioReport ratio_exact(const ModeOccupation& initial, const HypercubeSpec& spec, Statistics statistics);

struct VerifyReport {
    ModeOccupation initial;
    Statistics statistics = Statistics::Boson;
    int eta = 0;
    std::vector<SymmetrySet> symmetry_sets;
    bool law_applicable = false;
    std::uint64_t predicted_suppressed_count = 0;
    std::uint64_t total_finals = 0;
    double max_predicted_probability = 0.0;
    std::uint64_t violation_count = 0;
    std::optional<ModeOccupation> worst_state;  ///< argmax over predicted-suppressed states
    /// Unpredicted states that vanish anyway; informational only.
    std::uint64_t extra_zero_count = 0;
    double probability_sum = 0.0;
    double tolerance = kSuppressionThreshold;
    bool pass = false;
};

/**
 * Computes every transition probability from `initial` and checks that all
 * states predicted suppressed fall below `tolerance`. Throws ResourceBound
 * if the permanent bound or the enumeration bound would be exceeded.
 */
VerifyReport verify(const ModeOccupation& initial, const HypercubeSpec& spec, Statistics statistics,
                    double tolerance = kSuppressionThreshold, unsigned workers = 1);

}  // namespace hyperwalk
