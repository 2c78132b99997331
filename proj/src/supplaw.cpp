// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperwalk/supplaw.hpp"

#include <cmath>
#include <numbers>

#include "hyperwalk/error.hpp"
#include "hyperwalk/parallel.hpp"

namespace hyperwalk {

namespace {

void check_geometry(const SymmetrySet& p, int n, int d, int m) {
    if (m < 1 || subgraph_size(n, d) != m) {
        throw InvalidArgument("final state has " + std::to_string(n) + " modes, expected 2^" + std::to_string(d) + "*" +
                              std::to_string(m));
    }
    if (p.max_level() > d) {
        throw InvalidArgument("segmentation " + std::to_string(p.max_segmentation()) + " exceeds 2^d for d=" +
                              std::to_string(d));
    }
}

/// Number of particles on modes labelled -1.
int count_on_subset(std::span<const int> labels, const ModeOccupation& s) {
    int count = 0;
    const auto counts = s.counts();
    for (std::size_t j = 0; j < labels.size(); ++j) {
        if (labels[j] < 0) count += counts[j];
    }
    return count;
}

Verdict boson_verdict(std::span<const int> labels, const ModeOccupation& s) {
    return count_on_subset(labels, s) % 2 == 1 ? Verdict::Suppressed : Verdict::Allowed;
}

Verdict fermion_verdict(std::span<const int> labels, const ModeOccupation& s) {
    // sum_j A(d_j(s)) = N - 2 * (count on P); nonzero unless exactly N/2 sit on P
    return 2 * count_on_subset(labels, s) != s.particles() ? Verdict::Suppressed : Verdict::Allowed;
}

void require_law_statistics(Statistics statistics) {
    if (statistics == Statistics::Distinguishable) {
        throw InvalidArgument("suppression laws apply to bosons and fermions only");
    }
}

double log_binomial(double n, double k) { return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1); }

void check_eta_divides(int eta, int value, const char* what) {
    if (eta < 1 || eta > 30) throw InvalidArgument("eta must lie in 1..30");
    if (value < 0 || value % (1 << eta) != 0) {
        throw InvalidArgument(std::string(what) + "=" + std::to_string(value) + " is not a multiple of 2^eta=" +
                              std::to_string(1 << eta));
    }
}

}  // namespace

Verdict predict_boson(const SymmetrySet& p, const ModeOccupation& final_state, int d, int m) {
    check_geometry(p, final_state.modes(), d, m);
    return boson_verdict(partition(p, final_state.modes()).labels, final_state);
}

Verdict predict_fermion(const SymmetrySet& p, const ModeOccupation& final_state, int d, int m) {
    check_geometry(p, final_state.modes(), d, m);
    if (!final_state.is_fermionic()) throw InvalidArgument("fermionic final state must have 0/1 occupations");
    return fermion_verdict(partition(p, final_state.modes()).labels, final_state);
}

std::string PredictionRecord::classification_label() const {
    return classification ? format_symmetry_set(*classification) : std::string("unsuppressed");
}

Classifier::Classifier(const ModeOccupation& initial, int d, int m, Statistics statistics)
    : initial_(initial), d_(d), m_(m), statistics_(statistics) {
    require_law_statistics(statistics);
    if (m < 1 || subgraph_size(initial.modes(), d) != m) {
        throw InvalidArgument("initial state has " + std::to_string(initial.modes()) + " modes, expected 2^" +
                              std::to_string(d) + "*" + std::to_string(m));
    }
    if (statistics == Statistics::Fermion && !initial.is_fermionic()) {
        throw InvalidArgument("Pauli principle violated by the fermionic initial state");
    }
    group_ = invariance_group(initial, d);
    eta_ = hyperwalk::eta(initial, d);
    labels_.reserve(group_.size());
    for (const auto& p : group_) labels_.push_back(partition(p, initial.modes()).labels);
}

PredictionRecord Classifier::classify(const ModeOccupation& final_state) const {
    if (final_state.modes() != initial_.modes() || final_state.particles() != initial_.particles()) {
        throw InvalidArgument("final state does not match the initial mode and particle numbers");
    }
    if (statistics_ == Statistics::Fermion && !final_state.is_fermionic()) {
        throw InvalidArgument("fermionic final state must have 0/1 occupations");
    }
    PredictionRecord record{final_state, {}, false, std::nullopt};
    record.verdicts.reserve(group_.size());
    for (std::size_t i = 0; i < group_.size(); ++i) {
        const Verdict v = statistics_ == Statistics::Boson ? boson_verdict(labels_[i], final_state)
                                                           : fermion_verdict(labels_[i], final_state);
        record.verdicts.emplace_back(group_[i], v);
        if (v == Verdict::Suppressed && !record.any_suppressed) {
            record.any_suppressed = true;
            record.classification = group_[i];
        }
    }
    return record;
}

void classify(const ModeOccupation& initial, const HypercubeSpec& spec, Statistics statistics,
              const PredictionSink& sink) {
    const Classifier classifier(initial, spec.d, spec.m, statistics);
    for (const auto& s : final_states_for(statistics, initial.modes(), initial.particles())) {
        sink(classifier.classify(s));
    }
}

double boson_ratio_approx(int eta) {
    if (eta < 1) throw InvalidArgument("eta must be >= 1");
    return 1.0 - std::ldexp(1.0, -eta);
}

double fermion_ratio_exact_form(int eta, int N, int n) {
    check_eta_divides(eta, N, "N");
    check_eta_divides(eta, n, "n");
    if (N > n) throw InvalidArgument("Pauli principle: N > n");
    const double cells = std::ldexp(1.0, eta);
    const double log_allowed = cells * log_binomial(n / cells, N / cells);
    return 1.0 - std::exp(log_allowed - log_binomial(n, N));
}

double fermion_ratio_limit(int eta, int N) {
    check_eta_divides(eta, N, "N");
    const double cells = std::ldexp(1.0, eta);
    const double log_kept =
        std::lgamma(N + 1.0) - eta * N * std::numbers::ln2 - cells * std::lgamma(N / cells + 1.0);
    return 1.0 - std::exp(log_kept);
}

RatioApprox ratio_approx(int eta, Statistics statistics, int N, std::optional<int> n) {
    require_law_statistics(statistics);
    if (statistics == Statistics::Boson) return {boson_ratio_approx(eta), std::nullopt};
    const double limit = fermion_ratio_limit(eta, N);
    if (!n) return {limit, limit};
    return {fermion_ratio_exact_form(eta, N, *n), limit};
}

RatioReport ratio_exact(const ModeOccupation& initial, const HypercubeSpec& spec, Statistics statistics) {
    const Classifier classifier(initial, spec.d, spec.m, statistics);
    const FinalStates finals = final_states_for(statistics, initial.modes(), initial.particles());
    if (finals.size() > kMaxEnumeration) throw ResourceBound("final-state space too large for exact counting");

    RatioReport report;
    report.statistics = statistics;
    report.eta = classifier.eta();
    for (const auto& s : finals) {
        ++report.exact_total;
        if (classifier.classify(s).any_suppressed) ++report.exact_suppressed;
    }
    report.exact_ratio = static_cast<double>(report.exact_suppressed) / static_cast<double>(report.exact_total);
    if (report.eta >= 1) report.approx = ratio_approx(report.eta, statistics, initial.particles(), initial.modes());
    return report;
}

VerifyReport verify(const ModeOccupation& initial, const HypercubeSpec& spec, Statistics statistics,
                    double tolerance, unsigned workers) {
    if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
    const Classifier classifier(initial, spec.d, spec.m, statistics);
    if (statistics == Statistics::Boson && initial.particles() > permanent_bound()) {
        throw ResourceBound("N=" + std::to_string(initial.particles()) + " bosons exceed the permanent bound N <= " +
                            std::to_string(permanent_bound()) + " (set HYPERWALK_MAX_N to raise it)");
    }
    const ComplexMatrix unitary = build_generalized(spec);

    VerifyReport report;
    report.initial = initial;
    report.statistics = statistics;
    report.eta = classifier.eta();
    report.symmetry_sets = classifier.group();
    report.law_applicable = classifier.applicable();
    report.tolerance = tolerance;

    full_distribution(
        unitary, initial, statistics,
        [&](const ModeOccupation& s, double p) {
            ++report.total_finals;
            report.probability_sum += p;
            if (classifier.classify(s).any_suppressed) {
                ++report.predicted_suppressed_count;
                if (!report.worst_state || p > report.max_predicted_probability) {
                    report.max_predicted_probability = p;
                    report.worst_state = s;
                }
                if (!(p < tolerance)) ++report.violation_count;
            } else if (p < tolerance) {
                ++report.extra_zero_count;
            }
        },
        workers);
    report.pass = report.violation_count == 0;
    return report;
}

}  // namespace hyperwalk
