// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperwalk/supplaw.hpp"

#include <bit>
#include <cmath>
#include <numeric>

#include "gtest/gtest.h"
#include "hyperwalk/error.hpp"
#include "hyperwalk/figure4.hpp"
#include "hyperwalk/unitary.hpp"
#include "oracles.hpp"

using namespace hyperwalk;

namespace {

SymmetrySet S(std::initializer_list<int> p) { return SymmetrySet::from_segmentations(p); }

const ModeOccupation r_a({3, 0, 1, 0, 0, 3, 0, 1});
const ModeOccupation r_b({0, 0, 2, 2, 0, 0, 2, 2});
const ModeOccupation r_c({1, 1, 1, 1, 1, 1, 1, 1});

const HypercubeSpec cube{3, 1, {}};

/// Particle count on the modes whose Walsh sign under p is -1, computed
/// from the xor picture of the hypercube labels.
int odd_side_count(const SymmetrySet& p, const ModeOccupation& s, int d, int m) {
    int mask = 0;
    for (int q : p.segmentations()) mask |= (1 << d) / q;
    int count = 0;
    for (int j = 0; j < s.modes(); ++j) {
        if (std::popcount(static_cast<unsigned>((j / m) & mask)) % 2 == 1) count += s.counts()[static_cast<std::size_t>(j)];
    }
    return count;
}

PredictionRecord classify_one(const ModeOccupation& r, const ModeOccupation& s, int d, Statistics st, int m = 1) {
    return Classifier(r, d, m, st).classify(s);
}

HypercubeSpec triangle(std::uint64_t seed) { return HypercubeSpec{1, 3, random_unitary(3, seed)}; }

}  // namespace

TEST(supplaw, boson_predictions) {
    EXPECT_EQ(predict_boson(S({2, 8}), ModeOccupation({1, 1, 1, 2, 2, 0, 0, 1}), 3), Verdict::Suppressed);
    EXPECT_EQ(predict_boson(S({4}), ModeOccupation({2, 0, 2, 0, 2, 1, 0, 1}), 3), Verdict::Suppressed);
    EXPECT_EQ(predict_boson(S({2}), ModeOccupation({1, 1, 1, 1, 1, 1, 1, 1}), 3), Verdict::Allowed);
    EXPECT_EQ(predict_boson(S({2}), ModeOccupation({3, 0, 0, 0, 1, 0}), 1, 3), Verdict::Suppressed);
    EXPECT_EQ(predict_boson(S({2}), ModeOccupation({2, 0, 0, 2, 0, 0}), 1, 3), Verdict::Allowed);
    EXPECT_THROW(predict_boson(S({2}), ModeOccupation({1, 0, 0}), 1, 1), InvalidArgument);
    EXPECT_THROW(predict_boson(S({4}), ModeOccupation({1, 0, 0, 0, 0, 1}), 1, 3), InvalidArgument);
}

TEST(supplaw, fermion_predictions) {
    EXPECT_EQ(predict_fermion(S({2, 4}), ModeOccupation({1, 0, 0, 1}), 2), Verdict::Suppressed);
    EXPECT_EQ(predict_fermion(S({2, 4}), ModeOccupation({1, 1, 0, 0}), 2), Verdict::Allowed);
    EXPECT_EQ(predict_fermion(S({2}), ModeOccupation({1, 1}), 1), Verdict::Allowed);
    EXPECT_THROW(predict_fermion(S({2}), ModeOccupation({2, 0}), 1), InvalidArgument);
}

TEST(supplaw, predictions_match_walsh_counting) {
    for (int d = 1; d <= 3; ++d) {
        for (int m = 1; m <= 2; ++m) {
            const int n = (1 << d) * m;
            for (const auto& s : enumerate_boson_finals(n, 4)) {
                for (const auto& p : all_symmetry_sets(d)) {
                    const int count = odd_side_count(p, s, d, m);
                    ASSERT_EQ(predict_boson(p, s, d, m) == Verdict::Suppressed, count % 2 == 1);
                    if (s.is_fermionic()) {
                        ASSERT_EQ(predict_fermion(p, s, d, m) == Verdict::Suppressed, 2 * count != 4);
                    }
                }
            }
        }
    }
}

TEST(supplaw, classification_examples) {
    const auto rec = classify_one(r_a, ModeOccupation({1, 1, 1, 2, 2, 0, 0, 1}), 3, Statistics::Boson);
    EXPECT_TRUE(rec.any_suppressed);
    EXPECT_EQ(rec.classification_label(), "2,8");
    ASSERT_EQ(rec.verdicts.size(), 1u);

    const ModeOccupation s_b({1, 2, 0, 2, 2, 0, 0, 1});
    EXPECT_FALSE(classify_one(r_a, s_b, 3, Statistics::Boson).any_suppressed);
    const auto rec_b = classify_one(r_b, s_b, 3, Statistics::Boson);
    EXPECT_TRUE(rec_b.any_suppressed);
    EXPECT_EQ(rec_b.verdicts.size(), 3u);

    const ModeOccupation s_d({0, 1, 1, 2, 3, 0, 0, 1});
    for (const auto& r : {r_a, r_b, r_c}) {
        const auto rec_d = classify_one(r, s_d, 3, Statistics::Boson);
        EXPECT_FALSE(rec_d.any_suppressed);
        EXPECT_EQ(rec_d.classification_label(), "unsuppressed");
    }

    const Classifier none(ModeOccupation({1, 0, 0, 0, 0, 0, 0, 0}), 3, 1, Statistics::Boson);
    EXPECT_FALSE(none.applicable());
    EXPECT_EQ(none.eta(), 0);
    EXPECT_THROW(Classifier(r_a, 3, 1, Statistics::Distinguishable), InvalidArgument);
    EXPECT_THROW(Classifier(r_a, 3, 1, Statistics::Fermion), InvalidArgument);
}

TEST(supplaw, suppressed_counts_for_the_cube) {
    const std::uint64_t expected[3] = {3200, 4800, 5600};
    const double ideal[3] = {0.5, 0.75, 0.875};
    const ModeOccupation inputs[3] = {r_a, r_b, r_c};
    for (int i = 0; i < 3; ++i) {
        const auto report = ratio_exact(inputs[i], cube, Statistics::Boson);
        EXPECT_EQ(report.exact_total, 6435u);
        EXPECT_EQ(report.exact_suppressed, expected[i]);
        EXPECT_NEAR(report.exact_ratio, ideal[i], 0.02);
        ASSERT_TRUE(report.approx.has_value());
        EXPECT_DOUBLE_EQ(report.approx->value, ideal[i]);
    }
}

TEST(supplaw, fermion_exact_ratio) {
    const ModeOccupation r({1, 1, 0, 0, 1, 1, 0, 0});
    const auto report = ratio_exact(r, cube, Statistics::Fermion);
    EXPECT_EQ(report.eta, 2);
    EXPECT_EQ(report.exact_total, 70u);
    EXPECT_EQ(report.exact_suppressed, 54u);
    EXPECT_NEAR(report.exact_ratio, 27.0 / 35.0, 1e-15);
    EXPECT_NEAR(fermion_ratio_exact_form(2, 4, 8), 27.0 / 35.0, 1e-12);
}

TEST(supplaw, ratio_formulas) {
    EXPECT_DOUBLE_EQ(boson_ratio_approx(1), 0.5);
    EXPECT_DOUBLE_EQ(boson_ratio_approx(3), 0.875);
    EXPECT_NEAR(fermion_ratio_limit(2, 4), 0.90625, 1e-12);
    for (int e = 1; e <= 5; ++e) {
        const int N = 1 << e;
        double log_ratio = std::lgamma(N + 1.0) - N * std::log(static_cast<double>(N));
        EXPECT_NEAR(fermion_ratio_limit(e, N), 1.0 - std::exp(log_ratio), 1e-12) << "eta=" << e;
    }
    // the finite-n form approaches the limit as n grows
    EXPECT_NEAR(fermion_ratio_exact_form(2, 8, 1 << 16), fermion_ratio_limit(2, 8), 1e-3);

    const auto approx = ratio_approx(2, Statistics::Fermion, 4, 8);
    EXPECT_NEAR(approx.value, 27.0 / 35.0, 1e-12);
    ASSERT_TRUE(approx.large_n_limit.has_value());
    EXPECT_NEAR(*approx.large_n_limit, 0.90625, 1e-12);
    EXPECT_NEAR(ratio_approx(2, Statistics::Fermion, 4).value, 0.90625, 1e-12);
    EXPECT_FALSE(ratio_approx(2, Statistics::Boson, 4).large_n_limit.has_value());

    EXPECT_THROW(ratio_approx(0, Statistics::Boson, 4), InvalidArgument);
    EXPECT_THROW(ratio_approx(2, Statistics::Fermion, 6), InvalidArgument);
    EXPECT_THROW(ratio_approx(2, Statistics::Fermion, 4, 6), InvalidArgument);
    EXPECT_THROW(ratio_approx(1, Statistics::Distinguishable, 4), InvalidArgument);
}

TEST(supplaw, verify_examples) {
    const auto rb = verify(r_b, cube, Statistics::Boson);
    EXPECT_TRUE(rb.pass);
    EXPECT_TRUE(rb.law_applicable);
    EXPECT_EQ(rb.eta, 2);
    EXPECT_EQ(rb.predicted_suppressed_count, 4800u);
    EXPECT_EQ(rb.total_finals, 6435u);
    EXPECT_LT(rb.max_predicted_probability, 1e-10);
    EXPECT_EQ(rb.violation_count, 0u);
    EXPECT_NEAR(rb.probability_sum, 1.0, 1e-10);

    const auto fermions = verify(ModeOccupation({1, 0, 0, 1}), HypercubeSpec{2, 1, {}}, Statistics::Fermion);
    EXPECT_TRUE(fermions.pass);
    EXPECT_EQ(fermions.total_finals, 6u);
    EXPECT_EQ(fermions.predicted_suppressed_count, 2u);
    ASSERT_EQ(fermions.symmetry_sets.size(), 1u);
    EXPECT_EQ(fermions.symmetry_sets[0], S({2, 4}));
    EXPECT_NEAR(fermions.probability_sum, 1.0, 1e-10);

    const auto spec = triangle(5);
    const auto invariant = verify(ModeOccupation({2, 0, 0, 2, 0, 0}), spec, Statistics::Boson);
    EXPECT_TRUE(invariant.pass);
    EXPECT_EQ(invariant.eta, 1);

    const ModeOccupation broken({2, 0, 0, 1, 1, 0});
    const auto inapplicable = verify(broken, spec, Statistics::Boson);
    EXPECT_FALSE(inapplicable.law_applicable);
    EXPECT_EQ(inapplicable.predicted_suppressed_count, 0u);
    const auto u = build_generalized(spec);
    EXPECT_GT(probability(TransitionProblem{u, broken, ModeOccupation({3, 0, 0, 0, 1, 0}), Statistics::Boson}), 1e-6);

    EXPECT_THROW(verify(ModeOccupation({11, 11}), HypercubeSpec{1, 1, {}}, Statistics::Boson), ResourceBound);
    EXPECT_FALSE(verify(r_b, cube, Statistics::Boson, 1e-300).pass);
}

TEST(supplaw, law_is_sound_on_small_cubes) {
    for (int d = 1; d <= 3; ++d) {
        const HypercubeSpec spec{d, 1, {}};
        const int n = 1 << d;
        for (auto st : {Statistics::Boson, Statistics::Fermion}) {
            const int max_n = st == Statistics::Boson ? (d == 3 ? 4 : 6) : 4;
            for (int N = 2; N <= max_n; N += 2) {
                if (st == Statistics::Fermion && N > n) continue;
                for (const auto& r : final_states_for(st, n, N)) {
                    if (invariance_group(r, d).empty()) continue;
                    const auto report = verify(r, spec, st);
                    ASSERT_TRUE(report.pass) << to_string(st) << " " << format_occupation(r);
                    ASSERT_NEAR(report.probability_sum, 1.0, 1e-10);
                }
            }
        }
    }
}

TEST(supplaw, law_is_sound_for_six_bosons_on_the_cube) {
    std::uint64_t checked = 0;
    for (const auto& r : enumerate_boson_finals(8, 6)) {
        if (invariance_group(r, 3).empty()) continue;
        ASSERT_TRUE(verify(r, cube, Statistics::Boson, kSuppressionThreshold, 4).pass) << format_occupation(r);
        ++checked;
    }
    EXPECT_GT(checked, 0u);
}

TEST(supplaw, boson_and_fermion_relation_modulo_four) {
    for (int d = 1; d <= 3; ++d) {
        const int n = 1 << d;
        for (int N = 2; N <= n; N += 2) {
            for (const auto& s : enumerate_fermion_finals(n, N)) {
                for (const auto& p : all_symmetry_sets(d)) {
                    const bool boson = predict_boson(p, s, d) == Verdict::Suppressed;
                    const bool fermion = predict_fermion(p, s, d) == Verdict::Suppressed;
                    if (N % 4 == 0 && boson) ASSERT_TRUE(fermion);
                    if (N % 4 == 2 && !boson) ASSERT_TRUE(fermion);
                }
            }
        }
    }
    // an odd count may still be balanced when N = 2 mod 4
    EXPECT_EQ(predict_fermion(S({2}), ModeOccupation({1, 1, 1, 0, 1, 1, 1, 0}), 3), Verdict::Allowed);
    EXPECT_EQ(predict_boson(S({2}), ModeOccupation({1, 1, 1, 0, 1, 1, 1, 0}), 3), Verdict::Suppressed);
}

TEST(supplaw, generalized_law_is_independent_of_the_subgraph) {
    const ModeOccupation r({2, 0, 0, 2, 0, 0});
    std::vector<std::string> reference;
    classify(r, triangle(1), Statistics::Boson,
             [&](const PredictionRecord& rec) { reference.push_back(rec.classification_label()); });
    for (std::uint64_t seed = 2; seed <= 6; ++seed) {
        const auto spec = triangle(seed);
        std::vector<std::string> labels;
        classify(r, spec, Statistics::Boson,
                 [&](const PredictionRecord& rec) { labels.push_back(rec.classification_label()); });
        EXPECT_EQ(labels, reference);
        EXPECT_TRUE(verify(r, spec, Statistics::Boson).pass);
    }
    // two generalized squares with three-mode subgraphs
    const HypercubeSpec square{2, 3, random_unitary(3, 77)};
    EXPECT_TRUE(verify(ModeOccupation({1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0}), square, Statistics::Boson).pass);
}

TEST(supplaw, figure_sets_and_probabilities) {
    const auto result = figure4::run(4);
    ASSERT_EQ(result.rows.size(), 6435u);
    std::uint64_t sizes[4] = {};
    for (const auto& row : result.rows) {
        ++sizes[static_cast<int>(row.set)];
        const bool zero_a = row.set == figure4::Set::A;
        const bool zero_b = zero_a || row.set == figure4::Set::B;
        const bool zero_c = zero_b || row.set == figure4::Set::C;
        if (zero_a) ASSERT_LT(row.probability[0], 1e-10);
        if (zero_b) ASSERT_LT(row.probability[1], 1e-10);
        if (zero_c) ASSERT_LT(row.probability[2], 1e-10);
    }
    EXPECT_EQ(sizes[0], 3200u);
    EXPECT_EQ(sizes[0] + sizes[1], 4800u);
    EXPECT_EQ(sizes[0] + sizes[1] + sizes[2], 5600u);
    for (double total : result.probability_sum) EXPECT_NEAR(total, 1.0, 1e-8);

    EXPECT_EQ(figure4::classify_set(ModeOccupation({1, 1, 1, 2, 2, 0, 0, 1})), figure4::Set::A);
    EXPECT_EQ(figure4::classify_set(ModeOccupation({1, 2, 0, 2, 2, 0, 0, 1})), figure4::Set::B);
    EXPECT_EQ(figure4::classify_set(ModeOccupation({2, 0, 2, 0, 2, 1, 0, 1})), figure4::Set::C);
    EXPECT_EQ(figure4::classify_set(ModeOccupation({0, 1, 1, 2, 3, 0, 0, 1})), figure4::Set::D);
}
