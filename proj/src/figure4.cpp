// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperwalk/figure4.hpp"

#include <algorithm>

#include "hyperwalk/interference.hpp"
#include "hyperwalk/parallel.hpp"
#include "hyperwalk/symmetry.hpp"
#include "hyperwalk/unitary.hpp"

namespace hyperwalk::figure4 {

namespace {

bool odd_on(const SymmetrySet& p, const ModeOccupation& s) {
    int count = 0;
    for (int j = 1; j <= s.modes(); ++j) {
        if (walsh(j, p, s.modes()) < 0) count += s.count(j);
    }
    return count % 2 == 1;
}

}  // namespace

ModeOccupation initial_a() { return ModeOccupation({3, 0, 1, 0, 0, 3, 0, 1}); }
ModeOccupation initial_b() { return ModeOccupation({0, 0, 2, 2, 0, 0, 2, 2}); }
ModeOccupation initial_c() { return ModeOccupation({1, 1, 1, 1, 1, 1, 1, 1}); }

char set_label(Set set) {
    switch (set) {
        case Set::A: return 'a';
        case Set::B: return 'b';
        case Set::C: return 'c';
        case Set::D: return 'd';
    }
    return '?';
}

Set classify_set(const ModeOccupation& final_state) {
    static const SymmetrySet p28 = SymmetrySet::from_segmentations({2, 8});
    static const SymmetrySet p2 = SymmetrySet::from_segmentations({2});
    static const SymmetrySet p8 = SymmetrySet::from_segmentations({8});
    static const SymmetrySet p4 = SymmetrySet::from_segmentations({4});
    if (odd_on(p28, final_state)) return Set::A;
    if (odd_on(p2, final_state) || odd_on(p8, final_state)) return Set::B;
    if (odd_on(p4, final_state)) return Set::C;
    return Set::D;
}

Result run(unsigned workers) {
    const ComplexMatrix u = build_hc_tensor(kDimension);
    const std::array<ModeOccupation, 3> initials{initial_a(), initial_b(), initial_c()};

    Result result;
    for (int i = 0; i < 4; ++i) result.summary[static_cast<std::size_t>(i)].set = static_cast<Set>(i);

    ordered_parallel_map(
        enumerate_boson_finals(1 << kDimension, kParticles), workers,
        [&](const ModeOccupation& s) {
            std::array<double, 3> p{};
            for (std::size_t i = 0; i < 3; ++i) p[i] = probability(TransitionProblem{u, initials[i], s, Statistics::Boson});
            return p;
        },
        [&](const ModeOccupation& s, const std::array<double, 3>& p) {
            const Set set = classify_set(s);
            auto& summary = result.summary[static_cast<std::size_t>(set)];
            ++summary.size;
            for (std::size_t i = 0; i < 3; ++i) {
                summary.max_probability[i] = std::max(summary.max_probability[i], p[i]);
                result.probability_sum[i] += p[i];
            }
            result.rows.push_back({s, set, p});
        });
    return result;
}

}  // namespace hyperwalk::figure4
