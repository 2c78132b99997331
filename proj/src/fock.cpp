// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperwalk/fock.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "hyperwalk/error.hpp"

namespace hyperwalk {

ModeOccupation::ModeOccupation(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) throw InvalidArgument("mode occupation needs at least one mode");
    for (int c : counts_) {
        if (c < 0) throw InvalidArgument("mode occupation entries must be non-negative");
    }
    particles_ = std::accumulate(counts_.begin(), counts_.end(), 0);
}

ModeOccupation ModeOccupation::vacuum(int n) {
    if (n < 1) throw InvalidArgument("mode count must be >= 1");
    return ModeOccupation(std::vector<int>(static_cast<std::size_t>(n), 0));
}

int ModeOccupation::count(int j) const {
    if (j < 1 || j > modes()) throw InvalidArgument("mode index out of range");
    return counts_[static_cast<std::size_t>(j - 1)];
}

bool ModeOccupation::is_fermionic() const noexcept {
    return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c <= 1; });
}

ModeAssignment::ModeAssignment(std::vector<int> modes) : modes_(std::move(modes)) {
    for (int m : modes_) {
        if (m < 1) throw InvalidArgument("mode assignment entries are 1-based");
    }
    std::sort(modes_.begin(), modes_.end());
}

ModeAssignment to_assignment(const ModeOccupation& occ) {
    std::vector<int> modes;
    modes.reserve(static_cast<std::size_t>(occ.particles()));
    const auto counts = occ.counts();
    for (std::size_t j = 0; j < counts.size(); ++j) {
        modes.insert(modes.end(), static_cast<std::size_t>(counts[j]), static_cast<int>(j) + 1);
    }
    return ModeAssignment(std::move(modes));
}

ModeOccupation from_assignment(const ModeAssignment& ma, int n) {
    if (n < 1) throw InvalidArgument("mode count must be >= 1");
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (int m : ma.modes()) {
        if (m > n) throw InvalidArgument("mode index " + std::to_string(m) + " exceeds n=" + std::to_string(n));
        ++counts[static_cast<std::size_t>(m - 1)];
    }
    return ModeOccupation(std::move(counts));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral at every step
        const std::uint64_t num = n - k + i;
        const std::uint64_t g = std::gcd(result, i);
        const std::uint64_t r = result / g;
        const std::uint64_t q = num / (i / g);
        if (r != 0 && q > std::numeric_limits<std::uint64_t>::max() / r) {
            throw ResourceBound("binomial coefficient overflows 64 bits");
        }
        result = r * q;
    }
    return result;
}

std::uint64_t count_boson_finals(int n, int N) {
    if (n < 1 || N < 0) throw InvalidArgument("need n >= 1 and N >= 0");
    return binomial(static_cast<std::uint64_t>(N + n - 1), static_cast<std::uint64_t>(N));
}

std::uint64_t count_fermion_finals(int n, int N) {
    if (n < 1 || N < 0) throw InvalidArgument("need n >= 1 and N >= 0");
    return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(N));
}

FinalStates::FinalStates(FinalKind kind, int n, int N) : kind_(kind), n_(n), particles_(N) {
    if (n < 1 || N < 0) throw InvalidArgument("need n >= 1 and N >= 0");
    if (kind == FinalKind::Fermion && N > n) {
        throw InvalidArgument("Pauli principle: N=" + std::to_string(N) + " fermions exceed n=" + std::to_string(n) + " modes");
    }
}

std::uint64_t FinalStates::size() const {
    return kind_ == FinalKind::Boson ? count_boson_finals(n_, particles_) : count_fermion_finals(n_, particles_);
}

FinalStates::iterator::iterator(FinalKind kind, int n, int N) : kind_(kind), n_(n), done_(false) {
    if (kind_ == FinalKind::Boson) {
        work_.assign(static_cast<std::size_t>(n), 0);
        work_[0] = N;
    } else {
        work_.resize(static_cast<std::size_t>(N));
        std::iota(work_.begin(), work_.end(), 0);
    }
    sync();
}

void FinalStates::iterator::sync() {
    if (kind_ == FinalKind::Boson) {
        current_ = ModeOccupation(work_);
        return;
    }
    std::vector<int> occ(static_cast<std::size_t>(n_), 0);
    for (int pos : work_) occ[static_cast<std::size_t>(pos)] = 1;
    current_ = ModeOccupation(std::move(occ));
}

FinalStates::iterator& FinalStates::iterator::operator++() {
    if (done_) return *this;
    if (kind_ == FinalKind::Boson) {
        // Descending lexicographic successor: move one particle from the
        // rightmost occupied non-final mode one step right and collect the
        // tail there.
        const int last = work_.back();
        work_.back() = 0;
        int i = n_ - 2;
        while (i >= 0 && work_[static_cast<std::size_t>(i)] == 0) --i;
        if (i < 0) {
            done_ = true;
            return *this;
        }
        --work_[static_cast<std::size_t>(i)];
        work_[static_cast<std::size_t>(i + 1)] = last + 1;
    } else {
        const int k = static_cast<int>(work_.size());
        int i = k - 1;
        while (i >= 0 && work_[static_cast<std::size_t>(i)] == n_ - k + i) --i;
        if (i < 0) {
            done_ = true;
            return *this;
        }
        ++work_[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) work_[static_cast<std::size_t>(j)] = work_[static_cast<std::size_t>(j - 1)] + 1;
    }
    sync();
    return *this;
}

FinalStates enumerate_boson_finals(int n, int N) { return FinalStates(FinalKind::Boson, n, N); }

FinalStates enumerate_fermion_finals(int n, int N) { return FinalStates(FinalKind::Fermion, n, N); }

std::string format_occupation(const ModeOccupation& occ) {
    std::string out;
    for (int c : occ.counts()) {
        if (!out.empty()) out += ',';
        out += std::to_string(c);
    }
    return out;
}

ModeOccupation parse_occupation(const std::string& text) {
    std::vector<int> counts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw InvalidArgument("empty entry in occupation list \"" + text + "\"");
        const std::string token = item.substr(b, e - b + 1);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) throw InvalidArgument("bad occupation entry \"" + token + "\"");
        counts.push_back(value);
    }
    return ModeOccupation(std::move(counts));
}

}  // namespace hyperwalk
