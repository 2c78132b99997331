// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Fock-state representations and lazy enumeration of final states.
 *
 * Mode indices are 1-based everywhere in the public surface: a
 * ModeAssignment holds values in 1..n and ModeOccupation::count(j) takes
 * j in 1..n.
 */

#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace hyperwalk {

/// Occupation list r = (r_1, ..., r_n) over n >= 1 modes.
class ModeOccupation {
public:
    ModeOccupation() = default;
    explicit ModeOccupation(std::vector<int> counts);

    /// All-zero occupation over n modes.
    static ModeOccupation vacuum(int n);

    int modes() const noexcept { return static_cast<int>(counts_.size()); }
    int particles() const noexcept { return particles_; }

    /// Occupation of mode j, 1 <= j <= n.
    int count(int j) const;

    std::span<const int> counts() const noexcept { return counts_; }

    /// True when every entry is 0 or 1.
    bool is_fermionic() const noexcept;

    friend bool operator==(const ModeOccupation&, const ModeOccupation&) = default;
    friend auto operator<=>(const ModeOccupation& a, const ModeOccupation& b) {
        return a.counts_ <=> b.counts_;
    }

private:
    std::vector<int> counts_;
    int particles_ = 0;
};

/// Sorted per-particle mode list d(r), entries in 1..n.
class ModeAssignment {
public:
    ModeAssignment() = default;
    /// Sorts the given modes; entries must be >= 1.
    explicit ModeAssignment(std::vector<int> modes);

    int particles() const noexcept { return static_cast<int>(modes_.size()); }
    std::span<const int> modes() const noexcept { return modes_; }
    int operator[](std::size_t i) const { return modes_[i]; }

    friend bool operator==(const ModeAssignment&, const ModeAssignment&) = default;

private:
    std::vector<int> modes_;
};

ModeAssignment to_assignment(const ModeOccupation& occ);

/// Throws InvalidArgument if any entry lies outside 1..n.
ModeOccupation from_assignment(const ModeAssignment& ma, int n);

/// C(N+n-1, N). Throws ResourceBound if the value does not fit in 64 bits.
std::uint64_t count_boson_finals(int n, int N);

/// C(n, N); zero when N > n.
std::uint64_t count_fermion_finals(int n, int N);

/// Exact binomial coefficient; throws ResourceBound on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

enum class FinalKind { Boson, Fermion };

/**
 * Lazy range over all final states of N particles on n modes.
 *
 * States are produced in descending lexicographic order of their
 * occupation lists, so the first boson state is (N,0,...,0) and the last
 * is (0,...,0,N). Iterators hold O(n) state; independent iterators may be
 * consumed concurrently.
 */
class FinalStates {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = ModeOccupation;
        using difference_type = std::ptrdiff_t;
        using pointer = const ModeOccupation*;
        using reference = const ModeOccupation&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_;
        }

    private:
        friend class FinalStates;
        iterator(FinalKind kind, int n, int N);

        void sync();

        FinalKind kind_ = FinalKind::Boson;
        std::vector<int> work_;  // occupation (boson) or 0-based positions (fermion)
        ModeOccupation current_;
        int n_ = 0;
        bool done_ = true;
    };

    FinalStates(FinalKind kind, int n, int N);

    iterator begin() const { return iterator(kind_, n_, particles_); }
    iterator end() const { return iterator(); }

    std::uint64_t size() const;
    int modes() const noexcept { return n_; }
    int particles() const noexcept { return particles_; }
    FinalKind kind() const noexcept { return kind_; }

private:
    FinalKind kind_;
    int n_;
    int particles_;
};

/// Every multiset of N particles over n modes; requires n >= 1, N >= 0.
FinalStates enumerate_boson_finals(int n, int N);

/// Every 0/1 occupation with exactly N ones; throws InvalidArgument if N > n.
FinalStates enumerate_fermion_finals(int n, int N);

/// "3,0,1,0" form used by CLI flags and CSV cells.
std::string format_occupation(const ModeOccupation& occ);

/// Parses "3,0,1,0"; whitespace around entries is ignored.
ModeOccupation parse_occupation(const std::string& text);

}  // namespace hyperwalk
