// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hyperwalk {

/// Precondition violated by caller-supplied data (bad sizes, bad indices,
/// Pauli violations, non-unitary input).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured resource bound (permanent size,
/// enumeration size, dense matrix dimension).
class ResourceBound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hyperwalk
