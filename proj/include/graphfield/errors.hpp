// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace graphfield {

/// Base class for all graphfield errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input (bad graph, bad point, bad configuration). CLI exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Numerical failure (factorization, eigensolver). CLI exit code 3.
class SolverError : public Error {
public:
    using Error::Error;
};

class NonPositiveLengthError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DisconnectedGraphError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidPointError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NonPositiveCoefficientError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SizeLimitError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ConfigError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

}  // namespace graphfield
