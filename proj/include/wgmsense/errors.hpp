#pragma once

#include <stdexcept>
#include <string>

namespace wgmsense {

/// Raised when a caller-supplied parameter is outside its documented domain.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a computation cannot proceed on otherwise valid input: a flat
/// spectrum with no operating point, or a grid too coarse for the requested
/// convolution.
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FlatSpectrumError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class GridResolutionError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

}  // namespace wgmsense
