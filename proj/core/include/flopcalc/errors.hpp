#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace flopcalc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A value violates a type invariant (bad weight, n out of range, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A functor or formula was asked for a class outside the range where it is known.
class RangeError : public Error {
public:
    using Error::Error;
};

// Two bundles live on different model varieties.
class VarietyMismatch : public Error {
public:
    using Error::Error;
};

// The dimensions fed to a dimension chase contradict exactness.
class InconsistentError : public Error {
public:
    InconsistentError(const std::string& what, std::vector<std::string> labels)
        : Error(what), labels_(std::move(labels)) {}

    const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
    std::vector<std::string> labels_;
};

// A chase left a required quantity undetermined.
class UnderdeterminedError : public Error {
public:
    UnderdeterminedError(const std::string& what, std::vector<std::string> labels)
        : Error(what), labels_(std::move(labels)) {}

    const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
    std::vector<std::string> labels_;
};

// A spectral page has nonzero off-diagonal terms, so the degeneration argument fails.
class DegeneracyUnjustified : public Error {
public:
    using Error::Error;
};

}  // namespace flopcalc
