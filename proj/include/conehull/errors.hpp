#pragma once

#include <stdexcept>
#include <string>

namespace conehull {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

struct NonSimplicial : std::runtime_error {
    explicit NonSimplicial(const std::string& what) : std::runtime_error(what) {}
};

struct OriginOutside : std::runtime_error {
    explicit OriginOutside(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateAffineHull : std::runtime_error {
    explicit DegenerateAffineHull(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParams : std::invalid_argument {
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidRadii : std::invalid_argument {
    explicit InvalidRadii(const std::string& what) : std::invalid_argument(what) {}
};

struct PoleAtEquator : std::runtime_error {
    explicit PoleAtEquator(const std::string& what) : std::runtime_error(what) {}
};

struct TruncationFailure : std::runtime_error {
    explicit TruncationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct IllConditioned : std::runtime_error {
    explicit IllConditioned(const std::string& what) : std::runtime_error(what) {}
};

struct InfiniteMoment : std::runtime_error {
    explicit InfiniteMoment(const std::string& what) : std::runtime_error(what) {}
};

struct WeightOverflow : std::runtime_error {
    explicit WeightOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace conehull
