#pragma once

#include <stdexcept>
#include <string>

namespace nlslab {

struct OutOfRange : std::runtime_error {
    explicit OutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct DomainExceeded : std::runtime_error {
    explicit DomainExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroField : std::runtime_error {
    explicit ZeroField(const std::string& what) : std::runtime_error(what) {}
};

struct NonFinite : std::runtime_error {
    explicit NonFinite(const std::string& what) : std::runtime_error(what) {}
};

struct LadderEmpty : std::runtime_error {
    explicit LadderEmpty(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedDimension : std::runtime_error {
    explicit UnsupportedDimension(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateField : std::runtime_error {
    explicit DegenerateField(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientSampling : std::runtime_error {
    explicit InsufficientSampling(const std::string& what) : std::runtime_error(what) {}
};

struct RangeExceeded : std::runtime_error {
    explicit RangeExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct LinearSolveFailure : std::runtime_error {
    explicit LinearSolveFailure(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientDecade : std::runtime_error {
    explicit InsufficientDecade(const std::string& what) : std::runtime_error(what) {}
};

struct StiffnessFailure : std::runtime_error {
    explicit StiffnessFailure(const std::string& what) : std::runtime_error(what) {}
};

struct BisectionFailure : std::runtime_error {
    explicit BisectionFailure(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientDepth : std::runtime_error {
    explicit InsufficientDepth(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientRange : std::runtime_error {
    explicit InsufficientRange(const std::string& what) : std::runtime_error(what) {}
};

struct NoBlowup : std::runtime_error {
    explicit NoBlowup(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nlslab
